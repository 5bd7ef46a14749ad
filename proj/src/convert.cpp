#include "heightlab/convert.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace heightlab {

namespace {

struct Run {
    Vertex v;
    int len;
};

std::vector<Vertex> run_vertices(const std::vector<Run>& runs) {
    std::vector<Vertex> out;
    out.reserve(runs.size());
    for (const Run& r : runs) out.push_back(r.v);
    return out;
}

class ColumnBuilder {
public:
    ColumnBuilder(int height) : k_(height) {}

    void emit(const std::vector<Run>& runs) {
        std::vector<Vertex> col;
        col.reserve(k_);
        for (const Run& r : runs) col.insert(col.end(), r.len, r.v);
        if (int(col.size()) != k_)
            throw BuildError("Internal", "column height drifted during conversion");
        cols_.push_back(std::move(col));
    }

    int count() const { return int(cols_.size()); }

    GridRep gridrep() const {
        GridRep R;
        R.height = k_;
        R.width = count();
        R.labels.assign(k_, std::vector<Vertex>(R.width));
        for (int c = 0; c < R.width; ++c)
            for (int r = 0; r < k_; ++r) R.labels[r][c] = cols_[c][r];
        return R;
    }

private:
    int k_;
    std::vector<std::vector<Vertex>> cols_;
};

// Move one unit of height from the nearest donor run into `target`,
// emitting one column per shifted boundary (the staircase of the
// construction). Returns the number of emitted columns.
int staircase_into(std::vector<Run>& runs, int target, int needed, ColumnBuilder& out) {
    int emitted = 0;
    while (runs[target].len < needed) {
        int donor = -1, best = 1 << 30;
        for (int j = 0; j < int(runs.size()); ++j) {
            if (j == target || runs[j].len < 2) continue;
            int d = std::abs(j - target);
            if (d < best || (d == best && j < donor)) {
                best = d;
                donor = j;
            }
        }
        if (donor < 0)
            throw BuildError("Internal", "no spare height for staircase");
        if (donor > target) {
            for (int jj = donor; jj > target; --jj) {
                runs[jj].len -= 1;
                runs[jj - 1].len += 1;
                out.emit(runs);
                ++emitted;
            }
        } else {
            for (int jj = donor; jj < target; ++jj) {
                runs[jj].len -= 1;
                runs[jj + 1].len += 1;
                out.emit(runs);
                ++emitted;
            }
        }
    }
    return emitted;
}

} // namespace

std::pair<GridRep, ConversionTrace> homotopy_to_gridrep(const Triangulation& T,
                                                        const Homotopy& H) {
    if (auto bad = validate_homotopy(T, H))
        throw BuildError("InvalidHomotopy", bad->rule + ": " + bad->detail);
    if (!H.simple) {
        // Label connectivity in the construction needs a monotone sweep:
        // every face flipped exactly once, positively.
        std::vector<int> seen(T.faces.size(), 0);
        for (std::size_t i = 0; i < H.moves.size(); ++i) {
            auto r = apply_move(T, H.anchor, H.curves[i], H.moves[i], true);
            for (auto [f, d] : r->flips) {
                if (d != +1 || seen[f]++)
                    throw BuildError("NonMonotone",
                                     "homotopy is not a monotone sweep; convert only "
                                     "solver-produced certificates");
            }
        }
    }

    const int k = homotopy_height(H);
    ColumnBuilder out(k);
    ConversionTrace trace;
    std::vector<Run> runs{{H.anchor.u, k}};
    out.emit(runs);

    for (std::size_t i = 0; i < H.moves.size(); ++i) {
        const Move& m = H.moves[i];
        const Curve& cur = H.curves[i];
        int first = out.count();
        int stair = 0;
        switch (m.kind) {
        case Move::Kind::FaceFlip: {
            if (m.dir == Move::Dir::Grow) {
                int p = m.pos;
                Vertex z = H.curves[i + 1][p + 1];
                int target;
                if (runs[p].len >= 2)
                    target = p;
                else if (runs[p + 1].len >= 2)
                    target = p + 1;
                else {
                    int donor = -1, best = 1 << 30;
                    for (int j = 0; j < int(runs.size()); ++j) {
                        if (runs[j].len < 2) continue;
                        int d = std::min(std::abs(j - p), std::abs(j - (p + 1)));
                        if (d < best || (d == best && j < donor)) {
                            best = d;
                            donor = j;
                        }
                    }
                    if (donor < 0) throw BuildError("Internal", "flip without spare height");
                    target = donor <= p ? p : p + 1;
                    stair += staircase_into(runs, target, 2, out);
                }
                runs[target].len -= 1;
                runs.insert(runs.begin() + p + 1, Run{z, 1});
                out.emit(runs);
            } else {
                int p = m.pos;
                runs[p].len += runs[p + 1].len;
                runs.erase(runs.begin() + p + 1);
                out.emit(runs);
            }
            break;
        }
        case Move::Kind::EdgeSlide:
            runs[m.pos].v = m.edge[1];
            out.emit(runs);
            break;
        case Move::Kind::BoundaryEdgeSlide:
            if (m.end == Move::End::Start)
                runs.front().v = m.edge[1];
            else
                runs.back().v = m.edge[1];
            out.emit(runs);
            break;
        case Move::Kind::BoundaryMove: {
            bool at_start = m.end == Move::End::Start;
            if (m.dir == Move::Dir::Grow) {
                int target = at_start ? 0 : int(runs.size()) - 1;
                stair += staircase_into(runs, target, 2, out);
                runs[target].len -= 1;
                if (at_start)
                    runs.insert(runs.begin(), Run{m.edge[1], 1});
                else
                    runs.push_back(Run{m.edge[1], 1});
            } else {
                if (at_start) {
                    runs[1].len += runs[0].len;
                    runs.erase(runs.begin());
                } else {
                    runs[runs.size() - 2].len += runs.back().len;
                    runs.pop_back();
                }
            }
            out.emit(runs);
            break;
        }
        case Move::Kind::Spike: {
            int p = m.pos;
            stair += staircase_into(runs, p, 3, out);
            int L = runs[p].len;
            runs[p].len = 1;
            runs.insert(runs.begin() + p + 1, Run{runs[p].v, L - 2});
            runs.insert(runs.begin() + p + 1, Run{m.edge[1], 1});
            out.emit(runs);
            break;
        }
        case Move::Kind::Unspike: {
            int p = m.pos;
            runs[p].len += runs[p + 1].len + runs[p + 2].len;
            runs.erase(runs.begin() + p + 1, runs.begin() + p + 3);
            out.emit(runs);
            break;
        }
        }
        (void)cur;
        if (run_vertices(runs) != H.curves[i + 1])
            throw BuildError("Internal", "conversion columns diverged from curves");
        trace.move_columns.push_back({int(i), first, out.count() - 1, stair});
    }

    return {out.gridrep(), trace};
}

// ---------------------------------------------------------------------------
// gridrep -> homotopy
// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> dedup_column(const std::vector<std::vector<Vertex>>& L, int c) {
    std::vector<Vertex> out;
    for (const auto& row : L)
        if (out.empty() || out.back() != row[c]) out.push_back(row[c]);
    return out;
}

// Reads the single move between two consecutive deduplicated columns.
std::optional<Move> diff_move(const Triangulation& T, const std::vector<Vertex>& cur,
                              const std::vector<Vertex>& nxt) {
    int a = int(cur.size()), b = int(nxt.size());
    std::size_t P = 0;
    while (P < cur.size() && P < nxt.size() && cur[P] == nxt[P]) ++P;
    auto tail_matches = [&](int drop_cur, int drop_nxt) {
        int ca = int(P) + drop_cur, cb = int(P) + drop_nxt;
        if (a - ca != b - cb) return false;
        for (int i = 0; ca + i < a; ++i)
            if (cur[ca + i] != nxt[cb + i]) return false;
        return true;
    };
    if (b == a + 1 && tail_matches(0, 1)) {
        Vertex z = nxt[P];
        if (P == 0) return Move::boundary_move(cur[0], z, Move::End::Start, Move::Dir::Grow);
        if (int(P) == a)
            return Move::boundary_move(cur[a - 1], z, Move::End::Finish, Move::Dir::Grow);
        int f = T.face_with(cur[P - 1], cur[P], z);
        if (f < 0) return std::nullopt;
        return Move::face_flip(f, int(P) - 1, Move::Dir::Grow);
    }
    if (b == a - 1 && tail_matches(1, 0)) {
        Vertex z = cur[P];
        if (P == 0) return Move::boundary_move(cur[1], z, Move::End::Start, Move::Dir::Shrink);
        if (int(P) == a - 1)
            return Move::boundary_move(cur[a - 2], z, Move::End::Finish, Move::Dir::Shrink);
        int f = T.face_with(cur[P - 1], cur[P + 1], z);
        if (f < 0) return std::nullopt;
        return Move::face_flip(f, int(P) - 1, Move::Dir::Shrink);
    }
    if (b == a && tail_matches(1, 1)) {
        if (P == 0) return Move::boundary_edge_slide(cur[0], nxt[0], Move::End::Start);
        if (int(P) == a - 1)
            return Move::boundary_edge_slide(cur[a - 1], nxt[a - 1], Move::End::Finish);
        return Move::edge_slide(cur[P], nxt[P], int(P));
    }
    if (b == a + 2 && tail_matches(0, 2) && P > 0 && nxt[P + 1] == cur[P - 1])
        return Move::spike(cur[P - 1], nxt[P], int(P) - 1);
    if (b == a - 2 && tail_matches(2, 0) && P > 0 && cur[P + 1] == cur[P - 1])
        return Move::unspike(cur[P - 1], cur[P], int(P) - 1);
    return std::nullopt;
}

struct ExtractResult {
    Homotopy H;
    std::vector<std::pair<int, std::string>> sweep;
};

std::optional<ExtractResult> extract_homotopy(const Triangulation& T,
                                              const std::vector<std::vector<Vertex>>& L,
                                              bool simple, std::string* why) {
    int w = int(L[0].size());
    Vertex u = L[0][0], v = L[0][w - 1];

    std::set<Vertex> B;
    for (int c = 0; c < w; ++c) {
        B.insert(L[0][c]);
        B.insert(L[L.size() - 1][c]);
    }
    for (std::size_t r = 0; r < L.size(); ++r) {
        B.insert(L[r][0]);
        B.insert(L[r][w - 1]);
    }

    OuterAnchor anchor;
    if (B.size() == 3) {
        std::array<Vertex, 3> want{};
        std::copy(B.begin(), B.end(), want.begin());
        int face = -1;
        for (int fi = 0; fi < int(T.faces.size()); ++fi)
            if (T.faces[fi].sorted() == want) face = fi;
        if (face < 0) {
            if (why) *why = "boundary vertices do not form a face";
            return std::nullopt;
        }
        anchor = make_face_anchor(T, face, u, v);
    } else if (B.size() == 2) {
        anchor = make_edge_anchor(T, u, v, u, v);
    } else {
        if (why) *why = "unexpected boundary vertex count";
        return std::nullopt;
    }

    ExtractResult res;
    res.H.anchor = anchor;
    res.H.simple = simple;
    res.H.curves.push_back(dedup_column(L, 0));
    for (int c = 1; c < w; ++c) {
        auto cur = res.H.curves.back();
        auto nxt = dedup_column(L, c);
        if (cur == nxt) continue;
        auto m = diff_move(T, cur, nxt);
        if (!m) {
            if (why) *why = "no single move explains seam " + std::to_string(c);
            return std::nullopt;
        }
        std::string reason;
        auto applied = apply_move(T, anchor, cur, *m, !simple, &reason);
        if (!applied || applied->curve != nxt) {
            if (why) *why = "seam " + std::to_string(c) + ": " + reason;
            return std::nullopt;
        }
        res.H.curves.push_back(nxt);
        res.H.moves.push_back(*m);
        const char* names[] = {"face_flip", "edge_slide", "boundary_move",
                               "boundary_edge_slide", "spike", "unspike"};
        res.sweep.push_back({c, names[int(m->kind)]});
    }
    return res;
}

} // namespace

std::pair<Homotopy, ConversionTrace> gridrep_to_homotopy(const Triangulation& T,
                                                         const GridRep& R) {
    if (T.n < 4)
        throw BuildError("InvalidVertex", "gridrep_to_homotopy needs n >= 4");
    if (auto bad = validate_gridrep(T, R, false))
        throw BuildError("InvalidGridRep", bad->rule + ": " + bad->detail);
    bool simple = !validate_gridrep(T, R, true).has_value();

    ContactRep C = to_contact(R, T.n);
    if (auto bad = validate_contact(C, simple))
        throw BuildError("InvalidGridRep", bad->rule + ": " + bad->detail);

    NormalizeResult norm =
        normalize_contact(C, simple ? NormalizeMode::Simple : NormalizeMode::General);

    ConversionTrace trace;
    trace.normalization = norm.steps;

    std::string why1, why2;
    for (bool flip : {false, true}) {
        auto L = norm.rep.grid.labels;
        if (flip) std::reverse(L.begin(), L.end());
        auto res = extract_homotopy(T, L, simple, flip ? &why2 : &why1);
        if (!res) continue;
        if (validate_homotopy(T, res->H)) continue;
        trace.flipped_vertically = flip;
        trace.sweep = res->sweep;
        return {res->H, trace};
    }
    throw BuildError("NormalizationFailed",
                     "sweep extraction failed both orientations: " + why1 + " / " + why2);
}

} // namespace heightlab
