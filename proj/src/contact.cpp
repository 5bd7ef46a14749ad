#include "heightlab/contact.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace heightlab {

namespace {

Vertex lab(const GridRep& R, int r, int c) {
    return R.in_range(r, c) ? R.labels[r][c] : -1;
}

} // namespace

std::pair<int, int> point_germs(const GridRep& R, int r, int c) {
    Vertex tl = lab(R, r - 1, c - 1), tr = lab(R, r - 1, c);
    Vertex bl = lab(R, r, c - 1), br = lab(R, r, c);
    int v = 0, h = 0;
    if (tl != tr) ++v; // up
    if (bl != br) ++v; // down
    if (tl != bl) ++h; // left
    if (tr != br) ++h; // right
    return {v, h};
}

std::vector<ContactRep::Side> seam_sides(const GridRep& R, int c) {
    std::vector<ContactRep::Side> out;
    int r = 0;
    while (r < R.height) {
        if (lab(R, r, c - 1) == lab(R, r, c)) {
            ++r;
            continue;
        }
        int a = r;
        while (r < R.height && lab(R, r, c - 1) != lab(R, r, c)) ++r;
        // After vertical-junction removal each run has constant labels; until
        // then, split runs whenever a label changes so callers see true sides.
        int j = a;
        while (j < r) {
            int k = j;
            while (k + 1 < r && lab(R, k + 1, c - 1) == lab(R, j, c - 1) &&
                   lab(R, k + 1, c) == lab(R, j, c))
                ++k;
            ContactRep::Side s;
            s.vertical = true;
            s.coord = c;
            s.a = j;
            s.b = k;
            s.first = lab(R, j, c - 1);
            s.second = lab(R, j, c);
            out.push_back(s);
            j = k + 1;
        }
    }
    return out;
}

ContactRep to_contact(const GridRep& R, int n) {
    ContactRep C;
    C.grid = R;
    C.n = n;
    C.polygons.assign(n, {});
    for (int r = 0; r < R.height; ++r)
        for (int c = 0; c < R.width; ++c) C.polygons[R.labels[r][c]].push_back({r, c});

    for (int r = 0; r <= R.height; ++r)
        for (int c = 0; c <= R.width; ++c) {
            auto [v, h] = point_germs(R, r, c);
            int total = v + h;
            bool exterior = (r == 0 || r == R.height || c == 0 || c == R.width);
            if (total == 4) {
                C.four_side_points.push_back({r, c});
            } else if (total == 3) {
                C.junctions.push_back({r, c, exterior, h >= 2});
            } else if (total == 2) {
                if (v == 1 && h == 1) C.corners.push_back({r, c});
                // two colinear germs: interior point of a side
            }
        }

    for (int c = 0; c <= R.width; ++c) {
        auto ss = seam_sides(R, c);
        C.sides.insert(C.sides.end(), ss.begin(), ss.end());
    }
    for (int r = 0; r <= R.height; ++r) {
        int c = 0;
        while (c < R.width) {
            if (lab(R, r - 1, c) == lab(R, r, c)) {
                ++c;
                continue;
            }
            int a = c;
            Vertex f = lab(R, r - 1, c), s = lab(R, r, c);
            while (c < R.width && lab(R, r - 1, c) == f && lab(R, r, c) == s) ++c;
            ContactRep::Side side;
            side.vertical = false;
            side.coord = r;
            side.a = a;
            side.b = c - 1;
            side.first = f;
            side.second = s;
            C.sides.push_back(side);
        }
    }
    return C;
}

Check validate_contact(const ContactRep& C, bool require_simple) {
    if (!C.four_side_points.empty()) {
        auto [r, c] = C.four_side_points.front();
        return violation("contact.four_sides",
                         "lattice point (" + std::to_string(r) + "," + std::to_string(c) +
                             ") lies on four sides");
    }
    if (!require_simple) return std::nullopt;

    const GridRep& R = C.grid;
    // x-monotone: per-column runs are single and consecutive columns overlap.
    for (Vertex v = 0; v < C.n; ++v) {
        std::vector<std::pair<int, int>> iv(R.width, {-1, -1});
        for (auto [r, c] : C.polygons[v]) {
            if (iv[c].first < 0)
                iv[c] = {r, r};
            else {
                if (r != iv[c].second + 1)
                    return violation("contact.monotone",
                                     "vertex " + std::to_string(v) +
                                         " has a split column " + std::to_string(c));
                iv[c].second = r;
            }
        }
        int prev = -2;
        for (int c = 0; c < R.width; ++c) {
            if (iv[c].first < 0) continue;
            if (prev >= 0 && prev != c - 1)
                return violation("contact.monotone", "vertex " + std::to_string(v) +
                                                         " spans disjoint column ranges");
            if (prev == c - 1) {
                if (iv[c].first > iv[c - 1].second || iv[c].second < iv[c - 1].first)
                    return violation("contact.monotone",
                                     "vertex " + std::to_string(v) +
                                         " has non-overlapping neighbor columns");
            }
            prev = c;
        }
    }

    // Above/below consistency for pairs sharing a horizontal boundary.
    std::set<std::uint64_t> horizontal_pairs;
    for (const auto& s : C.sides)
        if (!s.vertical && s.first >= 0 && s.second >= 0)
            horizontal_pairs.insert(pack_edge(s.first, s.second));
    for (auto pe : horizontal_pairs) {
        Vertex x = Vertex(pe >> 32), y = Vertex(pe & 0xffffffff);
        int sign = 0; // +1: x above y
        for (int c = 0; c < R.width; ++c) {
            int xa = -1, xb = -1, ya = -1, yb = -1;
            for (int r = 0; r < R.height; ++r) {
                Vertex l = R.labels[r][c];
                if (l == x) {
                    if (xa < 0) xa = r;
                    xb = r;
                }
                if (l == y) {
                    if (ya < 0) ya = r;
                    yb = r;
                }
            }
            if (xa < 0 || ya < 0) continue;
            int here = xb < ya ? +1 : (yb < xa ? -1 : 0);
            if (here == 0)
                return violation("contact.above_below", "interleaved columns");
            if (sign == 0) sign = here;
            if (sign != here)
                return violation("contact.above_below",
                                 "vertices " + std::to_string(x) + "," + std::to_string(y) +
                                     " swap their above/below order");
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

using Labels = std::vector<std::vector<Vertex>>;

std::set<std::uint64_t> contact_pairs(const Labels& L) {
    std::set<std::uint64_t> out;
    for (int r = 0; r < int(L.size()); ++r)
        for (int c = 0; c < int(L[r].size()); ++c) {
            if (c + 1 < int(L[r].size()) && L[r][c] != L[r][c + 1])
                out.insert(pack_edge(L[r][c], L[r][c + 1]));
            if (r + 1 < int(L.size()) && L[r][c] != L[r + 1][c])
                out.insert(pack_edge(L[r][c], L[r + 1][c]));
        }
    return out;
}

int gh(const Labels& L) { return int(L.size()); }
int gw(const Labels& L) { return L.empty() ? 0 : int(L[0].size()); }

Vertex labL(const Labels& L, int r, int c) {
    if (r < 0 || c < 0 || r >= gh(L) || c >= gw(L)) return -1;
    return L[r][c];
}

void insert_column(Labels& L, int at, const std::vector<Vertex>& col) {
    for (int r = 0; r < gh(L); ++r) L[r].insert(L[r].begin() + at, col[r]);
}

void delete_columns(Labels& L, int from, int count) {
    for (auto& row : L) row.erase(row.begin() + from, row.begin() + from + count);
}

std::vector<Vertex> get_column(const Labels& L, int c) {
    std::vector<Vertex> col(gh(L));
    for (int r = 0; r < gh(L); ++r) col[r] = L[r][c];
    return col;
}

bool is_interior_vertical_junction(const Labels& L, int r, int c) {
    if (r <= 0 || r >= gh(L) || c <= 0 || c >= gw(L)) return false;
    Vertex tl = labL(L, r - 1, c - 1), tr = labL(L, r - 1, c);
    Vertex bl = labL(L, r, c - 1), br = labL(L, r, c);
    int v = (tl != tr) + (bl != br), h = (tl != bl) + (tr != br);
    return v == 2 && h == 1;
}

int count_interior_vertical_junctions(const Labels& L) {
    int cnt = 0;
    for (int c = 1; c < gw(L); ++c)
        for (int r = 1; r < gh(L); ++r)
            if (is_interior_vertical_junction(L, r, c)) ++cnt;
    return cnt;
}

struct StepLog {
    std::vector<std::string>* steps;
    void add(const std::string& s) { steps->push_back(s); }
};

[[noreturn]] void norm_fail(const std::string& step) {
    throw BuildError("NormalizationFailed", step);
}

// Remove one interior vertical junction. The doubled-side polygon sits on
// the side opposite the junction's horizontal germ; we duplicate its column
// and shave a sliver off the copy nearest the seam, handing the cells to the
// polygons across the seam.
bool claim1_step(Labels& L, StepLog& log) {
    int h = gh(L), w = gw(L);
    for (int c = 1; c < w; ++c)
        for (int r = 1; r < h; ++r) {
            if (!is_interior_vertical_junction(L, r, c)) continue;
            Vertex tl = labL(L, r - 1, c - 1), tr = labL(L, r - 1, c);
            Vertex bl = labL(L, r, c - 1), br = labL(L, r, c);
            bool z_right = (tr == br); // horizontal germ points left
            // Work in mirrored coordinates when the doubled polygon is on
            // the left: flip columns, run the right-handed op, flip back.
            if (!z_right) {
                for (auto& row : L) std::reverse(row.begin(), row.end());
                int cm = w - c; // same seam, mirrored
                if (!is_interior_vertical_junction(L, r, cm)) {
                    for (auto& row : L) std::reverse(row.begin(), row.end());
                    norm_fail("claim1: mirror bookkeeping");
                }
                c = cm;
                tl = labL(L, r - 1, c - 1);
                tr = labL(L, r - 1, c);
                bl = labL(L, r, c - 1);
                br = labL(L, r, c);
            }
            Vertex z = tr;
            // Maximal side run of z on this seam containing rows r-1, r.
            int a_s = r - 1, b_s = r;
            while (a_s > 0 && labL(L, a_s - 1, c) == z && labL(L, a_s - 1, c - 1) != z)
                --a_s;
            while (b_s + 1 < h && labL(L, b_s + 1, c) == z && labL(L, b_s + 1, c - 1) != z)
                ++b_s;
            bool ends_top = labL(L, a_s - 1, c) != z;
            bool ends_bottom = labL(L, b_s + 1, c) != z;
            // Junction row-boundaries strictly inside the run.
            std::vector<int> junctions;
            for (int rb = a_s + 1; rb <= b_s; ++rb)
                if (is_interior_vertical_junction(L, rb, c)) junctions.push_back(rb);
            if (junctions.empty()) norm_fail("claim1: junction lost during scan");
            int lo = junctions.back(), hi = junctions.front();
            int sl_a, sl_b;
            if (ends_bottom) {
                sl_a = lo;
                sl_b = b_s;
            } else if (ends_top) {
                sl_a = a_s;
                sl_b = hi - 1;
            } else {
                sl_a = lo; // general mode: connectivity survives either way
                sl_b = b_s;
            }
            // Duplicate column c, then shave the left copy.
            insert_column(L, c, get_column(L, c));
            for (int j = sl_a; j <= sl_b; ++j) L[j][c] = L[j][c - 1];
            if (!z_right)
                for (auto& row : L) std::reverse(row.begin(), row.end());
            log.add("claim1 seam=" + std::to_string(c) + " rows=[" + std::to_string(sl_a) +
                    "," + std::to_string(sl_b) + "]");
            return true;
        }
    return false;
}

// Separate vertical sides sharing a seam: split the seam after its topmost
// side, keeping integral coordinates (the combinatorial version of moving a
// side slightly rightward).
bool claim2_step(Labels& L, StepLog& log) {
    int h = gh(L), w = gw(L);
    for (int c = 1; c < w; ++c) {
        std::vector<std::pair<int, int>> runs;
        int r = 0;
        while (r < h) {
            if (labL(L, r, c - 1) == labL(L, r, c)) {
                ++r;
                continue;
            }
            int a = r;
            while (r < h && labL(L, r, c - 1) != labL(L, r, c)) ++r;
            runs.push_back({a, r - 1});
        }
        if (runs.size() < 2) continue;
        int cut = runs.front().second + 1; // germ-free row after claim 1
        std::vector<Vertex> col(h);
        for (int j = 0; j < h; ++j) col[j] = (j < cut) ? L[j][c] : L[j][c - 1];
        insert_column(L, c, col);
        log.add("claim2 seam=" + std::to_string(c) + " cut=" + std::to_string(cut));
        return true;
    }
    return false;
}

std::set<Vertex> boundary_vertices(const Labels& L) {
    std::set<Vertex> B;
    int h = gh(L), w = gw(L);
    for (int c = 0; c < w; ++c) {
        B.insert(L[0][c]);
        B.insert(L[h - 1][c]);
    }
    for (int r = 0; r < h; ++r) {
        B.insert(L[r][0]);
        B.insert(L[r][w - 1]);
    }
    return B;
}

std::set<Vertex> column_labels(const Labels& L, int c) {
    std::set<Vertex> s;
    for (int r = 0; r < gh(L); ++r) s.insert(L[r][c]);
    return s;
}

// Leftmost column used by any vertex other than those in `except`; deletes
// everything left of it. Returns false if there is nothing to delete.
bool cut_left_of_second_polygon(Labels& L, const std::set<Vertex>& except, StepLog& log,
                                const char* tag) {
    int w = gw(L), h = gh(L);
    int best = w;
    for (int c = 0; c < w && best == w; ++c)
        for (int r = 0; r < h; ++r)
            if (!except.count(L[r][c])) {
                best = c;
                break;
            }
    if (best == 0 || best == w) return false;
    delete_columns(L, 0, best);
    log.add(std::string(tag) + " cut=" + std::to_string(best));
    return true;
}

void mirror(Labels& L) {
    for (auto& row : L) std::reverse(row.begin(), row.end());
}

} // namespace

namespace {

// Inserting a full column of `v` at the given side must not invent contacts
// the representation does not already have.
bool column_fill_legal(const Labels& L, int col, Vertex v,
                       const std::set<std::uint64_t>& pairs) {
    for (int r = 0; r < gh(L); ++r) {
        Vertex x = L[r][col];
        if (x != v && !pairs.count(pack_edge(x, v))) return false;
    }
    return true;
}

// Boundary ring cells in clockwise order starting at the top-left corner.
std::vector<Vertex> boundary_ring(const Labels& L) {
    int h = gh(L), w = gw(L);
    std::vector<Vertex> ring;
    for (int c = 0; c < w; ++c) ring.push_back(L[0][c]);
    for (int r = 1; r < h; ++r) ring.push_back(L[r][w - 1]);
    for (int c = w - 2; c >= 0; --c) ring.push_back(L[h - 1][c]);
    for (int r = h - 2; r >= 1; --r) ring.push_back(L[r][0]);
    return ring;
}

} // namespace

NormalizeResult normalize_contact(const ContactRep& C, NormalizeMode mode) {
    Labels L = C.grid.labels;
    int n = C.n;
    NormalizeResult res;
    StepLog log{&res.steps};
    const int h = gh(L);
    const std::size_t width_cap =
        std::size_t(std::max(2, gw(L))) * std::size_t(n + h) + 16;
    const auto pairs0 = contact_pairs(L);

    int guard = 0;
    auto run_claims_12 = [&] {
        while (true) {
            int before = count_interior_vertical_junctions(L);
            if (before == 0) break;
            if (!claim1_step(L, log)) norm_fail("claim1: no applicable rewrite");
            if (count_interior_vertical_junctions(L) >= before)
                norm_fail("claim1: rewrite made no progress");
            if (gw(L) > int(width_cap) || ++guard > 100000)
                norm_fail("claim1: width cap exceeded");
        }
        while (claim2_step(L, log)) {
            if (count_interior_vertical_junctions(L) != 0)
                norm_fail("claim2: reintroduced a vertical junction");
            if (gw(L) > int(width_cap) || ++guard > 100000)
                norm_fail("claim2: width cap exceeded");
        }
    };

    run_claims_12();

    auto boundary_done = [&] {
        auto left = column_labels(L, 0), right = column_labels(L, gw(L) - 1);
        if (left.size() != 1 || right.size() != 1 || *left.begin() == *right.begin())
            return false;
        std::size_t b = boundary_vertices(L).size();
        return mode == NormalizeMode::Simple ? b == 3 : (b == 2 || b == 3);
    };

    if (boundary_done()) {
        res.rep = to_contact(make_gridrep(L), n);
        return res;
    }

    if (mode == NormalizeMode::Simple) {
        // Phase A: cut away single-polygon margins until three vertices sit
        // on the boundary and both the left and right columns are shared.
        for (int round = 0;; ++round) {
            if (round > 4 * n + 16) norm_fail("claim3/4: cutting does not stabilize");
            std::set<Vertex> B = boundary_vertices(L);
            if (int(B.size()) > 3) norm_fail("claim4: more than three boundary vertices");
            bool changed = false;
            for (int side = 0; side < 2 && !changed; ++side) {
                if (side) mirror(L);
                auto col0 = column_labels(L, 0);
                if (col0.size() == 1)
                    changed =
                        cut_left_of_second_polygon(L, col0, log, side ? "claim3R" : "claim3L");
                if (side) mirror(L);
            }
            if (!changed && B.size() < 3)
                changed = cut_left_of_second_polygon(L, B, log, "claim4");
            if (!changed) break;
            run_claims_12();
        }
        // Phase B: claim 5, once. Full columns pin one vertex per side.
        std::set<Vertex> B = boundary_vertices(L);
        if (B.size() != 3) norm_fail("claim4: could not expose three boundary vertices");
        auto left = column_labels(L, 0);
        auto right = column_labels(L, gw(L) - 1);
        if (left.size() != 1 || right.size() != 1 || *left.begin() == *right.begin()) {
            std::vector<Vertex> vcands(left.begin(), left.end());
            if (left.size() == 3) {
                // the middle one: neither left corner belongs to it
                vcands.clear();
                for (Vertex cand : left)
                    if (cand != L[0][0] && cand != L[h - 1][0]) vcands.push_back(cand);
            }
            bool done = false;
            for (Vertex v : vcands) {
                if (!column_fill_legal(L, 0, v, pairs0)) continue;
                for (Vertex wv : right) {
                    if (wv == v || !column_fill_legal(L, gw(L) - 1, wv, pairs0)) continue;
                    insert_column(L, 0, std::vector<Vertex>(h, v));
                    insert_column(L, gw(L), std::vector<Vertex>(h, wv));
                    log.add("claim5 left=" + std::to_string(v) +
                            " right=" + std::to_string(wv));
                    done = true;
                    break;
                }
                if (done) break;
            }
            if (!done) norm_fail("claim5: no legal side columns");
            run_claims_12();
        }
    } else {
        // General mode: two or three boundary vertices suffice.
        {
            std::set<Vertex> B = boundary_vertices(L);
            if (int(B.size()) > 3) norm_fail("claim4': more than three boundary vertices");
            if (B.size() == 1) {
                if (!cut_left_of_second_polygon(L, B, log, "claim3'"))
                    norm_fail("claim3': single polygon covers everything");
                run_claims_12();
            }
        }
        // Claim 5': per side, unwrap a corner-wrapping vertex, then pin a
        // single vertex with a full column.
        for (int side = 0; side < 2; ++side) {
            if (side) mirror(L);
            auto col0 = column_labels(L, 0);
            if (col0.size() > 1) {
                if (L[0][0] == L[h - 1][0]) {
                    int r0 = 0;
                    while (r0 < h && L[r0][0] == L[0][0]) ++r0;
                    Vertex u = L[r0][0];
                    for (int r = r0; r < h; ++r) L[r][0] = u;
                    log.add(std::string(side ? "claim5'R" : "claim5'L") +
                            " unwrap=" + std::to_string(u));
                }
                col0 = column_labels(L, 0);
                if (col0.size() > 1) {
                    Vertex pick = -1;
                    for (Vertex cand : col0)
                        if (cand != L[0][0] && cand != L[h - 1][0]) pick = cand;
                    std::vector<Vertex> cands;
                    if (pick >= 0) cands.push_back(pick);
                    for (Vertex cand : col0) cands.push_back(cand);
                    bool done = false;
                    for (Vertex u : cands) {
                        if (!column_fill_legal(L, 0, u, pairs0)) continue;
                        insert_column(L, 0, std::vector<Vertex>(h, u));
                        log.add(std::string(side ? "claim5'R" : "claim5'L") +
                                " column=" + std::to_string(u));
                        done = true;
                        break;
                    }
                    if (!done) norm_fail("claim5': no legal side column");
                }
            }
            if (side) mirror(L);
        }
        run_claims_12();
        // Distinct endpoints keep every curve start on one path and every
        // end on the other; separate equal sides with a ring-adjacent vertex.
        Vertex lu = L[0][0], ru = L[0][gw(L) - 1];
        if (lu == ru) {
            auto ring = boundary_ring(L);
            Vertex other = -1;
            for (std::size_t i = 0; i < ring.size() && other < 0; ++i) {
                Vertex a = ring[i], b = ring[(i + 1) % ring.size()];
                if (a == ru && b != ru) other = b;
                if (b == ru && a != ru) other = a;
            }
            if (other < 0) norm_fail("claim5': single boundary vertex remains");
            if (!column_fill_legal(L, gw(L) - 1, other, pairs0))
                norm_fail("claim5': separator column illegal");
            insert_column(L, gw(L), std::vector<Vertex>(h, other));
            log.add("claim5' separate=" + std::to_string(other));
            run_claims_12();
        }
    }

    if (contact_pairs(L) != pairs0) norm_fail("contact graph changed");
    auto left = column_labels(L, 0), right = column_labels(L, gw(L) - 1);
    if (left.size() != 1 || right.size() != 1 || *left.begin() == *right.begin())
        norm_fail("postcondition: left/right boundary not pinned to distinct vertices");
    if (mode == NormalizeMode::Simple && boundary_vertices(L).size() != 3)
        norm_fail("postcondition: boundary must hold exactly three vertices");
    res.rep = to_contact(make_gridrep(L), n);
    return res;
}

} // namespace heightlab
