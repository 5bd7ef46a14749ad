#include "heightlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace heightlab {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
                          "#86bcb6", "#d37295"};

std::string color(Vertex v) { return kPalette[v % 12]; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

struct Svg {
    std::ostringstream out;
    Svg(int w, int h) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
            << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    }
    std::string done() {
        out << "</svg>\n";
        return out.str();
    }
};

// Straight-line positions: outer face pinned to a triangle, interior
// vertices at the average of their neighbors (solved exactly).
std::vector<std::pair<double, double>> tutte_layout(const Triangulation& T, double scale) {
    int outer = T.outer_face.value_or(0);
    const auto& f = T.faces[outer].cycle;
    int n = T.n;
    std::vector<std::pair<double, double>> pos(n, {0, 0});
    std::vector<int> idx(n, -1);
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v)
        if (v != f[0] && v != f[1] && v != f[2]) {
            idx[v] = int(inner.size());
            inner.push_back(v);
        }
    pos[f[0]] = {0.5 * scale, 0.08 * scale};
    pos[f[1]] = {0.94 * scale, 0.92 * scale};
    pos[f[2]] = {0.06 * scale, 0.92 * scale};
    int k = int(inner.size());
    if (k > 0) {
        // Solve L x = b by Gaussian elimination, one system per coordinate.
        std::vector<std::vector<double>> A(k, std::vector<double>(k + 2, 0.0));
        for (int i = 0; i < k; ++i) {
            Vertex v = inner[i];
            A[i][i] = double(T.neighbors(v).size());
            for (Vertex w : T.neighbors(v)) {
                if (idx[w] >= 0)
                    A[i][idx[w]] -= 1.0;
                else {
                    A[i][k] += pos[w].first;
                    A[i][k + 1] += pos[w].second;
                }
            }
        }
        for (int col = 0; col < k; ++col) {
            int piv = col;
            for (int r = col + 1; r < k; ++r)
                if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
            std::swap(A[col], A[piv]);
            for (int r = 0; r < k; ++r) {
                if (r == col || A[r][col] == 0.0) continue;
                double fct = A[r][col] / A[col][col];
                for (int cc = col; cc < k + 2; ++cc) A[r][cc] -= fct * A[col][cc];
            }
        }
        for (int i = 0; i < k; ++i)
            pos[inner[i]] = {A[i][k] / A[i][i], A[i][k + 1] / A[i][i]};
    }
    return pos;
}

void draw_graph(Svg& svg, const Triangulation& T,
                const std::vector<std::pair<double, double>>& pos, double dx) {
    for (auto [a, b] : T.edges())
        svg.out << "<line x1=\"" << fmt(pos[a].first + dx) << "\" y1=\""
                << fmt(pos[a].second) << "\" x2=\"" << fmt(pos[b].first + dx) << "\" y2=\""
                << fmt(pos[b].second) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (Vertex v = 0; v < T.n; ++v) {
        svg.out << "<circle cx=\"" << fmt(pos[v].first + dx) << "\" cy=\""
                << fmt(pos[v].second) << "\" r=\"7\" fill=\"" << color(v)
                << "\" stroke=\"#333\"/>\n";
        svg.out << "<text x=\"" << fmt(pos[v].first + dx) << "\" y=\""
                << fmt(pos[v].second + 3.5) << "\" font-size=\"9\" text-anchor=\"middle\" "
                   "fill=\"#fff\">"
                << v << "</text>\n";
    }
}

} // namespace

std::string render_gridrep_svg(const GridRep& R, const RenderOptions& opt) {
    int cell = opt.cell;
    Svg svg(R.width * cell + 2, R.height * cell + 2);
    for (int r = 0; r < R.height; ++r)
        for (int c = 0; c < R.width; ++c) {
            svg.out << "<rect x=\"" << c * cell + 1 << "\" y=\"" << r * cell + 1
                    << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                    << color(R.labels[r][c]) << "\" stroke=\"#fff\" stroke-width=\"1\"/>\n";
            svg.out << "<text x=\"" << c * cell + cell / 2 + 1 << "\" y=\""
                    << r * cell + cell / 2 + 4 << "\" font-size=\"" << cell / 2
                    << "\" text-anchor=\"middle\" fill=\"#fff\">" << R.labels[r][c]
                    << "</text>\n";
        }
    return svg.done();
}

std::string render_contact_svg(const ContactRep& C, const RenderOptions& opt) {
    int cell = opt.cell;
    const GridRep& R = C.grid;
    Svg svg(R.width * cell + 2, R.height * cell + 2);
    // Outline each polygon by tracing its boundary edges between cells of
    // different labels (or the rectangle border).
    for (Vertex v = 0; v < C.n; ++v) {
        if (C.polygons[v].empty()) continue;
        for (auto [r, c] : C.polygons[v])
            svg.out << "<rect x=\"" << c * cell + 1 << "\" y=\"" << r * cell + 1
                    << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                    << color(v) << "\"/>\n";
    }
    // Boundary segments between distinct labels.
    for (int r = 0; r <= R.height; ++r)
        for (int c = 0; c < R.width; ++c) {
            Vertex above = (r > 0) ? R.labels[r - 1][c] : -1;
            Vertex below = (r < R.height) ? R.labels[r][c] : -1;
            if (above != below)
                svg.out << "<line x1=\"" << c * cell + 1 << "\" y1=\"" << r * cell + 1
                        << "\" x2=\"" << (c + 1) * cell + 1 << "\" y2=\"" << r * cell + 1
                        << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        }
    for (int c = 0; c <= R.width; ++c)
        for (int r = 0; r < R.height; ++r) {
            Vertex left = (c > 0) ? R.labels[r][c - 1] : -1;
            Vertex right = (c < R.width) ? R.labels[r][c] : -1;
            if (left != right)
                svg.out << "<line x1=\"" << c * cell + 1 << "\" y1=\"" << r * cell + 1
                        << "\" x2=\"" << c * cell + 1 << "\" y2=\"" << (r + 1) * cell + 1
                        << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        }
    // One label per polygon at its first cell.
    for (Vertex v = 0; v < C.n; ++v) {
        if (C.polygons[v].empty()) continue;
        auto [r, c] = C.polygons[v].front();
        svg.out << "<text x=\"" << c * cell + cell / 2 + 1 << "\" y=\""
                << r * cell + cell / 2 + 4 << "\" font-size=\"" << cell / 2
                << "\" text-anchor=\"middle\" fill=\"#fff\">" << v << "</text>\n";
    }
    return svg.done();
}

std::string render_triangulation_svg(const Triangulation& T, const RenderOptions& opt) {
    double scale = 12.0 * opt.cell;
    Svg svg(int(scale) + 2, int(scale) + 2);
    auto pos = tutte_layout(T, scale);
    draw_graph(svg, T, pos, 0.0);
    return svg.done();
}

std::string render_homotopy_svg(const Triangulation& T, const Homotopy& H,
                                const RenderOptions& opt) {
    double scale = 8.0 * opt.cell;
    int panels = int(H.curves.size());
    Svg svg(int(scale + 8) * panels + 2, int(scale) + 30);
    auto pos = tutte_layout(T, scale);
    for (int i = 0; i < panels; ++i) {
        double dx = i * (scale + 8);
        draw_graph(svg, T, pos, dx);
        const Curve& c = H.curves[i];
        svg.out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"3.5\" points=\"";
        for (Vertex v : c)
            svg.out << fmt(pos[v].first + dx) << "," << fmt(pos[v].second) << " ";
        svg.out << "\"/>\n";
        svg.out << "<text x=\"" << fmt(dx + scale / 2) << "\" y=\"" << fmt(scale + 20)
                << "\" font-size=\"12\" text-anchor=\"middle\">h" << i << "</text>\n";
    }
    return svg.done();
}

} // namespace heightlab
