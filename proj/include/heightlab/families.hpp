#ifndef HEIGHTLAB_FAMILIES_HPP
#define HEIGHTLAB_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/gridrep.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// t triangles stacked inside each other, prism-connected: vertex i of ring
/// j is adjacent to vertices i and i+1 of ring j+1. 3t vertices.
Triangulation nested_triangles(int t);

struct ApexTree {
    Triangulation T;
    Vertex apex;
    int tree_vertices; // ids 0..tree_vertices-1 in boundary order
};

/// Complete binary tree with `depth` levels below the root, augmented to a
/// maximal outerplanar graph (faces fanned from their first boundary vertex),
/// plus an apex adjacent to everything.
ApexTree apex_tree(int depth);

struct ApexStrip {
    Triangulation T;
    Vertex a, b, apex;
};

/// Apex over a maximal outerplanar triangular strip on n-1 vertices; n odd.
/// Satisfies distance(T, a, b, {apex}) == (n-3)/2.
ApexStrip apex_strip(int n);

/// Series-parallel build tree. Leaves are edges; inner nodes compose two
/// subgraphs in series (t1 = s2) or in parallel (shared terminals).
struct SPGraph {
    struct Node {
        enum class Op { Edge, Series, Parallel };
        Op op = Op::Edge;
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    static SPGraph edge();
    static SPGraph series(SPGraph l, SPGraph r);
    static SPGraph parallel(SPGraph l, SPGraph r);

    int edge_count(int node = -1) const; // leaves below node (default root)
    /// True if the node's terminals are directly adjacent (edge leaves are;
    /// series compositions never are).
    bool terminals_adjacent(int node = -1) const;
};

struct SPMaterialized {
    int n = 0;
    Vertex s = 0, t = 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Vertex, Vertex>> node_terminals; // per build-tree node
};

/// Concrete vertices/edges: s=0, t=1, internal vertices in build order.
/// Throws BuildError("NotSimple") on duplicate parallel edges.
SPMaterialized materialize_sp(const SPGraph& G);

/// Simple grid-major representation of height exactly 2*ceil(log2 m) + 2,
/// with the first terminal on the top-right corner and the second on the
/// bottom-right corner. `node` restricts to a subtree (tests use this to
/// check the induction invariants level by level).
GridRep sp_gridrep(const SPGraph& G, int node = -1);

/// Uniform random build tree with m leaves; parallel compositions that would
/// duplicate an edge are rejected and redrawn. Deterministic per seed.
SPGraph random_sp(int m, std::uint64_t seed);

} // namespace heightlab

#endif
