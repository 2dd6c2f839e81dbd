#pragma once

#include "bei/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bei {

// Facets of the clique complex: the maximal cliques, each sorted ascending,
// the list sorted lexicographically.
struct CliqueComplex {
    int n = 0;
    std::vector<std::vector<int>> facets;
    int dim = -1; // max facet size - 1
};

CliqueComplex clique_complex(const Graph& g);

// Vertices contained in exactly one facet.
std::vector<int> free_vertices(const CliqueComplex& c);

// order is a permutation of facet indices; branch[i] (i > 0) points at an
// earlier position whose facet contains every earlier intersection with
// facet order[i].
struct LeafOrder {
    std::vector<int> order;
    std::vector<int> branch; // branch[0] == -1
};

std::optional<LeafOrder> leaf_order(const CliqueComplex& c);
bool verify_leaf_order(const CliqueComplex& c, const LeafOrder& lo);

struct LineGraphCheck {
    bool yes = false;
    // pairs (original vertex, new label) realizing the isomorphism with the
    // chain {1,2,3},{2,3,4},...
    std::vector<std::pair<int, int>> relabeling;
    std::string reason;
};

// Recognize a chain of triangles. All facets must be triangles.
LineGraphCheck is_two_dim_line_graph(const std::vector<std::vector<int>>& facets);

struct LineComponent {
    std::vector<int> path;                 // vertex sequence when is_path
    std::vector<std::vector<int>> facets;  // the edges (or a single vertex)
    bool is_path = false;
};

struct BlockDecomposition {
    // Classes of triangles under the transitive closure of edge-sharing.
    std::vector<std::vector<std::vector<int>>> blocks2d;
    // Connected components of the 1-dimensional facets, plus isolated
    // 0-dimensional facets.
    std::vector<LineComponent> lines1d;
};

// Requires dim <= 2.
BlockDecomposition block_decomposition(const CliqueComplex& c);

struct TreeNode {
    bool is_block = false;
    int index = 0;                        // position within blocks2d / lines1d
    bool simplex = false;                 // block consisting of one triangle
    std::string name;                     // "D1", "L2", ...
    std::vector<int> vertices;            // sorted
    std::vector<std::vector<int>> facets; // block triangles or line edges
};

struct TreeEdge {
    int a = 0;
    int b = 0;
    int shared_vertex = 0;
};

struct IntersectionTree {
    std::vector<TreeNode> nodes;
    std::vector<TreeEdge> edges;
};

struct IntersectionTreeResult {
    bool ok = false;
    IntersectionTree tree;                // node graph, valid tree only when ok
    std::vector<std::string> violations;  // all of them, not just the first
};

IntersectionTreeResult intersection_tree(const BlockDecomposition& b);

// Vertices lying in exactly one facet of the given facet list.
std::vector<int> free_vertices_of_facets(const std::vector<std::vector<int>>& facets);

} // namespace bei
