#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bei {

// Finite simple graph on vertices 1..n. Edges are stored sorted with i < j.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Rejects loops and endpoints outside 1..n; duplicates are ignored.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const; // ascending
    int degree(int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> adj_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list file format: optional "n <count>" header, one "i j" pair per
// line, '#' starts a comment. Vertex count defaults to the max endpoint.
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

// Vertices of w relabeled 1..|w| in ascending order; edges restricted to w.
Graph induced_subgraph(const Graph& g, const std::vector<int>& w);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// A relabeling of the vertices: perm[v-1] is the label given to vertex v.
struct Labeling {
    std::vector<int> perm;
    int label_of(int v) const { return perm[static_cast<size_t>(v) - 1]; }
    static Labeling identity(int n);
};

bool is_valid_labeling(const Labeling& lab, int n);

struct ClawWitness {
    int center = 0;
    std::array<int, 3> leaves{};
};

struct ChordlessCycleWitness {
    std::vector<int> cycle; // v1..vm, m >= 4, consecutive + wraparound edges, no chords
};

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;            // on yes: a perfect elimination order
    std::optional<ChordlessCycleWitness> witness;  // on no
};

// Maximum-cardinality search followed by perfect-elimination verification.
ChordalityResult is_chordal(const Graph& g);

// True iff eliminating vertices in the given order always removes a
// simplicial vertex. Used to re-verify chordality certificates.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);
bool verify_chordless_cycle(const Graph& g, const ChordlessCycleWitness& w);

// Smallest induced claw under (center, sorted leaves) order, if any.
std::optional<ClawWitness> find_claw(const Graph& g);
bool verify_claw(const Graph& g, const ClawWitness& w);

struct ClosedViolation {
    int center = 0; // original vertex ids
    int a = 0;
    int b = 0;
};

// First triple violating the closed condition under lab, scanning centers
// ascending and neighbor pairs in ascending order; nullopt when closed.
std::optional<ClosedViolation> closed_violation(const Graph& g, const Labeling& lab);
bool is_closed_with_labeling(const Graph& g, const Labeling& lab);

// Exhaustive search with pruning; throws SearchBoundError when the vertex
// count exceeds the bound. Returns the first labeling in the canonical
// (vertex-ascending) search order.
std::optional<Labeling> find_closed_labeling(const Graph& g, int vertex_bound = 9);

// Partition of 1..n into maximal connected sets, sorted by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Identify a free vertex of g1 with a free vertex of g2. g1 keeps its
// labels; the rest of g2 is appended in ascending order.
Graph glue_at_vertex(const Graph& g1, int v1, const Graph& g2, int v2);

// Canonical form and isomorphism on small graphs (<= 12 vertices).
std::vector<std::pair<int, int>> canonical_edges(const Graph& g);
bool graphs_isomorphic(const Graph& g1, const Graph& g2);

} // namespace bei
