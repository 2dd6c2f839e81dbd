#pragma once

#include "bei/clique_complex.hpp"
#include "bei/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bei {

enum class KoszulStatus { koszul, not_koszul, unknown, out_of_theorem_scope };
std::string to_string(KoszulStatus s);

// Machine-checkable evidence behind a verdict. Decisive verdicts always
// carry one of these; verifiers re-check them independently.
struct KoszulCertificate {
    enum class Kind {
        none,
        claw,                 // induced claw -> not Koszul
        chordless_cycle,      // chordless cycle -> not Koszul
        singleton_leaf_order,     // leaf order with singleton branches -> Koszul
        intersection_tree,    // gluing tree of line graphs -> Koszul
        structure_violation,  // named condition of the dim-2 test failed
        component             // verdict assembled from components
    };
    Kind kind = Kind::none;
    std::optional<ClawWitness> claw;
    std::optional<ChordlessCycleWitness> cycle;
    std::optional<LeafOrder> leaf_order;
    std::vector<std::vector<int>> facets; // facet list the leaf order refers to
    std::optional<IntersectionTree> tree;
    std::string condition;
    std::vector<std::string> details;
    int component = 0; // 1-based index when lifted from a component
};

std::string to_string(KoszulCertificate::Kind k);

struct KoszulVerdict {
    KoszulStatus status = KoszulStatus::unknown;
    KoszulCertificate certificate;
    std::string notes;
};

struct NecessaryResult {
    bool pass = false;
    std::optional<ClawWitness> claw;
    std::optional<ChordlessCycleWitness> cycle;
};

// Chordal + claw-free. A failure certifies not Koszul; a pass proves
// nothing by itself.
NecessaryResult necessary_conditions(const Graph& g);

struct SingletonBranchResult {
    enum class Status { yes, no, bound_exceeded };
    Status status = Status::no;
    LeafOrder order; // valid when yes
};

// Sufficient condition: a leaf order in which every facet meets its branch
// in exactly one vertex, on a chordal claw-free graph.
SingletonBranchResult singleton_branch_check(const Graph& g, int facet_bound = 12);

// Decision procedure for connected graphs with dim <= 2 clique complex.
KoszulVerdict classify_dim2(const Graph& g);

// Component-wise classification; dim <= 2 components are decided, larger
// ones fall back to the necessary/sufficient pair.
KoszulVerdict classify(const Graph& g);

enum class TreeShape { closed_line_tree, koszul_not_closed, not_applicable };
std::string to_string(TreeShape r);

// For a connected Koszul graph with dim <= 2: a path-shaped gluing tree
// forces closedness, a degree-3 node forbids it.
TreeShape tree_shape_predicate(const Graph& g);

} // namespace bei
