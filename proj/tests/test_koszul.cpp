#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/corpus.hpp"
#include "bei/koszul.hpp"

#include <algorithm>

using namespace bei;

TEST_CASE("necessary conditions") {
    auto claw = necessary_conditions(corpus_graph("claw"));
    CHECK(!claw.pass);
    REQUIRE(claw.claw.has_value());
    CHECK(verify_claw(corpus_graph("claw"), *claw.claw));

    auto c5 = necessary_conditions(corpus_graph("c5"));
    CHECK(!c5.pass);
    REQUIRE(c5.cycle.has_value());
    CHECK(verify_chordless_cycle(corpus_graph("c5"), *c5.cycle));

    CHECK(necessary_conditions(corpus_graph("fig2")).pass);
}

TEST_CASE("singleton-branch sufficient condition") {
    auto fig1 = singleton_branch_check(corpus_graph("fig1"));
    REQUIRE(fig1.status == SingletonBranchResult::Status::yes);
    CHECK(verify_leaf_order(clique_complex(corpus_graph("fig1")), fig1.order));
    // every branch meets its facet in exactly one vertex
    {
        auto cc = clique_complex(corpus_graph("fig1"));
        const auto& lo = fig1.order;
        for (size_t i = 1; i < lo.order.size(); ++i) {
            const auto& fi = cc.facets[static_cast<size_t>(lo.order[i])];
            const auto& fb = cc.facets[static_cast<size_t>(lo.order[static_cast<size_t>(lo.branch[i])])];
            std::vector<int> cap;
            std::set_intersection(fi.begin(), fi.end(), fb.begin(), fb.end(),
                                  std::back_inserter(cap));
            CHECK(cap.size() == 1);
        }
    }

    for (const char* name : {"k2", "k3", "k4", "k5"})
        CHECK(singleton_branch_check(corpus_graph(name)).status == SingletonBranchResult::Status::yes);

    // two triangles sharing an edge: the only branch meets in two vertices
    CHECK(singleton_branch_check(corpus_graph("line2d-2")).status == SingletonBranchResult::Status::no);

    // bound: a long path is chordal and claw free with one facet per edge
    Graph longpath(13);
    for (int v = 1; v < 13; ++v) longpath.add_edge(v, v + 1);
    CHECK(singleton_branch_check(longpath, 5).status == SingletonBranchResult::Status::bound_exceeded);
}

TEST_CASE("dimension-2 classification") {
    auto fig1 = classify_dim2(corpus_graph("fig1"));
    CHECK(fig1.status == KoszulStatus::koszul);
    CHECK(fig1.certificate.kind == KoszulCertificate::Kind::singleton_leaf_order);

    auto fig2 = classify_dim2(corpus_graph("fig2"));
    CHECK(fig2.status == KoszulStatus::not_koszul);
    CHECK(fig2.certificate.kind == KoszulCertificate::Kind::structure_violation);
    CHECK(fig2.certificate.condition == "block_not_2d_line_graph");

    auto p5 = classify_dim2(corpus_graph("path5"));
    CHECK(p5.status == KoszulStatus::koszul);

    auto two_tri = classify_dim2(corpus_graph("line2d-2"));
    CHECK(two_tri.status == KoszulStatus::koszul);
    CHECK(two_tri.certificate.kind == KoszulCertificate::Kind::intersection_tree);

    auto bow = classify_dim2(corpus_graph("bowtie"));
    CHECK(bow.status == KoszulStatus::koszul);

    auto c4 = classify_dim2(corpus_graph("c4"));
    CHECK(c4.status == KoszulStatus::not_koszul);
    CHECK(c4.certificate.kind == KoszulCertificate::Kind::chordless_cycle);

    CHECK(classify_dim2(corpus_graph("k4")).status == KoszulStatus::out_of_theorem_scope);
    CHECK(classify_dim2(make_graph(4, {{1, 2}, {3, 4}})).status ==
          KoszulStatus::out_of_theorem_scope);

    // two triangles at a vertex with a pendant at the same vertex: the
    // shared vertex lies in three nodes, but the claw is found first
    Graph g = make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {3, 6}});
    auto v = classify_dim2(g);
    CHECK(v.status == KoszulStatus::not_koszul);
    CHECK(v.certificate.kind == KoszulCertificate::Kind::claw);

    // gluing at a non-free vertex: pendant at a chain's middle vertex is
    // already a claw, so build a subtler case: two chains sharing an
    // interior free-vertex... a pendant at vertex 1 of line2d-2 is fine
    Graph ok = glue_at_vertex(corpus_graph("line2d-2"), 1, corpus_graph("k2"), 1);
    CHECK(classify_dim2(ok).status == KoszulStatus::koszul);
}

TEST_CASE("classification across components") {
    Graph mix = disjoint_union(corpus_graph("fig1"), corpus_graph("c4"));
    auto v = classify(mix);
    CHECK(v.status == KoszulStatus::not_koszul);
    CHECK(v.certificate.component == 2);
    REQUIRE(v.certificate.cycle.has_value());
    // witness translated back to the parent labeling
    CHECK(verify_chordless_cycle(mix, *v.certificate.cycle));

    Graph twok3 = disjoint_union(corpus_graph("k3"), corpus_graph("k3"));
    CHECK(classify(twok3).status == KoszulStatus::koszul);

    // dimension > 2 falls back to the sufficient condition
    auto k5 = classify(corpus_graph("k5"));
    CHECK(k5.status == KoszulStatus::koszul);
    CHECK(k5.certificate.kind == KoszulCertificate::Kind::singleton_leaf_order);

    // K5 with a pendant at each vertex: dim > 2, chordal and claw free,
    // and the sufficient condition applies (every branch meets in 1 vertex)
    Graph k5p = corpus_graph("k5");
    for (int v5 = 1; v5 <= 5; ++v5) k5p = glue_at_vertex(k5p, v5, corpus_graph("k2"), 1);
    CHECK(classify(k5p).status == KoszulStatus::koszul);

    // two K4s sharing an edge: dim 3, the sufficient condition fails,
    // necessary conditions pass
    Graph twok4 = make_graph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                 {3, 5}, {4, 5}, {3, 6}, {4, 6}, {5, 6}});
    auto unk = classify(twok4);
    CHECK(unk.status == KoszulStatus::unknown);
}

TEST_CASE("gluing tree shape and closedness") {
    CHECK(tree_shape_predicate(corpus_graph("fig1")) == TreeShape::koszul_not_closed);
    for (const char* name : {"line2d-1", "line2d-2", "line2d-3", "line2d-4"})
        CHECK(tree_shape_predicate(corpus_graph(name)) == TreeShape::closed_line_tree);
    CHECK(tree_shape_predicate(corpus_graph("alt-line-tri")) == TreeShape::closed_line_tree);
    CHECK(tree_shape_predicate(corpus_graph("claw")) == TreeShape::not_applicable);
    CHECK(tree_shape_predicate(corpus_graph("k4")) == TreeShape::not_applicable);

    // the tree-shape dichotomy against the closedness search, where decidable
    for (const char* name : {"fig1", "bowtie", "glue-fig1-k3", "line2d-3", "alt-line-tri",
                             "glue-line2d2-k2", "path4"}) {
        Graph g = corpus_graph(name);
        auto shape = tree_shape_predicate(g);
        if (shape == TreeShape::not_applicable) continue;
        bool closed = find_closed_labeling(g).has_value();
        CHECK(closed == (shape == TreeShape::closed_line_tree));
    }
}

TEST_CASE("gluing preserves the verdict both ways") {
    struct Case {
        const char* g1;
        int v1;
        const char* g2;
        int v2;
    };
    for (const Case& c : {Case{"k3", 1, "k3", 1}, Case{"fig1", 4, "k3", 1},
                          Case{"fig2", 1, "k3", 1}, Case{"fig2", 3, "fig1", 5}}) {
        Graph g1 = corpus_graph(c.g1), g2 = corpus_graph(c.g2);
        Graph glued = glue_at_vertex(g1, c.v1, g2, c.v2);
        auto s1 = classify(g1).status, s2 = classify(g2).status, sg = classify(glued).status;
        REQUIRE(s1 != KoszulStatus::unknown);
        REQUIRE(s2 != KoszulStatus::unknown);
        REQUIRE(sg != KoszulStatus::unknown);
        bool both = s1 == KoszulStatus::koszul && s2 == KoszulStatus::koszul;
        CHECK((sg == KoszulStatus::koszul) == both);
    }
}

TEST_CASE("certificates re-verify") {
    // koszul certificates: leaf orders verify against the complex
    for (const char* name : {"fig1", "bowtie", "k3", "path5"}) {
        auto v = classify(corpus_graph(name));
        REQUIRE(v.status == KoszulStatus::koszul);
        if (v.certificate.kind == KoszulCertificate::Kind::singleton_leaf_order) {
            CliqueComplex cc;
            cc.n = corpus_graph(name).vertex_count();
            cc.facets = v.certificate.facets;
            CHECK(verify_leaf_order(cc, *v.certificate.leaf_order));
        }
    }
    // not_koszul witnesses verify against the graph
    for (const char* name : {"claw", "c4", "c6"}) {
        Graph g = corpus_graph(name);
        auto v = classify(g);
        REQUIRE(v.status == KoszulStatus::not_koszul);
        if (v.certificate.claw) CHECK(verify_claw(g, *v.certificate.claw));
        if (v.certificate.cycle) CHECK(verify_chordless_cycle(g, *v.certificate.cycle));
    }
}
