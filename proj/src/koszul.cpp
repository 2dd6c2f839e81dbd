#include "bei/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bei {

std::string to_string(KoszulStatus s) {
    switch (s) {
        case KoszulStatus::koszul: return "koszul";
        case KoszulStatus::not_koszul: return "not_koszul";
        case KoszulStatus::unknown: return "unknown";
        case KoszulStatus::out_of_theorem_scope: return "out_of_theorem_scope";
    }
    return "?";
}

std::string to_string(KoszulCertificate::Kind k) {
    switch (k) {
        case KoszulCertificate::Kind::none: return "none";
        case KoszulCertificate::Kind::claw: return "claw";
        case KoszulCertificate::Kind::chordless_cycle: return "chordless_cycle";
        case KoszulCertificate::Kind::singleton_leaf_order: return "singleton_leaf_order";
        case KoszulCertificate::Kind::intersection_tree: return "intersection_tree";
        case KoszulCertificate::Kind::structure_violation: return "structure_violation";
        case KoszulCertificate::Kind::component: return "component";
    }
    return "?";
}

std::string to_string(TreeShape r) {
    switch (r) {
        case TreeShape::closed_line_tree: return "closed_line_tree";
        case TreeShape::koszul_not_closed: return "koszul_not_closed";
        case TreeShape::not_applicable: return "not_applicable";
    }
    return "?";
}

NecessaryResult necessary_conditions(const Graph& g) {
    NecessaryResult res;
    auto ch = is_chordal(g);
    if (!ch.chordal) {
        res.pass = false;
        res.cycle = ch.witness;
        return res;
    }
    res.claw = find_claw(g);
    res.pass = !res.claw.has_value();
    return res;
}

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct SingletonOrderSearch {
    const std::vector<std::vector<int>>* facets;
    size_t r;
    std::vector<int> order;
    std::vector<int> branch;
    std::vector<char> used;
    long long nodes = 0;
    long long node_cap = 1 << 22;
    bool capped = false;

    bool dfs() {
        if (++nodes > node_cap) {
            capped = true;
            return false;
        }
        if (order.size() == r) return true;
        for (size_t f = 0; f < r; ++f) {
            if (used[f]) continue;
            // union of intersections with chosen facets must be one vertex
            std::set<int> uni;
            int br = -1;
            for (size_t pos = 0; pos < order.size(); ++pos) {
                auto inter = sorted_intersection((*facets)[f],
                                                 (*facets)[static_cast<size_t>(order[pos])]);
                uni.insert(inter.begin(), inter.end());
                if (!inter.empty() && br < 0) br = static_cast<int>(pos);
            }
            if (!order.empty() && uni.size() != 1) continue;
            used[f] = 1;
            order.push_back(static_cast<int>(f));
            branch.push_back(order.size() == 1 ? -1 : br);
            if (dfs()) return true;
            if (capped) return false;
            branch.pop_back();
            order.pop_back();
            used[f] = 0;
        }
        return false;
    }
};

} // namespace

SingletonBranchResult singleton_branch_check(const Graph& g, int facet_bound) {
    SingletonBranchResult res;
    auto nec = necessary_conditions(g);
    if (!nec.pass) {
        res.status = SingletonBranchResult::Status::no;
        return res;
    }
    auto cc = clique_complex(g);
    if (static_cast<int>(cc.facets.size()) > facet_bound) {
        res.status = SingletonBranchResult::Status::bound_exceeded;
        return res;
    }
    if (cc.facets.size() <= 1) {
        res.status = SingletonBranchResult::Status::yes;
        res.order.order.assign(cc.facets.size(), 0);
        res.order.branch.assign(cc.facets.size(), -1);
        return res;
    }
    SingletonOrderSearch search;
    search.facets = &cc.facets;
    search.r = cc.facets.size();
    search.used.assign(search.r, 0);
    if (search.dfs()) {
        res.status = SingletonBranchResult::Status::yes;
        res.order.order = search.order;
        res.order.branch = search.branch;
        return res;
    }
    res.status = search.capped ? SingletonBranchResult::Status::bound_exceeded : SingletonBranchResult::Status::no;
    return res;
}

namespace {

KoszulVerdict violation_verdict(std::string condition, std::vector<std::string> details) {
    KoszulVerdict v;
    v.status = KoszulStatus::not_koszul;
    v.certificate.kind = KoszulCertificate::Kind::structure_violation;
    v.certificate.condition = std::move(condition);
    v.certificate.details = std::move(details);
    return v;
}

std::string fmt_facets(const std::vector<std::vector<int>>& fs) {
    std::string out;
    for (const auto& f : fs) {
        out += out.empty() ? "{" : ", {";
        for (size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
        out += "}";
    }
    return out;
}

} // namespace

KoszulVerdict classify_dim2(const Graph& g) {
    KoszulVerdict v;
    if (g.vertex_count() == 0 || connected_components(g).size() != 1) {
        v.status = KoszulStatus::out_of_theorem_scope;
        v.notes = "requires a connected graph";
        return v;
    }
    auto cc = clique_complex(g);
    if (cc.dim > 2) {
        v.status = KoszulStatus::out_of_theorem_scope;
        v.notes = "clique complex has dimension " + std::to_string(cc.dim);
        return v;
    }
    auto nec = necessary_conditions(g);
    if (!nec.pass) {
        v.status = KoszulStatus::not_koszul;
        if (nec.cycle) {
            v.certificate.kind = KoszulCertificate::Kind::chordless_cycle;
            v.certificate.cycle = nec.cycle;
        } else {
            v.certificate.kind = KoszulCertificate::Kind::claw;
            v.certificate.claw = nec.claw;
        }
        return v;
    }
    auto bd = block_decomposition(cc);
    for (const auto& block : bd.blocks2d) {
        auto check = is_two_dim_line_graph(block);
        if (!check.yes)
            return violation_verdict("block_not_2d_line_graph",
                                     {"block " + fmt_facets(block) + ": " + check.reason});
    }
    for (const auto& line : bd.lines1d) {
        if (!line.is_path)
            return violation_verdict("line_not_path", {"line " + fmt_facets(line.facets)});
    }
    auto tr = intersection_tree(bd);
    if (!tr.ok) return violation_verdict("intersection_tree", tr.violations);

    std::vector<int> degree(tr.tree.nodes.size(), 0);
    for (const auto& e : tr.tree.edges) {
        ++degree[static_cast<size_t>(e.a)];
        ++degree[static_cast<size_t>(e.b)];
        for (int side : {e.a, e.b}) {
            const auto& node = tr.tree.nodes[static_cast<size_t>(side)];
            auto free = free_vertices_of_facets(node.facets);
            if (!std::binary_search(free.begin(), free.end(), e.shared_vertex))
                return violation_verdict(
                    "gluing_vertex_not_free",
                    {"vertex " + std::to_string(e.shared_vertex) + " is not free in node " + node.name});
        }
    }
    for (size_t i = 0; i < tr.tree.nodes.size(); ++i) {
        if (degree[i] < 3) continue;
        const auto& node = tr.tree.nodes[i];
        if (!(node.is_block && node.simplex))
            return violation_verdict("degree3_node_not_simplex",
                                     {"node " + node.name + " has degree 3 but is not a single triangle"});
        std::set<int> glue;
        for (const auto& e : tr.tree.edges)
            if (e.a == static_cast<int>(i) || e.b == static_cast<int>(i)) glue.insert(e.shared_vertex);
        if (glue.size() != 3)
            return violation_verdict("degree3_node_not_simplex",
                                     {"node " + node.name + " is glued at fewer than 3 distinct vertices"});
    }

    v.status = KoszulStatus::koszul;
    v.certificate.kind = KoszulCertificate::Kind::intersection_tree;
    v.certificate.tree = tr.tree;
    // prefer the stronger leaf-order certificate when it exists
    auto c25 = singleton_branch_check(g);
    if (c25.status == SingletonBranchResult::Status::yes) {
        v.certificate.kind = KoszulCertificate::Kind::singleton_leaf_order;
        v.certificate.leaf_order = c25.order;
        v.certificate.facets = cc.facets;
    }
    return v;
}

namespace {

int translate(int v, const std::vector<int>& comp) { return comp[static_cast<size_t>(v) - 1]; }

void translate_certificate(KoszulCertificate& cert, const std::vector<int>& comp) {
    if (cert.claw) {
        cert.claw->center = translate(cert.claw->center, comp);
        for (auto& l : cert.claw->leaves) l = translate(l, comp);
        std::sort(cert.claw->leaves.begin(), cert.claw->leaves.end());
    }
    if (cert.cycle)
        for (auto& x : cert.cycle->cycle) x = translate(x, comp);
    for (auto& f : cert.facets)
        for (auto& x : f) x = translate(x, comp);
    if (cert.tree)
        for (auto& node : cert.tree->nodes) {
            for (auto& x : node.vertices) x = translate(x, comp);
            for (auto& f : node.facets)
                for (auto& x : f) x = translate(x, comp);
        }
    if (cert.tree)
        for (auto& e : cert.tree->edges) e.shared_vertex = translate(e.shared_vertex, comp);
}

KoszulVerdict classify_component(const Graph& sub) {
    auto cc = clique_complex(sub);
    if (cc.dim <= 2) return classify_dim2(sub);
    auto nec = necessary_conditions(sub);
    KoszulVerdict v;
    if (!nec.pass) {
        v.status = KoszulStatus::not_koszul;
        if (nec.cycle) {
            v.certificate.kind = KoszulCertificate::Kind::chordless_cycle;
            v.certificate.cycle = nec.cycle;
        } else {
            v.certificate.kind = KoszulCertificate::Kind::claw;
            v.certificate.claw = nec.claw;
        }
        return v;
    }
    auto c25 = singleton_branch_check(sub);
    if (c25.status == SingletonBranchResult::Status::yes) {
        v.status = KoszulStatus::koszul;
        v.certificate.kind = KoszulCertificate::Kind::singleton_leaf_order;
        v.certificate.leaf_order = c25.order;
        v.certificate.facets = cc.facets;
        return v;
    }
    v.status = KoszulStatus::unknown;
    v.notes = "necessary conditions pass, sufficient condition fails; dimension " +
              std::to_string(cc.dim) + " is beyond the decision procedure";
    return v;
}

} // namespace

KoszulVerdict classify(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() == 1 || g.vertex_count() == 0) {
        if (g.vertex_count() == 0) {
            KoszulVerdict v;
            v.status = KoszulStatus::koszul;
            v.certificate.kind = KoszulCertificate::Kind::component;
            v.notes = "empty graph: the quotient is the base field";
            return v;
        }
        return classify_component(g);
    }
    KoszulVerdict merged;
    merged.status = KoszulStatus::koszul;
    for (size_t c = 0; c < comps.size(); ++c) {
        Graph sub = induced_subgraph(g, comps[c]);
        KoszulVerdict v = classify_component(sub);
        if (v.status == KoszulStatus::not_koszul) {
            translate_certificate(v.certificate, comps[c]);
            v.certificate.component = static_cast<int>(c) + 1;
            v.notes = "component " + std::to_string(c + 1) + " is not Koszul";
            return v;
        }
        if (v.status != KoszulStatus::koszul && merged.status == KoszulStatus::koszul) {
            merged.status = KoszulStatus::unknown;
            merged.notes = "component " + std::to_string(c + 1) + ": " + v.notes;
        }
    }
    if (merged.status == KoszulStatus::koszul) {
        merged.certificate.kind = KoszulCertificate::Kind::component;
        merged.notes = "all " + std::to_string(comps.size()) + " components are Koszul";
    }
    return merged;
}

TreeShape tree_shape_predicate(const Graph& g) {
    if (g.vertex_count() == 0 || connected_components(g).size() != 1)
        return TreeShape::not_applicable;
    auto cc = clique_complex(g);
    if (cc.dim > 2) return TreeShape::not_applicable;
    auto v = classify_dim2(g);
    if (v.status != KoszulStatus::koszul) return TreeShape::not_applicable;
    auto tr = intersection_tree(block_decomposition(cc));
    if (!tr.ok) return TreeShape::not_applicable;
    std::vector<int> degree(tr.tree.nodes.size(), 0);
    for (const auto& e : tr.tree.edges) {
        ++degree[static_cast<size_t>(e.a)];
        ++degree[static_cast<size_t>(e.b)];
    }
    for (int d : degree)
        if (d >= 3) return TreeShape::koszul_not_closed;
    return TreeShape::closed_line_tree;
}

} // namespace bei
