#include "bei/clique_complex.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bei {

namespace {

std::string fmt_set(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

void bron_kerbosch(const Graph& g, std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    // pivot: vertex of P union X with most neighbors in P
    int pivot = -1, best = -1;
    for (const auto& side : {P, X})
        for (int v : side) {
            int cnt = 0;
            for (int u : P)
                if (g.has_edge(u, v)) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
    std::vector<int> cand;
    for (int v : P)
        if (pivot == -1 || !g.has_edge(pivot, v)) cand.push_back(v);
    for (int v : cand) {
        std::vector<int> P2, X2;
        for (int u : P)
            if (g.has_edge(u, v)) P2.push_back(u);
        for (int u : X)
            if (g.has_edge(u, v)) X2.push_back(u);
        R.push_back(v);
        bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

} // namespace

CliqueComplex clique_complex(const Graph& g) {
    CliqueComplex c;
    c.n = g.vertex_count();
    std::vector<int> R, P(static_cast<size_t>(c.n)), X;
    std::iota(P.begin(), P.end(), 1);
    bron_kerbosch(g, R, std::move(P), std::move(X), c.facets);
    for (auto& f : c.facets) std::sort(f.begin(), f.end());
    std::sort(c.facets.begin(), c.facets.end());
    c.dim = -1;
    for (const auto& f : c.facets) c.dim = std::max(c.dim, static_cast<int>(f.size()) - 1);
    return c;
}

std::vector<int> free_vertices_of_facets(const std::vector<std::vector<int>>& facets) {
    std::map<int, int> count;
    for (const auto& f : facets)
        for (int v : f) ++count[v];
    std::vector<int> out;
    for (auto [v, c] : count)
        if (c == 1) out.push_back(v);
    return out;
}

std::vector<int> free_vertices(const CliqueComplex& c) { return free_vertices_of_facets(c.facets); }

// ---------------------------------------------------------------------------
// Leaf orders (quasi-forest recognition by greedy leaf removal)

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// f is a leaf of the complex spanned by `alive`: some other alive facet
// contains every other intersection with f.
bool is_leaf(const std::vector<std::vector<int>>& facets, const std::vector<char>& alive, int f) {
    int count_alive = 0;
    for (char a : alive) count_alive += a;
    if (count_alive == 1) return true;
    for (size_t b = 0; b < facets.size(); ++b) {
        if (!alive[b] || static_cast<int>(b) == f) continue;
        auto fb = intersect(facets[static_cast<size_t>(f)], facets[b]);
        bool branch_ok = true;
        for (size_t l = 0; l < facets.size(); ++l) {
            if (!alive[l] || static_cast<int>(l) == f || l == b) continue;
            auto fl = intersect(facets[static_cast<size_t>(f)], facets[l]);
            if (!subset_of(fl, fb)) {
                branch_ok = false;
                break;
            }
        }
        if (branch_ok) return true;
    }
    return false;
}

} // namespace

std::optional<LeafOrder> leaf_order(const CliqueComplex& c) {
    size_t r = c.facets.size();
    if (r == 0) return LeafOrder{};
    std::vector<char> alive(r, 1);
    std::vector<int> removal;
    for (size_t step = 0; step + 1 < r; ++step) {
        int pick = -1;
        for (size_t f = 0; f < r; ++f)
            if (alive[f] && is_leaf(c.facets, alive, static_cast<int>(f))) {
                pick = static_cast<int>(f);
                break;
            }
        if (pick < 0) return std::nullopt; // stuck: no leaf in the remaining complex
        alive[static_cast<size_t>(pick)] = 0;
        removal.push_back(pick);
    }
    for (size_t f = 0; f < r; ++f)
        if (alive[f]) removal.push_back(static_cast<int>(f));
    LeafOrder lo;
    lo.order.assign(removal.rbegin(), removal.rend());
    lo.branch.assign(r, -1);
    for (size_t i = 1; i < r; ++i) {
        const auto& fi = c.facets[static_cast<size_t>(lo.order[i])];
        for (size_t j = 0; j < i && lo.branch[i] < 0; ++j) {
            auto fj = intersect(fi, c.facets[static_cast<size_t>(lo.order[j])]);
            bool ok = true;
            for (size_t l = 0; l < i; ++l) {
                auto fl = intersect(fi, c.facets[static_cast<size_t>(lo.order[l])]);
                if (!subset_of(fl, fj)) {
                    ok = false;
                    break;
                }
            }
            if (ok) lo.branch[i] = static_cast<int>(j);
        }
        if (lo.branch[i] < 0) return std::nullopt;
    }
    return lo;
}

bool verify_leaf_order(const CliqueComplex& c, const LeafOrder& lo) {
    size_t r = c.facets.size();
    if (lo.order.size() != r || lo.branch.size() != r) return false;
    std::vector<char> seen(r, 0);
    for (int f : lo.order) {
        if (f < 0 || f >= static_cast<int>(r) || seen[static_cast<size_t>(f)]) return false;
        seen[static_cast<size_t>(f)] = 1;
    }
    for (size_t i = 1; i < r; ++i) {
        int b = lo.branch[i];
        if (b < 0 || b >= static_cast<int>(i)) return false;
        const auto& fi = c.facets[static_cast<size_t>(lo.order[i])];
        auto fb = intersect(fi, c.facets[static_cast<size_t>(lo.order[static_cast<size_t>(b)])]);
        for (size_t l = 0; l < i; ++l) {
            auto fl = intersect(fi, c.facets[static_cast<size_t>(lo.order[l])]);
            if (!subset_of(fl, fb)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Chains of triangles

LineGraphCheck is_two_dim_line_graph(const std::vector<std::vector<int>>& facets_in) {
    LineGraphCheck res;
    std::vector<std::vector<int>> facets(facets_in);
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (f.size() != 3)
            throw std::invalid_argument("is_two_dim_line_graph: non-triangle facet " + fmt_set(f));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    size_t m = facets.size();
    if (m == 0) {
        res.reason = "empty facet list";
        return res;
    }
    std::set<int> verts;
    for (const auto& f : facets) verts.insert(f.begin(), f.end());
    if (verts.size() != m + 2) {
        res.reason = "vertex count " + std::to_string(verts.size()) + " differs from " +
                     std::to_string(m + 2);
        return res;
    }
    if (m == 1) {
        res.yes = true;
        int lbl = 1;
        for (int v : verts) res.relabeling.emplace_back(v, lbl++);
        return res;
    }
    // adjacency of facets sharing an edge must form a path
    std::vector<std::vector<int>> nbr(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (intersect(facets[i], facets[j]).size() == 2) {
                nbr[i].push_back(static_cast<int>(j));
                nbr[j].push_back(static_cast<int>(i));
            }
    int ends = 0, start = -1;
    for (size_t i = 0; i < m; ++i) {
        if (nbr[i].size() > 2) {
            res.reason = "facet " + fmt_set(facets[i]) + " shares an edge with " +
                         std::to_string(nbr[i].size()) + " others";
            return res;
        }
        if (nbr[i].size() == 1 && (start < 0 || facets[i] < facets[static_cast<size_t>(start)])) {
            start = static_cast<int>(i);
        }
        ends += nbr[i].size() == 1;
    }
    if (ends != 2) {
        res.reason = "facet adjacency is not a path";
        return res;
    }
    std::vector<int> chain;
    std::vector<char> used(m, 0);
    int cur = start;
    while (cur >= 0) {
        chain.push_back(cur);
        used[static_cast<size_t>(cur)] = 1;
        int nxt = -1;
        for (int x : nbr[static_cast<size_t>(cur)])
            if (!used[static_cast<size_t>(x)]) nxt = x;
        cur = nxt;
    }
    if (chain.size() != m) {
        res.reason = "facet adjacency is not connected";
        return res;
    }
    // assign labels along the chain
    std::map<int, int> label;
    const auto& f1 = facets[static_cast<size_t>(chain[0])];
    const auto& f2 = facets[static_cast<size_t>(chain[1])];
    auto shared = intersect(f1, f2);
    if (shared.size() != 2) {
        res.reason = "consecutive facets do not share an edge";
        return res;
    }
    int v1 = -1;
    for (int v : f1)
        if (v != shared[0] && v != shared[1]) v1 = v;
    label[v1] = 1;
    int a = shared[0], b = shared[1];
    if (m >= 3) {
        const auto& f3 = facets[static_cast<size_t>(chain[2])];
        bool a_in_3 = std::binary_search(f3.begin(), f3.end(), a);
        bool b_in_3 = std::binary_search(f3.begin(), f3.end(), b);
        if (a_in_3 == b_in_3) {
            res.reason = "shared edge does not continue into the third facet";
            return res;
        }
        label[a_in_3 ? b : a] = 2;
        label[a_in_3 ? a : b] = 3;
    } else {
        label[std::min(a, b)] = 2;
        label[std::max(a, b)] = 3;
    }
    for (size_t i = 1; i < m; ++i) {
        const auto& prev = facets[static_cast<size_t>(chain[i - 1])];
        const auto& curf = facets[static_cast<size_t>(chain[i])];
        int fresh = -1;
        for (int v : curf)
            if (!std::binary_search(prev.begin(), prev.end(), v)) {
                if (fresh != -1) {
                    res.reason = "consecutive facets do not share an edge";
                    return res;
                }
                fresh = v;
            }
        if (fresh < 0 || label.count(fresh)) {
            res.reason = "chain revisits a vertex";
            return res;
        }
        label[fresh] = static_cast<int>(i) + 3;
    }
    // verify the relabeled facet set is exactly the standard chain
    std::set<std::vector<int>> got;
    for (const auto& f : facets) {
        std::vector<int> lf;
        for (int v : f) {
            auto it = label.find(v);
            if (it == label.end()) {
                res.reason = "relabeling incomplete";
                return res;
            }
            lf.push_back(it->second);
        }
        std::sort(lf.begin(), lf.end());
        got.insert(lf);
    }
    for (size_t i = 1; i <= m; ++i) {
        std::vector<int> want{static_cast<int>(i), static_cast<int>(i) + 1, static_cast<int>(i) + 2};
        if (!got.count(want)) {
            res.reason = "relabeled facets are not the standard chain";
            return res;
        }
    }
    res.yes = true;
    for (auto [v, l] : label) res.relabeling.emplace_back(v, l);
    std::sort(res.relabeling.begin(), res.relabeling.end());
    return res;
}

// ---------------------------------------------------------------------------
// Blocks and lines

BlockDecomposition block_decomposition(const CliqueComplex& c) {
    if (c.dim > 2)
        throw DimensionError("block_decomposition: complex has dimension " + std::to_string(c.dim) +
                             ", only dimension <= 2 is supported");
    BlockDecomposition out;
    std::vector<std::vector<int>> tris, edges1, verts0;
    for (const auto& f : c.facets) {
        if (f.size() == 3) tris.push_back(f);
        else if (f.size() == 2) edges1.push_back(f);
        else verts0.push_back(f);
    }
    // union-find over triangles sharing an edge
    std::vector<int> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j)
            if (intersect(tris[i], tris[j]).size() == 2)
                parent[static_cast<size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));
    std::map<int, std::vector<std::vector<int>>> blocks;
    for (size_t i = 0; i < tris.size(); ++i) blocks[find(static_cast<int>(i))].push_back(tris[i]);
    for (auto& [root, fs] : blocks) {
        std::sort(fs.begin(), fs.end());
        out.blocks2d.push_back(fs);
    }
    std::sort(out.blocks2d.begin(), out.blocks2d.end());

    // connected components of the 1-dimensional facets
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges1) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<int> seen;
    for (const auto& e : edges1) {
        for (int startv : e) {
            if (seen.count(startv)) continue;
            // collect the component
            std::vector<int> comp;
            std::vector<int> stack{startv};
            std::set<int> compset;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (compset.count(x)) continue;
                compset.insert(x);
                for (int y : adj[x]) stack.push_back(y);
            }
            LineComponent lc;
            for (int v : compset) {
                seen.insert(v);
                for (int u : adj[v])
                    if (u > v) lc.facets.push_back({v, u});
            }
            std::sort(lc.facets.begin(), lc.facets.end());
            // path check: degrees <= 2, exactly two endpoints, edge count = |V|-1
            std::vector<int> endpoints;
            bool degrees_ok = true;
            for (int v : compset) {
                size_t d = adj[v].size();
                if (d > 2) degrees_ok = false;
                if (d == 1) endpoints.push_back(v);
            }
            lc.is_path = degrees_ok && endpoints.size() == 2 &&
                         lc.facets.size() + 1 == compset.size();
            if (lc.is_path) {
                int curv = std::min(endpoints[0], endpoints[1]);
                int prev = -1;
                while (true) {
                    lc.path.push_back(curv);
                    int nxt = -1;
                    for (int u : adj[curv])
                        if (u != prev) nxt = u;
                    if (nxt < 0) break;
                    prev = curv;
                    curv = nxt;
                }
            } else {
                lc.path.assign(compset.begin(), compset.end());
            }
            out.lines1d.push_back(std::move(lc));
        }
    }
    for (const auto& f : verts0) {
        LineComponent lc;
        lc.path = f;
        lc.facets = {f};
        lc.is_path = true;
        out.lines1d.push_back(std::move(lc));
    }
    std::sort(out.lines1d.begin(), out.lines1d.end(),
              [](const LineComponent& x, const LineComponent& y) { return x.path < y.path; });
    return out;
}

IntersectionTreeResult intersection_tree(const BlockDecomposition& b) {
    IntersectionTreeResult res;
    auto& tree = res.tree;
    for (size_t i = 0; i < b.blocks2d.size(); ++i) {
        TreeNode node;
        node.is_block = true;
        node.index = static_cast<int>(i);
        node.simplex = b.blocks2d[i].size() == 1;
        node.name = "D" + std::to_string(i + 1);
        node.facets = b.blocks2d[i];
        std::set<int> vs;
        for (const auto& f : node.facets) vs.insert(f.begin(), f.end());
        node.vertices.assign(vs.begin(), vs.end());
        tree.nodes.push_back(std::move(node));
    }
    for (size_t i = 0; i < b.lines1d.size(); ++i) {
        TreeNode node;
        node.is_block = false;
        node.index = static_cast<int>(i);
        node.name = "L" + std::to_string(i + 1);
        node.facets = b.lines1d[i].facets;
        std::set<int> vs;
        for (const auto& f : node.facets) vs.insert(f.begin(), f.end());
        node.vertices.assign(vs.begin(), vs.end());
        if (!b.lines1d[i].is_path)
            res.violations.push_back("line component " + node.name + " is not a path");
        tree.nodes.push_back(std::move(node));
    }
    size_t nn = tree.nodes.size();
    std::vector<int> degree(nn, 0);
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = i + 1; j < nn; ++j) {
            auto shared = intersect(tree.nodes[i].vertices, tree.nodes[j].vertices);
            if (shared.empty()) continue;
            if (shared.size() >= 2)
                res.violations.push_back("nodes " + tree.nodes[i].name + " and " + tree.nodes[j].name +
                                         " share " + std::to_string(shared.size()) + " vertices " +
                                         fmt_set(shared));
            tree.edges.push_back({static_cast<int>(i), static_cast<int>(j), shared[0]});
            ++degree[i];
            ++degree[j];
        }
    // triple intersections: a vertex lying in three or more nodes
    std::map<int, std::vector<std::string>> holder;
    for (const auto& node : tree.nodes)
        for (int v : node.vertices) holder[v].push_back(node.name);
    for (const auto& [v, names] : holder)
        if (names.size() >= 3) {
            std::string msg = "vertex " + std::to_string(v) + " lies in " +
                              std::to_string(names.size()) + " nodes (";
            for (size_t i = 0; i < names.size(); ++i) msg += (i ? "," : "") + names[i];
            res.violations.push_back(msg + ")");
        }
    for (size_t i = 0; i < nn; ++i)
        if (degree[i] > 3)
            res.violations.push_back("node " + tree.nodes[i].name + " has degree " +
                                     std::to_string(degree[i]));
    // acyclicity: a connected node graph with |E| >= |V| has a cycle; check
    // per component
    {
        std::vector<int> comp(nn, -1);
        int ncomp = 0;
        for (size_t s = 0; s < nn; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<size_t> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                size_t x = stack.back();
                stack.pop_back();
                for (const auto& e : tree.edges) {
                    size_t y = nn;
                    if (static_cast<size_t>(e.a) == x) y = static_cast<size_t>(e.b);
                    else if (static_cast<size_t>(e.b) == x) y = static_cast<size_t>(e.a);
                    if (y < nn && comp[y] < 0) {
                        comp[y] = ncomp;
                        stack.push_back(y);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<int> vcount(static_cast<size_t>(ncomp), 0), ecount(static_cast<size_t>(ncomp), 0);
        for (size_t i = 0; i < nn; ++i) ++vcount[static_cast<size_t>(comp[i])];
        for (const auto& e : tree.edges) ++ecount[static_cast<size_t>(comp[static_cast<size_t>(e.a)])];
        for (int k = 0; k < ncomp; ++k)
            if (ecount[static_cast<size_t>(k)] >= vcount[static_cast<size_t>(k)]) {
                std::string msg = "node graph contains a cycle among {";
                bool first = true;
                for (size_t i = 0; i < nn; ++i)
                    if (comp[i] == k) {
                        msg += (first ? "" : ",") + tree.nodes[i].name;
                        first = false;
                    }
                res.violations.push_back(msg + "}");
            }
    }
    std::sort(res.violations.begin(), res.violations.end());
    res.ok = res.violations.empty();
    return res;
}

} // namespace bei
