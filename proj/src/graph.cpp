#include "bei/graph.hpp"

#include "bei/clique_complex.hpp"
#include "bei/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace bei {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loop edge at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("graph: edge endpoint out of range");
    if (has_edge(u, v)) return;
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
    adj_[static_cast<size_t>(u - 1) * n_ + (v - 1)] = 1;
    adj_[static_cast<size_t>(v - 1) * n_ + (u - 1)] = 1;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    return adj_[static_cast<size_t>(u - 1) * n_ + (v - 1)] != 0;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (has_edge(v, u)) out.push_back(u);
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int header_n = -1;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank/comment line
        if (first_content && tok == "n") {
            long long cnt;
            if (!(ls >> cnt) || cnt < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad header");
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after header");
            header_n = static_cast<int>(cnt);
            first_content = false;
            continue;
        }
        first_content = false;
        long long u, v;
        std::istringstream es(line);
        if (!(es >> u >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected two vertex indices");
        std::string extra;
        if (es >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 1 || v < 1)
            throw ParseError("line " + std::to_string(lineno) + ": vertex index < 1");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": loop edge");
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    int n = header_n >= 0 ? header_n : max_vertex;
    if (header_n >= 0 && max_vertex > header_n)
        throw ParseError("edge endpoint " + std::to_string(max_vertex) +
                         " exceeds header count " + std::to_string(header_n));
    return make_graph(n, edges);
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    std::vector<int> vs(w);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 1 || v > g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    Graph h(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.vertex_count() + g2.vertex_count());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    int off = g1.vertex_count();
    for (auto [u, v] : g2.edges()) g.add_edge(u + off, v + off);
    return g;
}

Labeling Labeling::identity(int n) {
    Labeling lab;
    lab.perm.resize(static_cast<size_t>(n));
    std::iota(lab.perm.begin(), lab.perm.end(), 1);
    return lab;
}

bool is_valid_labeling(const Labeling& lab, int n) {
    if (static_cast<int>(lab.perm.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : lab.perm) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Chordality

namespace {

// Maximum-cardinality search; visits from last eliminated to first.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n) + 1, 0);
    std::vector<char> picked(static_cast<size_t>(n) + 1, 0);
    std::vector<int> visit;
    visit.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (!picked[static_cast<size_t>(v)] && (best == -1 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        picked[static_cast<size_t>(best)] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!picked[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    std::reverse(visit.begin(), visit.end()); // elimination order
    return visit;
}

// Shortest u-w path avoiding N[center] except at the endpoints, with
// lexicographic tie-breaking. Empty when none exists.
std::vector<int> avoiding_path(const Graph& g, int center, int u, int w) {
    int n = g.vertex_count();
    std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
    blocked[static_cast<size_t>(center)] = 1;
    for (int x : g.neighbors(center)) blocked[static_cast<size_t>(x)] = 1;
    blocked[static_cast<size_t>(u)] = 0;
    blocked[static_cast<size_t>(w)] = 0;
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::queue<int> q;
    q.push(u);
    parent[static_cast<size_t>(u)] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == w) break;
        for (int y : g.neighbors(x)) {
            if (blocked[static_cast<size_t>(y)] || parent[static_cast<size_t>(y)] != 0) continue;
            parent[static_cast<size_t>(y)] = x;
            q.push(y);
        }
    }
    if (parent[static_cast<size_t>(w)] == 0) return {};
    std::vector<int> path;
    for (int x = w; x != u; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> canonical_cycle(std::vector<int> cyc) {
    size_t m = cyc.size();
    size_t start = 0;
    for (size_t i = 1; i < m; ++i)
        if (cyc[i] < cyc[start]) start = i;
    std::vector<int> fwd(m), bwd(m);
    for (size_t i = 0; i < m; ++i) {
        fwd[i] = cyc[(start + i) % m];
        bwd[i] = cyc[(start + m - i) % m];
    }
    return std::min(fwd, bwd);
}

// Exhaustive over all (center; u<w) with u,w nonadjacent common neighbors:
// a chordless cycle exists iff some such triple closes through a path that
// avoids the rest of N[center].
std::optional<ChordlessCycleWitness> find_chordless_cycle(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        auto nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.has_edge(u, w)) continue;
                auto path = avoiding_path(g, v, u, w);
                if (path.empty()) continue;
                std::vector<int> cyc;
                cyc.push_back(v);
                cyc.insert(cyc.end(), path.begin(), path.end());
                return ChordlessCycleWitness{canonical_cycle(std::move(cyc))};
            }
    }
    return std::nullopt;
}

} // namespace

bool verify_elimination_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

bool verify_chordless_cycle(const Graph& g, const ChordlessCycleWitness& w) {
    const auto& c = w.cycle;
    size_t m = c.size();
    if (m < 4) return false;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int v : c) {
        if (v < 1 || v > g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (g.has_edge(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    res.elimination_order = mcs_order(g);
    if (verify_elimination_order(g, res.elimination_order)) {
        res.chordal = true;
        return res;
    }
    res.chordal = false;
    res.elimination_order.clear();
    res.witness = find_chordless_cycle(g);
    if (!res.witness)
        throw std::logic_error("is_chordal: elimination check failed but no chordless cycle found");
    return res;
}

std::optional<ClawWitness> find_claw(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        auto nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
                    return ClawWitness{v, {nb[i], nb[j], nb[k]}};
                }
            }
    }
    return std::nullopt;
}

bool verify_claw(const Graph& g, const ClawWitness& w) {
    const auto& l = w.leaves;
    for (int x : l)
        if (!g.has_edge(w.center, x)) return false;
    return !g.has_edge(l[0], l[1]) && !g.has_edge(l[0], l[2]) && !g.has_edge(l[1], l[2]);
}

std::optional<ClosedViolation> closed_violation(const Graph& g, const Labeling& lab) {
    if (!is_valid_labeling(lab, g.vertex_count()))
        throw std::invalid_argument("closed_violation: invalid labeling");
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        auto nb = g.neighbors(v);
        int lv = lab.label_of(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                int la = lab.label_of(a), lb = lab.label_of(b);
                bool both_up = lv < la && lv < lb;
                bool both_down = lv > la && lv > lb;
                if ((both_up || both_down) && !g.has_edge(a, b))
                    return ClosedViolation{v, a, b};
            }
    }
    return std::nullopt;
}

bool is_closed_with_labeling(const Graph& g, const Labeling& lab) {
    return !closed_violation(g, lab).has_value();
}

namespace {

// Once a vertex is labeled, its earlier neighbors are fixed and every
// unlabeled neighbor will end up later, so both sides must already be
// cliques for any completion to stay closed.
bool closed_search(const Graph& g, std::vector<int>& chosen, std::vector<char>& used) {
    int n = g.vertex_count();
    if (static_cast<int>(chosen.size()) == n) return true;
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        auto nb = g.neighbors(v);
        std::vector<int> earlier, later;
        for (int u : nb)
            (used[static_cast<size_t>(u)] ? earlier : later).push_back(u);
        bool ok = true;
        for (size_t i = 0; ok && i < earlier.size(); ++i)
            for (size_t j = i + 1; ok && j < earlier.size(); ++j)
                if (!g.has_edge(earlier[i], earlier[j])) ok = false;
        for (size_t i = 0; ok && i < later.size(); ++i)
            for (size_t j = i + 1; ok && j < later.size(); ++j)
                if (!g.has_edge(later[i], later[j])) ok = false;
        if (!ok) continue;
        used[static_cast<size_t>(v)] = 1;
        chosen.push_back(v);
        if (closed_search(g, chosen, used)) return true;
        chosen.pop_back();
        used[static_cast<size_t>(v)] = 0;
    }
    return false;
}

} // namespace

std::optional<Labeling> find_closed_labeling(const Graph& g, int vertex_bound) {
    int n = g.vertex_count();
    if (n > vertex_bound)
        throw SearchBoundError("find_closed_labeling: search refused, " + std::to_string(n) +
                               " vertices exceeds bound " + std::to_string(vertex_bound));
    std::vector<int> chosen;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    if (!closed_search(g, chosen, used)) return std::nullopt;
    Labeling lab;
    lab.perm.assign(static_cast<size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos)
        lab.perm[static_cast<size_t>(chosen[static_cast<size_t>(pos)]) - 1] = pos + 1;
    return lab;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int v = 1; v <= n; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[static_cast<size_t>(v)] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            comp.push_back(x);
            for (int y : g.neighbors(x))
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    q.push(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph glue_at_vertex(const Graph& g1, int v1, const Graph& g2, int v2) {
    auto check_free = [](const Graph& g, int v, const char* which) {
        auto cc = clique_complex(g);
        std::vector<std::vector<int>> containing;
        for (const auto& f : cc.facets)
            if (std::binary_search(f.begin(), f.end(), v)) containing.push_back(f);
        if (containing.size() != 1) {
            std::string msg = std::string("glue_at_vertex: vertex ") + std::to_string(v) +
                              " of " + which + " is not free";
            if (containing.size() >= 2) {
                auto fmt = [](const std::vector<int>& f) {
                    std::string s = "{";
                    for (size_t i = 0; i < f.size(); ++i)
                        s += (i ? "," : "") + std::to_string(f[i]);
                    return s + "}";
                };
                msg += ": lies in facets " + fmt(containing[0]) + " and " + fmt(containing[1]);
            }
            throw NotFreeVertexError(msg);
        }
    };
    if (v1 < 1 || v1 > g1.vertex_count() || v2 < 1 || v2 > g2.vertex_count())
        throw std::invalid_argument("glue_at_vertex: vertex out of range");
    check_free(g1, v1, "g1");
    check_free(g2, v2, "g2");

    int n1 = g1.vertex_count();
    std::vector<int> map2(static_cast<size_t>(g2.vertex_count()) + 1, 0);
    map2[static_cast<size_t>(v2)] = v1;
    int next = n1 + 1;
    for (int v = 1; v <= g2.vertex_count(); ++v)
        if (v != v2) map2[static_cast<size_t>(v)] = next++;

    Graph g(n1 + g2.vertex_count() - 1);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(map2[static_cast<size_t>(u)], map2[static_cast<size_t>(v)]);
    return g;
}

// ---------------------------------------------------------------------------
// Canonical form on small graphs: minimum adjacency bit string over all
// vertex permutations, with branch-and-bound on partial rows.

namespace {

struct CanonState {
    const Graph* g;
    int n;
    std::vector<int> assign; // assign[pos] = original vertex at canonical position pos+1
    std::vector<char> used;
    std::vector<char> best;  // bits of best adjacency, row by row (upper triangle)
    bool have_best = false;

    void consider(std::vector<char>& bits, int pos) {
        if (pos == n) {
            if (!have_best || bits < best) {
                best = bits;
                have_best = true;
            }
            return;
        }
        size_t base = bits.size();
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            for (int j = 0; j < pos; ++j)
                bits.push_back(g->has_edge(assign[static_cast<size_t>(j)], v) ? 1 : 0);
            // prune only when the known prefix is already strictly worse
            bool prune = false;
            if (have_best) {
                for (size_t k = 0; k < bits.size(); ++k) {
                    if (bits[k] < best[k]) break;
                    if (bits[k] > best[k]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                used[static_cast<size_t>(v)] = 1;
                assign[static_cast<size_t>(pos)] = v;
                consider(bits, pos + 1);
                used[static_cast<size_t>(v)] = 0;
            }
            bits.resize(base);
        }
    }
};

} // namespace

std::vector<std::pair<int, int>> canonical_edges(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12)
        throw std::invalid_argument("canonical_edges: supported only up to 12 vertices");
    CanonState st;
    st.g = &g;
    st.n = n;
    st.assign.assign(static_cast<size_t>(n), 0);
    st.used.assign(static_cast<size_t>(n) + 1, 0);
    std::vector<char> bits;
    st.consider(bits, 0);
    std::vector<std::pair<int, int>> out;
    size_t k = 0;
    for (int pos = 0; pos < n; ++pos)
        for (int j = 0; j < pos; ++j, ++k)
            if (st.best[k]) out.emplace_back(j + 1, pos + 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    return canonical_edges(g1) == canonical_edges(g2);
}

} // namespace bei
