#include "bei/report.hpp"

#include "bei/corpus.hpp"
#include "bei/errors.hpp"

#include <sstream>

namespace bei {

Json graph_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

namespace {

Json facets_json(const std::vector<std::vector<int>>& facets) {
    Json out = Json::array();
    for (const auto& f : facets) out.push_back(f);
    return out;
}

Json claw_json(const ClawWitness& w) {
    Json j;
    j["center"] = w.center;
    j["leaves"] = std::vector<int>(w.leaves.begin(), w.leaves.end());
    return j;
}

Json tree_json(const IntersectionTree& t) {
    Json j;
    Json nodes = Json::array();
    for (const auto& node : t.nodes) {
        Json nj;
        nj["name"] = node.name;
        nj["kind"] = node.is_block ? "block" : "line";
        nj["simplex"] = node.simplex;
        nj["vertices"] = node.vertices;
        nj["facets"] = facets_json(node.facets);
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : t.edges)
        edges.push_back(Json{{"a", t.nodes[static_cast<size_t>(e.a)].name},
                             {"b", t.nodes[static_cast<size_t>(e.b)].name},
                             {"shared_vertex", e.shared_vertex}});
    j["edges"] = std::move(edges);
    return j;
}

Json leaf_order_json(const LeafOrder& lo, const std::vector<std::vector<int>>& facets) {
    Json j;
    j["facets"] = facets_json(facets);
    j["order"] = lo.order;
    j["branch"] = lo.branch;
    return j;
}

} // namespace

Json certificate_json(const KoszulCertificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    if (c.claw) j["claw"] = claw_json(*c.claw);
    if (c.cycle) j["chordless_cycle"] = c.cycle->cycle;
    if (c.leaf_order) j["leaf_order"] = leaf_order_json(*c.leaf_order, c.facets);
    if (c.tree) j["intersection_tree"] = tree_json(*c.tree);
    if (!c.condition.empty()) j["condition"] = c.condition;
    if (!c.details.empty()) j["details"] = c.details;
    if (c.component > 0) j["component"] = c.component;
    return j;
}

Json table_json(const BettiTable& t) {
    Json j;
    j["kind"] = t.kind;
    j["field"] = t.field;
    j["trunc"] = Json::array({t.i_max, t.j_max});
    Json entries = Json::array();
    for (const auto& [key, value] : t.entries)
        if (value != 0) entries.push_back(Json::array({key.first, key.second, value}));
    j["entries"] = std::move(entries);
    return j;
}

Json analyze_report(const Graph& g, const AnalyzeOptions& opts) {
    Json j;
    j["command"] = "analyze";
    j["input"] = graph_json(g);

    auto ch = is_chordal(g);
    Json chordal;
    chordal["value"] = ch.chordal;
    if (ch.chordal) chordal["elimination_order"] = ch.elimination_order;
    else chordal["witness_cycle"] = ch.witness->cycle;
    j["chordal"] = std::move(chordal);

    auto claw = find_claw(g);
    Json cf;
    cf["value"] = !claw.has_value();
    if (claw) cf["witness"] = claw_json(*claw);
    j["claw_free"] = std::move(cf);

    Json closed;
    closed["vertex_bound"] = opts.closed_bound;
    try {
        auto lab = find_closed_labeling(g, opts.closed_bound);
        closed["status"] = lab ? "yes" : "no";
        if (lab) closed["labeling"] = lab->perm;
    } catch (const SearchBoundError&) {
        closed["status"] = "search_refused";
    }
    j["closed"] = std::move(closed);

    Json comps = Json::array();
    for (const auto& comp : connected_components(g)) comps.push_back(comp);
    j["components"] = std::move(comps);

    auto cc = clique_complex(g);
    Json complex;
    complex["dim"] = cc.dim;
    complex["facets"] = facets_json(cc.facets);
    complex["free_vertices"] = free_vertices(cc);
    j["clique_complex"] = std::move(complex);
    return j;
}

Json classify_report(const Graph& g) {
    Json j;
    j["command"] = "classify";
    j["input"] = graph_json(g);
    auto v = classify(g);
    j["verdict"] = to_string(v.status);
    j["certificate"] = certificate_json(v.certificate);
    if (!v.notes.empty()) j["notes"] = v.notes;
    j["tree_shape"] = to_string(tree_shape_predicate(g));
    return j;
}

Json gb_report(const Graph& g, const GbOptions& opts) {
    int n = g.vertex_count();
    Labeling lab = opts.labeling.value_or(Labeling::identity(n));
    if (!is_valid_labeling(lab, n)) throw ParseError("gb: invalid labeling");
    MonomialOrder order = [&] {
        if (opts.order == "lex") return lex_order_for_labeling(n, lab);
        if (opts.order == "degrevlex") {
            // same priority permutation, graded
            auto lex = lex_order_for_labeling(n, lab);
            return MonomialOrder::degrevlex(lex.priority());
        }
        throw ParseError("gb: unknown order '" + opts.order + "'");
    }();
    Ring r(n, Field(opts.field_p), order);
    auto gb = buchberger(r, binomial_edge_ideal(g, r));

    Json j;
    j["command"] = "gb";
    j["input"] = graph_json(g);
    j["field"] = r.field().name();
    j["order"] = opts.order;
    j["labeling"] = lab.perm;
    Json basis = Json::array();
    for (const auto& f : gb.elements) basis.push_back(r.to_string(f));
    j["basis"] = std::move(basis);
    auto q = is_quadratic_gb(gb);
    j["quadratic"] = Json{{"value", q.quadratic}, {"max_degree", q.max_degree}};
    j["hilbert"] = hilbert_series(r, gb, opts.hilbert_degree);
    return j;
}

Json betti_report(const Graph& g, const BettiOptions& opts) {
    ResolutionOptions ropts;
    ropts.prime = opts.field_p;
    ropts.guard = opts.guard;
    BettiTable t;
    if (opts.mode == "tor") t = tor_table(g, opts.i_max, opts.j_max, ropts);
    else if (opts.mode == "betti_S") t = betti_table_over_S(g, opts.i_max, opts.j_max, ropts);
    else if (opts.mode == "module")
        t = module_resolution_over_A(g, opts.module_gens, opts.i_max, opts.j_max, ropts);
    else throw ParseError("betti: unknown mode '" + opts.mode + "'");

    Json j;
    j["command"] = "betti";
    j["input"] = graph_json(g);
    j["mode"] = opts.mode;
    if (opts.mode == "module") {
        Ring r(g.vertex_count(), Field(opts.field_p), default_lex_order(g.vertex_count()));
        Json gens = Json::array();
        for (int v : opts.module_gens) gens.push_back(r.var_name(v));
        j["module_gens"] = std::move(gens);
    }
    j["table"] = table_json(t);
    return j;
}

Json corpus_run_all_report(bool include_gb) {
    Json j;
    j["command"] = "corpus";
    j["subcommand"] = "run-all";
    Json graphs = Json::array();
    int checked = 0, agree = 0;
    for (const auto& name : corpus_names()) {
        Graph g = corpus_graph(name);
        Json gj;
        gj["name"] = name;
        gj["n"] = g.vertex_count();
        gj["edge_count"] = g.edge_count();
        auto ch = is_chordal(g);
        gj["chordal"] = ch.chordal;
        gj["claw_free"] = !find_claw(g).has_value();
        auto v = classify(g);
        gj["verdict"] = to_string(v.status);
        gj["certificate"] = to_string(v.certificate.kind);
        gj["tree_shape"] = to_string(tree_shape_predicate(g));
        bool closed_known = false, closed = false;
        std::optional<Labeling> found;
        try {
            found = find_closed_labeling(g);
            closed_known = true;
            closed = found.has_value();
            gj["closed"] = closed;
        } catch (const SearchBoundError&) {
            gj["closed"] = "search_refused";
        }
        if (include_gb && closed_known) {
            // closedness under a labeling must match quadraticity of the
            // basis under the induced order: check the found labeling and
            // the identity labeling
            bool ok = true;
            if (found) {
                GbOptions o;
                o.labeling = *found;
                ok = ok && gb_report(g, o)["quadratic"]["value"].get<bool>();
            }
            GbOptions oid;
            ok = ok && (gb_report(g, oid)["quadratic"]["value"].get<bool>() ==
                        is_closed_with_labeling(g, Labeling::identity(g.vertex_count())));
            ++checked;
            agree += ok ? 1 : 0;
            gj["closed_vs_gb_agree"] = ok;
        }
        graphs.push_back(std::move(gj));
    }
    j["graphs"] = std::move(graphs);
    j["cross_checks"] = Json{{"closed_vs_quadratic_gb", Json{{"checked", checked}, {"agree", agree}}}};
    return j;
}

std::vector<int> parse_variable_list(int n, const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim spaces
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty variable name in '" + spec + "'");
        tok = tok.substr(a, b - a + 1);
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw ParseError("bad variable name '" + tok + "'");
        int idx;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (...) {
            throw ParseError("bad variable name '" + tok + "'");
        }
        if (idx < 1 || idx > n) throw ParseError("variable '" + tok + "' out of range");
        out.push_back(tok[0] == 'x' ? idx - 1 : n + idx - 1);
    }
    if (out.empty()) throw ParseError("empty variable list");
    return out;
}

Labeling parse_labeling(int n, const std::string& spec) {
    if (spec == "identity" || spec.empty()) return Labeling::identity(n);
    Labeling lab;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            lab.perm.push_back(std::stoi(tok));
        } catch (...) {
            throw ParseError("bad labeling entry '" + tok + "'");
        }
    }
    if (!is_valid_labeling(lab, n))
        throw ParseError("labeling '" + spec + "' is not a permutation of 1.." + std::to_string(n));
    return lab;
}

} // namespace bei
