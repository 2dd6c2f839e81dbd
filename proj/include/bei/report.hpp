#pragma once

#include "bei/graph.hpp"
#include "bei/koszul.hpp"
#include "bei/resolution.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bei {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json certificate_json(const KoszulCertificate& c);
Json table_json(const BettiTable& t);

struct AnalyzeOptions {
    int closed_bound = 9;
};

Json analyze_report(const Graph& g, const AnalyzeOptions& opts = {});
Json classify_report(const Graph& g);

struct GbOptions {
    long long field_p = 32003; // 0 for the rationals
    std::string order = "lex"; // "lex" | "degrevlex"
    std::optional<Labeling> labeling;
    int hilbert_degree = 10;
};

Json gb_report(const Graph& g, const GbOptions& opts = {});

struct BettiOptions {
    std::string mode = "tor"; // "tor" | "betti_S" | "module"
    int i_max = 3;
    int j_max = 6;
    long long field_p = 32003;
    long long guard = 20000;
    std::vector<int> module_gens; // variable ids for mode "module"
};

Json betti_report(const Graph& g, const BettiOptions& opts);

Json corpus_run_all_report(bool include_gb = true);

// "x3,y5" -> variable ids; throws ParseError on bad names.
std::vector<int> parse_variable_list(int n, const std::string& spec);
// "identity" or "3,1,2" (label of vertex i).
Labeling parse_labeling(int n, const std::string& spec);

} // namespace bei
