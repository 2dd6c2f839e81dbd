#include "bei/corpus.hpp"
#include "bei/errors.hpp"
#include "bei/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

bei::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bei::ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return bei::parse_graph(ss.str());
}

void print_report(bei::Json j, bool pretty, double ms) {
    j["timing_ms"] = ms;
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideals: combinatorial classification and exact algebra"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");

    std::string file;
    long long field_p = 32003;
    std::string order = "lex";
    std::string labeling_spec = "identity";
    int imax = 3, jmax = 6;
    long long guard = 20000;

    auto* analyze = app.add_subcommand("analyze", "combinatorial verdicts for a graph file");
    analyze->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "Koszul classification with certificate");
    classify->add_option("file", file)->required();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis, quadratic flag, Hilbert series");
    gb->add_option("file", file)->required();
    gb->add_option("--field", field_p, "prime, or 0 for the rationals");
    gb->add_option("--order", order, "lex | degrevlex");
    gb->add_option("--labeling", labeling_spec, "identity or comma-separated labels");

    std::string mode = "tor";
    std::string gens_spec;
    auto* betti = app.add_subcommand("betti", "truncated Betti / Tor tables");
    betti->add_option("file", file)->required();
    betti->add_option("--mode", mode, "tor | betti_S | module");
    betti->add_option("--gens", gens_spec, "module generators, e.g. x5,x6,y5,y6");
    betti->add_option("--field", field_p, "prime for the linear algebra");
    betti->add_option("--imax", imax, "homological truncation");
    betti->add_option("--jmax", jmax, "internal degree truncation");
    betti->add_option("--guard", guard, "max graded piece dimension");

    auto* corpus = app.add_subcommand("corpus", "list | emit <name> | run-all");
    std::vector<std::string> corpus_args;
    bool skip_gb = false;
    corpus->add_option("args", corpus_args)->expected(1, 2);
    corpus->add_flag("--skip-gb", skip_gb, "run-all without Groebner cross-checks");

    for (auto* sub : {analyze, classify, gb, betti, corpus}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (*analyze) {
            print_report(bei::analyze_report(load_graph(file)), pretty, elapsed());
        } else if (*classify) {
            print_report(bei::classify_report(load_graph(file)), pretty, elapsed());
        } else if (*gb) {
            bei::Graph g = load_graph(file);
            bei::GbOptions opts;
            opts.field_p = field_p;
            opts.order = order;
            opts.labeling = bei::parse_labeling(g.vertex_count(), labeling_spec);
            print_report(bei::gb_report(g, opts), pretty, elapsed());
        } else if (*betti) {
            bei::Graph g = load_graph(file);
            bei::BettiOptions opts;
            opts.mode = mode;
            opts.i_max = imax;
            opts.j_max = jmax;
            opts.field_p = field_p;
            opts.guard = guard;
            if (mode == "module")
                opts.module_gens = bei::parse_variable_list(g.vertex_count(), gens_spec);
            print_report(bei::betti_report(g, opts), pretty, elapsed());
        } else if (*corpus) {
            if (corpus_args.empty()) throw bei::ParseError("corpus: expected list | emit | run-all");
            const std::string& sub = corpus_args[0];
            if (sub == "list") {
                bei::Json j;
                j["command"] = "corpus";
                j["subcommand"] = "list";
                j["names"] = bei::corpus_names();
                print_report(std::move(j), pretty, elapsed());
            } else if (sub == "emit") {
                if (corpus_args.size() != 2) throw bei::ParseError("corpus emit: expected a name");
                bei::Graph g = bei::corpus_graph(corpus_args[1]);
                std::string fname = corpus_args[1] + ".graph";
                std::ofstream out(fname);
                out << bei::emit_graph(g);
                out.close();
                bei::Json j;
                j["command"] = "corpus";
                j["subcommand"] = "emit";
                j["name"] = corpus_args[1];
                j["file"] = fname;
                j["graph"] = bei::graph_json(g);
                print_report(std::move(j), pretty, elapsed());
            } else if (sub == "run-all") {
                print_report(bei::corpus_run_all_report(!skip_gb), pretty, elapsed());
            } else {
                throw bei::ParseError("corpus: unknown subcommand '" + sub + "'");
            }
        }
    } catch (const bei::SizeGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
