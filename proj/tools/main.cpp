#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "upg/diam2.hpp"
#include "upg/gadgets.hpp"
#include "upg/io.hpp"
#include "upg/oracle.hpp"
#include "upg/random.hpp"
#include "upg/tree_model.hpp"
#include "upg/verify.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 parse/instance, 3 size/class
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSizeOrClass = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw upg::instance_error("cannot open " + path + " for writing");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw upg::instance_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Parser>
auto parse_path(const std::string& path, Parser parser) {
    std::istringstream in(read_file(path));
    try {
        return parser(in);
    } catch (const upg::parse_error& e) {
        throw upg::parse_error(path + ": " + e.what());
    }
}

json report_to_json(const upg::VerificationReport& report, bool with_timings) {
    json checks = json::array();
    for (const upg::Check& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json out{{"pass", report.pass()}, {"digest", report.instance_digest}, {"checks", checks}};
    if (with_timings) {
        json timings = json::object();
        for (const auto& [phase, secs] : report.timings) timings[phase] = secs;
        out["timings"] = timings;
    }
    return out;
}

void print_report(const upg::VerificationReport& report, const std::string& format,
                  bool with_timings) {
    if (format == "json") {
        std::cout << report_to_json(report, with_timings).dump(2) << "\n";
    } else {
        std::cout << report.canonical_text();
        if (with_timings)
            for (const auto& [phase, secs] : report.timings)
                std::cerr << "timing " << phase << " " << secs << "s\n";
    }
}

json rows_to_json(const std::vector<upg::GadgetRow>& rows) {
    json arr = json::array();
    for (const upg::GadgetRow& r : rows)
        arr.push_back({{"digest", r.digest},
                       {"n", r.n},
                       {"m", r.m},
                       {"three_dm", r.three_dm_yes ? "yes" : "no"},
                       {"cds", r.cds},
                       {"steiner", r.steiner},
                       {"bound", r.bound},
                       {"agree", r.agree}});
    return json{{"rows", arr}};
}

int cmd_generate(const std::string& kind, int n, int m, int permille, uint64_t seed, int budget,
                 const std::string& from, const std::string& out_prefix) {
    upg::SplitMix64 rng(seed);
    if (kind == "3dm") {
        upg::ThreeDMInstance inst = upg::random_3dm(n, m, rng);
        write_file(out_prefix + ".3dm", upg::emit_3dm(inst));
    } else if (kind == "graph") {
        upg::Graph g = upg::random_graph(n, permille, rng);
        write_file(out_prefix + ".graph", upg::emit_graph(g));
    } else if (kind == "gadget-cds" || kind == "gadget-steiner") {
        upg::ThreeDMInstance inst = parse_path(from, upg::parse_3dm);
        upg::GadgetOutput gadget =
            kind == "gadget-cds" ? upg::cds_from_3dm(inst) : upg::steiner_from_3dm(inst);
        write_file(out_prefix + ".graph", upg::emit_graph(gadget.graph));
        write_file(out_prefix + ".model", upg::emit_model(gadget.model));
        write_file(out_prefix + ".budget", upg::emit_budget(gadget.budget));
        if (!gadget.terminals.empty())
            write_file(out_prefix + ".terminals", upg::emit_terminals(gadget.terminals));
        std::ostringstream labels;
        for (size_t v = 0; v < gadget.labels.size(); ++v)
            labels << v << " " << gadget.labels[v] << "\n";
        write_file(out_prefix + ".labels", labels.str());
    } else if (kind == "gadget-bipartite") {
        upg::Graph g = parse_path(from, upg::parse_graph);
        upg::GadgetOutput gadget = upg::steiner_from_ds(g, budget);
        write_file(out_prefix + ".graph", upg::emit_graph(gadget.graph));
        write_file(out_prefix + ".terminals", upg::emit_terminals(gadget.terminals));
        write_file(out_prefix + ".budget", upg::emit_budget(gadget.budget));
    } else if (kind == "subdivision") {
        upg::Graph g = parse_path(from, upg::parse_graph);
        upg::ThicknessWitness w = upg::subdivide(g);
        write_file(out_prefix + ".graph", upg::emit_graph(w.sub));
        std::ostringstream parts;
        for (const auto& [u, v] : w.part1) parts << "1 " << u << " " << v << "\n";
        for (const auto& [u, v] : w.part2) parts << "2 " << u << " " << v << "\n";
        write_file(out_prefix + ".parts", parts.str());
    } else {
        throw upg::instance_error("unknown generate kind: " + kind);
    }
    return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& terminals_path,
              const std::string& model_path, std::optional<int> budget,
              const std::string& budget_path, std::string algo, int cap,
              const std::string& format) {
    upg::Graph g = parse_path(graph_path, upg::parse_graph);
    upg::VertexSet x = parse_path(terminals_path, upg::parse_terminals);
    for (upg::Vertex v : x) g.check_vertex(v);
    std::optional<upg::TreeModel> model;
    if (!model_path.empty()) model = parse_path(model_path, upg::parse_model);
    if (!budget && !budget_path.empty()) budget = parse_path(budget_path, upg::parse_budget);

    std::string instance_digest = upg::fnv1a64_hex(upg::emit_graph(g) + upg::emit_terminals(x));

    if (algo == "auto") {
        std::optional<int> d = upg::diameter(g);
        bool diam2_ready = model && d && *d <= 2 && upg::validate(*model, g, true).pass();
        algo = diam2_ready ? "diam2" : "oracle";
    }

    json out{{"algorithm", algo}, {"instance_digest", instance_digest}};
    upg::Witness witness;
    if (algo == "diam2") {
        if (!model) throw upg::class_error("solve: --algo diam2 needs --model");
        upg::SteinerInstance inst{g, *model, x,
                                  budget ? *budget : std::numeric_limits<int>::max()};
        auto [w, trace] = upg::solve(inst);
        witness = w;
        json removals = json::array();
        auto push_removals = [&](const std::vector<upg::Removal>& list, const char* kind) {
            for (const upg::Removal& r : list) {
                json item{{"kind", kind}, {"removed", r.removed}};
                if (r.partner >= 0) item["partner"] = r.partner;
                removals.push_back(item);
            }
        };
        push_removals(trace.removed_twins, "twin");
        push_removals(trace.removed_simplicials, "simplicial");
        push_removals(trace.removed_leafy, "leafy");
        out["trace"] = json{{"removals", removals},
                            {"base_case", trace.base_case},
                            {"chosen_node", trace.chosen_node},
                            {"optimal_set", trace.optimal_set.ids()}};
    } else if (algo == "oracle") {
        witness = upg::steiner_min(g, x, std::nullopt, cap);
        if (budget) {
            witness.yes = witness.objective <= *budget;
            if (!witness.yes) witness.set = {};
        }
    } else {
        throw upg::instance_error("unknown algo: " + algo);
    }

    bool reverified =
        !witness.yes || upg::is_connected_induced(g, upg::set_union(witness.set, x));
    out["status"] = witness.yes ? "yes" : "no";
    out["objective"] = witness.objective;
    out["steiner_vertices"] = witness.set.ids();
    out["reverified"] = reverified;
    if (budget) out["budget"] = *budget;

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algorithm: " << algo << "\n"
                  << "status: " << (witness.yes ? "yes" : "no") << "\n"
                  << "objective: " << witness.objective << "\n";
        std::cout << "steiner vertices:";
        for (upg::Vertex v : witness.set) std::cout << " " << v;
        std::cout << "\nreverified: " << (reverified ? "yes" : "no") << "\n"
                  << "digest: " << instance_digest << "\n";
    }
    if (!reverified) throw upg::integrity_error("solve: witness failed re-verification");
    return kExitOk;
}

int cmd_verify(const std::string& target, int nmax, int mmax, int count, int pairs, int trials,
               int sample_cap, uint64_t seed, const std::string& format,
               const std::string& rows_path, bool with_timings) {
    upg::VerificationReport combined;
    std::vector<upg::GadgetRow> rows;
    if (target == "gadget") {
        upg::GadgetSweep sweep = upg::verify_gadget(nmax, mmax);
        rows = sweep.rows;
        combined = sweep.report;
        upg::VerificationReport bip = upg::verify_bipartite_gadget(count, 8, seed);
        upg::VerificationReport sub = upg::verify_subdivision(count, pairs, 7, 6, seed + 1);
        for (auto& c : bip.checks) combined.checks.push_back(c);
        for (auto& c : sub.checks) combined.checks.push_back(c);
        for (auto& t : bip.timings) combined.timings.push_back(t);
        for (auto& t : sub.timings) combined.timings.push_back(t);
    } else if (target == "solver") {
        combined = upg::verify_solver(nmax, sample_cap, seed);
    } else if (target == "lemmas") {
        combined = upg::verify_lemmas(trials, seed);
    } else {
        throw upg::instance_error("unknown verify target: " + target);
    }
    if (!rows_path.empty()) write_file(rows_path, rows_to_json(rows).dump(2) + "\n");
    print_report(combined, format, with_timings);
    return combined.pass() ? kExitOk : kExitVerifyFail;
}

int cmd_report(const std::string& from, const std::string& format) {
    json parsed = json::parse(read_file(from));
    std::vector<upg::GadgetRow> rows;
    for (const json& r : parsed.at("rows")) {
        upg::GadgetRow row;
        row.digest = r.at("digest").get<std::string>();
        row.n = r.at("n").get<int>();
        row.m = r.at("m").get<int>();
        row.three_dm_yes = r.at("three_dm").get<std::string>() == "yes";
        row.cds = r.at("cds").get<std::string>();
        row.steiner = r.at("steiner").get<std::string>();
        row.bound = r.at("bound").get<int>();
        row.agree = r.at("agree").get<bool>();
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const upg::GadgetRow& a, const upg::GadgetRow& b) { return a.digest < b.digest; });
    if (format == "csv") {
        std::cout << "digest,n,m,three_dm,cds,steiner,bound,agree\n";
        for (const upg::GadgetRow& r : rows)
            std::cout << r.digest << "," << r.n << "," << r.m << ","
                      << (r.three_dm_yes ? "yes" : "no") << "," << r.cds << "," << r.steiner
                      << "," << r.bound << "," << (r.agree ? "yes" : "no") << "\n";
    } else {
        std::cout << "| digest | n | m | three_dm | cds | steiner | bound | agree |\n"
                  << "|---|---|---|---|---|---|---|---|\n";
        for (const upg::GadgetRow& r : rows)
            std::cout << "| " << r.digest << " | " << r.n << " | " << r.m << " | "
                      << (r.three_dm_yes ? "yes" : "no") << " | " << r.cds << " | " << r.steiner
                      << " | " << r.bound << " | " << (r.agree ? "yes" : "no") << " |\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for Steiner tree and connected domination on undirected path graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit instance files");
    std::string gen_kind, gen_from, gen_out = "out";
    int gen_n = 2, gen_m = 3, gen_permille = 400, gen_budget = 1;
    uint64_t gen_seed = 1;
    gen->add_option("kind", gen_kind,
                    "3dm | graph | gadget-cds | gadget-steiner | gadget-bipartite | subdivision")
        ->required();
    gen->add_option("--n", gen_n, "universe / vertex count");
    gen->add_option("--m", gen_m, "triple count");
    gen->add_option("--permille", gen_permille, "edge probability in permille");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--k", gen_budget, "budget for gadget-bipartite");
    gen->add_option("--from", gen_from, "input instance file");
    gen->add_option("--out", gen_out, "output file prefix");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve a Steiner instance");
    std::string solve_graph, solve_terminals, solve_model, solve_budget_path;
    std::string solve_algo = "auto", solve_format = "text";
    int solve_cap = upg::kOracleSizeCap;
    std::optional<int> solve_budget;
    int solve_budget_value = -1;
    solve_cmd->add_option("--graph", solve_graph, "graph file")->required();
    solve_cmd->add_option("--terminals", solve_terminals, "terminals file")->required();
    solve_cmd->add_option("--model", solve_model, "tree model file");
    solve_cmd->add_option("--budget", solve_budget_value, "budget (overrides --budget-file)");
    solve_cmd->add_option("--budget-file", solve_budget_path, "budget file");
    solve_cmd->add_option("--algo", solve_algo, "auto | oracle | diam2");
    solve_cmd->add_option("--cap", solve_cap, "oracle size cap");
    solve_cmd->add_option("--format", solve_format, "text | json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string verify_target, verify_format = "text", verify_rows;
    int verify_nmax = 2, verify_mmax = 4, verify_count = 50, verify_pairs = 30,
        verify_trials = 200, verify_sample_cap = 500;
    uint64_t verify_seed = 17;
    bool verify_timings = false;
    verify_cmd->add_option("target", verify_target, "gadget | solver | lemmas")->required();
    verify_cmd->add_option("--nmax", verify_nmax, "size bound (3dm universe / graph order)");
    verify_cmd->add_option("--mmax", verify_mmax, "triple bound for the gadget sweep");
    verify_cmd->add_option("--count", verify_count, "random graphs per suite");
    verify_cmd->add_option("--pairs", verify_pairs, "isomorphism pairs");
    verify_cmd->add_option("--trials", verify_trials, "fuzzing trials per reduction");
    verify_cmd->add_option("--sample-cap", verify_sample_cap, "terminal sets per graph");
    verify_cmd->add_option("--seed", verify_seed, "sweep seed");
    verify_cmd->add_option("--format", verify_format, "text | json");
    verify_cmd->add_option("--rows", verify_rows, "write the gadget table as JSON");
    verify_cmd->add_flag("--timings", verify_timings, "include timings in the output");

    // report
    auto* report_cmd = app.add_subcommand("report", "tabulate a sweep output");
    std::string report_from, report_format = "markdown";
    report_cmd->add_option("--from", report_from, "rows JSON written by verify --rows")->required();
    report_cmd->add_option("--format", report_format, "markdown | csv");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_generate(gen_kind, gen_n, gen_m, gen_permille, gen_seed, gen_budget,
                                gen_from, gen_out);
        if (solve_cmd->parsed()) {
            if (solve_budget_value >= 0) solve_budget = solve_budget_value;
            return cmd_solve(solve_graph, solve_terminals, solve_model, solve_budget,
                             solve_budget_path, solve_algo, solve_cap, solve_format);
        }
        if (verify_cmd->parsed())
            return cmd_verify(verify_target, verify_nmax, verify_mmax, verify_count, verify_pairs,
                              verify_trials, verify_sample_cap, verify_seed, verify_format,
                              verify_rows, verify_timings);
        if (report_cmd->parsed()) return cmd_report(report_from, report_format);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const upg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const upg::instance_error& e) {
        std::cerr << "instance error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const upg::size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitSizeOrClass;
    } catch (const upg::class_error& e) {
        std::cerr << "class error: " << e.what() << "\n";
        return kExitSizeOrClass;
    } catch (const std::out_of_range& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
