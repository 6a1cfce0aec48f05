// Command-line front end: build explicit Kneser hypergraphs, compute exact
// chromatic numbers and colorability defects, assemble bound reports,
// construct representations, and run the verify-paper fact ledger.
//
// Exit codes: 0 success, 1 fact failure, 2 input error, 3 budget exhaustion
// where a value was mandatory.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kneser/facts.hpp"
#include "kneser/json_io.hpp"

namespace {

using namespace kneser;

constexpr int exit_ok = 0;
constexpr int exit_fact_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
}

// s-spec: a single constant ("2") or a full comma-separated vector ("3,2,1")
std::vector<int> parse_s_spec(const std::string& spec, int n) {
    std::vector<int> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error("bad multiplicity '" + item + "' in s-spec");
        }
    }
    if (values.empty()) throw input_error("empty s-spec");
    if (values.size() == 1) return std::vector<int>(static_cast<size_t>(n), values[0]);
    if (static_cast<int>(values.size()) != n)
        throw input_error("s-spec length must be 1 or n");
    return values;
}

SetSystem load_system(const std::string& path, const std::string& s_spec) {
    SetSystem sys = parse_set_system(read_json_file(path));
    if (s_spec.empty()) return sys;
    GroundContext ground(sys.ground().n(), parse_s_spec(s_spec, sys.ground().n()));
    return SetSystem(ground, sys.members());
}

Variant parse_variant(const std::string& name) {
    if (name == "multiset") return Variant::with_multiplicities;
    if (name == "set") return Variant::without_multiplicities;
    throw input_error("variant must be 'multiset' or 'set'");
}

struct ChiArgs {
    std::string file;
    int r = 0;
    std::string s_spec;
    std::string variant = "set";
    long long budget_seconds = -1;
    std::string witness_out;
    std::string format = "text";
};

int run_chi(const ChiArgs& args) {
    json doc = read_json_file(args.file);
    ChiBudget budget{args.budget_seconds < 0 ? -1 : args.budget_seconds * 1000};

    const auto t0 = std::chrono::steady_clock::now();
    ChiResult result;
    if (doc.contains("sets")) {
        if (args.r < 2) throw input_error("a system file needs --r >= 2");
        SetSystem sys = parse_set_system(doc);
        if (!args.s_spec.empty()) {
            GroundContext ground(sys.ground().n(),
                                 parse_s_spec(args.s_spec, sys.ground().n()));
            sys = SetSystem(ground, sys.members());
        }
        result = chromatic_number(
            KneserInstance(sys, args.r, parse_variant(args.variant)), budget);
    } else if (doc.contains("edges")) {
        result = chromatic_number(parse_hypergraph(doc), budget);
    } else {
        throw input_error("file is neither a system nor a hypergraph");
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    if (!args.witness_out.empty() && result.witness)
        write_file(args.witness_out, to_json(*result.witness).dump(2) + "\n");

    if (args.format == "json") {
        json out{{"exact", result.exact},
                 {"lower", result.lower},
                 {"upper", result.upper}};
        out["chi"] = result.exact ? json(result.chi) : json(nullptr);
        if (result.witness) out["witness"] = to_json(*result.witness);
        std::cout << out.dump(2) << "\n";
    } else if (result.exact) {
        std::cout << "chi = " << result.chi << "\n";
        if (!args.witness_out.empty())
            std::cout << "witness written to " << args.witness_out << "\n";
        std::cout << "time: " << ms << " ms\n";
    } else {
        std::cout << "budget exhausted; certified bounds [" << result.lower
                  << "," << result.upper << "]\n";
        std::cout << "time: " << ms << " ms\n";
    }
    return result.exact ? exit_ok : exit_budget;
}

std::string render_report_text(const BoundReport& report) {
    auto field = [](const auto& opt) -> std::string {
        if (!opt) return "-";
        return std::to_string(*opt);
    };
    std::ostringstream os;
    os << "instance            " << report.instance << "\n";
    os << "defect              " << report.defect << "\n";
    os << "condition_met       " << (report.condition_met ? "yes" : "no") << "\n";
    os << "defect_lower_bound  " << field(report.defect_lower_bound) << "\n";
    os << "chi_KG              " << field(report.chi_KG) << "\n";
    os << "chi_kg              " << field(report.chi_kg) << "\n";
    os << "upper_star          " << field(report.upper_star) << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized Kneser hypergraphs"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "materialize a Kneser hypergraph");
    std::string build_system, build_s, build_variant = "set", build_out;
    int build_r = 0;
    std::uint64_t build_cap = default_enumeration_cap;
    build->add_option("system", build_system, "set-system JSON file")->required();
    build->add_option("--r", build_r, "uniformity")->required();
    build->add_option("--s", build_s, "multiplicities: INT or CSV");
    build->add_option("--variant", build_variant, "multiset|set");
    build->add_option("--out", build_out, "output hypergraph file")->required();
    build->add_option("--cap", build_cap, "enumeration cap");

    // chi
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    ChiArgs chi_args;
    chi->add_option("file", chi_args.file, "system or hypergraph JSON file")
        ->required();
    chi->add_option("--r", chi_args.r, "uniformity (system input)");
    chi->add_option("--s", chi_args.s_spec, "multiplicities: INT or CSV");
    chi->add_option("--variant", chi_args.variant, "multiset|set");
    chi->add_option("--budget-seconds", chi_args.budget_seconds,
                    "wall-clock budget, -1 = unlimited");
    chi->add_option("--witness-out", chi_args.witness_out, "coloring file");
    chi->add_option("--format", chi_args.format, "text|json");

    // defect
    auto* defect = app.add_subcommand("defect", "exact colorability defect");
    std::string defect_system, defect_s, defect_out, defect_format = "text";
    int defect_r = 0;
    defect->add_option("system", defect_system, "set-system JSON file")->required();
    defect->add_option("--r", defect_r, "number of covers")->required();
    defect->add_option("--s", defect_s, "multiplicities: INT or CSV");
    defect->add_option("--out", defect_out, "certificate file");
    defect->add_option("--format", defect_format, "text|json");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound comparison report");
    std::string bounds_system, bounds_s, bounds_format = "text";
    int bounds_r = 0;
    long long bounds_budget = -1;
    bounds->add_option("system", bounds_system, "set-system JSON file")->required();
    bounds->add_option("--r", bounds_r, "uniformity")->required();
    bounds->add_option("--s", bounds_s, "multiplicities: INT or CSV");
    bounds->add_option("--budget-seconds", bounds_budget,
                       "per-solver budget, -1 = unlimited");
    bounds->add_option("--format", bounds_format, "text|json");

    // represent
    auto* represent =
        app.add_subcommand("represent", "Kneser representation of an "
                                        "up-monotone hypergraph");
    std::string rep_file, rep_out;
    represent->add_option("hypergraph", rep_file, "hypergraph JSON file")
        ->required();
    represent->add_option("--out", rep_out, "representation file");

    // verify-paper
    auto* verify = app.add_subcommand(
        "verify-paper", "re-derive the published values and print a ledger");
    std::string verify_scope, verify_format = "text", verify_out;
    long long verify_budget = -1;
    verify->add_option("--scope", verify_scope, "fact id prefix filter");
    verify->add_option("--budget-seconds", verify_budget,
                       "per-fact budget; 0 skips solver-backed facts");
    verify->add_option("--format", verify_format, "text|json");
    verify->add_option("--out", verify_out, "write the ledger to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            SetSystem sys = load_system(build_system, build_s);
            KneserInstance inst(sys, build_r, parse_variant(build_variant));
            Hypergraph h = build_kneser(inst, build_cap);
            write_file(build_out, to_json(h).dump(2) + "\n");
            std::cout << "vertices=" << h.vertex_count()
                      << " edges=" << h.edge_count() << "\n";
            return exit_ok;
        }

        if (chi->parsed()) return run_chi(chi_args);

        if (defect->parsed()) {
            SetSystem sys = load_system(defect_system, defect_s);
            DefectResult res = colorability_defect(sys.ground(), defect_r, sys);
            if (!defect_out.empty())
                write_file(defect_out, to_json(res.certificate).dump(2) + "\n");
            if (defect_format == "json") {
                std::cout << to_json(res.certificate).dump(2) << "\n";
            } else {
                std::cout << "cd = " << res.value << "\n";
                std::cout << "covers:";
                for (Mask cover : res.certificate.covers)
                    std::cout << " " << subset_to_string(cover);
                std::cout << "\n";
            }
            return exit_ok;
        }

        if (bounds->parsed()) {
            SetSystem sys = load_system(bounds_system, bounds_s);
            ChiBudget budget{bounds_budget < 0 ? -1 : bounds_budget * 1000};
            BoundReport report = bound_report(sys.ground(), bounds_r, sys, budget);
            if (bounds_format == "json")
                std::cout << to_json(report).dump(2) << "\n";
            else
                std::cout << render_report_text(report);
            return exit_ok;
        }

        if (represent->parsed()) {
            Hypergraph h = parse_hypergraph(read_json_file(rep_file));
            Representation rep = represent_up_monotone(h);
            const bool ok = verify_representation(h, rep);
            if (!rep_out.empty())
                write_file(rep_out, to_json(rep).dump(2) + "\n");
            std::cout << "ground=" << rep.ground.n()
                      << " complement_edges=" << rep.complement_edges.size()
                      << " verified=" << (ok ? "true" : "false") << "\n";
            return ok ? exit_ok : exit_fact_failure;
        }

        if (verify->parsed()) {
            Ledger ledger = run_facts(fact_registry(), verify_scope, verify_budget);
            std::string text;
            if (verify_format == "json") {
                json rows = json::array();
                for (const LedgerRow& row : ledger.rows) {
                    rows.push_back(
                        {{"id", row.id},
                         {"description", row.description},
                         {"expected", row.expected},
                         {"provenance", provenance_tag(row.provenance)},
                         {"computed", row.computed},
                         {"status", row.status == FactStatus::pass ? "pass"
                                    : row.status == FactStatus::fail
                                        ? "fail"
                                        : "skipped-budget"}});
                }
                json out{{"facts", rows},
                         {"passed", ledger.passed},
                         {"failed", ledger.failed},
                         {"skipped", ledger.skipped}};
                text = out.dump(2) + "\n";
            } else {
                text = render_ledger_text(ledger);
            }
            if (!verify_out.empty()) write_file(verify_out, text);
            std::cout << text;
            return ledger.failed == 0 ? exit_ok : exit_fact_failure;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}
