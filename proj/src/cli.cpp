#include "dmorse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "dmorse/field_io.hpp"
#include "dmorse/forman.hpp"
#include "dmorse/homology.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/ncomplex.hpp"
#include "dmorse/verification.hpp"

namespace dmorse::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    int order = 0;
    bool json_output = false;
    std::string out_path;
    int dim = 0;
    std::optional<std::size_t> budget;
    std::string field_path;
    bool lenient = false;
    bool list = false;
    std::string matrix_dir;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json header(const RunConfig& cfg) {
    return {{"command", cfg.command},
            {"order", cfg.order},
            {"tool_version", kToolVersion},
            {"format_version", kFormatVersion}};
}

json graph_list(const std::vector<LabeledGraph>& graphs) {
    auto out = json::array();
    for (const auto& g : graphs) out.push_back(g.to_string());
    return out;
}

void render_text(std::ostream& out, const json& value, const std::string& indent) {
    for (const auto& [key, item] : value.items()) {
        if (item.is_object()) {
            out << indent << key << ":\n";
            render_text(out, item, indent + "  ");
        } else if (item.is_array()) {
            const bool flat = std::none_of(item.begin(), item.end(), [](const json& x) { return x.is_structured(); });
            if (flat) {
                out << indent << key << ":";
                for (const auto& x : item) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
                out << '\n';
            } else {
                out << indent << key << ":\n";
                for (const auto& x : item) {
                    out << indent << "  -\n";
                    render_text(out, x, indent + "    ");
                }
            }
        } else {
            out << indent << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
        }
    }
}

void write_text(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write output file " + cfg.out_path);
    file << text;
    if (!file) throw UsageError("failed writing output file " + cfg.out_path);
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
    std::ostringstream text;
    if (cfg.json_output)
        text << report.dump(2) << '\n';
    else
        render_text(text, report, "");
    write_text(cfg, text.str(), out);
}

DiscreteVectorField load_field(const NComplex& k, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read field file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("field file " + path + " is not valid JSON: " + e.what());
    }
    return field_from_json(k, doc);
}

/// The field from --field, or a fresh strict build.
StagedVectorField obtain_field(const NComplex& k, const RunConfig& cfg) {
    if (!cfg.field_path.empty()) return StagedVectorField(k, load_field(k, cfg.field_path));
    return build_forman_field(k);
}

json violations_json(const ValidationReport& report) {
    auto out = json::array();
    for (const auto& v : report.violations)
        out.push_back({{"kind", to_string(v.kind)}, {"arrow", v.arrow}, {"detail", v.detail}});
    return out;
}

json check_report_json(const CheckReport& r) {
    auto checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    json report = header(cfg);
    auto dims = json::array();
    for (int d = -1; d <= k.max_dimension(); ++d) dims.push_back({{"dimension", d}, {"count", k.count(d)}});
    report["dimensions"] = dims;
    report["total"] = k.size();
    report["top_dimension"] = k.max_dimension();
    if (cfg.list) {
        auto all = json::array();
        for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) all.push_back(k.label(s));
        report["simplices"] = all;
    }
    emit(cfg, report, out);
    return kSuccess;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    json report = header(cfg);
    std::optional<StagedVectorField> v;
    try {
        BuildOptions options;
        options.strict = !cfg.lenient;
        v.emplace(build_forman_field(k, options));
    } catch (const FormanBuildError& e) {
        report["ok"] = false;
        report["error"] = e.what();
        RunConfig to_stdout = cfg;
        to_stdout.out_path.clear();
        emit(to_stdout, report, out);
        return kPropertyFailed;
    }
    std::map<std::string, std::size_t> by_stage;
    for (const auto& a : v->field().arrows()) ++by_stage[std::to_string(a.stage.value_or(0))];
    auto diags = json::array();
    for (const auto& d : v->diagnostics()) diags.push_back(d.message());
    report["arrows"] = v->field().arrows().size();
    report["arrows_by_stage"] = by_stage;
    report["diagnostics"] = diags;
    report["ok"] = diags.empty();
    if (!cfg.out_path.empty()) {
        write_text(cfg, field_to_json(k, v->field()).dump(1) + "\n", out);
        report["field_file"] = cfg.out_path;
    }
    RunConfig to_stdout = cfg;
    to_stdout.out_path.clear();
    emit(to_stdout, report, out);
    return diags.empty() ? kSuccess : kPropertyFailed;
}

int cmd_check_acyclic(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    const auto v = obtain_field(k, cfg);
    json report = header(cfg);
    const auto validation = validate_matching(k, v.field());
    report["valid_matching"] = validation.ok();
    report["violations"] = violations_json(validation);
    if (!validation.ok()) {
        report["acyclic"] = nullptr;
        emit(cfg, report, out);
        return kPropertyFailed;
    }
    const auto acyclic = is_acyclic(k, v.field());
    report["acyclic"] = acyclic.acyclic;
    if (acyclic.witness) {
        auto path = json::array();
        for (SimplexId s : acyclic.witness->simplices()) path.push_back(k.label(s));
        report["witness"] = path;
        report["witness_dimension"] = acyclic.witness_dimension;
    }
    emit(cfg, report, out);
    return acyclic.acyclic ? kSuccess : kPropertyFailed;
}

int cmd_critical(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    const auto v = obtain_field(k, cfg);
    json report = header(cfg);
    const auto validation = validate_matching(k, v.field());
    if (!validation.ok()) {
        report["valid_matching"] = false;
        report["violations"] = violations_json(validation);
        emit(cfg, report, out);
        return kPropertyFailed;
    }
    const auto census = critical_census(k, v.field());
    std::vector<LabeledGraph> others;
    for (const auto& c : census.other_cells) others.push_back(k.graph(c.simplex));
    report["valid_matching"] = true;
    report["zero_cells"] = census.zero_cells.size();
    report["top_cells"] = census.top_cells.size();
    report["other_cells"] = census.other_cells.size();
    report["top_dimension"] = cfg.order - 3;
    report["zero_cell_graphs"] = graph_list(census.zero_cells);
    report["top_cell_graphs"] = graph_list(census.top_cells);
    report["other_cell_graphs"] = graph_list(others);
    report["failures"] = census.failures;
    report["ok"] = census.ok();
    emit(cfg, report, out);
    return census.ok() ? kSuccess : kPropertyFailed;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    const auto betti = reduced_betti(k, kMaxComplexOrder);
    json report = header(cfg);
    auto dims = json::array();
    for (std::size_t d = 0; d < betti.betti.size(); ++d) {
        auto torsion = json::array();
        for (const auto& t : betti.torsion[d]) torsion.push_back(t.str());
        dims.push_back({{"dimension", d},
                        {"simplices", betti.simplex_counts[d + 1]},
                        {"boundary_rank", betti.boundary_ranks[d]},
                        {"betti", betti.betti[d]},
                        {"torsion", torsion}});
    }
    report["dimensions"] = dims;
    report["torsion_free"] = betti.torsion_free();
    report["reduced_euler_characteristic"] = reduced_euler_characteristic(betti);

    const auto v = build_forman_field(k);
    const auto census = critical_census(k, v.field());
    bool matches = false;
    try {
        matches = betti.same_homology(morse_predicted_betti(census));
    } catch (const CensusShapeError&) {
    }
    report["matches_morse_prediction"] = matches;

    if (!cfg.matrix_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.matrix_dir, ec);
        for (int d = 0; d <= k.max_dimension(); ++d) {
            const auto path = std::filesystem::path(cfg.matrix_dir) / ("boundary_" + std::to_string(d) + ".txt");
            std::ofstream file(path);
            if (!file) throw UsageError("cannot write " + path.string());
            write_triplets(file, boundary_matrix(k, d));
        }
    }
    emit(cfg, report, out);
    return matches ? kSuccess : kPropertyFailed;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    const auto v = obtain_field(k, cfg);
    if (auto validation = validate_matching(k, v.field()); !validation.ok()) {
        json report = header(cfg);
        report["valid_matching"] = false;
        report["violations"] = violations_json(validation);
        emit(cfg, report, out);
        return kPropertyFailed;
    }
    const auto found = find_dichotomy_violations(v);
    auto list = json::array();
    std::size_t critical = 0;
    for (const auto& x : found) {
        critical += x.status == DichotomyViolation::Status::critical;
        json item{{"alpha0", x.alpha0.to_string()},
                  {"beta0", x.beta0.to_string()},
                  {"alpha1", x.alpha1.to_string()},
                  {"stage", x.stage},
                  {"status", to_string(x.status)}};
        if (x.status == DichotomyViolation::Status::paired_later) {
            item["alpha1_stage"] = x.alpha1_stage;
            item["alpha1_role"] = x.alpha1_role == Role::tail ? "tail" : "head";
        }
        list.push_back(std::move(item));
    }
    json report = header(cfg);
    report["valid_matching"] = true;
    report["count"] = found.size();
    report["critical_count"] = critical;
    report["paired_later_count"] = found.size() - critical;
    report["violations"] = list;
    emit(cfg, report, out);
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    json report = header(cfg);
    auto checks = json::array();
    bool passed = true;
    auto record = [&](const std::string& name, bool ok, json detail) {
        passed = passed && ok;
        checks.push_back({{"name", name}, {"passed", ok}, {"detail", std::move(detail)}});
    };

    std::optional<StagedVectorField> v;
    try {
        v.emplace(obtain_field(k, cfg));
        record("build", true, cfg.field_path.empty() ? "fresh strict build" : "loaded " + cfg.field_path);
    } catch (const FormanBuildError& e) {
        record("build", false, e.what());
    }
    if (v) {
        const auto validation = validate_matching(k, v->field());
        record("valid_matching", validation.ok(), violations_json(validation));
        if (validation.ok()) {
            const auto acyclic = is_acyclic(k, v->field());
            record("acyclic", acyclic.acyclic, acyclic.acyclic ? "no closed V-path" : "closed V-path found");
            const auto census = critical_census(k, v->field());
            record("critical_census", census.ok(), census.failures);
            const auto paths = check_path_invariants(*v, cfg.budget);
            record("path_invariants", paths.ok(), paths.failures);
            report["path_invariants"] = {{"paths", paths.paths},
                                         {"starts", paths.starts},
                                         {"longest", paths.longest},
                                         {"many_component_exits", paths.many_component_exits},
                                         {"budget_exhausted", paths.budget_exhausted}};
            if (cfg.order == 5) {
                const auto r = check_late_pairing_example(*v);
                record("late_pairing_example", r.passed(), check_report_json(r));
            }
            if (cfg.order == 4) {
                const auto r = check_critical_face_example(*v);
                record("critical_face_example", r.passed(), check_report_json(r));
            }
        }
    }
    if (cfg.order != 5) {
        const auto r = check_late_pairing_example();
        record("late_pairing_example", r.passed(), check_report_json(r));
    }
    if (cfg.order != 4) {
        const auto r = check_critical_face_example();
        record("critical_face_example", r.passed(), check_report_json(r));
    }
    report["checks"] = checks;
    report["passed"] = passed;
    emit(cfg, report, out);
    return passed ? kSuccess : kPropertyFailed;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
    const auto k = NComplex::enumerate(cfg.order);
    const auto v = obtain_field(k, cfg);
    if (cfg.dim < -1 || cfg.dim >= k.max_dimension())
        throw UsageError("--dim must lie in -1.." + std::to_string(k.max_dimension() - 1));
    std::ostringstream dot;
    write_dot(dot, k, v.field(), cfg.dim);
    write_text(cfg, dot.str(), out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete Morse verification on the complex of disconnected graphs", "dmorse"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--order", cfg.order, "Graph order n")->required();
        sub->add_flag("--json", cfg.json_output, "Emit JSON");
        sub->add_option("--out", cfg.out_path, "Write the report to this path");
    };
    auto* census = app.add_subcommand("census", "Count the simplices of the complex");
    common(census);
    census->add_flag("--list", cfg.list, "Include every simplex in graph text format");

    auto* build = app.add_subcommand("build", "Build the staged vector field");
    build->add_option("--order", cfg.order, "Graph order n")->required();
    build->add_flag("--json", cfg.json_output, "Emit JSON");
    build->add_option("--out", cfg.out_path, "Write the field as JSON to this path");
    build->add_flag("--lenient", cfg.lenient, "Record stage diagnostics instead of aborting");

    auto* acyclic = app.add_subcommand("check-acyclic", "Validate the matching and search for closed V-paths");
    common(acyclic);
    acyclic->add_option("--field", cfg.field_path, "Use a persisted field instead of building one");

    auto* critical = app.add_subcommand("critical", "Critical simplex census");
    common(critical);
    critical->add_option("--field", cfg.field_path, "Use a persisted field instead of building one");

    auto* betti = app.add_subcommand("betti", "Reduced integral homology via Smith normal form");
    common(betti);
    betti->add_option("--dump-matrices", cfg.matrix_dir, "Write boundary matrices as row/col/value triplets");

    auto* counter = app.add_subcommand("counterexample", "List two-step V-paths that break the stage dichotomy");
    common(counter);
    counter->add_option("--field", cfg.field_path, "Use a persisted field instead of building one");

    auto* verify = app.add_subcommand("verify", "Run every consistency check");
    common(verify);
    verify->add_option("--field", cfg.field_path, "Use a persisted field instead of building one");
    verify->add_option("--budget", cfg.budget, "Maximum number of V-paths to walk");

    auto* dot = app.add_subcommand("export-dot", "Modified Hasse diagram between two dimensions");
    common(dot);
    dot->add_option("--dim", cfg.dim, "Lower dimension d")->required();
    dot->add_option("--field", cfg.field_path, "Use a persisted field instead of building one");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "dmorse: " << e.what() << '\n';
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "census") return cmd_census(cfg, out);
        if (cfg.command == "build") return cmd_build(cfg, out);
        if (cfg.command == "check-acyclic") return cmd_check_acyclic(cfg, out);
        if (cfg.command == "critical") return cmd_critical(cfg, out);
        if (cfg.command == "betti") return cmd_betti(cfg, out);
        if (cfg.command == "counterexample") return cmd_counterexample(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "export-dot") return cmd_export_dot(cfg, out);
    } catch (const FormanBuildError& e) {
        err << "dmorse: " << e.what() << '\n';
        return kPropertyFailed;
    } catch (const CapacityError& e) {
        err << "dmorse: " << e.what() << '\n';
        return kUsageError;
    } catch (const GraphError& e) {
        err << "dmorse: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "dmorse: " << e.what() << '\n';
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "dmorse: malformed field file: " << e.what() << '\n';
        return kUsageError;
    }
    err << "dmorse: unknown command\n";
    return kUsageError;
}

}  // namespace dmorse::cli
