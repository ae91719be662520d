// Command-line front end: analyze, corpus, euler, canonical.
//
// Exit codes: 0 completed with verdicts, 1 input error, 2 completed with inconclusive flags,
// 3 corpus golden mismatch, 4 corpus theorem-equivalence violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "invforms/errors.hpp"
#include "invforms/report.hpp"

namespace {

using invforms::ActionSpec;

ActionSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invforms::ValidationError("cannot read spec file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return invforms::action_from_json(os.str());
}

void emit(const nlohmann::json& j, const std::string& path) {
    const std::string text = invforms::render_json(j);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invforms::ValidationError("cannot write " + path);
    out << text;
}

std::vector<int> parse_form_degrees(const std::string& text) {
    std::vector<int> out;
    if (text == "all" || text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw invforms::ValidationError("--form-degree expects an integer list or 'all', got '" + text + "'");
        }
    }
    return out;
}

invforms::Weight parse_weight(const ActionSpec& action, const std::string& text, int torus_index) {
    std::vector<long long> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw invforms::ValidationError("--weight expects comma-separated integers, got '" + text + "'");
        }
    }
    invforms::Weight w = action.zero_weight();
    const std::size_t full = static_cast<std::size_t>(action.torus_rank + action.finite_rank());
    if (values.size() == 1 && action.torus_rank > 0) {
        w.torus[torus_index] = values[0];
    } else if (values.size() == full) {
        for (int j = 0; j < action.torus_rank; ++j) w.torus[j] = values[j];
        for (int j = 0; j < action.finite_rank(); ++j) {
            const long long m = action.finite_orders[j];
            w.finite[j] = ((values[action.torus_rank + j] % m) + m) % m;
        }
    } else {
        throw invforms::ValidationError("--weight needs 1 or " + std::to_string(full) + " components");
    }
    return w;
}

void print_euler_table(const std::vector<invforms::EulerHomology>& rows) {
    for (const auto& h : rows) {
        std::cout << "degree " << h.degree << " weight " << h.weight.to_string() << "\n";
        std::cout << "  k  dimension  homology\n";
        for (std::size_t k = 0; k < h.piece_dimensions.size(); ++k)
            std::cout << "  " << std::setw(1) << k << "  " << std::setw(9) << h.piece_dimensions[k] << "  "
                      << std::setw(8) << h.homology[k] << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant and horizontal differential forms for diagonal torus and finite abelian actions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", invforms::engine_version());

    std::string spec_path, json_path, form_degree = "all", weight_text, corpus_dir;
    int max_degree = 0, degree = 0, torus_index = 0;
    unsigned jobs = 1;
    bool timings = false, invariant_horizontal = false, point_quotient = false, write_goldens = false;

    auto* analyze = app.add_subcommand("analyze", "Full analysis of one action; writes a JSON report");
    analyze->add_option("spec", spec_path, "Action spec (JSON)")->required();
    analyze->add_option("--max-degree", max_degree, "Degree bound (default max(2|G|, 12))");
    analyze->add_option("--form-degree", form_degree, "Form degree(s) to check: k, k1,k2, or all");
    analyze->add_option("--json", json_path, "Write the report here (default stdout)");
    analyze->add_flag("--timings", timings, "Include wall-clock per stage (breaks byte-determinism)");

    auto* corpus = app.add_subcommand("corpus", "Run every spec in a directory and cross-check the criteria");
    corpus->add_option("dir", corpus_dir, "Corpus directory")->required();
    corpus->add_option("--max-degree", max_degree, "Degree bound for every instance (default per instance)");
    corpus->add_option("--json", json_path, "Write the machine-readable summary here");
    corpus->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
    corpus->add_flag("--write-goldens", write_goldens, "Write <name>.golden.json reports instead of comparing");

    auto* euler = app.add_subcommand("euler", "Homology of the Euler derivation complex in one graded piece");
    euler->add_option("spec", spec_path, "Action spec (JSON)")->required();
    euler->add_option("--degree", degree, "Total degree")->required();
    euler->add_option("--weight", weight_text, "Weight (one torus value, or all components comma-separated)");
    euler->add_option("--torus-index", torus_index, "Torus factor supplying the Euler derivation");
    euler->add_flag("--invariant-horizontal", invariant_horizontal, "Restrict to invariant horizontal forms of the other factors");
    euler->add_flag("--point-quotient", point_quotient, "Require all weights of the factor to be positive");
    euler->add_option("--json", json_path, "Also write the table as JSON");

    auto* canonical = app.add_subcommand("canonical", "Canonical module: invariant top forms against the toric series");
    canonical->add_option("spec", spec_path, "Action spec (JSON)")->required();
    canonical->add_option("--max-degree", max_degree, "Truncation degree (default 10)");
    canonical->add_option("--json", json_path, "Write the result here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze) {
            const ActionSpec action = load_spec(spec_path);
            invforms::AnalyzeOptions options;
            if (max_degree > 0) options.max_degree = max_degree;
            options.form_degrees = parse_form_degrees(form_degree);
            options.timings = timings;
            const invforms::Analysis a = invforms::analyze(action, options);
            emit(a.report, json_path);
            return a.inconclusive || !a.violations.empty() ? 2 : 0;
        }
        if (*corpus) {
            invforms::CorpusOptions options;
            if (max_degree > 0) options.max_degree = max_degree;
            options.jobs = jobs;
            options.write_goldens = write_goldens;
            const invforms::CorpusResult r = invforms::run_corpus(corpus_dir, options);
            for (const auto& inst : r.instances) {
                std::cout << std::left << std::setw(28) << inst.name << " " << std::setw(13) << inst.status << " golden="
                          << std::setw(9) << inst.golden;
                if (inst.summary.contains("consolidated"))
                    std::cout << " " << inst.summary["consolidated"].get<std::string>()
                              << (inst.summary["agreement"].get<bool>() ? " (routes agree)" : " (routes DISAGREE)");
                if (!inst.detail.empty()) std::cout << "  " << inst.detail;
                std::cout << "\n";
            }
            if (r.instances.empty()) std::cerr << "error: empty corpus " << corpus_dir << "\n";
            std::cout << "exit " << r.exit_code << "\n";
            if (!json_path.empty()) emit(r.summary, json_path);
            return r.exit_code;
        }
        if (*euler) {
            const ActionSpec action = load_spec(spec_path);
            invforms::EulerHomologyOptions options;
            options.torus_index = torus_index;
            options.invariant_horizontal = invariant_horizontal;
            options.point_quotient = point_quotient;
            if (action.torus_rank < 1) {
                std::cerr << "error: the Euler derivation needs a torus factor; this action has torus_rank 0\n";
                return 1;
            }
            std::optional<invforms::Weight> weight;
            if (!weight_text.empty()) weight = parse_weight(action, weight_text, torus_index);
            const auto rows = invforms::euler_table(action, degree, weight, options);
            print_euler_table(rows);
            if (!json_path.empty()) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& h : rows) j.push_back(invforms::to_json(h));
                emit({{"schema", invforms::kReportSchema}, {"pieces", j}}, json_path);
            }
            return 0;
        }
        if (*canonical) {
            const ActionSpec action = load_spec(spec_path);
            nlohmann::json j = invforms::canonical_report(action, max_degree > 0 ? max_degree : 10);
            j["schema"] = invforms::kReportSchema;
            j["action"] = invforms::to_json(action);
            emit(j, json_path);
            return j["status"] == "different" ? 2 : 0;
        }
    } catch (const invforms::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invforms::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invforms::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
