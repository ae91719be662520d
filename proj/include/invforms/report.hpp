#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invforms/canonical.hpp"
#include "invforms/euler.hpp"

namespace invforms {

inline constexpr int kReportSchema = 1;
std::string engine_version();

/// Default degree bound: max(2 * |finite part|, 12).
int default_max_degree(const ActionSpec& action);

struct AnalyzeOptions {
    std::optional<int> max_degree;
    /// Form degrees to check; empty means every k = 1..n.
    std::vector<int> form_degrees;
    /// Adds wall-clock per stage (makes the report non-deterministic).
    bool timings = false;
};

struct Analysis {
    nlohmann::json report;
    bool inconclusive = false;
    /// Theorem-level consistency failures (route disagreement, chain or canonical mismatch).
    std::vector<std::string> violations;
};

Analysis analyze(const ActionSpec& action, const AnalyzeOptions& options = {});

/// Canonical text of a report: sorted keys, 2-space indent, trailing newline.
std::string render_json(const nlohmann::json& j);

nlohmann::json to_json(const ActionSpec& action);
nlohmann::json to_json(const HilbertSeries& series);
nlohmann::json to_json(const SurjectivityResult& result);
nlohmann::json to_json(const SmoothnessReport& report);
nlohmann::json to_json(const EulerHomology& homology);
nlohmann::json to_json(const GradedSubmodule& module);

/// Euler homology for every weight occurring in the degree when `weight` is empty.
std::vector<EulerHomology> euler_table(const ActionSpec& action, int degree, const std::optional<Weight>& weight,
                                       const EulerHomologyOptions& options);

nlohmann::json canonical_report(const ActionSpec& action, int truncation);

struct CorpusOptions {
    std::optional<int> max_degree;
    unsigned jobs = 1;
    bool write_goldens = false;
};

struct CorpusInstance {
    std::string name;
    std::string status; // ok | inconclusive | violation | error
    std::string golden; // match | mismatch | missing | written
    std::string detail;
    nlohmann::json summary;
};

struct CorpusResult {
    std::vector<CorpusInstance> instances;
    /// 0 all agree, 1 input error or empty corpus, 2 inconclusive instance, 3 golden mismatch,
    /// 4 theorem-equivalence violation.
    int exit_code = 0;
    nlohmann::json summary;
};

/// Spec files are *.json in the directory, excluding *.golden.json; a golden report for foo.json
/// lives next to it as foo.golden.json.
CorpusResult run_corpus(const std::filesystem::path& directory, const CorpusOptions& options = {});

} // namespace invforms
