#include "invforms/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "invforms/errors.hpp"

namespace invforms {

using nlohmann::json;

namespace {

class StageClock {
public:
    explicit StageClock(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    void lap(json& timings, const std::string& stage) {
        if (!enabled_) return;
        const auto now = std::chrono::steady_clock::now();
        timings[stage] = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

json forms_to_json(const std::vector<PolyForm>& forms) {
    json out = json::array();
    for (const auto& f : forms) out.push_back(f.to_string());
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

std::string engine_version() {
#ifdef INVFORMS_VERSION
    return INVFORMS_VERSION;
#else
    return "0.0.0";
#endif
}

int default_max_degree(const ActionSpec& action) {
    const auto order = static_cast<long long>(std::min<std::uint64_t>(action.finite_group_order(), 1'000'000));
    return static_cast<int>(std::max<long long>(2 * order, 12));
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

json to_json(const ActionSpec& action) { return json::parse(action_to_json(action)); }

json to_json(const HilbertSeries& series) { return series.coefficients; }

json to_json(const SurjectivityResult& result) {
    json out;
    out["k"] = result.table.k;
    out["verdict"] = to_string(result.verdict);
    out["reason"] = result.reason;
    out["certificate_degree"] = result.certificate_degree ? json(*result.certificate_degree) : json(nullptr);
    out["witness_degrees"] = result.witness_degrees;
    json witnesses = json::array();
    for (std::size_t i = 0; i < result.witnesses.size(); ++i)
        witnesses.push_back({{"degree", result.witness_degrees[i]}, {"forms", forms_to_json(result.witnesses[i])}});
    out["witnesses"] = witnesses;
    json rows = json::array();
    for (const auto& r : result.table.rows)
        rows.push_back({{"degree", r.degree},
                        {"target", r.target_dimension},
                        {"image", r.image_dimension},
                        {"cokernel", r.cokernel_dimension}});
    out["cokernel_table"] = rows;
    return out;
}

json to_json(const SmoothnessReport& report) {
    json out;
    out["consolidated"] = to_string(report.consolidated);
    out["agreement"] = report.agreement;
    out["quotient_dimension"] = report.quotient_dimension;
    json routes = json::object();
    for (const auto& r : report.routes) routes[r.route] = {{"verdict", to_string(r.verdict)}, {"detail", r.detail}};
    out["routes"] = routes;
    return out;
}

json to_json(const EulerHomology& h) {
    json out;
    out["degree"] = h.degree;
    out["weight"] = {{"torus", h.weight.torus}, {"finite", h.weight.finite}};
    out["piece_dimensions"] = h.piece_dimensions;
    out["homology"] = h.homology;
    return out;
}

json to_json(const GradedSubmodule& module) {
    json out;
    out["form_degree"] = module.form_degree;
    out["generators"] = forms_to_json(module.generators);
    out["generator_degrees"] = module.generator_degrees;
    out["generator_bound"] = module.generator_bound;
    out["certified"] = module.certified;
    out["certificate_degree"] = module.certificate_degree ? json(*module.certificate_degree) : json(nullptr);
    out["warnings"] = module.warnings;
    return out;
}

json canonical_report(const ActionSpec& action, int truncation) {
    json out;
    out["degree_convention"] = "a form f dx_I is counted in degree deg(f) + |I|";
    out["truncation"] = truncation;
    const GradedSubmodule module = canonical_invariants(action, truncation);
    out["generators"] = to_json(module);
    out["toric_series"] = to_json(toric_canonical_series(action, truncation));
    out["forms_series"] = to_json(hilbert_series_of(module, action, truncation));
    try {
        const CanonicalComparison c = compare_canonical_series(action, truncation);
        out["status"] = c.equal ? "equal" : "different";
        out["reason"] = c.equal ? "series agree in every degree up to the truncation" : "series differ";
    } catch (const PreconditionError& e) {
        out["status"] = "not_applicable";
        out["reason"] = e.what();
    }
    return out;
}

Analysis analyze(const ActionSpec& input, const AnalyzeOptions& options) {
    const ValidatedAction validated = validate_action(input);
    const ActionSpec& action = validated.action;
    const int bound = options.max_degree.value_or(default_max_degree(action));
    if (bound < 1) throw PreconditionError("max degree must be at least 1");
    std::vector<int> ks = options.form_degrees;
    if (ks.empty())
        for (int k = 1; k <= action.n; ++k) ks.push_back(k);
    for (int k : ks)
        if (k < 1 || k > action.n) throw PreconditionError("form degree " + std::to_string(k) + " outside 1..n");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    Analysis out;
    json& report = out.report;
    json timings = json::object();
    std::vector<std::string> inconclusive;
    StageClock clock(options.timings);

    report["schema"] = kReportSchema;
    report["engine_version"] = engine_version();
    report["action"] = to_json(action);
    report["bounds"] = {{"max_degree", bound}, {"form_degrees", ks}};
    report["finite_part_small"] = validated.finite_part_small;

    const MonoidBasis basis = hilbert_basis(action, bound);
    json hb;
    hb["generators"] = basis.generators;
    hb["complete"] = basis.complete;
    hb["certified_degree"] = basis.certified_degree;
    hb["search_bound"] = basis.search_bound;
    report["hilbert_basis"] = hb;
    if (!basis.complete)
        inconclusive.push_back("hilbert basis inconclusive at bound " + std::to_string(bound) + " (certificate " +
                               std::to_string(basis.certified_degree) + ")");
    clock.lap(timings, "hilbert_basis");

    const SmoothnessReport smooth = smoothness_verdict(action, bound);
    report["smoothness"] = to_json(smooth);
    report["quotient_dimension"] = smooth.quotient_dimension;
    clock.lap(timings, "smoothness");

    std::map<int, SurjectivityResult> by_k;
    for (std::size_t i = 0; i < smooth.surjectivity.size(); ++i) by_k.emplace(static_cast<int>(i) + 1, smooth.surjectivity[i]);
    json surj = json::array();
    json chain = json::array();
    const bool smooth_monoid = std::any_of(smooth.routes.begin(), smooth.routes.end(), [](const RouteResult& r) {
        return r.route == "monoid" && r.verdict == SmoothVerdict::smooth;
    });
    for (int k : ks) {
        auto it = by_k.find(k);
        if (it == by_k.end()) it = by_k.emplace(k, surjectivity_check(action, k, bound)).first;
        const SurjectivityResult& r = it->second;
        surj.push_back(to_json(r));
        if (r.verdict == SurjectivityVerdict::inconclusive) inconclusive.push_back("k=" + std::to_string(k) + ": " + r.reason);
        // Containment chain: image <= target everywhere, equality on smooth instances.
        std::vector<int> strict;
        for (const auto& row : r.table.rows)
            if (row.image_dimension < row.target_dimension) strict.push_back(row.degree);
        const bool consistent = !smooth_monoid || strict.empty();
        chain.push_back({{"k", k}, {"strict_degrees", strict}, {"smooth_instance", smooth_monoid}, {"consistent", consistent}});
        if (!consistent) out.violations.push_back("k=" + std::to_string(k) + ": smooth instance with strict inclusion");
    }
    report["surjectivity"] = surj;
    report["chain"] = chain;
    clock.lap(timings, "surjectivity");

    if (!smooth.agreement) out.violations.push_back("smoothness routes disagree");
    if (smooth.consolidated == SmoothVerdict::inconclusive && smooth.agreement)
        inconclusive.push_back("smoothness verdict inconclusive at bound " + std::to_string(bound));

    // Surjectivity in degree n-1 forces it in degree n on conical isolated singularities.
    if (validated.finite_part_small && has_isolated_fixed_points(action) && action.n >= 2 && by_k.count(action.n - 1) &&
        by_k.count(action.n)) {
        if (by_k.at(action.n - 1).verdict == SurjectivityVerdict::surjective &&
            by_k.at(action.n).verdict == SurjectivityVerdict::not_surjective)
            out.violations.push_back("surjective in degree n-1 but not in degree n");
    }

    const bool isolated_known = smooth.consolidated == SmoothVerdict::smooth ||
                                (action.finite_only() && validated.finite_part_small && has_isolated_fixed_points(action));
    report["surjectivity_scope"] =
        isolated_known ? "global; singular locus is at most the origin"
                       : "global verdict only; not a codimension-local certificate (singular locus may be positive-dimensional)";

    const int truncation = std::min(bound, 10);
    json hs;
    hs["invariant_ring"] = to_json(hilbert_series_of(basis, action, truncation));
    report["hilbert_series"] = hs;
    json canonical = canonical_report(action, truncation);
    if (canonical["status"] == "different") out.violations.push_back("canonical series differ on a small-group instance");
    report["canonical"] = canonical;
    clock.lap(timings, "canonical");

    report["inconclusive"] = inconclusive;
    report["violations"] = out.violations;
    out.inconclusive = !inconclusive.empty();
    if (options.timings) report["timings_ms"] = timings;
    return out;
}

std::vector<EulerHomology> euler_table(const ActionSpec& action, int degree, const std::optional<Weight>& weight,
                                       const EulerHomologyOptions& options) {
    std::vector<EulerHomology> out;
    if (weight) {
        out.push_back(euler_homology(action, degree, *weight, options));
        return out;
    }
    if (action.torus_rank < 1) throw PreconditionError("Euler homology needs a torus factor (torus_rank >= 1)");
    // Every weight carried by some monomial form of this total degree.
    std::set<Weight> weights;
    MonomialTable table(action);
    for (int k = 0; k <= action.n && k <= degree; ++k)
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << action.n); ++mask) {
            IndexSet indices(mask);
            if (indices.size() != k) continue;
            for (const auto& e : monomials_of_degree(action.n, degree - k)) {
                Weight w = weight_of_term(action, indices, e);
                if (options.invariant_horizontal) {
                    Weight rest = w;
                    rest.torus[options.torus_index] = 0;
                    if (!rest.is_zero()) continue;
                }
                weights.insert(std::move(w));
            }
        }
    for (const auto& w : weights) out.push_back(euler_homology(action, degree, w, options));
    return out;
}

CorpusResult run_corpus(const std::filesystem::path& directory, const CorpusOptions& options) {
    CorpusResult result;
    std::vector<std::filesystem::path> specs;
    if (std::filesystem::is_directory(directory)) {
        for (const auto& entry : std::filesystem::directory_iterator(directory)) {
            const auto& p = entry.path();
            const std::string name = p.filename().string();
            if (!entry.is_regular_file() || p.extension() != ".json") continue;
            if (name.size() >= 12 && name.ends_with(".golden.json")) continue;
            specs.push_back(p);
        }
    }
    std::sort(specs.begin(), specs.end());
    if (specs.empty()) {
        result.exit_code = 1;
        result.summary = {{"schema", kReportSchema}, {"error", "empty corpus"}, {"instances", json::array()}};
        return result;
    }
    result.instances.resize(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            CorpusInstance& inst = result.instances[i];
            inst.name = specs[i].stem().string();
            try {
                const ActionSpec action = action_from_json(read_file(specs[i]));
                AnalyzeOptions ao;
                ao.max_degree = options.max_degree;
                const Analysis a = analyze(action, ao);
                const std::string text = render_json(a.report);
                auto golden = specs[i];
                golden.replace_extension(".golden.json");
                if (options.write_goldens) {
                    std::ofstream(golden, std::ios::binary) << text;
                    inst.golden = "written";
                } else if (std::filesystem::exists(golden)) {
                    inst.golden = read_file(golden) == text ? "match" : "mismatch";
                } else {
                    inst.golden = "missing";
                }
                const json& sm = a.report["smoothness"];
                json verdicts = json::object();
                for (const auto& [route, v] : sm["routes"].items()) verdicts[route] = v["verdict"];
                inst.summary = {{"consolidated", sm["consolidated"]},
                                {"agreement", sm["agreement"]},
                                {"routes", verdicts},
                                {"finite_part_small", a.report["finite_part_small"]},
                                {"max_degree", a.report["bounds"]["max_degree"]}};
                if (!a.violations.empty()) {
                    inst.status = "violation";
                    for (const auto& v : a.violations) inst.detail += (inst.detail.empty() ? "" : "; ") + v;
                } else if (a.inconclusive) {
                    inst.status = "inconclusive";
                    for (const auto& v : a.report["inconclusive"]) inst.detail += (inst.detail.empty() ? "" : "; ") + v.get<std::string>();
                } else {
                    inst.status = "ok";
                }
            } catch (const ResourceError& e) {
                inst.status = "inconclusive";
                inst.golden = "missing";
                inst.detail = e.what();
            } catch (const std::exception& e) {
                inst.status = "error";
                inst.golden = "missing";
                inst.detail = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    bool error = false, violation = false, mismatch = false, inconclusive = false;
    json instances = json::array();
    for (const auto& inst : result.instances) {
        error |= inst.status == "error";
        violation |= inst.status == "violation";
        inconclusive |= inst.status == "inconclusive";
        mismatch |= inst.golden == "mismatch";
        instances.push_back({{"name", inst.name}, {"status", inst.status}, {"golden", inst.golden}, {"detail", inst.detail},
                             {"summary", inst.summary}});
    }
    if (error) {
        result.exit_code = 1;
    } else if (violation) {
        result.exit_code = 4;
    } else if (mismatch) {
        result.exit_code = 3;
    } else if (inconclusive) {
        result.exit_code = 2;
    }
    result.summary = {{"schema", kReportSchema},
                      {"instances", instances},
                      {"exit_code", result.exit_code},
                      {"counts",
                       {{"total", result.instances.size()},
                        {"ok", std::count_if(result.instances.begin(), result.instances.end(), [](auto& x) { return x.status == "ok"; })},
                        {"inconclusive", std::count_if(result.instances.begin(), result.instances.end(), [](auto& x) { return x.status == "inconclusive"; })},
                        {"violation", std::count_if(result.instances.begin(), result.instances.end(), [](auto& x) { return x.status == "violation"; })},
                        {"error", std::count_if(result.instances.begin(), result.instances.end(), [](auto& x) { return x.status == "error"; })},
                        {"golden_mismatch", std::count_if(result.instances.begin(), result.instances.end(), [](auto& x) { return x.golden == "mismatch"; })}}}};
    return result;
}

} // namespace invforms
