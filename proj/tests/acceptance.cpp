// Acceptance suite: one PASS/FAIL line per criterion. Usage: invforms_acceptance <corpus-dir>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "invforms/errors.hpp"
#include "invforms/graded.hpp"
#include "invforms/report.hpp"
#include "oracles.hpp"

using namespace invforms;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CorpusEntry {
    std::string name;
    ActionSpec action;
};

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
    std::vector<CorpusEntry> out;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (e.path().extension() == ".json" && !name.ends_with(".golden.json")) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back({f.stem().string(), action_from_json(read_file(f))});
    return out;
}

bool all_surjective(const SmoothnessReport& r) {
    for (const auto& s : r.surjectivity)
        if (s.verdict != SurjectivityVerdict::surjective) return false;
    return true;
}

SmoothVerdict route(const SmoothnessReport& r, const std::string& name) {
    for (const auto& x : r.routes)
        if (x.route == name) return x.verdict;
    return SmoothVerdict::inconclusive;
}

// 1. Exact identities on random homogeneous forms.
Outcome identities(int& forms_checked) {
    Outcome out;
    oracle::Rng rng(20261016);
    forms_checked = 0;
    while (forms_checked < 600) {
        const int n = rng.uniform(1, 4);
        std::vector<long long> w(n);
        for (auto& x : w) x = rng.uniform(-3, 3);
        const ActionSpec a = torus_action({w});
        const EulerOperator e(a, 0);
        const int k = rng.uniform(0, n);
        const int l = rng.uniform(0, n - k);
        const PolyForm alpha = oracle::random_homogeneous_form(rng, a, k, 6 - k, 4);
        const PolyForm beta = oracle::random_homogeneous_form(rng, a, l, 6 - l, 4);
        forms_checked += 2;
        if (!e.apply(e.apply(alpha)).is_zero()) out.fail("e^2 != 0 on " + alpha.to_string());
        if (k < n && !exterior_derivative(exterior_derivative(alpha)).is_zero()) out.fail("d^2 != 0 on " + alpha.to_string());
        if (!bracket_defect(a, 0, alpha).is_zero()) out.fail("bracket defect on " + alpha.to_string());
        if (k + l <= n) {
            const PolyForm ab = wedge(alpha, beta);
            const Rational sl = l % 2 == 0 ? 1 : -1;
            PolyForm rhs(n, k + l - 1 < 0 ? 0 : k + l - 1);
            if (k > 0) rhs += wedge(e.apply(alpha), beta) * sl;
            if (l > 0) rhs += wedge(alpha, e.apply(beta));
            if (e.apply(ab) != rhs)
                out.fail("Leibniz for e on " + alpha.to_string() + " , " + beta.to_string());
            if (k + l < n) {
                const Rational sk = k % 2 == 0 ? 1 : -1;
                if (exterior_derivative(ab) != wedge(exterior_derivative(alpha), beta) + wedge(alpha, exterior_derivative(beta)) * sk)
                    out.fail("Leibniz for d on " + alpha.to_string() + " , " + beta.to_string());
            }
        }
    }
    out.detail = std::to_string(forms_checked) + " forms" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 2. Exactness of the Euler complex for positive weights.
Outcome exactness() {
    Outcome out;
    int pieces = 0;
    std::vector<std::vector<long long>> weights;
    for (long long a = 1; a <= 3; ++a)
        for (long long b = 1; b <= 3; ++b) {
            weights.push_back({a, b});
            for (long long c = 1; c <= 3; ++c) weights.push_back({a, b, c});
        }
    for (const auto& w : weights) {
        const ActionSpec act = torus_action({w});
        EulerHomologyOptions opt;
        opt.point_quotient = true;
        const auto zero = euler_homology(act, 0, act.zero_weight(), opt);
        std::vector<std::size_t> expected(act.n + 1, 0);
        expected[0] = 1;
        if (zero.homology != expected) out.fail("degree 0 homology wrong for weights " + act.zero_weight().to_string());
        for (int d = 1; d <= 10; ++d)
            for (const auto& h : euler_table(act, d, std::nullopt, opt)) {
                ++pieces;
                for (auto x : h.homology)
                    if (x != 0) out.fail("nonzero homology in degree " + std::to_string(d) + " weight " + h.weight.to_string());
            }
    }
    out.detail = std::to_string(weights.size()) + " weight vectors, " + std::to_string(pieces) + " pieces" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

std::vector<ActionSpec> cyclic_family() {
    std::vector<ActionSpec> out;
    for (long long m = 2; m <= 8; ++m)
        for (long long b = 0; b < m; ++b) out.push_back(cyclic_action(m, {1, b}));
    for (long long m = 2; m <= 6; ++m)
        for (long long b = 1; b < m; ++b) out.push_back(cyclic_action(m, {1, b, m - 1}));
    out.push_back(cyclic_action(8, {1, 3, 5}));
    out.push_back(cyclic_action(7, {1, 2, 4}));
    out.push_back(cyclic_action(8, {1, 1, 0}));
    return out;
}

// 3. Surjectivity for all k, monoid freeness and Shephard-Todd agree.
Outcome equivalence(const std::vector<ActionSpec>& family) {
    Outcome out;
    int certified = 0;
    for (const auto& a : family) {
        const SmoothnessReport r = smoothness_verdict(a, default_max_degree(a));
        if (r.consolidated == SmoothVerdict::inconclusive && r.agreement) {
            out.fail("inconclusive at default bound: " + action_to_json(a));
            continue;
        }
        ++certified;
        const bool st = shephard_todd_smooth(a);
        const bool mono = route(r, "monoid") == SmoothVerdict::smooth;
        if (st != mono || mono != all_surjective(r)) out.fail("disagreement on " + action_to_json(a));
    }
    out.detail = std::to_string(certified) + " certified instances" + (out.pass ? "" : "; " + out.detail);
    if (certified < 20) out.fail("fewer than 20 certified instances");
    return out;
}

// 4. A1 against its golden report.
Outcome a1_golden(const fs::path& corpus) {
    Outcome out;
    const ActionSpec a1 = cyclic_action(2, {1, 1});
    const fs::path golden = corpus / "a1.golden.json";
    if (!fs::exists(golden)) {
        out.fail("missing golden " + golden.string());
        return out;
    }
    const Analysis an = analyze(a1, {});
    if (render_json(an.report) != read_file(golden)) out.fail("report differs from golden");
    const SurjectivityResult r = surjectivity_check(a1, 1, 8);
    if (r.verdict != SurjectivityVerdict::not_surjective) out.fail("k=1 not reported not_surjective");
    for (const auto& row : r.table.rows)
        if (row.cokernel_dimension != (row.degree == 2 ? 1U : 0U))
            out.fail("cokernel " + std::to_string(row.cokernel_dimension) + " in degree " + std::to_string(row.degree));
    // witness class: x dy - y dx is independent of the image and equivalent to the witness modulo it
    const auto piece = oracle::invariant_piece(a1, 1, 2);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : pullback_image(a1, 1, 8).wedge_generators)
        if (total_degree_of_form(g) == 2) rows.push_back(oracle::coordinates(piece, oracle::from_lib(g)));
    const PolyForm cls = Polynomial::monomial({1, 0}) * PolyForm::dx(2, 1) - Polynomial::monomial({0, 1}) * PolyForm::dx(2, 0);
    const std::size_t image = oracle::rank(rows);
    rows.push_back(oracle::coordinates(piece, oracle::from_lib(cls)));
    const std::size_t with_class = oracle::rank(rows);
    if (r.witnesses.size() != 1 || r.witnesses[0].size() != 1) {
        out.fail("expected one witness");
    } else {
        rows.push_back(oracle::coordinates(piece, oracle::from_lib(r.witnesses[0][0])));
        if (image != 3 || with_class != 4 || oracle::rank(rows) != 4) out.fail("witness class is not x dy - y dx");
    }
    if (an.report["smoothness"]["consolidated"] != "singular") out.fail("A1 not singular");
    out.detail = out.pass ? "cokernel (0,0,1,0,0,0,0,0,0), witness ~ x dy - y dx" : out.detail;
    return out;
}

// 5. Smooth instances: image equals target in every degree and form degree.
Outcome brion(const std::vector<CorpusEntry>& corpus) {
    Outcome out;
    int smooth = 0;
    for (const auto& c : corpus) {
        const int bound = default_max_degree(c.action);
        const MonoidSmoothness m = monoid_smooth(c.action, bound);
        if (m.verdict != SmoothVerdict::smooth) continue;
        ++smooth;
        for (int k = 1; k <= c.action.n; ++k) {
            const ChainCheck chain = arhcomp_chain_check(c.action, k, bound);
            if (!chain.strict_degrees.empty()) out.fail(c.name + ": strict inclusion at k=" + std::to_string(k));
        }
    }
    out.detail = std::to_string(smooth) + " smooth instances" + (out.pass ? "" : "; " + out.detail);
    if (smooth == 0) out.fail("no smooth instances in the corpus");
    return out;
}

// 6. Canonical module: invariant top forms against the toric series.
Outcome canonical(const std::vector<CorpusEntry>& corpus) {
    Outcome out;
    int small = 0;
    for (const auto& c : corpus) {
        if (!validate_action(c.action).finite_part_small) continue;
        ++small;
        const CanonicalComparison cmp = compare_canonical_series(c.action, 10);
        if (!cmp.equal) out.fail(c.name + ": series differ");
    }
    out.detail = std::to_string(small) + " small-group instances" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 7. Surjective in degree dim Y - 1 implies surjective in degree dim Y on isolated singularities:
// small finite groups fixing only the origin, and every quotient of dimension <= 2 (normal).
Outcome top_degree_implication(const std::vector<CorpusEntry>& corpus, const std::vector<ActionSpec>& family) {
    Outcome out;
    int tested = 0, premises = 0;
    std::vector<ActionSpec> all = family;
    for (const auto& c : corpus) all.push_back(c.action);
    for (int n = 2; n <= 3; ++n) all.push_back(trivial_action(n));
    for (const auto& w : std::vector<std::vector<long long>>{{1, 1, -1}, {1, 1, -2}, {1, 2, -1}, {1, 1, -3}, {1, 3, -2}, {2, 3, -1}})
        all.push_back(torus_action({w}));
    for (const auto& a : all) {
        const int dim = quotient_dimension(a);
        const bool isolated = dim <= 2 || (a.finite_only() && validate_action(a).finite_part_small && has_isolated_fixed_points(a));
        if (!isolated || dim < 2) continue;
        if (a.torus_rank > 1) continue;
        ++tested;
        int bound = default_max_degree(a);
        for (int k = dim - 1; k <= dim; ++k) bound = std::max(bound, target_generator_bound(a, k, a.has_torus()).value_or(bound));
        const SurjectivityResult lower = surjectivity_check(a, dim - 1, bound);
        if (lower.verdict == SurjectivityVerdict::inconclusive) out.fail("inconclusive in degree dim-1: " + action_to_json(a));
        if (lower.verdict != SurjectivityVerdict::surjective) continue;
        ++premises;
        const SurjectivityResult top = surjectivity_check(a, dim, bound);
        if (top.verdict != SurjectivityVerdict::surjective) out.fail("counterexample " + action_to_json(a));
    }
    out.detail = std::to_string(tested) + " isolated instances, " + std::to_string(premises) + " with surjective dim-1" +
                 (out.pass ? "" : "; " + out.detail);
    if (premises == 0) out.fail("premise never holds");
    return out;
}

// 8. Torus quotients of affine 3-space.
Outcome torus_spot_check() {
    Outcome out;
    const std::vector<std::vector<long long>> weights{{1, 1, -1}, {1, 1, -2}, {1, 2, -1}, {1, 1, -3}, {1, 3, -2}, {2, 3, -1}, {1, 2, -2}};
    std::string summary;
    for (const auto& w : weights) {
        const ActionSpec a = torus_action({w});
        int bound = 12;
        for (int k = 1; k <= a.n; ++k) bound = std::max(bound, target_generator_bound(a, k, true).value_or(bound));
        const SmoothnessReport r = smoothness_verdict(a, bound);
        const SmoothVerdict mono = route(r, "monoid");
        const bool surj = all_surjective(r);
        bool witnessed = false;
        for (const auto& s : r.surjectivity) witnessed |= s.verdict == SurjectivityVerdict::not_surjective;
        if (mono == SmoothVerdict::inconclusive) out.fail("monoid route inconclusive for " + action_to_json(a));
        for (const auto& s : r.surjectivity)
            if (s.verdict == SurjectivityVerdict::inconclusive) out.fail("surjectivity inconclusive for " + action_to_json(a));
        if (surj && mono != SmoothVerdict::smooth) out.fail("surjective but not smooth: " + action_to_json(a));
        if (mono == SmoothVerdict::singular && !witnessed) out.fail("singular without a non-surjective degree: " + action_to_json(a));
        if (mono == SmoothVerdict::smooth && !surj) out.fail("smooth but not surjective: " + action_to_json(a));
        std::string ws;
        for (auto x : w) ws += (ws.empty() ? "" : ",") + std::to_string(x);
        summary += (summary.empty() ? "" : " ") + ("(" + ws + ")=" + to_string(mono));
    }
    out.detail = out.pass ? summary : out.detail;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const fs::path corpus_dir = argc > 1 ? fs::path(argv[1]) : fs::path("corpus");
    std::vector<CorpusEntry> corpus;
    try {
        corpus = load_corpus(corpus_dir);
    } catch (const std::exception& e) {
        std::cerr << "cannot load corpus " << corpus_dir << ": " << e.what() << "\n";
        return 1;
    }
    const std::vector<ActionSpec> family = cyclic_family();

    struct Line {
        int id;
        std::string name;
        double limit;
        std::function<Outcome()> run;
    };
    int forms = 0;
    const std::vector<Line> lines{
        {1, "algebraic identities", 30, [&] { return identities(forms); }},
        {2, "Euler complex exactness", 60, [&] { return exactness(); }},
        {3, "surjectivity == monoid == Shephard-Todd", 300, [&] { return equivalence(family); }},
        {4, "A1 golden instance", 0, [&] { return a1_golden(corpus_dir); }},
        {5, "smooth instances: image equals target", 0, [&] { return brion(corpus); }},
        {6, "canonical module series", 60, [&] { return canonical(corpus); }},
        {7, "degree n-1 surjective implies degree n", 0, [&] { return top_degree_implication(corpus, family); }},
        {8, "torus quotients of affine 3-space", 0, [&] { return torus_spot_check(); }},
    };
    int failures = 0;
    for (const auto& line : lines) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = line.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double t = seconds_since(start);
        if (line.limit > 0 && t > line.limit) o.fail("took " + std::to_string(t) + " s, limit " + std::to_string(line.limit));
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << line.id << "] " << line.name << " (" << std::fixed
                  << std::setprecision(2) << t << " s): " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
