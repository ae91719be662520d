#include "invforms/canonical.hpp"

#include "invforms/errors.hpp"

namespace invforms {

GradedSubmodule canonical_invariants(const ActionSpec& action, int bound) {
    const int top = quotient_dimension(action);
    return invariant_form_generators(action, top, action.has_torus(), std::max(bound, top));
}

HilbertSeries toric_canonical_series(const ActionSpec& action, int truncation) {
    const WeightZeroCone cone = weight_zero_cone(action);
    HilbertSeries out;
    out.coefficients.assign(std::max(truncation + 1, 0), 0);
    MonomialTable table(action);
    for (int degree = 0; degree <= truncation; ++degree)
        for (const auto& e : table.invariants(degree)) {
            bool interior = true;
            for (int i = 0; i < action.n; ++i)
                if (cone.support[i] && e[i] == 0) interior = false;
            if (interior) ++out.coefficients[degree];
        }
    return out;
}

ChainCheck arhcomp_chain_check(const ActionSpec& action, int k, int bound) {
    ChainCheck out;
    out.k = k;
    const MonoidSmoothness monoid = monoid_smooth(action, bound);
    out.smooth_instance = monoid.verdict == SmoothVerdict::smooth;
    const SurjectivityResult s = surjectivity_check(action, k, bound);
    for (const auto& row : s.table.rows) {
        if (row.image_dimension > row.target_dimension)
            throw EngineInconsistency("image exceeds target in degree " + std::to_string(row.degree));
        out.rows.push_back({row.degree, row.image_dimension, row.target_dimension});
        if (row.image_dimension < row.target_dimension) out.strict_degrees.push_back(row.degree);
    }
    out.consistent = !out.smooth_instance || out.strict_degrees.empty();
    return out;
}

CanonicalComparison compare_canonical_series(const ActionSpec& action, int truncation) {
    if (action.finite_rank() > 0) {
        std::vector<GroupElement> reflections;
        for_each_group_element(action, [&](const GroupElement& g) {
            if (diagonal_form(action, g).nontrivial_entries() == 1) reflections.push_back(g);
        });
        if (!reflections.empty()) {
            std::string names;
            for (const auto& g : reflections) {
                std::string e;
                for (auto x : g.exponents) e += (e.empty() ? "" : ",") + std::to_string(x);
                names += (names.empty() ? "" : " ") + ("(" + e + ")");
            }
            throw PreconditionError("finite part contains pseudo-reflections " + names +
                                    "; canonical identification requires a small group");
        }
    }
    CanonicalComparison out;
    out.forms = hilbert_series_of(canonical_invariants(action, truncation), action, truncation);
    out.toric = toric_canonical_series(action, truncation);
    out.equal = out.forms == out.toric;
    return out;
}

bool arhdual_check(const ActionSpec& action, int truncation) { return compare_canonical_series(action, truncation).equal; }

} // namespace invforms
