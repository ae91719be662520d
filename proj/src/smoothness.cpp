#include "invforms/smoothness.hpp"

#include <set>

#include "invforms/errors.hpp"

namespace invforms {

namespace {

void require_finite_only(const ActionSpec& action, const char* route) {
    if (!action.finite_only())
        throw UnsupportedRouteError(std::string(route) + " applies to finite groups only; use the monoid route");
}

std::vector<long long> add_mod(const std::vector<long long>& a, const std::vector<long long>& b, long long m) {
    std::vector<long long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % m;
    return out;
}

} // namespace

std::vector<GroupElement> pseudo_reflections(const ActionSpec& action) {
    require_finite_only(action, "pseudo-reflection enumeration");
    std::vector<GroupElement> out;
    for_each_group_element(action, [&](const GroupElement& g) {
        if (diagonal_form(action, g).nontrivial_entries() == 1) out.push_back(g);
    });
    return out;
}

bool shephard_todd_smooth(const ActionSpec& action) {
    require_finite_only(action, "Shephard-Todd");
    std::set<std::vector<long long>> effective;
    std::vector<std::vector<long long>> reflections;
    long long modulus = 1;
    for_each_group_element(action, [&](const GroupElement& g) {
        DiagonalForm f = diagonal_form(action, g);
        modulus = f.modulus;
        if (f.nontrivial_entries() == 1) reflections.push_back(f.residues);
        effective.insert(std::move(f.residues));
    });
    // Closure of the reflections under addition of residues (a finite group, so this is the subgroup).
    std::set<std::vector<long long>> subgroup{std::vector<long long>(action.n, 0)};
    std::vector<std::vector<long long>> frontier(subgroup.begin(), subgroup.end());
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& a : frontier)
            for (const auto& r : reflections) {
                auto s = add_mod(a, r, modulus);
                if (subgroup.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return subgroup.size() == effective.size();
}

std::vector<FixedLocus> fixed_locus_codimensions(const ActionSpec& action) {
    std::vector<FixedLocus> out;
    for_each_group_element(action, [&](const GroupElement& g) {
        out.push_back({g, diagonal_form(action, g).nontrivial_entries()});
    });
    return out;
}

bool has_isolated_fixed_points(const ActionSpec& action) {
    if (!action.finite_only()) return false;
    bool isolated = true;
    for_each_group_element(action, [&](const GroupElement& g) {
        const int moved = diagonal_form(action, g).nontrivial_entries();
        if (moved != 0 && moved != action.n) isolated = false;
    });
    return isolated;
}

std::string to_string(SmoothVerdict v) {
    switch (v) {
    case SmoothVerdict::smooth: return "smooth";
    case SmoothVerdict::singular: return "singular";
    case SmoothVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

MonoidSmoothness monoid_smooth(const ActionSpec& action, int bound) {
    MonoidSmoothness out;
    const MonoidBasis basis = hilbert_basis(action, bound);
    out.generator_count = basis.generators.size();
    IntMatrix rows;
    for (const auto& g : basis.generators) {
        IntVector row;
        for (int x : g) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    out.rank = static_cast<int>(rank(rows, action.n));
    if (out.generator_count > static_cast<std::size_t>(out.rank)) {
        // Dependent generators found below the bound already rule out freeness.
        out.verdict = SmoothVerdict::singular;
        out.reason = std::to_string(out.generator_count) + " Hilbert basis elements span a lattice of rank " +
                     std::to_string(out.rank);
        return out;
    }
    if (!basis.complete) {
        out.verdict = SmoothVerdict::inconclusive;
        out.reason = "inconclusive at bound " + std::to_string(bound) + ": Hilbert basis certified from degree " +
                     std::to_string(basis.certified_degree);
        return out;
    }
    // A normal monoid whose Hilbert basis is linearly independent is free on it; the basis then has
    // determinant +-1 in the lattice it generates.
    out.verdict = SmoothVerdict::smooth;
    out.reason = "Hilbert basis of " + std::to_string(out.generator_count) + " independent elements";
    return out;
}

SmoothnessReport smoothness_verdict(const ActionSpec& action, int bound) {
    SmoothnessReport out;
    out.quotient_dimension = quotient_dimension(action);
    if (action.finite_only()) {
        const bool st = shephard_todd_smooth(action);
        out.routes.push_back({"shephard_todd", st ? SmoothVerdict::smooth : SmoothVerdict::singular,
                              std::to_string(pseudo_reflections(action).size()) + " pseudo-reflections"});
    }
    const MonoidSmoothness monoid = monoid_smooth(action, bound);
    out.routes.push_back({"monoid", monoid.verdict, monoid.reason});

    SmoothVerdict surj = SmoothVerdict::smooth;
    std::string detail;
    for (int k = 1; k <= out.quotient_dimension; ++k) {
        out.surjectivity.push_back(surjectivity_check(action, k, bound));
        const auto v = out.surjectivity.back().verdict;
        detail += (detail.empty() ? "" : ", ") + ("k=" + std::to_string(k) + ": " + to_string(v));
        if (v == SurjectivityVerdict::not_surjective) {
            surj = SmoothVerdict::singular;
        } else if (v == SurjectivityVerdict::inconclusive && surj == SmoothVerdict::smooth) {
            surj = SmoothVerdict::inconclusive;
        }
    }
    if (detail.empty()) detail = "quotient is a point";
    out.routes.push_back({"surjectivity", surj, detail});

    bool any_inconclusive = false;
    std::set<SmoothVerdict> decided;
    for (const auto& r : out.routes) {
        if (r.verdict == SmoothVerdict::inconclusive) {
            any_inconclusive = true;
        } else {
            decided.insert(r.verdict);
        }
    }
    out.agreement = decided.size() <= 1;
    if (any_inconclusive || !out.agreement || decided.empty()) {
        out.consolidated = SmoothVerdict::inconclusive;
    } else {
        out.consolidated = *decided.begin();
    }
    return out;
}

} // namespace invforms
