#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invforms/quotient.hpp"

namespace invforms {

/// Nontrivial finite-part elements whose diagonal form has exactly one entry different from 1.
/// Elements acting trivially are not pseudo-reflections. Torus actions are rejected.
std::vector<GroupElement> pseudo_reflections(const ActionSpec& action);

/// Shephard-Todd route: the pseudo-reflections, together with the elements acting trivially,
/// generate the whole finite group.
bool shephard_todd_smooth(const ActionSpec& action);

/// Fixed-locus codimension (number of nontrivial diagonal entries) of one group element.
struct FixedLocus {
    GroupElement element;
    int codimension = 0;
};

/// Every finite-part element with the codimension of its fixed locus.
std::vector<FixedLocus> fixed_locus_codimensions(const ActionSpec& action);

/// Finite-only action whose nontrivial effective elements fix only the origin.
bool has_isolated_fixed_points(const ActionSpec& action);

enum class SmoothVerdict { smooth, singular, inconclusive };
std::string to_string(SmoothVerdict v);

struct MonoidSmoothness {
    SmoothVerdict verdict = SmoothVerdict::inconclusive;
    std::size_t generator_count = 0;
    int rank = 0;
    std::string reason;
};

/// Toric route: the weight-zero monoid is free, i.e. its Hilbert basis is linearly independent.
MonoidSmoothness monoid_smooth(const ActionSpec& action, int bound);

struct RouteResult {
    std::string route;
    SmoothVerdict verdict = SmoothVerdict::inconclusive;
    std::string detail;
};

struct SmoothnessReport {
    SmoothVerdict consolidated = SmoothVerdict::inconclusive;
    bool agreement = false;
    std::vector<RouteResult> routes;
    std::vector<SurjectivityResult> surjectivity;
    int quotient_dimension = 0;
};

/// Runs Shephard-Todd (finite-only), the monoid route, and surjectivity for k = 1..dim Y.
SmoothnessReport smoothness_verdict(const ActionSpec& action, int bound);

} // namespace invforms
