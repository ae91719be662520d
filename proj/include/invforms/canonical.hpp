#pragma once

#include <string>
#include <vector>

#include "invforms/smoothness.hpp"

namespace invforms {

/// Minimal generators of the invariant horizontal forms of top degree dim Y.
GradedSubmodule canonical_invariants(const ActionSpec& action, int bound);

/// Per-degree count of weight-zero monomials in the relative interior of the weight-zero cone.
HilbertSeries toric_canonical_series(const ActionSpec& action, int truncation);

struct ChainRow {
    int degree = 0;
    std::size_t image_dimension = 0;
    std::size_t target_dimension = 0;
};

struct ChainCheck {
    int k = 0;
    std::vector<ChainRow> rows;
    /// Degrees where the inclusion is strict.
    std::vector<int> strict_degrees;
    bool smooth_instance = false;
    /// Smooth instances must have equality everywhere.
    bool consistent = true;
};

/// Degreewise dim(image of the invariant pullback) <= dim(invariant horizontal k-forms), with
/// equality required on smooth instances. Throws EngineInconsistency on a violated inequality.
ChainCheck arhcomp_chain_check(const ActionSpec& action, int k, int bound);

struct CanonicalComparison {
    bool equal = false;
    HilbertSeries forms;
    HilbertSeries toric;
};

/// Compares the Hilbert series of the canonical invariants (a form f dx_I counted in degree
/// deg f + |I|) with the toric canonical series. Throws PreconditionError listing pseudo-reflections
/// when the finite part is not small.
CanonicalComparison compare_canonical_series(const ActionSpec& action, int truncation);
bool arhdual_check(const ActionSpec& action, int truncation);

} // namespace invforms
