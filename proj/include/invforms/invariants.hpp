#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invforms/graded.hpp"

namespace invforms {

/// The real cone {a >= 0 : torus rows . a = 0} with its extreme rays scaled to the first lattice
/// point of weight zero (finite part included).
struct WeightZeroCone {
    std::vector<Exponent> rays;
    int dimension = 0;
    /// support[i]: coordinate i is positive somewhere on the cone.
    std::vector<bool> support;
};

WeightZeroCone weight_zero_cone(const ActionSpec& action);

/// Dimension of the quotient, i.e. of the weight-zero cone.
int quotient_dimension(const ActionSpec& action);

/// Degree bound for the minimal elements of {a in N^n : weight(a) = target}, where a <= b means
/// b - a is a weight-zero exponent. For target = 0 this bounds the Hilbert basis (minimal nonzero
/// elements). Returns -1 when the set is empty.
int fiber_degree_bound(const ActionSpec& action, const Weight& target);

/// Total-degree bound for minimal generators of the invariant k-forms over the invariant ring.
int invariant_form_degree_bound(const ActionSpec& action, int k);

/// Total-degree bound for minimal generators of the invariant horizontal k-forms, or nullopt when
/// no certificate is available (two or more torus factors).
std::optional<int> target_generator_bound(const ActionSpec& action, int k, bool horizontal);

struct MonoidBasis {
    std::vector<Exponent> generators;
    bool complete = false;
    int search_bound = 0;
    /// Degree below which every Hilbert basis element provably lies.
    int certified_degree = 0;
};

MonoidBasis hilbert_basis(const ActionSpec& action, int bound);

/// A submodule of k-forms over the invariant ring, described by minimal generators up to a degree.
struct GradedSubmodule {
    int form_degree = 0;
    std::vector<PolyForm> generators;
    std::vector<int> generator_degrees;
    int generator_bound = 0;
    /// True when no minimal generator can live above generator_bound.
    bool certified = false;
    std::optional<int> certificate_degree;
    /// Dimension of the weight-zero piece of the ambient module (target) in degrees 0..generator_bound.
    std::vector<std::size_t> piece_dimensions;
    std::vector<std::string> warnings;
};

/// Minimal generators of (Omega^k)^G, or of the horizontal invariant k-forms when `horizontal`,
/// by graded Nakayama up to `bound`.
GradedSubmodule invariant_form_generators(const ActionSpec& action, int k, bool horizontal, int bound);

struct HilbertSeries {
    std::vector<long long> coefficients;
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Dimensions of the weight-zero pieces of the module spanned over the invariant ring by the
/// generators, degrees 0..truncation.
HilbertSeries hilbert_series_of(const GradedSubmodule& module, const ActionSpec& action, int truncation);
/// Per-degree count of the monoid generated by the basis (i.e. the invariant ring).
HilbertSeries hilbert_series_of(const MonoidBasis& basis, const ActionSpec& action, int truncation);

} // namespace invforms
