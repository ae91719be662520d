#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invforms/invariants.hpp"

namespace invforms {

/// Image of the invariant pullback of k-forms from the quotient: the invariant-ring span of the
/// wedges d(m_1) ^ ... ^ d(m_k) of differentials of invariant-ring generators. This is the
/// torsion-free part of the Kähler k-forms of the quotient.
struct PullbackImage {
    int k = 0;
    std::vector<PolyForm> wedge_generators;
    std::vector<int> degrees;
    /// Positions in the Hilbert basis of the factors of each wedge generator.
    std::vector<std::vector<int>> factors;
    int certified_bound = 0;
    /// The invariant-ring generators were certified complete at the bound.
    bool hilbert_basis_complete = false;
};

/// d(x^a_1) ^ ... ^ d(x^a_k) for monomials x^a_j.
PolyForm wedge_of_monomial_differentials(const std::vector<Exponent>& monomials, int nvars);

PullbackImage pullback_image(const ActionSpec& action, int k, int bound);

struct CokernelRow {
    int degree = 0;
    std::size_t target_dimension = 0;
    std::size_t image_dimension = 0;
    std::size_t cokernel_dimension = 0;
};

struct CokernelTable {
    int k = 0;
    std::vector<CokernelRow> rows;
};

enum class SurjectivityVerdict { surjective, not_surjective, inconclusive };

std::string to_string(SurjectivityVerdict v);

struct SurjectivityResult {
    SurjectivityVerdict verdict = SurjectivityVerdict::inconclusive;
    std::vector<int> witness_degrees;
    /// For every witness degree, a basis of the orthogonal complement of the image inside the
    /// target piece (monomial coordinates); these represent the cokernel classes.
    std::vector<std::vector<PolyForm>> witnesses;
    CokernelTable table;
    std::optional<int> certificate_degree;
    std::string reason;
};

/// Compares the invariant pullback image with the invariant horizontal k-forms in every degree up
/// to `bound`. A non-surjective verdict is always backed by a witness; a surjective verdict needs a
/// generator-degree certificate for the target at or below the bound.
SurjectivityResult surjectivity_check(const ActionSpec& action, int k, int bound);

/// Generic rank of the pullback image: rank of the wedge matrix of the differentials of the
/// extreme-ray invariants, evaluated at the all-ones point.
int torsion_free_rank(const ActionSpec& action, int k);

} // namespace invforms
