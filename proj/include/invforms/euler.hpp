#pragma once

#include <optional>
#include <vector>

#include "invforms/graded.hpp"

namespace invforms {

/// Euler derivation of one G_m factor: the degree -1 operator with e(df) = |f| f, extended by
/// e(df_1 ^ ... ^ df_k) = sum_i (-1)^(k-i) e(df_i) df_1 ^ ..^ (omit i) ^ .. ^ df_k.
/// It is linear over the polynomial ring.
class EulerOperator {
public:
    EulerOperator(const ActionSpec& action, int torus_index);

    int torus_index() const { return torus_index_; }
    const std::vector<long long>& weights() const { return weights_; }

    PolyForm apply(const PolyForm& form) const;

    /// Image of the monomial form x^e dx_I as (index set, exponent, integer coefficient) terms.
    template <typename Fn>
    void apply_monomial(IndexSet indices, const Exponent& e, Fn&& emit) const {
        const std::vector<int> idx = indices.indices();
        const int k = static_cast<int>(idx.size());
        Exponent shifted = e;
        for (int p = 0; p < k; ++p) {
            const int i = idx[p];
            const long long w = weights_[i];
            if (w == 0) continue;
            // 1-based position p + 1 gives the sign (-1)^(k - p - 1).
            const long long sign = ((k - p - 1) % 2 == 0) ? 1 : -1;
            ++shifted[i];
            emit(indices.without(i), shifted, sign * w);
            --shifted[i];
        }
    }

private:
    int torus_index_;
    int nvars_;
    std::vector<long long> weights_;
};

PolyForm euler_contract(const EulerOperator& op, const PolyForm& form);

/// One contraction per torus factor; empty for a purely finite group.
std::vector<PolyForm> dmu(const ActionSpec& action, const PolyForm& form);

/// Matrix of an Euler operator from one piece to the piece one form degree lower, as rows of the
/// target coordinates.
IntMatrix euler_matrix(const EulerOperator& op, const PieceCoordinates& source, const PieceCoordinates& target);

/// Basis (in `piece` coordinates) of the forms killed by every Euler operator whose index is not
/// in `skip`. Returns nullopt when no operator applies, meaning the whole piece.
std::optional<std::vector<IntVector>> horizontal_vectors(MonomialTable& table, const PieceCoordinates& piece,
                                                         const std::vector<int>& skip = {});

/// Reduced echelon basis of the (degree, weight) piece of the horizontal k-forms.
std::vector<PolyForm> horizontal_piece(const ActionSpec& action, int k, int degree, const Weight& weight);

struct EulerHomologyOptions {
    /// Which torus factor supplies the Euler derivation.
    int torus_index = 0;
    /// Restrict to forms invariant under, and horizontal for, the remaining factors.
    bool invariant_horizontal = false;
    /// Demand the point-quotient hypothesis (all weights of the chosen factor positive).
    bool point_quotient = false;
};

struct EulerHomology {
    int degree = 0;
    Weight weight;
    /// Dimension of the complex in form degree k = 0..n.
    std::vector<std::size_t> piece_dimensions;
    /// dim ker(e) / im(e) in form degree k = 0..n.
    std::vector<std::size_t> homology;
};

EulerHomology euler_homology(const ActionSpec& action, int degree, const Weight& weight,
                             const EulerHomologyOptions& options = {});

/// e(d a) - d(e a) - (-1)^k |a| a for the selected torus factor; always zero.
PolyForm bracket_defect(const ActionSpec& action, int torus_index, const PolyForm& form);

} // namespace invforms
