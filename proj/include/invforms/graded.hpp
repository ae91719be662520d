#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invforms/action.hpp"
#include "invforms/linalg.hpp"

namespace invforms {

/// All exponent vectors of total degree d in n variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(int n, int d);

/// Total degree of a form under the convention deg(coefficient) + form degree.
/// Throws InhomogeneityError if the terms have different total degrees; -1 for the zero form.
int total_degree_of_form(const PolyForm& form);

/// Memoizes the monomials of each degree, bucketed by weight. Not thread-safe; create one per
/// computation (or per thread).
class MonomialTable {
public:
    explicit MonomialTable(ActionSpec action) : action_(std::move(action)) {}

    const ActionSpec& action() const { return action_; }
    const std::vector<Exponent>& with_weight(int degree, const Weight& weight);
    const std::vector<Exponent>& invariants(int degree) { return with_weight(degree, action_.zero_weight()); }

private:
    const std::map<Weight, std::vector<Exponent>>& bucket(int degree);

    ActionSpec action_;
    std::map<int, std::map<Weight, std::vector<Exponent>>> buckets_;
    std::vector<Exponent> empty_;
};

/// Basis element x^e dx_I of a graded piece.
struct MonomialForm {
    IndexSet indices;
    Exponent exponent;
};

/// Coordinate order inside a piece: index sets ascending, then exponents lexicographically descending.
bool monomial_form_less(const MonomialForm& a, const MonomialForm& b);

/// Integer-coefficient term list of a homogeneous form, used for fast monomial shifts.
struct TermList {
    int nvars = 0;
    int form_degree = 0;
    int total_degree = 0;
    Weight weight;
    std::vector<IndexSet> indices;
    std::vector<Exponent> exponents;
    std::vector<Integer> coefficients;
};

/// Scales the form to integer coefficients; it must be homogeneous in total degree and weight.
TermList to_term_list(const ActionSpec& action, const PolyForm& form);

/// Monomial basis of the (total degree, weight) piece of the k-forms.
class PieceCoordinates {
public:
    PieceCoordinates(MonomialTable& table, int k, int degree, const Weight& weight);

    int form_degree() const { return k_; }
    int degree() const { return degree_; }
    const Weight& weight() const { return weight_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<MonomialForm>& basis() const { return basis_; }

    std::optional<std::size_t> index_of(IndexSet indices, const Exponent& e) const;
    /// Coordinates of a form lying in this piece; throws StructuralError otherwise.
    IntVector to_vector(const PolyForm& form) const;
    /// Coordinates of x^m * g; nullopt if the product leaves the piece.
    std::optional<IntVector> product_vector(const Exponent& m, const TermList& g) const;
    PolyForm to_form(const RatVector& v) const;
    PolyForm to_form(const IntVector& v) const;
    PolyForm basis_form(std::size_t i) const;

private:
    struct ExponentHash {
        std::size_t operator()(const Exponent& e) const noexcept;
    };

    int nvars_;
    int k_;
    int degree_;
    Weight weight_;
    std::vector<MonomialForm> basis_;
    std::map<IndexSet, std::unordered_map<Exponent, std::size_t, ExponentHash>> lookup_;
};

/// Which multipliers generate a submodule: the full polynomial ring, or the invariant ring
/// (weight-zero monomials).
enum class CoefficientRing { polynomials, invariants };

/// Builds the span of {x^m * g} inside one piece, for generators g and multipliers x^m of the
/// matching degree and weight. Stops early once `stop_at_rank` is reached.
RowSpace span_in_piece(MonomialTable& table, const PieceCoordinates& piece, const std::vector<TermList>& generators,
                       CoefficientRing ring, std::optional<std::size_t> stop_at_rank = std::nullopt,
                       bool positive_multipliers_only = false);

/// Basis, in reduced echelon form, of the (degree, weight) piece of the submodule of k-forms
/// generated over the polynomial ring by homogeneous generators of a common form degree.
/// Returns an empty list when degree < k.
std::vector<PolyForm> graded_piece_basis(const std::vector<PolyForm>& generators, int degree, const Weight& weight,
                                         const ActionSpec& action);

} // namespace invforms
