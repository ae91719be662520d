#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "invforms/form.hpp"

namespace invforms {

/// Character of G = (G_m)^s x Z/m_1 x ... x Z/m_t: s integers followed by t residues.
struct Weight {
    std::vector<long long> torus;
    std::vector<long long> finite;

    bool is_zero() const;
    std::string to_string() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Diagonal action on affine n-space. Row j < s of the weight matrix holds the torus weights of the
/// coordinates for the j-th G_m factor; row s + j holds residues mod finite_orders[j].
struct ActionSpec {
    int n = 0;
    int torus_rank = 0;
    std::vector<long long> finite_orders;
    std::vector<std::vector<long long>> weight_matrix;

    int finite_rank() const { return static_cast<int>(finite_orders.size()); }
    bool has_torus() const { return torus_rank > 0; }
    bool finite_only() const { return torus_rank == 0; }

    /// Product of the finite orders.
    std::uint64_t finite_group_order() const;

    Weight zero_weight() const;
    Weight coordinate_weight(int i) const;
    Weight add(const Weight& a, const Weight& b) const;
    Weight negate(const Weight& a) const;
    Weight scale(const Weight& a, long long c) const;
    void check_weight_shape(const Weight& w) const;

    friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

/// The trivial action on n coordinates.
ActionSpec trivial_action(int n);
ActionSpec cyclic_action(long long order, std::vector<long long> weights);
ActionSpec torus_action(std::vector<std::vector<long long>> rows);

Weight weight_of_monomial(const ActionSpec& action, const Exponent& exponent);
/// Weight of the basis element dx_I (dx_i carries the weight of x_i).
Weight weight_of_indices(const ActionSpec& action, IndexSet indices);
Weight weight_of_term(const ActionSpec& action, IndexSet indices, const Exponent& exponent);
/// Common weight of every term; throws InhomogeneityError naming two conflicting weights.
/// The zero form has zero weight.
Weight weight_of_form(const ActionSpec& action, const PolyForm& form);
bool is_homogeneous(const ActionSpec& action, const PolyForm& form);

/// Projection onto the weight-zero terms.
PolyForm invariant_component(const ActionSpec& action, const PolyForm& form);

/// Element g = (g_1, ..., g_t) of the finite part, g_j in [0, m_j).
struct GroupElement {
    std::vector<long long> exponents;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Diagonal form of a finite-part element: entry i is the residue r_i mod `modulus`, meaning g acts
/// on x_i by exp(2 pi i r_i / modulus); modulus = lcm of the finite orders.
struct DiagonalForm {
    long long modulus = 1;
    std::vector<long long> residues;

    int nontrivial_entries() const;
};

DiagonalForm diagonal_form(const ActionSpec& action, const GroupElement& g);

constexpr std::uint64_t kMaxGroupOrder = 1'000'000;

/// Visits every element of the finite part in lexicographic order.
/// Throws ResourceError above kMaxGroupOrder elements.
void for_each_group_element(const ActionSpec& action, const std::function<void(const GroupElement&)>& fn);

struct ValidatedAction {
    ActionSpec action;
    /// The finite part contains no pseudo-reflection (no element fixing exactly a hyperplane).
    bool finite_part_small = true;
};

/// Checks shapes, rejects orders below 2, reduces finite rows into [0, m_j).
ValidatedAction validate_action(ActionSpec spec);

/// Serializes to the canonical JSON text {"finite_orders", "n", "torus_rank", "weight_matrix"}.
std::string action_to_json(const ActionSpec& spec);
/// Parses and validates; malformed JSON raises ValidationError carrying line and column.
ActionSpec action_from_json(const std::string& text);

} // namespace invforms
