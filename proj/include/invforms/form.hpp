#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "invforms/polynomial.hpp"

namespace invforms {

constexpr int kMaxVariables = 30;

/// Strictly increasing set of coordinate indices, naming the basis element dx_{i1} ^ ... ^ dx_{ik}.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
    static IndexSet from_indices(std::span<const int> indices);
    static IndexSet single(int i) { return IndexSet(std::uint32_t{1} << i); }

    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> i) & 1U; }
    IndexSet with(int i) const { return IndexSet(mask_ | (std::uint32_t{1} << i)); }
    IndexSet without(int i) const { return IndexSet(mask_ & ~(std::uint32_t{1} << i)); }
    std::vector<int> indices() const;

    friend bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }
    /// Lexicographic order of the sorted index lists.
    friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

    std::string to_string(int nvars) const;

private:
    std::uint32_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation (a, b); 0 if they share an index.
int wedge_sign(IndexSet a, IndexSet b);

/// A polynomial differential k-form on affine n-space: sum of f_I dx_I over |I| = k.
class PolyForm {
public:
    using ComponentMap = std::map<IndexSet, Polynomial>;

    PolyForm(int nvars, int degree);

    static PolyForm function(const Polynomial& f);
    static PolyForm basis(int nvars, IndexSet indices, const Polynomial& coefficient);
    /// The coordinate differential dx_i.
    static PolyForm dx(int nvars, int i);
    static PolyForm monomial(IndexSet indices, const Exponent& e, const Rational& c = 1);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return components_.empty(); }
    const ComponentMap& components() const { return components_; }
    Polynomial coefficient(IndexSet indices) const;

    void add_component(IndexSet indices, const Polynomial& p);
    void add_term(IndexSet indices, const Exponent& e, const Rational& c);

    /// Visits every (index set, exponent, coefficient) term.
    void for_each_term(const std::function<void(IndexSet, const Exponent&, const Rational&)>& fn) const;
    std::size_t term_count() const;

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm& operator*=(const Rational& c);
    PolyForm& operator*=(const Polynomial& f);

    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator-(PolyForm a) { return a *= Rational(-1); }
    friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }
    friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
    friend PolyForm operator*(const Polynomial& f, PolyForm a) { return a *= f; }
    friend bool operator==(const PolyForm& a, const PolyForm& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.components_ == b.components_;
    }

    /// Human-readable rendering, e.g. "x*y dx + 2 dx^dy".
    std::string to_string() const;

private:
    void check_compatible(const PolyForm& o) const;

    int nvars_;
    int degree_;
    ComponentMap components_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& a);
/// df for a function f.
PolyForm differential(const Polynomial& f);

} // namespace invforms
