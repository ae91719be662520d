#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace invforms {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial; its length is the number of variables.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Orders exponents so that x1 > x2 > ... (lexicographically larger first).
struct LexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// Name of variable i: x, y, z, w for up to four variables, otherwise x1, x2, ...
std::string variable_name(int nvars, int i);

std::string monomial_to_string(const Exponent& e);

/// Sparse polynomial with exact rational coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, LexDescending>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(const Exponent& e, const Rational& c = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * x^e, merging with an existing term and dropping it if it cancels.
    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    Polynomial derivative(int i) const;
    Polynomial multiplied_by_monomial(const Exponent& e) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

} // namespace invforms
