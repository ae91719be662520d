#include "invforms/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "invforms/errors.hpp"

namespace invforms {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string variable_name(int nvars, int i) {
    static const char* small[] = {"x", "y", "z", "w"};
    if (nvars <= 4) return small[i];
    return "x" + std::to_string(i + 1);
}

std::string monomial_to_string(const Exponent& e) {
    std::string out;
    const int n = static_cast<int>(e.size());
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(n, i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw StructuralError("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw StructuralError("exponent length " + std::to_string(e.size()) + " does not match " +
                              std::to_string(nvars_) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw StructuralError("derivative index out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

Polynomial Polynomial::multiplied_by_monomial(const Exponent& m) const {
    if (static_cast<int>(m.size()) != nvars_) throw StructuralError("monomial length mismatch");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (int i = 0; i < nvars_; ++i) f[i] += m[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw StructuralError("evaluation point length mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) v *= point[i];
        sum += v;
    }
    return sum;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw StructuralError("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = total_degree(e) == 0;
        if (mag != 1 || unit) {
            os << mag.get_str();
            if (!unit) os << "*";
        }
        if (!unit) os << monomial_to_string(e);
    }
    return os.str();
}

} // namespace invforms
