#include "invforms/form.hpp"

#include <bit>
#include <sstream>

#include "invforms/errors.hpp"

namespace invforms {

IndexSet IndexSet::from_indices(std::span<const int> indices) {
    std::uint32_t mask = 0;
    int previous = -1;
    for (int i : indices) {
        if (i <= previous) throw StructuralError("index set must be strictly increasing");
        if (i >= kMaxVariables) throw StructuralError("index out of supported range");
        mask |= std::uint32_t{1} << i;
        previous = i;
    }
    return IndexSet(mask);
}

int IndexSet::size() const { return std::popcount(mask_); }

std::vector<int> IndexSet::indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    const int low = std::countr_zero(diff);
    // Both lists agree below `low`; the one holding `low` is smaller unless the other one has
    // already run out of elements.
    const std::uint32_t above = low == 31 ? 0U : ~((std::uint32_t{2} << low) - 1);
    if (a.contains(low)) return (b.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    return (a.mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string IndexSet::to_string(int nvars) const {
    std::string out;
    for (int i : indices()) {
        if (!out.empty()) out += "^";
        out += "d" + variable_name(nvars, i);
    }
    return out;
}

int wedge_sign(IndexSet a, IndexSet b) {
    if (a.mask() & b.mask()) return 0;
    int inversions = 0;
    for (int j : b.indices()) {
        const std::uint32_t above = j == 31 ? 0U : ~((std::uint32_t{2} << j) - 1);
        inversions += std::popcount(a.mask() & above);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

PolyForm::PolyForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || nvars > kMaxVariables) throw StructuralError("unsupported variable count");
    if (degree < 0 || degree > nvars) throw StructuralError("form degree out of range");
}

PolyForm PolyForm::function(const Polynomial& f) {
    PolyForm out(f.nvars(), 0);
    out.add_component(IndexSet(), f);
    return out;
}

PolyForm PolyForm::basis(int nvars, IndexSet indices, const Polynomial& coefficient) {
    PolyForm out(nvars, indices.size());
    out.add_component(indices, coefficient);
    return out;
}

PolyForm PolyForm::dx(int nvars, int i) {
    return basis(nvars, IndexSet::single(i), Polynomial::constant(nvars, 1));
}

PolyForm PolyForm::monomial(IndexSet indices, const Exponent& e, const Rational& c) {
    return basis(static_cast<int>(e.size()), indices, Polynomial::monomial(e, c));
}

Polynomial PolyForm::coefficient(IndexSet indices) const {
    auto it = components_.find(indices);
    return it == components_.end() ? Polynomial(nvars_) : it->second;
}

void PolyForm::add_component(IndexSet indices, const Polynomial& p) {
    if (indices.size() != degree_) throw StructuralError("index set size does not match form degree");
    if (p.nvars() != nvars_) throw StructuralError("coefficient lives in a different ring");
    if (indices.mask() >> nvars_) throw StructuralError("index beyond variable count");
    if (p.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(indices, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) components_.erase(it);
    }
}

void PolyForm::add_term(IndexSet indices, const Exponent& e, const Rational& c) {
    add_component(indices, Polynomial::monomial(e, c));
}

void PolyForm::for_each_term(const std::function<void(IndexSet, const Exponent&, const Rational&)>& fn) const {
    for (const auto& [indices, p] : components_)
        for (const auto& [e, c] : p.terms()) fn(indices, e, c);
}

std::size_t PolyForm::term_count() const {
    std::size_t count = 0;
    for (const auto& [indices, p] : components_) count += p.term_count();
    return count;
}

void PolyForm::check_compatible(const PolyForm& o) const {
    if (o.nvars_ != nvars_) throw StructuralError("forms over different variable counts");
    if (o.degree_ != degree_) throw StructuralError("forms of different degrees");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    check_compatible(o);
    for (const auto& [indices, p] : o.components_) add_component(indices, p);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
    check_compatible(o);
    for (const auto& [indices, p] : o.components_) add_component(indices, -p);
    return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
    if (c == 0) {
        components_.clear();
        return *this;
    }
    for (auto& [indices, p] : components_) p *= c;
    return *this;
}

PolyForm& PolyForm::operator*=(const Polynomial& f) {
    if (f.nvars() != nvars_) throw StructuralError("multiplier lives in a different ring");
    ComponentMap next;
    for (auto& [indices, p] : components_) {
        Polynomial q = p * f;
        if (!q.is_zero()) next.emplace(indices, std::move(q));
    }
    components_ = std::move(next);
    return *this;
}

std::string PolyForm::to_string() const {
    if (components_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [indices, p] : components_) {
        for (const auto& [e, c] : p.terms()) {
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const bool unit_monomial = total_degree(e) == 0;
            std::string body;
            if (mag != 1 || (unit_monomial && indices.empty())) body = mag.get_str();
            if (!unit_monomial) body += (body.empty() ? "" : "*") + monomial_to_string(e);
            if (!indices.empty()) body += (body.empty() ? "" : " ") + indices.to_string(nvars_);
            os << body;
        }
    }
    return os.str();
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.nvars() != b.nvars()) throw StructuralError("wedge of forms over different variable counts");
    const int degree = a.degree() + b.degree();
    if (degree > a.nvars()) return PolyForm(a.nvars(), 0);
    PolyForm out(a.nvars(), degree);
    for (const auto& [ia, pa] : a.components())
        for (const auto& [ib, pb] : b.components()) {
            const int sign = wedge_sign(ia, ib);
            if (sign == 0) continue;
            Polynomial p = pa * pb;
            if (sign < 0) p *= Rational(-1);
            out.add_component(IndexSet(ia.mask() | ib.mask()), p);
        }
    return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
    const int n = a.nvars();
    if (a.degree() == n) return PolyForm(n, n);
    PolyForm out(n, a.degree() + 1);
    for (const auto& [indices, p] : a.components())
        for (int j = 0; j < n; ++j) {
            if (indices.contains(j)) continue;
            Polynomial partial = p.derivative(j);
            if (partial.is_zero()) continue;
            // dx_j ^ dx_I: move dx_j past the indices of I smaller than j.
            if (wedge_sign(IndexSet::single(j), indices) < 0) partial *= Rational(-1);
            out.add_component(indices.with(j), partial);
        }
    return out;
}

PolyForm differential(const Polynomial& f) { return exterior_derivative(PolyForm::function(f)); }

} // namespace invforms
