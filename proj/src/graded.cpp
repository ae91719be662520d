#include "invforms/graded.hpp"

#include <algorithm>
#include <functional>

#include "invforms/errors.hpp"

namespace invforms {

std::vector<Exponent> monomials_of_degree(int n, int d) {
    std::vector<Exponent> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, d);
    return out;
}

int total_degree_of_form(const PolyForm& form) {
    int degree = -1;
    form.for_each_term([&](IndexSet, const Exponent& e, const Rational&) {
        const int d = total_degree(e) + form.degree();
        if (degree == -1) {
            degree = d;
        } else if (degree != d) {
            throw InhomogeneityError("form mixes total degrees " + std::to_string(degree) + " and " + std::to_string(d));
        }
    });
    return degree;
}

const std::map<Weight, std::vector<Exponent>>& MonomialTable::bucket(int degree) {
    auto it = buckets_.find(degree);
    if (it != buckets_.end()) return it->second;
    std::map<Weight, std::vector<Exponent>> by_weight;
    for (auto& e : monomials_of_degree(action_.n, degree)) by_weight[weight_of_monomial(action_, e)].push_back(std::move(e));
    return buckets_.emplace(degree, std::move(by_weight)).first->second;
}

const std::vector<Exponent>& MonomialTable::with_weight(int degree, const Weight& weight) {
    if (degree < 0) return empty_;
    const auto& b = bucket(degree);
    auto it = b.find(weight);
    return it == b.end() ? empty_ : it->second;
}

bool monomial_form_less(const MonomialForm& a, const MonomialForm& b) {
    if (a.indices != b.indices) return a.indices < b.indices;
    return a.exponent > b.exponent;
}

TermList to_term_list(const ActionSpec& action, const PolyForm& form) {
    TermList out;
    out.nvars = form.nvars();
    out.form_degree = form.degree();
    out.total_degree = total_degree_of_form(form);
    out.weight = weight_of_form(action, form);
    RatVector coefficients;
    form.for_each_term([&](IndexSet indices, const Exponent& e, const Rational& c) {
        out.indices.push_back(indices);
        out.exponents.push_back(e);
        coefficients.push_back(c);
    });
    out.coefficients = clear_denominators(coefficients);
    return out;
}

std::size_t PieceCoordinates::ExponentHash::operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : e) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
}

PieceCoordinates::PieceCoordinates(MonomialTable& table, int k, int degree, const Weight& weight)
    : nvars_(table.action().n), k_(k), degree_(degree), weight_(weight) {
    const ActionSpec& action = table.action();
    action.check_weight_shape(weight);
    if (k < 0 || k > nvars_) throw StructuralError("form degree out of range");
    if (degree < k) return;
    for (int mask = 0; mask < (1 << nvars_); ++mask) {
        IndexSet indices(static_cast<std::uint32_t>(mask));
        if (indices.size() != k) continue;
        const Weight needed = action.add(weight, action.negate(weight_of_indices(action, indices)));
        for (const auto& e : table.with_weight(degree - k, needed)) basis_.push_back({indices, e});
    }
    std::sort(basis_.begin(), basis_.end(), monomial_form_less);
    for (std::size_t i = 0; i < basis_.size(); ++i) lookup_[basis_[i].indices].emplace(basis_[i].exponent, i);
}

std::optional<std::size_t> PieceCoordinates::index_of(IndexSet indices, const Exponent& e) const {
    auto it = lookup_.find(indices);
    if (it == lookup_.end()) return std::nullopt;
    auto jt = it->second.find(e);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

IntVector PieceCoordinates::to_vector(const PolyForm& form) const {
    if (form.nvars() != nvars_ || form.degree() != k_) throw StructuralError("form does not belong to this piece");
    RatVector v(basis_.size());
    form.for_each_term([&](IndexSet indices, const Exponent& e, const Rational& c) {
        auto i = index_of(indices, e);
        if (!i) throw StructuralError("term " + PolyForm::monomial(indices, e, c).to_string() + " lies outside the piece");
        v[*i] = c;
    });
    return clear_denominators(v);
}

std::optional<IntVector> PieceCoordinates::product_vector(const Exponent& m, const TermList& g) const {
    IntVector v(basis_.size());
    Exponent e(nvars_);
    for (std::size_t t = 0; t < g.exponents.size(); ++t) {
        for (int i = 0; i < nvars_; ++i) e[i] = g.exponents[t][i] + m[i];
        auto idx = index_of(g.indices[t], e);
        if (!idx) return std::nullopt;
        v[*idx] = g.coefficients[t];
    }
    return v;
}

PolyForm PieceCoordinates::to_form(const RatVector& v) const {
    PolyForm out(nvars_, k_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.add_term(basis_[i].indices, basis_[i].exponent, v[i]);
    return out;
}

PolyForm PieceCoordinates::to_form(const IntVector& v) const {
    PolyForm out(nvars_, k_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.add_term(basis_[i].indices, basis_[i].exponent, Rational(v[i]));
    return out;
}

PolyForm PieceCoordinates::basis_form(std::size_t i) const {
    return PolyForm::monomial(basis_.at(i).indices, basis_.at(i).exponent);
}

RowSpace span_in_piece(MonomialTable& table, const PieceCoordinates& piece, const std::vector<TermList>& generators,
                       CoefficientRing ring, std::optional<std::size_t> stop_at_rank, bool positive_multipliers_only) {
    const ActionSpec& action = table.action();
    RowSpace space(piece.dimension());
    const std::size_t limit = stop_at_rank.value_or(piece.dimension());
    if (piece.dimension() == 0 || limit == 0) return space;
    for (const auto& g : generators) {
        if (g.form_degree != piece.form_degree()) throw StructuralError("generator form degree does not match piece");
        const int d = piece.degree() - g.total_degree;
        if (d < 0 || (positive_multipliers_only && d == 0)) continue;
        const Weight needed = action.add(piece.weight(), action.negate(g.weight));
        if (ring == CoefficientRing::invariants && !needed.is_zero()) continue;
        for (const auto& m : table.with_weight(d, needed)) {
            auto v = piece.product_vector(m, g);
            if (!v) throw StructuralError("product left the piece; generator weight bookkeeping is inconsistent");
            space.insert(std::move(*v));
            if (space.rank() >= limit) return space;
        }
    }
    return space;
}

std::vector<PolyForm> graded_piece_basis(const std::vector<PolyForm>& generators, int degree, const Weight& weight,
                                         const ActionSpec& action) {
    std::vector<TermList> terms;
    int k = -1;
    for (const auto& g : generators) {
        if (g.nvars() != action.n) throw StructuralError("generator and action have different coordinate counts");
        if (k == -1) k = g.degree();
        if (g.degree() != k) throw StructuralError("generators have different form degrees");
        if (g.is_zero()) continue;
        terms.push_back(to_term_list(action, g));
    }
    if (k == -1 || degree < k) return {};
    MonomialTable table(action);
    PieceCoordinates piece(table, k, degree, weight);
    RowSpace space = span_in_piece(table, piece, terms, CoefficientRing::polynomials);
    std::vector<PolyForm> out;
    for (const auto& row : space.rref()) out.push_back(piece.to_form(row));
    return out;
}

} // namespace invforms
