#include "invforms/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "invforms/errors.hpp"
#include "invforms/euler.hpp"

namespace invforms {

namespace {

Integer small_determinant(std::vector<std::vector<Integer>> m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, previous = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        if (m[col][col] == 0) {
            std::size_t swap = col + 1;
            while (swap < n && m[swap][col] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[swap], m[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c) {
                m[r][c] = m[r][c] * m[col][col] - m[r][col] * m[col][c];
                mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

std::string to_string(SurjectivityVerdict v) {
    switch (v) {
    case SurjectivityVerdict::surjective: return "surjective";
    case SurjectivityVerdict::not_surjective: return "not_surjective";
    case SurjectivityVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PolyForm wedge_of_monomial_differentials(const std::vector<Exponent>& monomials, int nvars) {
    const int k = static_cast<int>(monomials.size());
    if (k > nvars) return PolyForm(nvars, 0);
    // d(x^a_1) ^ ... ^ d(x^a_k) = x^(a_1 + ... + a_k) sum_I det(a_j,i)_{i in I} dx_I / x_I.
    Exponent product(nvars, 0);
    for (const auto& a : monomials)
        for (int i = 0; i < nvars; ++i) product[i] += a[i];
    PolyForm out(nvars, k);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nvars); ++mask) {
        IndexSet indices(mask);
        if (indices.size() != k) continue;
        const auto cols = indices.indices();
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m[r][c] = monomials[r][cols[c]];
        const Integer det = small_determinant(std::move(m));
        if (det == 0) continue;
        Exponent e = product;
        for (int i : cols) --e[i];
        out.add_term(indices, e, Rational(det));
    }
    return out;
}

PullbackImage pullback_image(const ActionSpec& action, int k, int bound) {
    PullbackImage out;
    out.k = k;
    out.certified_bound = bound;
    const MonoidBasis basis = hilbert_basis(action, std::max(bound, 1));
    out.hilbert_basis_complete = basis.complete;
    if (k < 0 || k > action.n) return out;
    if (k == 0) {
        out.wedge_generators.push_back(PolyForm::function(Polynomial::constant(action.n, 1)));
        out.degrees.push_back(0);
        out.factors.emplace_back();
        return out;
    }
    std::vector<int> order(basis.generators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<int> gen_degree;
    for (const auto& g : basis.generators) gen_degree.push_back(total_degree(g));

    MonomialTable table(action);
    std::map<int, std::pair<PieceCoordinates, RowSpace>> per_degree;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int degree) {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<Exponent> monomials;
            for (int i : chosen) monomials.push_back(basis.generators[i]);
            PolyForm w = wedge_of_monomial_differentials(monomials, action.n);
            if (w.is_zero()) return;
            auto it = per_degree.find(degree);
            if (it == per_degree.end()) {
                PieceCoordinates piece(table, k, degree, action.zero_weight());
                RowSpace space(piece.dimension());
                it = per_degree.emplace(degree, std::make_pair(std::move(piece), std::move(space))).first;
            }
            auto& [piece, space] = it->second;
            if (!space.insert(piece.to_vector(w))) return;
            out.wedge_generators.push_back(std::move(w));
            out.degrees.push_back(degree);
            out.factors.push_back(chosen);
            return;
        }
        for (std::size_t i = start; i < basis.generators.size(); ++i) {
            if (degree + gen_degree[i] > bound) continue;
            chosen.push_back(static_cast<int>(i));
            rec(i + 1, degree + gen_degree[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

SurjectivityResult surjectivity_check(const ActionSpec& action, int k, int bound) {
    SurjectivityResult out;
    out.table.k = k;
    if (k < 1 || k > action.n) {
        out.verdict = SurjectivityVerdict::surjective;
        out.reason = "trivial form degree";
        return out;
    }
    if (bound < k) throw PreconditionError("surjectivity_check needs bound >= k");
    const bool horizontal = action.has_torus();
    const GradedSubmodule target = invariant_form_generators(action, k, horizontal, bound);
    const PullbackImage image = pullback_image(action, k, bound);
    out.certificate_degree = target.certificate_degree;

    MonomialTable table(action);
    std::vector<TermList> wedge_terms;
    for (const auto& w : image.wedge_generators) wedge_terms.push_back(to_term_list(action, w));
    for (int degree = 0; degree <= bound; ++degree) {
        CokernelRow row;
        row.degree = degree;
        row.target_dimension = target.piece_dimensions[degree];
        if (degree >= k && row.target_dimension > 0) {
            PieceCoordinates piece(table, k, degree, action.zero_weight());
            RowSpace span = span_in_piece(table, piece, wedge_terms, CoefficientRing::invariants);
            row.image_dimension = span.rank();
            if (row.image_dimension > row.target_dimension)
                throw EngineInconsistency("pullback image exceeds the invariant horizontal forms in degree " +
                                          std::to_string(degree));
            if (row.image_dimension < row.target_dimension) {
                // Witnesses: target vectors orthogonal to the image.
                std::vector<IntVector> target_vectors;
                if (auto vectors = horizontal ? horizontal_vectors(table, piece) : std::nullopt) {
                    target_vectors = std::move(*vectors);
                } else {
                    for (std::size_t i = 0; i < piece.dimension(); ++i) {
                        IntVector v(piece.dimension());
                        v[i] = 1;
                        target_vectors.push_back(std::move(v));
                    }
                }
                IntMatrix gram;
                for (const auto& u : span.rows()) {
                    IntVector g(target_vectors.size());
                    for (std::size_t i = 0; i < target_vectors.size(); ++i)
                        for (std::size_t c = 0; c < u.size(); ++c)
                            if (u[c] != 0 && target_vectors[i][c] != 0) g[i] += u[c] * target_vectors[i][c];
                    gram.push_back(std::move(g));
                }
                RowSpace complement(piece.dimension());
                for (const auto& c : kernel(gram, target_vectors.size())) {
                    IntVector w(piece.dimension());
                    for (std::size_t i = 0; i < c.size(); ++i)
                        if (c[i] != 0)
                            for (std::size_t j = 0; j < w.size(); ++j)
                                if (target_vectors[i][j] != 0) w[j] += c[i] * target_vectors[i][j];
                    complement.insert(std::move(w));
                }
                std::vector<PolyForm> forms;
                for (const auto& v : complement.rref()) forms.push_back(piece.to_form(clear_denominators(v)));
                out.witness_degrees.push_back(degree);
                out.witnesses.push_back(std::move(forms));
            }
        }
        row.cokernel_dimension = row.target_dimension - row.image_dimension;
        out.table.rows.push_back(row);
    }
    if (!out.witness_degrees.empty()) {
        out.verdict = SurjectivityVerdict::not_surjective;
        out.reason = "cokernel is nonzero in degree " + std::to_string(out.witness_degrees.front());
    } else if (target.certified) {
        out.verdict = SurjectivityVerdict::surjective;
        out.reason = "image equals target in every degree up to " + std::to_string(bound) +
                     ", covering the generator certificate " + std::to_string(*target.certificate_degree);
    } else {
        out.verdict = SurjectivityVerdict::inconclusive;
        out.reason = target.certificate_degree
                         ? "inconclusive at bound " + std::to_string(bound) + ": target generators certified only from degree " +
                               std::to_string(*target.certificate_degree)
                         : "inconclusive at bound " + std::to_string(bound) +
                               ": no generator-degree certificate for several torus factors";
    }
    return out;
}

int torsion_free_rank(const ActionSpec& action, int k) {
    if (k < 0 || k > action.n) return 0;
    const WeightZeroCone cone = weight_zero_cone(action);
    if (k == 0) return 1;
    const int r = static_cast<int>(cone.rays.size());
    if (r < k) return 0;
    // Rows: wedges of k ray differentials evaluated at (1, ..., 1); columns: dx_I.
    std::vector<IndexSet> columns;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << action.n); ++mask)
        if (IndexSet(mask).size() == k) columns.emplace_back(mask);
    const std::vector<Rational> ones(action.n, Rational(1));
    RowSpace space(columns.size());
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (space.full()) return;
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<Exponent> monomials;
            for (int i : chosen) monomials.push_back(cone.rays[i]);
            const PolyForm w = wedge_of_monomial_differentials(monomials, action.n);
            RatVector v(columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c) v[c] = w.coefficient(columns[c]).evaluate(ones);
            space.insert(clear_denominators(v));
            return;
        }
        for (int i = start; i < r; ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return static_cast<int>(space.rank());
}

} // namespace invforms
