#include "invforms/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "invforms/errors.hpp"
#include "invforms/euler.hpp"

namespace invforms {

namespace {

constexpr int kMaxConeVariables = 20;

void check_cone_size(const ActionSpec& action) {
    if (action.n > kMaxConeVariables)
        throw ResourceError("cone enumeration supports at most " + std::to_string(kMaxConeVariables) + " coordinates");
}

IntVector restrict_row(const std::vector<long long>& row, const std::vector<int>& columns) {
    IntVector out;
    out.reserve(columns.size());
    for (int c : columns) out.emplace_back(static_cast<long>(row[c]));
    return out;
}

/// Smallest c >= 1 such that c * v has zero finite weight.
long long finite_scale(const ActionSpec& action, const Exponent& v) {
    const Weight w = weight_of_monomial(action, v);
    long long c = 1;
    for (int j = 0; j < action.finite_rank(); ++j) {
        const long long m = action.finite_orders[j];
        c = std::lcm(c, m / std::gcd(w.finite[j], m));
    }
    return c;
}

std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
    return b;
}

std::vector<int> mask_indices(std::uint32_t mask) { return IndexSet(mask).indices(); }

/// Largest coordinate sum over the vertices of {a >= 0 : torus rows . a = target}; nullopt if empty.
std::optional<Rational> max_vertex_degree(const ActionSpec& action, const std::vector<long long>& target) {
    const int n = action.n;
    const int s = action.torus_rank;
    RowSpace augmented(n + 1);
    for (int j = 0; j < s; ++j) {
        IntVector row;
        for (int i = 0; i < n; ++i) row.emplace_back(static_cast<long>(action.weight_matrix[j][i]));
        row.emplace_back(static_cast<long>(target[j]));
        augmented.insert(std::move(row));
    }
    const auto rows = augmented.rref();
    for (const auto& row : rows) {
        bool only_rhs = true;
        for (int i = 0; i < n; ++i)
            if (row[i] != 0) only_rhs = false;
        if (only_rhs) return std::nullopt;
    }
    const int r = static_cast<int>(rows.size());
    if (r == 0) return Rational(0);
    std::optional<Rational> best;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        const auto cols = mask_indices(mask);
        std::vector<RatVector> a(r, RatVector(r));
        RatVector b(r);
        for (int i = 0; i < r; ++i) {
            for (int c = 0; c < r; ++c) a[i][c] = rows[i][cols[c]];
            b[i] = rows[i][n];
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) continue;
        if (std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; })) continue;
        Rational degree = std::accumulate(x->begin(), x->end(), Rational(0));
        if (!best || degree > *best) best = degree;
    }
    return best;
}

Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// Sum of the `count` largest ray degrees.
long long top_ray_degree_sum(const WeightZeroCone& cone, int count) {
    std::vector<long long> degrees;
    for (const auto& r : cone.rays) degrees.push_back(total_degree(r));
    std::sort(degrees.rbegin(), degrees.rend());
    long long sum = 0;
    for (int i = 0; i < count && i < static_cast<int>(degrees.size()); ++i) sum += degrees[i];
    return sum;
}

long long max_ray_degree(const WeightZeroCone& cone) {
    long long best = 0;
    for (const auto& r : cone.rays) best = std::max<long long>(best, total_degree(r));
    return best;
}

} // namespace

WeightZeroCone weight_zero_cone(const ActionSpec& action) {
    check_cone_size(action);
    const int n = action.n;
    const int s = action.torus_rank;
    IntMatrix torus;
    for (int j = 0; j < s; ++j) torus.push_back(restrict_row(action.weight_matrix[j], [&] {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }()));
    const int r = static_cast<int>(rank(torus, n));
    WeightZeroCone cone;
    cone.support.assign(n, false);
    // Extreme rays are the sign-definite circuits: minimal supports with a one-dimensional kernel.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > r + 1) continue;
        const auto cols = mask_indices(mask);
        IntMatrix sub;
        for (int j = 0; j < s; ++j) sub.push_back(restrict_row(action.weight_matrix[j], cols));
        const auto ker = kernel(sub, cols.size());
        if (ker.size() != 1) continue;
        const IntVector& v = ker.front();
        const bool positive = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; });
        const bool negative = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x < 0; });
        if (!positive && !negative) continue;
        Exponent ray(n, 0);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Integer x = abs(v[c]);
            if (!x.fits_sint_p()) throw ResourceError("extreme ray entries overflow");
            ray[cols[c]] = static_cast<int>(x.get_si());
        }
        const long long scale = finite_scale(action, ray);
        for (auto& x : ray) x = static_cast<int>(x * scale);
        for (int c : cols) cone.support[c] = true;
        cone.rays.push_back(std::move(ray));
    }
    std::sort(cone.rays.begin(), cone.rays.end(), std::greater<>());
    IntMatrix ray_rows;
    for (const auto& ray : cone.rays) {
        IntVector row;
        for (int x : ray) row.emplace_back(x);
        ray_rows.push_back(std::move(row));
    }
    cone.dimension = static_cast<int>(rank(ray_rows, n));
    return cone;
}

int quotient_dimension(const ActionSpec& action) { return weight_zero_cone(action).dimension; }

int fiber_degree_bound(const ActionSpec& action, const Weight& target) {
    action.check_weight_shape(target);
    const WeightZeroCone cone = weight_zero_cone(action);
    const auto vertex = max_vertex_degree(action, target.torus);
    if (!vertex) return -1;
    long long bound;
    if (target.is_zero()) {
        // Minimal nonzero elements: a ray generator itself, or a point of the half-open
        // parallelepiped spanned by at most dim(cone) rays.
        if (cone.rays.empty()) return -1;
        bound = std::max(max_ray_degree(cone), top_ray_degree_sum(cone, cone.dimension) - 1);
    } else if (cone.rays.empty()) {
        bound = floor_of(*vertex).get_si();
    } else {
        bound = ceil_of(*vertex + Rational(static_cast<long>(top_ray_degree_sum(cone, cone.dimension)))).get_si() - 1;
    }
    if (action.finite_only()) {
        // Zero-sum argument: any sequence of |G| group elements has a nonempty zero-sum subsequence.
        const long long order = static_cast<long long>(action.finite_group_order());
        bound = std::min(bound, target.is_zero() ? order : order - 1);
    }
    return static_cast<int>(bound);
}

int invariant_form_degree_bound(const ActionSpec& action, int k) {
    if (k < 0 || k > action.n) return -1;
    int best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << action.n); ++mask) {
        IndexSet indices(mask);
        if (indices.size() != k) continue;
        const Weight target = action.negate(weight_of_indices(action, indices));
        // The zero fiber contributes the generator dx_I itself (coefficient degree 0).
        const int coefficient_bound = target.is_zero() ? 0 : fiber_degree_bound(action, target);
        if (coefficient_bound >= 0) best = std::max(best, coefficient_bound + k);
    }
    return best;
}

std::optional<int> target_generator_bound(const ActionSpec& action, int k, bool horizontal) {
    if (!horizontal || action.torus_rank == 0) return invariant_form_degree_bound(action, k);
    if (action.torus_rank > 1) return std::nullopt;
    // One torus factor: the kernel of e on k-forms is e(Omega^{k+1}) plus the forms in the
    // differentials of weight-zero coordinates (exactness of the Koszul complex on the
    // coordinates of nonzero weight), and e preserves total degree.
    return std::max(invariant_form_degree_bound(action, k + 1), invariant_form_degree_bound(action, k));
}

MonoidBasis hilbert_basis(const ActionSpec& action, int bound) {
    if (bound < 1) throw PreconditionError("hilbert_basis needs bound >= 1");
    MonoidBasis out;
    out.search_bound = bound;
    out.certified_degree = std::max(0, fiber_degree_bound(action, action.zero_weight()));
    MonomialTable table(action);
    for (int d = 1; d <= bound; ++d) {
        for (const auto& e : table.invariants(d)) {
            const bool reducible = std::any_of(out.generators.begin(), out.generators.end(), [&](const Exponent& g) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (g[i] > e[i]) return false;
                return true;
            });
            if (!reducible) out.generators.push_back(e);
        }
    }
    out.complete = bound >= out.certified_degree;
    return out;
}

GradedSubmodule invariant_form_generators(const ActionSpec& action, int k, bool horizontal, int bound) {
    if (k < 0 || k > action.n) throw PreconditionError("form degree out of range");
    if (bound < k) throw PreconditionError("invariant_form_generators needs bound >= k");
    GradedSubmodule out;
    out.form_degree = k;
    out.generator_bound = bound;
    out.certificate_degree = target_generator_bound(action, k, horizontal);
    out.certified = out.certificate_degree && *out.certificate_degree <= bound;
    if (!out.certificate_degree)
        out.warnings.push_back("no generator-degree certificate for horizontal forms with several torus factors");
    else if (!out.certified)
        out.warnings.push_back("generators certified only up to degree " + std::to_string(bound) + "; certificate needs " +
                               std::to_string(*out.certificate_degree));
    const MonoidBasis basis = hilbert_basis(action, std::max(bound, 1));
    if (!basis.complete)
        out.warnings.push_back("invariant ring generators incomplete at bound " + std::to_string(bound) +
                               " (certificate " + std::to_string(basis.certified_degree) + ")");

    MonomialTable table(action);
    const Weight zero = action.zero_weight();
    std::vector<TermList> found;
    out.piece_dimensions.assign(bound + 1, 0);
    for (int degree = k; degree <= bound; ++degree) {
        PieceCoordinates piece(table, k, degree, zero);
        if (piece.dimension() == 0) continue;
        RowSpace target(piece.dimension());
        if (auto vectors = horizontal ? horizontal_vectors(table, piece) : std::nullopt) {
            for (auto& v : *vectors) target.insert(std::move(v));
        } else {
            for (std::size_t i = 0; i < piece.dimension(); ++i) {
                IntVector v(piece.dimension());
                v[i] = 1;
                target.insert(std::move(v));
            }
        }
        out.piece_dimensions[degree] = target.rank();
        if (target.rank() == 0) continue;
        RowSpace reached = span_in_piece(table, piece, found, CoefficientRing::invariants, target.rank(), true);
        if (reached.rank() == target.rank()) continue;
        for (const auto& row : target.rref()) {
            if (!reached.insert(clear_denominators(row))) continue;
            PolyForm g = piece.to_form(row);
            found.push_back(to_term_list(action, g));
            out.generators.push_back(std::move(g));
            out.generator_degrees.push_back(degree);
            if (reached.rank() == target.rank()) break;
        }
    }
    return out;
}

HilbertSeries hilbert_series_of(const GradedSubmodule& module, const ActionSpec& action, int truncation) {
    HilbertSeries out;
    out.coefficients.assign(std::max(truncation + 1, 0), 0);
    MonomialTable table(action);
    std::vector<TermList> generators;
    for (const auto& g : module.generators) {
        if (g.is_zero()) continue;
        TermList t = to_term_list(action, g);
        if (t.weight.is_zero()) generators.push_back(std::move(t));
    }
    for (int degree = 0; degree <= truncation; ++degree) {
        if (degree < module.form_degree) continue;
        PieceCoordinates piece(table, module.form_degree, degree, action.zero_weight());
        out.coefficients[degree] =
            static_cast<long long>(span_in_piece(table, piece, generators, CoefficientRing::invariants).rank());
    }
    return out;
}

HilbertSeries hilbert_series_of(const MonoidBasis& basis, const ActionSpec& action, int truncation) {
    HilbertSeries out;
    out.coefficients.assign(std::max(truncation + 1, 0), 0);
    if (truncation < 0) return out;
    std::set<Exponent> reached{Exponent(action.n, 0)};
    std::vector<Exponent> frontier{Exponent(action.n, 0)};
    while (!frontier.empty()) {
        std::vector<Exponent> next;
        for (const auto& e : frontier)
            for (const auto& g : basis.generators) {
                Exponent s = e;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
                if (total_degree(s) > truncation) continue;
                if (reached.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    for (const auto& e : reached) ++out.coefficients[total_degree(e)];
    return out;
}

} // namespace invforms
