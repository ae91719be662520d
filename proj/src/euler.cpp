#include "invforms/euler.hpp"

#include <algorithm>

#include "invforms/errors.hpp"

namespace invforms {

EulerOperator::EulerOperator(const ActionSpec& action, int torus_index)
    : torus_index_(torus_index), nvars_(action.n) {
    if (torus_index < 0 || torus_index >= action.torus_rank)
        throw StructuralError("torus index " + std::to_string(torus_index) + " outside torus rank " +
                              std::to_string(action.torus_rank));
    weights_ = action.weight_matrix[torus_index];
}

PolyForm EulerOperator::apply(const PolyForm& form) const {
    if (form.nvars() != nvars_) throw StructuralError("form and Euler operator have different coordinate counts");
    if (form.degree() == 0) return PolyForm(nvars_, 0);
    PolyForm out(nvars_, form.degree() - 1);
    form.for_each_term([&](IndexSet indices, const Exponent& e, const Rational& c) {
        apply_monomial(indices, e, [&](IndexSet target, const Exponent& f, long long factor) {
            out.add_term(target, f, c * Rational(static_cast<long>(factor)));
        });
    });
    return out;
}

PolyForm euler_contract(const EulerOperator& op, const PolyForm& form) { return op.apply(form); }

std::vector<PolyForm> dmu(const ActionSpec& action, const PolyForm& form) {
    std::vector<PolyForm> out;
    for (int j = 0; j < action.torus_rank; ++j) out.push_back(EulerOperator(action, j).apply(form));
    return out;
}

IntMatrix euler_matrix(const EulerOperator& op, const PieceCoordinates& source, const PieceCoordinates& target) {
    IntMatrix rows(target.dimension(), IntVector(source.dimension()));
    for (std::size_t c = 0; c < source.dimension(); ++c) {
        const auto& b = source.basis()[c];
        op.apply_monomial(b.indices, b.exponent, [&](IndexSet indices, const Exponent& e, long long factor) {
            auto r = target.index_of(indices, e);
            if (!r) throw EngineInconsistency("Euler operator left its weight piece");
            rows[*r][c] += static_cast<long>(factor);
        });
    }
    return rows;
}

std::optional<std::vector<IntVector>> horizontal_vectors(MonomialTable& table, const PieceCoordinates& piece,
                                                         const std::vector<int>& skip) {
    const ActionSpec& action = table.action();
    if (piece.form_degree() == 0 || piece.dimension() == 0) return std::nullopt;
    IntMatrix stacked;
    bool any = false;
    PieceCoordinates target(table, piece.form_degree() - 1, piece.degree(), piece.weight());
    for (int j = 0; j < action.torus_rank; ++j) {
        if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
        any = true;
        IntMatrix m = euler_matrix(EulerOperator(action, j), piece, target);
        for (auto& row : m) stacked.push_back(std::move(row));
    }
    if (!any) return std::nullopt;
    return kernel(stacked, piece.dimension());
}

std::vector<PolyForm> horizontal_piece(const ActionSpec& action, int k, int degree, const Weight& weight) {
    MonomialTable table(action);
    PieceCoordinates piece(table, k, degree, weight);
    std::vector<PolyForm> out;
    auto vectors = horizontal_vectors(table, piece);
    if (!vectors) {
        for (std::size_t i = 0; i < piece.dimension(); ++i) out.push_back(piece.basis_form(i));
        return out;
    }
    RowSpace space(piece.dimension());
    for (auto& v : *vectors) space.insert(std::move(v));
    for (const auto& row : space.rref()) out.push_back(piece.to_form(row));
    return out;
}

namespace {

/// Vectors spanning the complex term in one form degree, as coordinates of the full piece.
std::vector<IntVector> complex_term(MonomialTable& table, const PieceCoordinates& piece, const EulerHomologyOptions& options) {
    std::optional<std::vector<IntVector>> restricted;
    if (options.invariant_horizontal) restricted = horizontal_vectors(table, piece, {options.torus_index});
    if (restricted) return *restricted;
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < piece.dimension(); ++i) {
        IntVector v(piece.dimension());
        v[i] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t image_rank(const IntMatrix& op, const std::vector<IntVector>& vectors, std::size_t target_dim) {
    RowSpace space(target_dim);
    for (const auto& v : vectors) {
        IntVector image(target_dim);
        for (std::size_t r = 0; r < target_dim; ++r)
            for (std::size_t c = 0; c < v.size(); ++c)
                if (op[r][c] != 0 && v[c] != 0) image[r] += op[r][c] * v[c];
        space.insert(std::move(image));
        if (space.full()) break;
    }
    return space.rank();
}

} // namespace

EulerHomology euler_homology(const ActionSpec& action, int degree, const Weight& weight, const EulerHomologyOptions& options) {
    if (action.torus_rank < 1) throw PreconditionError("Euler homology needs a torus factor (torus_rank >= 1)");
    if (options.torus_index < 0 || options.torus_index >= action.torus_rank)
        throw PreconditionError("torus index outside the torus rank");
    action.check_weight_shape(weight);
    if (options.point_quotient) {
        for (int i = 0; i < action.n; ++i) {
            const long long w = action.weight_matrix[options.torus_index][i];
            if (w <= 0)
                throw PreconditionError("coordinate " + variable_name(action.n, i) + " has weight " + std::to_string(w) +
                                        " <= 0; the quotient by this factor is not a point");
        }
    }
    if (options.invariant_horizontal) {
        Weight rest = weight;
        rest.torus[options.torus_index] = 0;
        if (!rest.is_zero())
            throw PreconditionError("invariant restriction requires zero weight outside the chosen torus factor");
    }
    MonomialTable table(action);
    const EulerOperator op(action, options.torus_index);
    const int n = action.n;
    std::vector<PieceCoordinates> pieces;
    std::vector<std::vector<IntVector>> terms;
    for (int k = 0; k <= n; ++k) {
        pieces.emplace_back(table, k, degree, weight);
        terms.push_back(complex_term(table, pieces.back(), options));
    }
    // rank of e : C_k -> C_{k-1}
    std::vector<std::size_t> ranks(n + 2, 0);
    for (int k = 1; k <= n; ++k)
        ranks[k] = image_rank(euler_matrix(op, pieces[k], pieces[k - 1]), terms[k], pieces[k - 1].dimension());
    EulerHomology out;
    out.degree = degree;
    out.weight = weight;
    for (int k = 0; k <= n; ++k) {
        const std::size_t dim = terms[k].size();
        out.piece_dimensions.push_back(dim);
        out.homology.push_back(dim - ranks[k] - ranks[k + 1]);
    }
    return out;
}

PolyForm bracket_defect(const ActionSpec& action, int torus_index, const PolyForm& form) {
    const Weight w = weight_of_form(action, form);
    const EulerOperator op(action, torus_index);
    const int k = form.degree();
    const int n = form.nvars();
    PolyForm ed = k < n ? op.apply(exterior_derivative(form)) : PolyForm(n, k);
    PolyForm de = k > 0 ? exterior_derivative(op.apply(form)) : PolyForm(n, k);
    const Rational factor = Rational(static_cast<long>((k % 2 == 0 ? 1 : -1) * w.torus[torus_index]));
    return ed - de - form * factor;
}

} // namespace invforms
