#include "invforms/action.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "invforms/errors.hpp"

namespace invforms {

namespace {

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool Weight::is_zero() const {
    for (auto v : torus)
        if (v != 0) return false;
    for (auto v : finite)
        if (v != 0) return false;
    return true;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < torus.size(); ++i) os << (i ? ", " : "") << torus[i];
    if (!finite.empty()) {
        os << (torus.empty() ? "" : "; ") << "mod:";
        for (std::size_t i = 0; i < finite.size(); ++i) os << (i ? ", " : " ") << finite[i];
    }
    os << ")";
    return os.str();
}

std::uint64_t ActionSpec::finite_group_order() const {
    std::uint64_t order = 1;
    for (auto m : finite_orders) {
        if (order > kMaxGroupOrder * 16) return order;
        order *= static_cast<std::uint64_t>(m);
    }
    return order;
}

Weight ActionSpec::zero_weight() const {
    return Weight{std::vector<long long>(torus_rank, 0), std::vector<long long>(finite_orders.size(), 0)};
}

Weight ActionSpec::coordinate_weight(int i) const {
    if (i < 0 || i >= n) throw StructuralError("coordinate index out of range");
    Weight w = zero_weight();
    for (int j = 0; j < torus_rank; ++j) w.torus[j] = weight_matrix[j][i];
    for (int j = 0; j < finite_rank(); ++j) w.finite[j] = positive_mod(weight_matrix[torus_rank + j][i], finite_orders[j]);
    return w;
}

void ActionSpec::check_weight_shape(const Weight& w) const {
    if (static_cast<int>(w.torus.size()) != torus_rank || w.finite.size() != finite_orders.size())
        throw StructuralError("weight " + w.to_string() + " does not match the action's group");
}

Weight ActionSpec::add(const Weight& a, const Weight& b) const {
    check_weight_shape(a);
    check_weight_shape(b);
    Weight out = a;
    for (int j = 0; j < torus_rank; ++j) out.torus[j] += b.torus[j];
    for (int j = 0; j < finite_rank(); ++j) out.finite[j] = positive_mod(out.finite[j] + b.finite[j], finite_orders[j]);
    return out;
}

Weight ActionSpec::negate(const Weight& a) const { return scale(a, -1); }

Weight ActionSpec::scale(const Weight& a, long long c) const {
    check_weight_shape(a);
    Weight out = a;
    for (auto& v : out.torus) v *= c;
    for (int j = 0; j < finite_rank(); ++j) out.finite[j] = positive_mod(out.finite[j] * c, finite_orders[j]);
    return out;
}

ActionSpec trivial_action(int n) { return ActionSpec{n, 0, {}, {}}; }

ActionSpec cyclic_action(long long order, std::vector<long long> weights) {
    ActionSpec spec{static_cast<int>(weights.size()), 0, {order}, {std::move(weights)}};
    return validate_action(std::move(spec)).action;
}

ActionSpec torus_action(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) throw ValidationError("torus action needs at least one weight row");
    ActionSpec spec{static_cast<int>(rows.front().size()), static_cast<int>(rows.size()), {}, std::move(rows)};
    return validate_action(std::move(spec)).action;
}

Weight weight_of_monomial(const ActionSpec& action, const Exponent& exponent) {
    if (static_cast<int>(exponent.size()) != action.n)
        throw StructuralError("exponent length " + std::to_string(exponent.size()) + " does not match n = " +
                              std::to_string(action.n));
    Weight w = action.zero_weight();
    for (int j = 0; j < action.torus_rank; ++j)
        for (int i = 0; i < action.n; ++i) w.torus[j] += action.weight_matrix[j][i] * exponent[i];
    for (int j = 0; j < action.finite_rank(); ++j) {
        long long s = 0;
        const long long m = action.finite_orders[j];
        for (int i = 0; i < action.n; ++i)
            s = positive_mod(s + positive_mod(action.weight_matrix[action.torus_rank + j][i], m) * (exponent[i] % m), m);
        w.finite[j] = s;
    }
    return w;
}

Weight weight_of_indices(const ActionSpec& action, IndexSet indices) {
    Exponent e(action.n, 0);
    for (int i : indices.indices()) {
        if (i >= action.n) throw StructuralError("index beyond coordinate count");
        e[i] = 1;
    }
    return weight_of_monomial(action, e);
}

Weight weight_of_term(const ActionSpec& action, IndexSet indices, const Exponent& exponent) {
    Exponent e = exponent;
    if (static_cast<int>(e.size()) != action.n) throw StructuralError("exponent length does not match action");
    for (int i : indices.indices()) ++e[i];
    return weight_of_monomial(action, e);
}

Weight weight_of_form(const ActionSpec& action, const PolyForm& form) {
    if (form.nvars() != action.n) throw StructuralError("form and action have different coordinate counts");
    bool seen = false;
    Weight common;
    form.for_each_term([&](IndexSet indices, const Exponent& e, const Rational&) {
        Weight w = weight_of_term(action, indices, e);
        if (!seen) {
            common = std::move(w);
            seen = true;
        } else if (w != common) {
            throw InhomogeneityError("form is not homogeneous: weights " + common.to_string() + " and " +
                                     w.to_string() + " both occur");
        }
    });
    return seen ? common : action.zero_weight();
}

bool is_homogeneous(const ActionSpec& action, const PolyForm& form) {
    try {
        weight_of_form(action, form);
        return true;
    } catch (const InhomogeneityError&) {
        return false;
    }
}

PolyForm invariant_component(const ActionSpec& action, const PolyForm& form) {
    if (form.nvars() != action.n) throw StructuralError("form and action have different coordinate counts");
    PolyForm out(form.nvars(), form.degree());
    form.for_each_term([&](IndexSet indices, const Exponent& e, const Rational& c) {
        if (weight_of_term(action, indices, e).is_zero()) out.add_term(indices, e, c);
    });
    return out;
}

int DiagonalForm::nontrivial_entries() const {
    int count = 0;
    for (auto r : residues)
        if (r != 0) ++count;
    return count;
}

DiagonalForm diagonal_form(const ActionSpec& action, const GroupElement& g) {
    if (static_cast<int>(g.exponents.size()) != action.finite_rank())
        throw StructuralError("group element has the wrong number of components");
    DiagonalForm out;
    for (auto m : action.finite_orders) out.modulus = std::lcm(out.modulus, m);
    out.residues.assign(action.n, 0);
    for (int i = 0; i < action.n; ++i) {
        long long r = 0;
        for (int j = 0; j < action.finite_rank(); ++j) {
            const long long m = action.finite_orders[j];
            const long long w = positive_mod(action.weight_matrix[action.torus_rank + j][i], m);
            r = positive_mod(r + (g.exponents[j] * w % m) * (out.modulus / m), out.modulus);
        }
        out.residues[i] = r;
    }
    return out;
}

void for_each_group_element(const ActionSpec& action, const std::function<void(const GroupElement&)>& fn) {
    const std::uint64_t order = action.finite_group_order();
    if (order > kMaxGroupOrder)
        throw ResourceError("finite part has " + std::to_string(order) + " elements, above the enumeration guard of " +
                            std::to_string(kMaxGroupOrder));
    GroupElement g{std::vector<long long>(action.finite_orders.size(), 0)};
    while (true) {
        fn(g);
        int j = action.finite_rank() - 1;
        while (j >= 0 && ++g.exponents[j] == action.finite_orders[j]) {
            g.exponents[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
}

ValidatedAction validate_action(ActionSpec spec) {
    if (spec.n < 0) throw ValidationError("n must be non-negative");
    if (spec.n > kMaxVariables) throw ValidationError("n = " + std::to_string(spec.n) + " exceeds the supported " + std::to_string(kMaxVariables));
    if (spec.torus_rank < 0) throw ValidationError("torus_rank must be non-negative");
    for (std::size_t j = 0; j < spec.finite_orders.size(); ++j)
        if (spec.finite_orders[j] < 2)
            throw ValidationError("finite_orders[" + std::to_string(j) + "] = " + std::to_string(spec.finite_orders[j]) +
                                  " must be at least 2");
    const std::size_t rows = static_cast<std::size_t>(spec.torus_rank) + spec.finite_orders.size();
    if (spec.weight_matrix.size() != rows)
        throw ValidationError("weight_matrix has " + std::to_string(spec.weight_matrix.size()) + " rows, expected " +
                              std::to_string(rows) + " (torus_rank + number of finite orders)");
    for (std::size_t r = 0; r < rows; ++r) {
        if (spec.weight_matrix[r].size() != static_cast<std::size_t>(spec.n))
            throw ValidationError("weight_matrix row " + std::to_string(r) + " has " +
                                  std::to_string(spec.weight_matrix[r].size()) + " columns, expected n = " +
                                  std::to_string(spec.n));
        if (r >= static_cast<std::size_t>(spec.torus_rank)) {
            const long long m = spec.finite_orders[r - spec.torus_rank];
            for (auto& v : spec.weight_matrix[r]) v = positive_mod(v, m);
        } else {
            for (std::size_t c = 0; c < spec.weight_matrix[r].size(); ++c)
                if (spec.weight_matrix[r][c] > (1LL << 40) || spec.weight_matrix[r][c] < -(1LL << 40))
                    throw ValidationError("weight_matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                          ") is out of range");
        }
    }
    ValidatedAction out{std::move(spec), true};
    if (out.action.finite_rank() > 0 && out.action.finite_group_order() <= kMaxGroupOrder) {
        for_each_group_element(out.action, [&](const GroupElement& g) {
            if (diagonal_form(out.action, g).nontrivial_entries() == 1) out.finite_part_small = false;
        });
    }
    return out;
}

std::string action_to_json(const ActionSpec& spec) {
    nlohmann::json j;
    j["n"] = spec.n;
    j["torus_rank"] = spec.torus_rank;
    j["finite_orders"] = spec.finite_orders;
    j["weight_matrix"] = spec.weight_matrix;
    return j.dump();
}

ActionSpec action_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover line and column from the byte offset.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ValidationError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + e.what());
    }
    if (!j.is_object()) throw ValidationError("action spec must be a JSON object");
    if (j.contains("schema") && j["schema"] != 1) throw ValidationError("unsupported schema version " + j["schema"].dump());
    ActionSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        spec.torus_rank = j.value("torus_rank", 0);
        spec.finite_orders = j.value("finite_orders", std::vector<long long>{});
        spec.weight_matrix = j.at("weight_matrix").get<std::vector<std::vector<long long>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("action spec has missing or mistyped fields: ") + e.what());
    }
    return validate_action(std::move(spec)).action;
}

} // namespace invforms
