#pragma once

// Brute-force reference implementations used as oracles by the tests. They share no code with the
// library beyond GMP and the public value types used to exchange data.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "invforms/action.hpp"
#include "invforms/form.hpp"

namespace oracle {

using Exp = std::vector<int>;
using Idx = std::vector<int>;

// Form as a map (sorted index list, exponent) -> coefficient.
struct Form {
    int n = 0;
    int k = 0;
    std::map<std::pair<Idx, Exp>, mpq_class> terms;

    void add(Idx idx, const Exp& e, const mpq_class& c) {
        // sort the index list by adjacent swaps, flipping the sign each time
        int sign = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
                if (idx[j] == idx[j + 1]) return;
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sign = -sign;
                }
            }
        for (std::size_t j = 0; j + 1 < idx.size(); ++j)
            if (idx[j] == idx[j + 1]) return;
        auto key = std::make_pair(idx, e);
        mpq_class& slot = terms[key];
        slot += sign * c;
        if (slot == 0) terms.erase(key);
    }
};

inline Form from_lib(const invforms::PolyForm& f) {
    Form out;
    out.n = f.nvars();
    out.k = f.degree();
    f.for_each_term([&](invforms::IndexSet s, const invforms::Exponent& e, const mpq_class& c) { out.add(s.indices(), e, c); });
    return out;
}

inline invforms::PolyForm to_lib(const Form& f) {
    invforms::PolyForm out(f.n, f.k);
    for (const auto& [key, c] : f.terms) out.add_term(invforms::IndexSet::from_indices(key.first), key.second, c);
    return out;
}

inline Form wedge(const Form& a, const Form& b) {
    Form out;
    out.n = a.n;
    out.k = a.k + b.k;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            Idx idx = ka.first;
            idx.insert(idx.end(), kb.first.begin(), kb.first.end());
            Exp e(a.n);
            for (int i = 0; i < a.n; ++i) e[i] = ka.second[i] + kb.second[i];
            out.add(idx, e, ca * cb);
        }
    return out;
}

// d(f dx_I) = sum_i d_i f dx_i ^ dx_I
inline Form d(const Form& a) {
    Form out;
    out.n = a.n;
    out.k = a.k + 1;
    for (const auto& [key, c] : a.terms)
        for (int i = 0; i < a.n; ++i) {
            if (key.second[i] == 0) continue;
            Exp e = key.second;
            const int power = e[i]--;
            Idx idx{i};
            idx.insert(idx.end(), key.first.begin(), key.first.end());
            out.add(idx, e, c * power);
        }
    return out;
}

// Euler derivation as (-1)^(k-1) times contraction with E = sum w_i x_i d/dx_i.
inline Form euler(const Form& a, const std::vector<long long>& w) {
    Form out;
    out.n = a.n;
    out.k = a.k - 1;
    if (a.k == 0) return out;
    const int outer = (a.k - 1) % 2 == 0 ? 1 : -1;
    for (const auto& [key, c] : a.terms)
        for (std::size_t p = 0; p < key.first.size(); ++p) {
            const int i = key.first[p];
            Idx idx = key.first;
            idx.erase(idx.begin() + static_cast<long>(p));
            Exp e = key.second;
            e[i] += 1;
            const int inner = p % 2 == 0 ? 1 : -1;
            out.add(idx, e, c * outer * inner * mpq_class(static_cast<long>(w[i])));
        }
    return out;
}

inline Form scale(Form a, const mpq_class& c) {
    if (c == 0) a.terms.clear();
    for (auto& [key, v] : a.terms) v *= c;
    return a;
}

inline Form add(Form a, const Form& b) {
    for (const auto& [key, c] : b.terms) {
        mpq_class& slot = a.terms[key];
        slot += c;
        if (slot == 0) a.terms.erase(key);
    }
    return a;
}

inline bool equal(const Form& a, const Form& b) { return a.terms == b.terms; }

// ---------------------------------------------------------------------------------------------
// Dense linear algebra over Q.

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Weights computed directly from the matrix.

inline bool weight_zero(const invforms::ActionSpec& a, const Exp& e) {
    for (int j = 0; j < a.torus_rank + a.finite_rank(); ++j) {
        long long s = 0;
        for (int i = 0; i < a.n; ++i) s += a.weight_matrix[j][i] * e[i];
        if (j < a.torus_rank ? s != 0 : s % a.finite_orders[j - a.torus_rank] != 0) return false;
    }
    return true;
}

inline bool term_weight_zero(const invforms::ActionSpec& a, const Idx& idx, const Exp& e) {
    Exp total = e;
    for (int i : idx) total[i] += 1;
    return weight_zero(a, total);
}

// All exponent vectors of total degree deg, by recursion.
inline void exponents(int n, int deg, Exp& cur, int pos, std::vector<Exp>& out) {
    if (pos == n - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int a = deg; a >= 0; --a) {
        cur[pos] = a;
        exponents(n, deg - a, cur, pos + 1, out);
    }
}

inline std::vector<Exp> exponents(int n, int deg) {
    std::vector<Exp> out;
    if (deg < 0) return out;
    if (n == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    Exp cur(n, 0);
    exponents(n, deg, cur, 0, out);
    return out;
}

inline std::vector<Idx> subsets(int n, int k) {
    std::vector<Idx> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Idx idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) idx.push_back(i);
        out.push_back(idx);
    }
    return out;
}

inline std::vector<Exp> invariant_monomials(const invforms::ActionSpec& a, int deg) {
    std::vector<Exp> out;
    for (const auto& e : exponents(a.n, deg))
        if (weight_zero(a, e)) out.push_back(e);
    return out;
}

// Minimal nonzero weight-zero exponents of degree <= bound.
inline std::vector<Exp> hilbert_basis(const invforms::ActionSpec& a, int bound) {
    std::vector<Exp> all;
    for (int deg = 1; deg <= bound; ++deg)
        for (const auto& e : invariant_monomials(a, deg)) all.push_back(e);
    std::vector<Exp> out;
    for (const auto& e : all) {
        bool reducible = false;
        for (const auto& f : all) {
            if (f == e) continue;
            bool below = true;
            for (int i = 0; i < a.n; ++i)
                if (f[i] > e[i]) below = false;
            if (below) {
                Exp rest(a.n);
                for (int i = 0; i < a.n; ++i) rest[i] = e[i] - f[i];
                if (weight_zero(a, rest)) reducible = true;
            }
            if (reducible) break;
        }
        if (!reducible) out.push_back(e);
    }
    return out;
}

// Basis of the weight-zero monomial k-forms of a total degree.
inline std::vector<std::pair<Idx, Exp>> invariant_piece(const invforms::ActionSpec& a, int k, int deg) {
    std::vector<std::pair<Idx, Exp>> out;
    for (const auto& idx : subsets(a.n, k))
        for (const auto& e : exponents(a.n, deg - k))
            if (term_weight_zero(a, idx, e)) out.emplace_back(idx, e);
    return out;
}

inline std::vector<mpq_class> coordinates(const std::vector<std::pair<Idx, Exp>>& basis, const Form& f) {
    std::vector<mpq_class> v(basis.size());
    for (const auto& [key, c] : f.terms) {
        auto it = std::find(basis.begin(), basis.end(), key);
        if (it == basis.end()) throw std::logic_error("oracle: form leaves the piece");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

// Dimension of the invariant k-forms (horizontal for every torus factor) of a total degree.
inline std::size_t target_dimension(const invforms::ActionSpec& a, int k, int deg) {
    const auto piece = invariant_piece(a, k, deg);
    if (a.torus_rank == 0 || k == 0) return piece.size();
    const auto lower = invariant_piece(a, k - 1, deg);
    // matrix of the stacked Euler maps, one column per piece element
    std::vector<std::vector<mpq_class>> rows;
    std::vector<std::vector<mpq_class>> cols;
    for (const auto& key : piece) {
        std::vector<mpq_class> col;
        for (int j = 0; j < a.torus_rank; ++j) {
            Form f;
            f.n = a.n;
            f.k = k;
            f.add(key.first, key.second, 1);
            auto c = coordinates(lower, euler(f, a.weight_matrix[j]));
            col.insert(col.end(), c.begin(), c.end());
        }
        cols.push_back(col);
    }
    return piece.size() - rank(cols);
}

inline Form monomial_differential(int n, const Exp& m) {
    Form f;
    f.n = n;
    f.k = 0;
    f.add({}, m, 1);
    return d(f);
}

// Dimension of the invariant-ring span of k-fold wedges of differentials of Hilbert basis
// elements, in one total degree.
inline std::size_t image_dimension(const invforms::ActionSpec& a, const std::vector<Exp>& basis, int k, int deg) {
    const auto piece = invariant_piece(a, k, deg);
    std::vector<std::vector<mpq_class>> rows;
    std::vector<int> choice(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            Form w;
            w.n = a.n;
            w.k = 0;
            w.add({}, Exp(a.n, 0), 1);
            int wdeg = 0;
            for (int c : choice) {
                w = wedge(w, monomial_differential(a.n, basis[c]));
                wdeg += std::accumulate(basis[c].begin(), basis[c].end(), 0);
            }
            if (w.terms.empty() || wdeg > deg) return;
            for (const auto& m : invariant_monomials(a, deg - wdeg)) {
                Form shifted;
                shifted.n = a.n;
                shifted.k = k;
                for (const auto& [key, c] : w.terms) {
                    Exp e = key.second;
                    for (int i = 0; i < a.n; ++i) e[i] += m[i];
                    shifted.add(key.first, e, c);
                }
                rows.push_back(coordinates(piece, shifted));
            }
            return;
        }
        for (int i = start; i < static_cast<int>(basis.size()); ++i) {
            choice[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return rank(rows);
}

// ---------------------------------------------------------------------------------------------
// Finite groups.

using Element = std::vector<long long>;

inline std::vector<Element> group_elements(const invforms::ActionSpec& a) {
    std::vector<Element> out{Element(a.finite_rank(), 0)};
    for (int j = 0; j < a.finite_rank(); ++j) {
        std::vector<Element> next;
        for (const auto& g : out)
            for (long long r = 0; r < a.finite_orders[j]; ++r) {
                Element h = g;
                h[j] = r;
                next.push_back(h);
            }
        out = next;
    }
    return out;
}

// Coordinate i is fixed by g iff sum_j g_j w_ji / m_j is an integer.
inline int moved_coordinates(const invforms::ActionSpec& a, const Element& g) {
    int moved = 0;
    for (int i = 0; i < a.n; ++i) {
        mpq_class angle = 0;
        for (int j = 0; j < a.finite_rank(); ++j)
            angle += mpq_class(static_cast<long>(g[j] * a.weight_matrix[a.torus_rank + j][i]),
                               static_cast<unsigned long>(a.finite_orders[j]));
        angle.canonicalize();
        if (angle.get_den() != 1) ++moved;
    }
    return moved;
}

inline std::set<Element> generated_subgroup(const invforms::ActionSpec& a, const std::vector<Element>& gens) {
    std::set<Element> seen{Element(a.finite_rank(), 0)};
    std::vector<Element> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Element h(g.size());
                for (std::size_t j = 0; j < g.size(); ++j) h[j] = (g[j] + s[j]) % a.finite_orders[j];
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = next;
    }
    return seen;
}

// Shephard-Todd by brute force: pseudo-reflections together with the kernel of the action
// generate the group.
inline bool reflection_generated(const invforms::ActionSpec& a) {
    std::vector<Element> gens;
    for (const auto& g : group_elements(a))
        if (moved_coordinates(a, g) <= 1) gens.push_back(g);
    return generated_subgroup(a, gens).size() == group_elements(a).size();
}

// ---------------------------------------------------------------------------------------------

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
};

// Random form of form degree k, nonzero coefficients in [-3, 3], coefficient degree <= maxdeg.
inline invforms::PolyForm random_form(Rng& rng, int n, int k, int maxdeg, int terms) {
    invforms::PolyForm out(n, k);
    const auto subs = subsets(n, k);
    for (int t = 0; t < terms; ++t) {
        const auto& idx = subs[rng.uniform(0, static_cast<int>(subs.size()) - 1)];
        const auto es = exponents(n, rng.uniform(0, maxdeg));
        const auto& e = es[rng.uniform(0, static_cast<int>(es.size()) - 1)];
        int c = rng.uniform(-3, 3);
        if (c == 0) c = 1;
        out.add_term(invforms::IndexSet::from_indices(idx), e, mpq_class(c, rng.uniform(1, 3)));
    }
    return out;
}

// Random form whose terms share one total degree and one weight.
inline invforms::PolyForm random_homogeneous_form(Rng& rng, const invforms::ActionSpec& a, int k, int maxdeg, int terms) {
    const auto subs = subsets(a.n, k);
    const int deg = rng.uniform(0, maxdeg);
    const auto es = exponents(a.n, deg);
    invforms::PolyForm out(a.n, k);
    invforms::Weight target;
    bool first = true;
    for (int t = 0; t < 4 * terms; ++t) {
        const auto& idx = subs[rng.uniform(0, static_cast<int>(subs.size()) - 1)];
        const auto& e = es[rng.uniform(0, static_cast<int>(es.size()) - 1)];
        const invforms::IndexSet s = invforms::IndexSet::from_indices(idx);
        const invforms::Weight w = invforms::weight_of_term(a, s, e);
        if (first) {
            target = w;
            first = false;
        } else if (w != target) {
            continue;
        }
        int c = rng.uniform(-3, 3);
        if (c == 0) c = 2;
        out.add_term(s, e, c);
    }
    return out;
}

} // namespace oracle
