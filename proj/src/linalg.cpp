#include "invforms/linalg.hpp"

#include <algorithm>

#include "invforms/errors.hpp"

namespace invforms {

bool make_primitive(IntVector& v) {
    Integer g = 0;
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (first == v.size()) first = i;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
        if (g == 1) break;
    }
    if (first == v.size()) return false;
    if (v[first] < 0) g = -g;
    if (g != 1)
        for (auto& x : v)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return true;
}

IntVector clear_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        out[i] = l / v[i].get_den() * v[i].get_num();
    }
    make_primitive(out);
    return out;
}

void RowSpace::reduce_in_place(IntVector& v) const {
    if (v.size() != dimension_) throw StructuralError("vector length does not match row space dimension");
    Integer a, b;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p] == 0) continue;
        const IntVector& row = rows_[r];
        // v <- (row[p] / g) v - (v[p] / g) row
        Integer g = gcd(row[p], v[p]);
        a = row[p] / g;
        b = v[p] / g;
        if (a != 1)
            for (auto& x : v)
                if (x != 0) x *= a;
        for (std::size_t i = p; i < dimension_; ++i)
            if (row[i] != 0) v[i] -= b * row[i];
        make_primitive(v);
    }
}

IntVector RowSpace::reduce(IntVector v) const {
    reduce_in_place(v);
    return v;
}

bool RowSpace::contains(IntVector v) const {
    reduce_in_place(v);
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool RowSpace::insert(IntVector v) {
    if (full()) {
        if (v.size() != dimension_) throw StructuralError("vector length does not match row space dimension");
        return false;
    }
    reduce_in_place(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (it == v.end()) return false;
    make_primitive(v);
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    // Keep rows sorted by pivot so that reduction sweeps left to right.
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(v));
    // Rows after the new one may have a nonzero entry in its pivot column; that is harmless for
    // reduction because rows are processed in pivot order and each later pivot is larger.
    return true;
}

std::vector<RatVector> RowSpace::rref() const {
    std::vector<RatVector> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        RatVector r(dimension_);
        for (std::size_t i = 0; i < dimension_; ++i) r[i] = Rational(row[i]);
        out.push_back(std::move(r));
    }
    for (std::size_t r = out.size(); r-- > 0;) {
        const std::size_t p = pivots_[r];
        const Rational inv = 1 / out[r][p];
        for (auto& x : out[r]) x *= inv;
        for (std::size_t q = 0; q < r; ++q) {
            if (out[q][p] == 0) continue;
            const Rational f = out[q][p];
            for (std::size_t i = p; i < dimension_; ++i) out[q][i] -= f * out[r][i];
        }
    }
    return out;
}

namespace {

/// Gauss-Jordan over Q; returns the reduced rows and their pivot columns.
std::pair<std::vector<RatVector>, std::vector<std::size_t>> gauss_jordan(const IntMatrix& rows, std::size_t columns) {
    RowSpace space(columns);
    for (const auto& row : rows) {
        if (row.size() != columns) throw StructuralError("matrix row length mismatch");
        space.insert(row);
        if (space.full()) break;
    }
    std::vector<RatVector> reduced = space.rref();
    std::vector<std::size_t> pivots;
    for (const auto& r : reduced)
        pivots.push_back(static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; }) - r.begin()));
    return {std::move(reduced), std::move(pivots)};
}

} // namespace

std::size_t rank(const IntMatrix& rows, std::size_t columns) {
    RowSpace space(columns);
    for (const auto& row : rows) {
        space.insert(row);
        if (space.full()) break;
    }
    return space.rank();
}

std::vector<IntVector> kernel(const IntMatrix& rows, std::size_t columns) {
    auto [reduced, pivots] = gauss_jordan(rows, columns);
    std::vector<bool> is_pivot(columns, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<IntVector> out;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(columns);
        v[free] = 1;
        for (std::size_t r = 0; r < reduced.size(); ++r) v[pivots[r]] = -reduced[r][free];
        out.push_back(clear_denominators(v));
    }
    return out;
}

} // namespace invforms
