#pragma once

#include <cstddef>
#include <vector>

#include "invforms/polynomial.hpp"

namespace invforms {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;

/// Divides by the content and makes the first nonzero entry positive. Returns false for zero.
bool make_primitive(IntVector& v);

/// Scales a rational vector to a primitive integer vector with the same span.
IntVector clear_denominators(const RatVector& v);

/// Incrementally built row space over Q, stored as primitive integer rows in echelon form.
/// Elimination is fraction-free: r <- pivot(b) * r - r[p] * b, followed by content removal.
class RowSpace {
public:
    explicit RowSpace(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == dimension_; }

    /// Inserts v; returns true when v was independent of the rows already present.
    bool insert(IntVector v);
    bool contains(IntVector v) const;
    /// The remainder of v after reduction against the current rows (zero iff v is in the span).
    IntVector reduce(IntVector v) const;

    /// Reduced row echelon basis with unit pivots, ordered by pivot column.
    std::vector<RatVector> rref() const;
    const std::vector<IntVector>& rows() const { return rows_; }

private:
    void reduce_in_place(IntVector& v) const;

    std::size_t dimension_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a matrix given by rows.
std::size_t rank(const IntMatrix& rows, std::size_t columns);

/// Basis of {x : A x = 0} for A given by rows with `columns` columns. One vector per free column
/// of the reduced echelon form, in increasing order of that column; entries are primitive integers.
std::vector<IntVector> kernel(const IntMatrix& rows, std::size_t columns);

} // namespace invforms
