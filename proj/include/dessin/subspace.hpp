#pragma once

#include <cstddef>
#include <vector>

#include "dessin/sparse_vector.hpp"

namespace dessin {

/// A subspace held in fully reduced row-echelon form over the dessin basis.
/// Each row's pivot is its least key; pivots are distinct, normalized to
/// coefficient 1, and absent from every other row, so the row set is the
/// unique reduced basis of the span.
class Subspace {
public:
    std::size_t rank() const { return rows_.size(); }

    /// Remainder of v after eliminating every pivot of this subspace.
    /// Zero iff v lies in the span.
    SparseVector reduce(SparseVector v) const;

    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    /// Reduces v; a nonzero remainder is normalized, back-substituted into
    /// the existing rows, and appended. Returns whether the rank grew.
    bool insert(SparseVector v);

    /// Rows in pivot order (the unique reduced basis, smallest pivots first).
    std::vector<SparseVector> reduced_basis() const;

    const std::vector<SparseVector>& rows() const { return rows_; }
    const std::map<DessinKey, std::size_t>& pivots() const { return pivot_of_; }

    /// True iff every row of a reduces to zero against b.
    static bool leq(const Subspace& a, const Subspace& b);

private:
    std::vector<SparseVector> rows_;
    std::map<DessinKey, std::size_t> pivot_of_;
};

}  // namespace dessin
