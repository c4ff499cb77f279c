#include "dessin/subspace.hpp"

namespace dessin {

SparseVector Subspace::reduce(SparseVector v) const {
    // Rows carry their least key as pivot, so eliminating at key k only
    // touches keys > k; a single ascending sweep terminates.
    auto it = v.terms().begin();
    while (it != v.terms().end()) {
        auto hit = pivot_of_.find(it->first);
        if (hit == pivot_of_.end()) {
            ++it;
            continue;
        }
        const DessinKey key = it->first;
        const Rational c = it->second;
        v.add_scaled(-c, rows_[hit->second]);
        it = v.terms().upper_bound(key);
    }
    return v;
}

bool Subspace::insert(SparseVector v) {
    SparseVector r = reduce(std::move(v));
    if (r.is_zero()) return false;
    r.scale(Rational(1) / r.leading_coeff());
    const DessinKey pivot = r.leading_key();
    for (auto& row : rows_) {
        const Rational c = row.coeff(pivot);
        if (c != 0) row.add_scaled(-c, r);
    }
    pivot_of_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<SparseVector> Subspace::reduced_basis() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, idx] : pivot_of_) out.push_back(rows_[idx]);
    return out;
}

bool Subspace::leq(const Subspace& a, const Subspace& b) {
    for (const auto& row : a.rows_) {
        if (!b.reduce(row).is_zero()) return false;
    }
    return true;
}

}  // namespace dessin
