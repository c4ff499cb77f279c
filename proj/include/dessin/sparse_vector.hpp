#pragma once

#include <map>

#include "dessin/canonical.hpp"
#include "dessin/rational.hpp"

namespace dessin {

/// Exact formal sum of canonical dessin classes. Zero coefficients are never
/// stored; term order is the basis order (edge count, then key text).
class SparseVector {
public:
    using Terms = std::map<DessinKey, Rational>;

    SparseVector() = default;

    static SparseVector unit(DessinKey key);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of `key`, zero if absent.
    Rational coeff(const DessinKey& key) const;

    /// Accumulates c onto the key's coefficient, erasing it if the sum is 0.
    void add_term(const DessinKey& key, const Rational& c);

    /// this += a * v, exactly.
    SparseVector& add_scaled(const Rational& a, const SparseVector& v);

    SparseVector& scale(const Rational& a);

    /// Least key in the basis order. Throws on the zero vector.
    const DessinKey& leading_key() const;
    const Rational& leading_coeff() const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    Terms terms_;
};

/// a*u + b*v with exact arithmetic, zero entries dropped.
SparseVector vector_combine(const Rational& a, const SparseVector& u, const Rational& b,
                            const SparseVector& v);

}  // namespace dessin
