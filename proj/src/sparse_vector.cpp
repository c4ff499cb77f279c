#include "dessin/sparse_vector.hpp"

#include "dessin/error.hpp"

namespace dessin {

SparseVector SparseVector::unit(DessinKey key) {
    SparseVector v;
    v.terms_.emplace(std::move(key), Rational(1));
    return v;
}

Rational SparseVector::coeff(const DessinKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparseVector::add_term(const DessinKey& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparseVector& SparseVector::add_scaled(const Rational& a, const SparseVector& v) {
    if (a == 0) return *this;
    if (&v == this) return scale(a + 1);
    for (const auto& [key, c] : v.terms_) add_term(key, a * c);
    return *this;
}

SparseVector& SparseVector::scale(const Rational& a) {
    if (a == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= a;
    return *this;
}

const DessinKey& SparseVector::leading_key() const {
    if (terms_.empty()) throw Error("leading term of the zero vector");
    return terms_.begin()->first;
}

const Rational& SparseVector::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero vector");
    return terms_.begin()->second;
}

SparseVector vector_combine(const Rational& a, const SparseVector& u, const Rational& b,
                            const SparseVector& v) {
    SparseVector out;
    out.add_scaled(a, u);
    out.add_scaled(b, v);
    return out;
}

}  // namespace dessin
