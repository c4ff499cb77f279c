#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dessin {

/// A permutation of {0,...,n-1}, stored as its image sequence:
/// images()[i] is the image of i. Immutable after construction.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `images` is a bijection of {0,...,n-1}.
    /// Throws ValidationError otherwise.
    explicit Permutation(std::vector<int> images);

    /// Identity on n points.
    static Permutation identity(int n);

    /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{4,5}} on n
    /// points; points not mentioned are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    /// Composition acting right-to-left: (p.compose(q))(x) == p(q(x)).
    Permutation compose(const Permutation& q) const;

    bool is_identity() const;

    /// Cycle decomposition; each cycle starts at its least element and
    /// cycles are listed by increasing least element.
    std::vector<std::vector<int>> cycles() const;

    /// Cycle lengths sorted ascending (the cycle type as a multiset).
    std::vector<int> cycle_type() const;

    int cycle_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

}  // namespace dessin
