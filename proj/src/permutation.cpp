#include "dessin/permutation.hpp"

#include <algorithm>

#include "dessin/error.hpp"

namespace dessin {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= n) {
            throw ValidationError("permutation image " + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n));
        }
        if (seen[v]) {
            throw ValidationError("permutation image sequence is not a bijection: " +
                                  std::to_string(v) + " repeated");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    for (const auto& c : cycles) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            int from = c[j];
            int to = c[(j + 1) % c.size()];
            if (from < 0 || from >= n) throw ValidationError("cycle entry out of range");
            im[from] = to;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::compose(const Permutation& q) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[i] = images_[q.images_[i]];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        int j = i;
        do {
            seen[j] = 1;
            cycle.push_back(j);
            j = images_[j];
        } while (j != i);
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        ++count;
        int j = i;
        do {
            seen[j] = 1;
            j = images_[j];
        } while (j != i);
    }
    return count;
}

}  // namespace dessin
