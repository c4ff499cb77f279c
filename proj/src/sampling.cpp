#include "dessin/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace dessin {

Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

Dessin random_dessin(std::mt19937& rng, int min_edges, int max_edges) {
    std::uniform_int_distribution<int> size(min_edges, max_edges);
    const int n = size(rng);
    return Dessin(random_permutation(rng, n), random_permutation(rng, n));
}

std::vector<int> random_subset(std::mt19937& rng, int n) {
    std::vector<int> out;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < n; ++i) {
        if (coin(rng)) out.push_back(i);
    }
    return out;
}

}  // namespace dessin
