#pragma once

#include <random>
#include <vector>

#include "dessin/dessin.hpp"

namespace dessin {

/// Uniform random permutation of {0..n-1}.
Permutation random_permutation(std::mt19937& rng, int n);

/// Random dessin with edge count uniform in [min_edges, max_edges].
Dessin random_dessin(std::mt19937& rng, int min_edges, int max_edges);

/// Random subset of {0..n-1}, each element kept with probability 1/2.
std::vector<int> random_subset(std::mt19937& rng, int n);

}  // namespace dessin
