#pragma once

#include <map>
#include <string>
#include <vector>

#include "dessin/canonical.hpp"

namespace dessin {

enum class Mode { All, Connected };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

struct EnumerationOptions {
    int max_edges = 7;         // enumerate_exact bound
    int max_oracle_edges = 6;  // oracle_enumerate bound (n!^2 scan)
    int threads = 1;
};

/// All partitions of n, parts descending, in a fixed deterministic order.
std::vector<std::vector<int>> partitions(int n);

/// One canonical key per isomorphism class of dessins with exactly n edges.
/// Iterates sigma0 over cycle-type representatives and sigma1 over all of
/// S_n, canonicalizing and deduplicating. Deterministic sorted order.
std::vector<DessinKey> enumerate_exact(int n, Mode mode, const EnumerationOptions& opts = {});

/// Reference enumeration scanning all n!^2 permutation pairs. Ground truth
/// for enumerate_exact in tests; factorial-squared cost.
std::vector<DessinKey> oracle_enumerate(int n, const EnumerationOptions& opts = {});

/// Ordered basis of all classes with at most max_edges edges: the finite
/// truncation window the linear algebra runs in. Keys sort by edge count,
/// then lexicographically; index inverts the sequence.
struct BasisWindow {
    int max_edges = 0;
    Mode mode = Mode::All;
    bool include_empty = true;
    std::vector<DessinKey> keys;
    std::map<DessinKey, int> index;

    int dimension() const { return static_cast<int>(keys.size()); }
    bool contains(const DessinKey& k) const { return index.count(k) != 0; }

    /// Ordinal of a key; throws ValidationError if absent.
    int ordinal(const DessinKey& k) const;
};

/// Concatenation of enumerate_exact(0..max_edges). The empty dessin is
/// present iff mode == All and include_empty.
BasisWindow enumerate_window(int max_edges, Mode mode, bool include_empty = true,
                             const EnumerationOptions& opts = {});

/// Rebuilds a window from a precomputed per-edge-count key listing
/// (cache loads); validates the ordering invariant.
BasisWindow window_from_keys(int max_edges, Mode mode, bool include_empty,
                             std::vector<DessinKey> keys);

}  // namespace dessin
