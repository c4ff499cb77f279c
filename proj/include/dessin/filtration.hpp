#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dessin/enumeration.hpp"
#include "dessin/subspace.hpp"

namespace dessin {

/// Inclusion-exclusion expansion of a dessin with optional edges:
/// the alternating sum over T of subsets of `optional_edges` of the class of
/// d with T removed, terms accumulating on canonical classes.
SparseVector expansion(const Dessin& d, const std::vector<int>& optional_edges);

/// Combinatorial product of two covers: the diagonal action of both
/// monodromy pairs on edge pairs (i,j) -> i*n2+j. Returned in canonical
/// form; the empty dessin is absorbing, the one-edge dessin the identity.
Dessin product(const Dessin& a, const Dessin& b);

/// Fully expanded signed sum over the 2^k sign choices of
/// (A_1 - B_1) o ... o (A_k - B_k). Throws ValidationError when empty.
SparseVector product_vector(const std::vector<std::pair<Dessin, Dessin>>& factors);

struct SpanOptions {
    int threads = 1;
};

/// A span together with its deduplicated generator list (deterministic
/// order), kept for spanning checks and reports.
struct SpanBuild {
    Subspace span;
    std::vector<SparseVector> generators;
};

/// Span of expansion(D, S) over all window classes D and all S with
/// |S| = level, deduplicated up to isomorphism of the marked pair (D, S).
/// Only generators wholly supported inside the window are used.
SpanBuild build_dessin_level(const BasisWindow& w, int level, const SpanOptions& opts = {});
Subspace dessin_level_span(const BasisWindow& w, int level, const SpanOptions& opts = {});

/// Inner approximation of the product-filtration level: span of
/// product_vector over factor tuples drawn from window classes with
/// prod_i max(|A_i|,|B_i|) <= max_edges, so every expanded term stays in
/// the window. Level 0 is the whole window space by convention.
SpanBuild build_belyi_level_inner(const BasisWindow& w, int level, const SpanOptions& opts = {});
Subspace belyi_level_span_inner(const BasisWindow& w, int level, const SpanOptions& opts = {});

/// Two-sided comparison of the filtrations at one level inside a window.
struct ComparisonReport {
    int window = 0;
    int level = 0;
    std::size_t dim = 0;
    std::size_t rank_dessin = 0;
    std::size_t rank_belyi_inner = 0;
    bool belyi_in_dessin = false;
    bool dessin_in_belyi_inner = false;
    /// Direct recomputation at window-1 captured everything the bigger
    /// window sees among classes with < window edges.
    bool stable_at_prev_window = false;
    /// Up to 5 rows lying in one span but not the other.
    std::vector<SparseVector> witnesses;
    std::size_t dessin_generator_count = 0;
    std::size_t belyi_generator_count = 0;
    double seconds_dessin = 0.0;
    double seconds_belyi = 0.0;
    double seconds_total = 0.0;
};

ComparisonReport compare_levels(const BasisWindow& w, int level, const SpanOptions& opts = {});

/// Rank drop between consecutive dessin-filtration levels, with the
/// in-window check that full expansions of level-edge dessins close the gap.
struct QuotientReport {
    int level = 0;
    std::size_t rank_level = 0;
    std::size_t rank_next = 0;
    int dimension = 0;
    /// Every level generator reduced to zero against the next level's span
    /// plus the full expansions of all level-edge classes.
    bool spanning_verified = false;
    /// Number of classes with exactly `level` edges in the window (the
    /// a-priori bound on `dimension`).
    std::size_t class_count_at_level = 0;
};

QuotientReport quotient_report(const BasisWindow& w, int level, const SpanOptions& opts = {});
int quotient_dimension(const BasisWindow& w, int level, const SpanOptions& opts = {});

/// Rank of the intersection of `s` with the coordinate subspace of classes
/// having at most max_edges edges, via re-elimination under the reversed
/// key order. Used for the truncation-stability check.
std::size_t restricted_rank(const Subspace& s, int max_edges);

}  // namespace dessin
