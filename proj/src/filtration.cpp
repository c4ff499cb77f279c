#include "dessin/filtration.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <utility>

#include "dessin/error.hpp"

namespace dessin {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// All size-k subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Dessin raw_product(const Dessin& a, const Dessin& b) {
    const int n1 = a.edge_count();
    const int n2 = b.edge_count();
    std::vector<int> im0(static_cast<std::size_t>(n1) * n2);
    std::vector<int> im1(im0.size());
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            im0[i * n2 + j] = a.sigma0()(i) * n2 + b.sigma0()(j);
            im1[i * n2 + j] = a.sigma1()(i) * n2 + b.sigma1()(j);
        }
    }
    return Dessin(Permutation(std::move(im0)), Permutation(std::move(im1)));
}

using ProductMemo = std::map<std::pair<DessinKey, DessinKey>, CanonicalForm>;

const CanonicalForm& memo_product(ProductMemo& memo, const CanonicalForm& a,
                                  const CanonicalForm& b) {
    auto key = std::make_pair(a.key, b.key);
    auto it = memo.find(key);
    if (it == memo.end()) {
        it = memo.emplace(std::move(key), canonical_form(raw_product(a.representative,
                                                                     b.representative)))
                 .first;
    }
    return it->second;
}

SparseVector product_vector_memo(const std::vector<std::pair<CanonicalForm, CanonicalForm>>& factors,
                                 ProductMemo& memo) {
    SparseVector out;
    const int k = static_cast<int>(factors.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        const CanonicalForm* cur = (mask & 1u) ? &factors[0].second : &factors[0].first;
        for (int i = 1; i < k; ++i) {
            const CanonicalForm& next = (mask >> i & 1u) ? factors[i].second : factors[i].first;
            cur = &memo_product(memo, *cur, next);
        }
        const int sign = __builtin_popcount(mask) % 2 ? -1 : 1;
        out.add_term(cur->key, Rational(sign));
    }
    return out;
}

bool supported_in_window(const SparseVector& v, const BasisWindow& w) {
    for (const auto& [key, c] : v.terms()) {
        if (!w.contains(key)) return false;
    }
    return true;
}

/// Runs job(i) for i in [0, count) across `threads` workers and collects
/// results by index, so downstream consumption is order-deterministic.
template <typename Job>
auto parallel_map(std::size_t count, int threads, Job job) {
    using Result = decltype(job(std::size_t{0}));
    std::vector<Result> results(count);
    const int workers = std::max(1, threads);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
        return results;
    }
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        jobs.push_back(std::async(std::launch::async, [lo, hi, &results, &job] {
            for (std::size_t i = lo; i < hi; ++i) results[i] = job(i);
        }));
    }
    for (auto& j : jobs) j.get();
    return results;
}

}  // namespace

SparseVector expansion(const Dessin& d, const std::vector<int>& optional_edges) {
    std::set<int> unique(optional_edges.begin(), optional_edges.end());
    for (int e : unique) {
        if (e < 0 || e >= d.edge_count()) {
            throw ValidationError("optional edge " + std::to_string(e) +
                                  " not an edge of the dessin");
        }
    }
    const std::vector<int> s(unique.begin(), unique.end());
    if (s.size() >= 30) throw BoundError("too many optional edges");
    SparseVector out;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        std::vector<int> removed;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (mask >> i & 1u) removed.push_back(s[i]);
        }
        const int sign = removed.size() % 2 ? -1 : 1;
        out.add_term(canonical_key(delete_edges(d, removed).dessin), Rational(sign));
    }
    return out;
}

Dessin product(const Dessin& a, const Dessin& b) {
    return canonical_form(raw_product(a, b)).representative;
}

SparseVector product_vector(const std::vector<std::pair<Dessin, Dessin>>& factors) {
    if (factors.empty()) throw ValidationError("product_vector requires at least one factor");
    std::vector<std::pair<CanonicalForm, CanonicalForm>> canonical;
    canonical.reserve(factors.size());
    for (const auto& [a, b] : factors) {
        canonical.emplace_back(canonical_form(a), canonical_form(b));
    }
    ProductMemo memo;
    return product_vector_memo(canonical, memo);
}

SpanBuild build_dessin_level(const BasisWindow& w, int level, const SpanOptions& opts) {
    if (level < 0) throw ValidationError("negative filtration level");
    struct ClassJob {
        std::vector<SparseVector> vectors;  // one per surviving marked class
    };
    auto jobs = parallel_map(w.keys.size(), opts.threads, [&](std::size_t ci) {
        ClassJob job;
        const Dessin rep = dessin_from_key(w.keys[ci]);
        if (level > rep.edge_count()) return job;
        // Marked pairs from distinct classes are never isomorphic, so the
        // dedup set can live per class.
        std::set<std::string> seen;
        for (const auto& s : combinations(rep.edge_count(), level)) {
            if (!seen.insert(canonical_marked_key(rep, s)).second) continue;
            job.vectors.push_back(expansion(rep, s));
        }
        return job;
    });
    SpanBuild out;
    for (const auto& job : jobs) {
        for (const auto& v : job.vectors) {
            if (!supported_in_window(v, w)) continue;
            out.generators.push_back(v);
            out.span.insert(v);
        }
    }
    return out;
}

Subspace dessin_level_span(const BasisWindow& w, int level, const SpanOptions& opts) {
    return build_dessin_level(w, level, opts).span;
}

SpanBuild build_belyi_level_inner(const BasisWindow& w, int level, const SpanOptions& opts) {
    if (level < 0) throw ValidationError("negative filtration level");
    SpanBuild out;
    if (level == 0) {
        // Level 0 is the whole space by convention.
        for (const auto& key : w.keys) {
            out.generators.push_back(SparseVector::unit(key));
            out.span.insert(out.generators.back());
        }
        return out;
    }
    std::vector<CanonicalForm> classes;
    classes.reserve(w.keys.size());
    for (const auto& key : w.keys) classes.push_back(canonical_form(dessin_from_key(key)));

    // Factor descriptors: unordered class pairs (i < j), weighted by the
    // larger edge count. Sorted by weight so tuple enumeration can prune.
    struct Pair {
        int i, j, weight;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(classes.size()); ++j) {
            const int weight =
                std::max(classes[i].key.edge_count(), classes[j].key.edge_count());
            if (weight <= w.max_edges) pairs.push_back({i, j, weight});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.weight < b.weight; });

    // Tuples are non-decreasing descriptor sequences: factor order and the
    // orientation of each difference never change the spanned line.
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    auto emit = [&](auto&& self, int start, long long budget) -> void {
        if (static_cast<int>(current.size()) == level) {
            tuples.push_back(current);
            return;
        }
        for (int idx = start; idx < static_cast<int>(pairs.size()); ++idx) {
            if (static_cast<long long>(pairs[idx].weight) > budget) break;
            current.push_back(idx);
            self(self, idx, budget / pairs[idx].weight);
            current.pop_back();
        }
    };
    emit(emit, 0, w.max_edges);

    auto vectors = parallel_map(tuples.size(), opts.threads, [&](std::size_t t) {
        thread_local ProductMemo memo;
        std::vector<std::pair<CanonicalForm, CanonicalForm>> factors;
        factors.reserve(tuples[t].size());
        for (int idx : tuples[t]) {
            factors.emplace_back(classes[pairs[idx].i], classes[pairs[idx].j]);
        }
        return product_vector_memo(factors, memo);
    });
    for (const auto& v : vectors) {
        if (v.is_zero() || !supported_in_window(v, w)) continue;
        out.generators.push_back(v);
        out.span.insert(v);
    }
    return out;
}

Subspace belyi_level_span_inner(const BasisWindow& w, int level, const SpanOptions& opts) {
    return build_belyi_level_inner(w, level, opts).span;
}

std::size_t restricted_rank(const Subspace& s, int max_edges) {
    // Echelon under the reversed key order: a row's pivot is its greatest
    // key, so rows whose pivot fits under max_edges lie entirely in, and
    // together span, the intersection with that coordinate subspace.
    std::map<DessinKey, SparseVector, std::greater<DessinKey>> rows;
    for (const auto& original : s.rows()) {
        SparseVector v = original;
        while (!v.is_zero()) {
            const DessinKey pivot = v.terms().rbegin()->first;
            const Rational top = v.terms().rbegin()->second;
            auto it = rows.find(pivot);
            if (it == rows.end()) {
                v.scale(Rational(1) / top);
                rows.emplace(pivot, std::move(v));
                break;
            }
            v.add_scaled(-top, it->second);
        }
    }
    std::size_t count = 0;
    for (const auto& [pivot, row] : rows) {
        if (pivot.edge_count() <= max_edges) ++count;
    }
    return count;
}

ComparisonReport compare_levels(const BasisWindow& w, int level, const SpanOptions& opts) {
    if (level < 1) throw ValidationError("comparison level must be >= 1");
    const auto t_total = std::chrono::steady_clock::now();
    ComparisonReport r;
    r.window = w.max_edges;
    r.level = level;
    r.dim = w.keys.size();

    auto t0 = std::chrono::steady_clock::now();
    const SpanBuild dessin_build = build_dessin_level(w, level, opts);
    r.seconds_dessin = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const SpanBuild belyi_build = build_belyi_level_inner(w, level, opts);
    r.seconds_belyi = seconds_since(t0);

    r.rank_dessin = dessin_build.span.rank();
    r.rank_belyi_inner = belyi_build.span.rank();
    r.dessin_generator_count = dessin_build.generators.size();
    r.belyi_generator_count = belyi_build.generators.size();
    r.belyi_in_dessin = Subspace::leq(belyi_build.span, dessin_build.span);
    r.dessin_in_belyi_inner = Subspace::leq(dessin_build.span, belyi_build.span);

    auto collect_witnesses = [&r](const Subspace& from, const Subspace& against) {
        for (const auto& row : from.reduced_basis()) {
            if (r.witnesses.size() >= 5) break;
            if (!against.reduce(row).is_zero()) r.witnesses.push_back(row);
        }
    };
    if (!r.belyi_in_dessin) collect_witnesses(belyi_build.span, dessin_build.span);
    if (!r.dessin_in_belyi_inner) collect_witnesses(dessin_build.span, belyi_build.span);

    if (w.max_edges >= 1) {
        const BasisWindow prev = enumerate_window(w.max_edges - 1, w.mode, w.include_empty);
        const std::size_t prev_dessin = build_dessin_level(prev, level, opts).span.rank();
        const std::size_t prev_belyi = build_belyi_level_inner(prev, level, opts).span.rank();
        r.stable_at_prev_window =
            prev_dessin == restricted_rank(dessin_build.span, w.max_edges - 1) &&
            prev_belyi == restricted_rank(belyi_build.span, w.max_edges - 1);
    } else {
        r.stable_at_prev_window = true;
    }
    r.seconds_total = seconds_since(t_total);
    return r;
}

QuotientReport quotient_report(const BasisWindow& w, int level, const SpanOptions& opts) {
    if (level < 0) throw ValidationError("negative filtration level");
    QuotientReport q;
    q.level = level;
    const SpanBuild at_level = build_dessin_level(w, level, opts);
    const SpanBuild next = build_dessin_level(w, level + 1, opts);
    q.rank_level = at_level.span.rank();
    q.rank_next = next.span.rank();
    q.dimension = static_cast<int>(q.rank_level - q.rank_next);

    // Next level's span plus the full expansions of all level-edge classes
    // (every edge optional) should absorb every level generator.
    Subspace closure = next.span;
    for (const auto& key : w.keys) {
        if (key.edge_count() != level) continue;
        ++q.class_count_at_level;
        const Dessin rep = dessin_from_key(key);
        std::vector<int> all_edges(rep.edge_count());
        for (int i = 0; i < rep.edge_count(); ++i) all_edges[i] = i;
        const SparseVector full = expansion(rep, all_edges);
        if (supported_in_window(full, w)) closure.insert(full);
    }
    q.spanning_verified = true;
    for (const auto& g : at_level.generators) {
        if (!closure.reduce(g).is_zero()) {
            q.spanning_verified = false;
            break;
        }
    }
    return q;
}

int quotient_dimension(const BasisWindow& w, int level, const SpanOptions& opts) {
    return quotient_report(w, level, opts).dimension;
}

}  // namespace dessin
