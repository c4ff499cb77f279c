#include "dessin/enumeration.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include "dessin/error.hpp"

namespace dessin {

std::string to_string(Mode mode) {
    return mode == Mode::All ? "all" : "connected";
}

Mode mode_from_string(const std::string& s) {
    if (s == "all") return Mode::All;
    if (s == "connected") return Mode::Connected;
    throw ValidationError("unknown mode: " + s);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

Permutation representative_of_cycle_type(int n, const std::vector<int>& parts) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int len : parts) {
        std::vector<int> c(len);
        std::iota(c.begin(), c.end(), next);
        next += len;
        cycles.push_back(std::move(c));
    }
    return Permutation::from_cycles(n, cycles);
}

bool transitive_pair(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int groups = n;
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
            parent[x] = y;
            --groups;
        }
    };
    for (int i = 0; i < n; ++i) {
        unite(i, a[i]);
        unite(i, b[i]);
    }
    return groups == 1;
}

/// Canonical keys of all classes whose sigma0 cycle type is one of `parts`.
std::set<DessinKey> scan_cycle_types(int n, Mode mode,
                                     const std::vector<std::vector<int>>& parts_list) {
    std::set<DessinKey> out;
    for (const auto& parts : parts_list) {
        const Permutation rep = representative_of_cycle_type(n, parts);
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 0);
        do {
            if (mode == Mode::Connected && !transitive_pair(rep.images(), images)) continue;
            out.insert(canonical_key(Dessin(rep, Permutation(images))));
        } while (std::next_permutation(images.begin(), images.end()));
    }
    return out;
}

std::vector<DessinKey> sorted_keys(std::set<DessinKey>&& s) {
    return std::vector<DessinKey>(std::make_move_iterator(s.begin()),
                                  std::make_move_iterator(s.end()));
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
    if (n < 0) throw ValidationError("partitions of a negative integer");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_rec(n, n == 0 ? 1 : n, current, out);
    return out;
}

std::vector<DessinKey> enumerate_exact(int n, Mode mode, const EnumerationOptions& opts) {
    if (n < 0) throw ValidationError("negative edge count");
    if (n > opts.max_edges) {
        throw BoundError("enumeration bound exceeded: n=" + std::to_string(n) + " > " +
                         std::to_string(opts.max_edges));
    }
    if (n == 0) {
        if (mode == Mode::Connected) return {};
        return {DessinKey{}};
    }
    const auto parts_list = partitions(n);
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || parts_list.size() == 1) {
        return sorted_keys(scan_cycle_types(n, mode, parts_list));
    }
    // Distribute cycle-type blocks round-robin; merging sorted sets is the
    // only synchronization point, so results match the sequential order.
    std::vector<std::vector<std::vector<int>>> chunks(
        std::min<std::size_t>(threads, parts_list.size()));
    for (std::size_t i = 0; i < parts_list.size(); ++i) {
        chunks[i % chunks.size()].push_back(parts_list[i]);
    }
    std::vector<std::future<std::set<DessinKey>>> jobs;
    for (auto& chunk : chunks) {
        jobs.push_back(std::async(std::launch::async, [n, mode, chunk] {
            return scan_cycle_types(n, mode, chunk);
        }));
    }
    std::set<DessinKey> merged;
    for (auto& job : jobs) merged.merge(job.get());
    return sorted_keys(std::move(merged));
}

std::vector<DessinKey> oracle_enumerate(int n, const EnumerationOptions& opts) {
    if (n < 0) throw ValidationError("negative edge count");
    if (n > opts.max_oracle_edges) {
        throw BoundError("oracle enumeration bound exceeded: n=" + std::to_string(n) + " > " +
                         std::to_string(opts.max_oracle_edges));
    }
    if (n == 0) return {DessinKey{}};
    std::set<DessinKey> out;
    std::vector<int> im0(n);
    std::iota(im0.begin(), im0.end(), 0);
    do {
        const Permutation s0{std::vector<int>(im0)};
        std::vector<int> im1(n);
        std::iota(im1.begin(), im1.end(), 0);
        do {
            out.insert(canonical_key(Dessin(s0, Permutation(std::vector<int>(im1)))));
        } while (std::next_permutation(im1.begin(), im1.end()));
    } while (std::next_permutation(im0.begin(), im0.end()));
    return sorted_keys(std::move(out));
}

int BasisWindow::ordinal(const DessinKey& k) const {
    auto it = index.find(k);
    if (it == index.end()) {
        throw ValidationError("key not in window (max_edges=" + std::to_string(max_edges) +
                              "): " + k.text());
    }
    return it->second;
}

BasisWindow enumerate_window(int max_edges, Mode mode, bool include_empty,
                             const EnumerationOptions& opts) {
    if (max_edges < 0) throw ValidationError("negative window size");
    BasisWindow w;
    w.max_edges = max_edges;
    w.mode = mode;
    w.include_empty = include_empty;
    for (int n = 0; n <= max_edges; ++n) {
        if (n == 0 && (mode != Mode::All || !include_empty)) continue;
        for (auto& k : enumerate_exact(n, mode, opts)) w.keys.push_back(std::move(k));
    }
    for (int i = 0; i < static_cast<int>(w.keys.size()); ++i) w.index[w.keys[i]] = i;
    return w;
}

BasisWindow window_from_keys(int max_edges, Mode mode, bool include_empty,
                             std::vector<DessinKey> keys) {
    BasisWindow w;
    w.max_edges = max_edges;
    w.mode = mode;
    w.include_empty = include_empty;
    w.keys = std::move(keys);
    for (std::size_t i = 1; i < w.keys.size(); ++i) {
        if (!(w.keys[i - 1] < w.keys[i])) {
            throw ValidationError("window keys out of order or duplicated at position " +
                                  std::to_string(i));
        }
    }
    for (int i = 0; i < static_cast<int>(w.keys.size()); ++i) w.index[w.keys[i]] = i;
    return w;
}

}  // namespace dessin
