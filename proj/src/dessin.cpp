#include "dessin/dessin.hpp"

#include <algorithm>
#include <numeric>

#include "dessin/error.hpp"

namespace dessin {

Dessin::Dessin(Permutation sigma0, Permutation sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
    if (sigma0_.size() != sigma1_.size()) {
        throw ValidationError("sigma0 and sigma1 act on different edge counts (" +
                              std::to_string(sigma0_.size()) + " vs " +
                              std::to_string(sigma1_.size()) + ")");
    }
}

Dessin Dessin::validate(int edge_count, const std::vector<int>& sigma0_images,
                        const std::vector<int>& sigma1_images) {
    if (edge_count < 0) throw ValidationError("negative edge count");
    if (static_cast<int>(sigma0_images.size()) != edge_count ||
        static_cast<int>(sigma1_images.size()) != edge_count) {
        throw ValidationError("image sequence length does not match edge count " +
                              std::to_string(edge_count));
    }
    return Dessin(Permutation(sigma0_images), Permutation(sigma1_images));
}

std::vector<std::pair<int, int>> EdgeDeletion::survivor_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(new_index_of.size()); ++i) {
        if (new_index_of[i] >= 0) out.emplace_back(i, new_index_of[i]);
    }
    return out;
}

std::vector<int> EdgeDeletion::map_surviving(const std::vector<int>& original) const {
    std::vector<int> out;
    out.reserve(original.size());
    for (int i : original) {
        if (i < 0 || i >= static_cast<int>(new_index_of.size()) || new_index_of[i] < 0) {
            throw ValidationError("edge " + std::to_string(i) + " did not survive the deletion");
        }
        out.push_back(new_index_of[i]);
    }
    return out;
}

namespace {

// Restriction of one permutation to the survivors: the image of a surviving
// edge is its first iterate that survives.
Permutation restrict_to_survivors(const Permutation& p, const std::vector<int>& new_index_of,
                                  int survivor_count) {
    std::vector<int> images(survivor_count);
    for (int i = 0; i < p.size(); ++i) {
        if (new_index_of[i] < 0) continue;
        int j = p(i);
        while (new_index_of[j] < 0) j = p(j);
        images[new_index_of[i]] = new_index_of[j];
    }
    Permutation out(std::move(images));
    return out;
}

}  // namespace

EdgeDeletion delete_edges(const Dessin& d, const std::vector<int>& to_delete) {
    const int n = d.edge_count();
    std::vector<char> deleted(n, 0);
    for (int e : to_delete) {
        if (e < 0 || e >= n) {
            throw ValidationError("edge index " + std::to_string(e) + " out of range for n=" +
                                  std::to_string(n));
        }
        deleted[e] = 1;
    }
    EdgeDeletion out;
    out.new_index_of.assign(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (!deleted[i]) out.new_index_of[i] = next++;
    }
    out.dessin = Dessin(restrict_to_survivors(d.sigma0(), out.new_index_of, next),
                        restrict_to_survivors(d.sigma1(), out.new_index_of, next));
    return out;
}

std::vector<Component> components(const Dessin& d) {
    const int n = d.edge_count();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> edges;
        std::vector<int> stack = {start};
        comp[start] = id;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            edges.push_back(e);
            for (int f : {d.sigma0()(e), d.sigma1()(e)}) {
                if (comp[f] < 0) {
                    comp[f] = id;
                    stack.push_back(f);
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        std::vector<int> local(n, -1);
        for (int k = 0; k < static_cast<int>(edges.size()); ++k) local[edges[k]] = k;
        const int m = static_cast<int>(edges.size());
        std::vector<int> im0(m), im1(m);
        for (int k = 0; k < m; ++k) {
            im0[k] = local[d.sigma0()(edges[k])];
            im1[k] = local[d.sigma1()(edges[k])];
        }
        out.push_back(Component{Dessin(Permutation(std::move(im0)), Permutation(std::move(im1))),
                                std::move(edges)});
    }
    return out;
}

bool is_connected(const Dessin& d) {
    return components(d).size() == 1;
}

int genus(const Dessin& d) {
    if (d.empty()) throw ValidationError("genus of the empty dessin is undefined");
    if (!is_connected(d)) throw ValidationError("genus requires a connected dessin");
    const int n = d.edge_count();
    const int c = d.sigma0().cycle_count() + d.sigma1().cycle_count() +
                  d.face_permutation().cycle_count();
    const int euler = c - n;  // = 2 - 2g
    const int g = (2 - euler) / 2;
    if ((2 - euler) % 2 != 0 || g < 0) {
        throw Error("genus computation produced an impossible value");
    }
    return g;
}

Passport passport(const Dessin& d) {
    Passport p;
    p.black_degrees = d.sigma0().cycle_type();
    p.white_degrees = d.sigma1().cycle_type();
    p.face_degrees = d.face_permutation().cycle_type();
    auto comps = components(d);
    p.component_count = static_cast<int>(comps.size());
    for (const auto& c : comps) p.genus_list.push_back(genus(c.dessin));
    std::sort(p.genus_list.begin(), p.genus_list.end());
    return p;
}

}  // namespace dessin
