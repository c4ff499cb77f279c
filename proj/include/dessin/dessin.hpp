#pragma once

#include <utility>
#include <vector>

#include "dessin/permutation.hpp"

namespace dessin {

/// A dessin d'enfants on n edges, encoded as a permutation pair:
/// cycles of sigma0 are the black vertices (with their cyclic edge order),
/// cycles of sigma1 the white vertices. May be disconnected; n = 0 is the
/// empty dessin. Values are immutable.
class Dessin {
public:
    /// The empty dessin.
    Dessin() = default;

    /// Throws ValidationError on length mismatch or non-bijective images.
    Dessin(Permutation sigma0, Permutation sigma1);

    /// Checked construction from raw image sequences.
    static Dessin validate(int edge_count, const std::vector<int>& sigma0_images,
                           const std::vector<int>& sigma1_images);

    int edge_count() const { return sigma0_.size(); }
    bool empty() const { return edge_count() == 0; }
    const Permutation& sigma0() const { return sigma0_; }
    const Permutation& sigma1() const { return sigma1_; }

    /// The face permutation sigma0*sigma1, acting as x -> sigma0(sigma1(x)).
    Permutation face_permutation() const { return sigma0_.compose(sigma1_); }

    friend bool operator==(const Dessin&, const Dessin&) = default;

private:
    Permutation sigma0_;
    Permutation sigma1_;
};

/// Result of removing a set of edges: the surviving edges keep their relative
/// order and are relabeled 0..n-|T|-1. new_index_of[i] is the new label of
/// original edge i, or -1 if i was deleted.
struct EdgeDeletion {
    Dessin dessin;
    std::vector<int> new_index_of;

    /// Surviving (original, new) index pairs in increasing original order.
    std::vector<std::pair<int, int>> survivor_pairs() const;

    /// Maps a set of surviving original indices through the relabeling.
    std::vector<int> map_surviving(const std::vector<int>& original) const;
};

/// Removes the edges in `to_delete` (original indices; duplicates allowed).
/// Each remaining cycle is the restriction of the old cyclic order: the
/// successor of a surviving edge is its first surviving iterate. Vertices
/// left with no edges vanish. Throws ValidationError on out-of-range indices.
EdgeDeletion delete_edges(const Dessin& d, const std::vector<int>& to_delete);

/// One connected component: the component as a standalone dessin plus the
/// original edge indices it came from (increasing; position = new index).
struct Component {
    Dessin dessin;
    std::vector<int> original_edges;
};

/// Orbit decomposition of the edge set under <sigma0, sigma1>.
/// Components are ordered by their least original edge. Empty dessin -> {}.
std::vector<Component> components(const Dessin& d);

bool is_connected(const Dessin& d);

/// Genus of a connected dessin via 2-2g = c(s0)+c(s1)+c(s0*s1)-n.
/// Throws ValidationError if d is empty or disconnected.
int genus(const Dessin& d);

/// Cycle-type and genus summary; an isomorphism invariant coarser than the
/// canonical key. Multisets are stored sorted ascending.
struct Passport {
    std::vector<int> black_degrees;
    std::vector<int> white_degrees;
    std::vector<int> face_degrees;
    int component_count = 0;
    std::vector<int> genus_list;

    friend bool operator==(const Passport&, const Passport&) = default;
};

Passport passport(const Dessin& d);

}  // namespace dessin
