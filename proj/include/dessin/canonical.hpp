#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dessin/dessin.hpp"

namespace dessin {

struct CanonicalForm;

/// Canonical identifier of a dessin isomorphism class. The text form is
/// "n:a0,a1,.../b0,b1,..." -- the one-line images of (sigma0, sigma1) in the
/// canonical labeling; the empty dessin is "0:/".
///
/// Keys order by (edge count, text); this is the basis order used everywhere
/// (windows, sparse vectors, pivot selection).
class DessinKey {
public:
    DessinKey() : text_("0:/") {}

    /// Parses and validates a key text (the encoded pair must be a valid
    /// permutation pair). Throws ValidationError on malformed input.
    static DessinKey from_text(const std::string& text);

    const std::string& text() const { return text_; }
    int edge_count() const { return edges_; }

    friend bool operator==(const DessinKey&, const DessinKey&) = default;
    friend std::strong_ordering operator<=>(const DessinKey& a, const DessinKey& b) {
        if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
        return a.text_ <=> b.text_;
    }

private:
    friend CanonicalForm canonical_form(const Dessin&);
    int edges_ = 0;
    std::string text_;
};

/// Canonical key plus the canonical representative it encodes.
struct CanonicalForm {
    DessinKey key;
    Dessin representative;
};

/// Canonical form under simultaneous conjugacy. Per component the labeling is
/// chosen by a breadth-first traversal (from each start edge, visiting
/// sigma0(e) then sigma1(e) in first-visit order) and the lexicographically
/// least traversal word wins; component words are sorted and concatenated
/// with index offsets.
CanonicalForm canonical_form(const Dessin& d);

DessinKey canonical_key(const Dessin& d);

/// True iff some relabeling conjugates both permutations simultaneously.
bool isomorphic(const Dessin& a, const Dessin& b);

/// Reconstructs the canonical representative encoded in a key.
Dessin dessin_from_key(const DessinKey& key);

/// Canonical form of a dessin with a distinguished edge subset, invariant
/// under isomorphisms that preserve the marks. Used to deduplicate span
/// generators (D, S). The text is the plain key followed by "|m0,m1,..."
/// listing the marked edges in the canonical labeling.
std::string canonical_marked_key(const Dessin& d, const std::vector<int>& marked);

/// Order of the permutation group generated by sigma0 and sigma1, by closure
/// enumeration. Requires a connected dessin with 1 <= n <= max_edges.
long long monodromy_order(const Dessin& d, int max_edges = 8);

}  // namespace dessin
