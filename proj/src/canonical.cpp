#include "dessin/canonical.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "dessin/error.hpp"

namespace dessin {

namespace {

/// Traversal word of one connected dessin for one choice of start edge:
/// the relabeled sigma0 images followed by the relabeled sigma1 images,
/// then (when marking) one 0/1 flag per new label.
struct Word {
    std::vector<int> core;
    std::vector<int> marks;

    friend bool operator<(const Word& a, const Word& b) {
        return std::tie(a.core, a.marks) < std::tie(b.core, b.marks);
    }
    friend bool operator==(const Word& a, const Word& b) = default;
};

Word word_from_start(const Dessin& d, int start, const std::vector<char>* marked) {
    const int n = d.edge_count();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    label[start] = 0;
    order.push_back(start);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int e = order[k];
        for (int f : {d.sigma0()(e), d.sigma1()(e)}) {
            if (label[f] < 0) {
                label[f] = static_cast<int>(order.size());
                order.push_back(f);
            }
        }
    }
    Word w;
    w.core.resize(2 * n);
    for (int l = 0; l < n; ++l) {
        w.core[l] = label[d.sigma0()(order[l])];
        w.core[n + l] = label[d.sigma1()(order[l])];
    }
    if (marked) {
        w.marks.resize(n);
        for (int l = 0; l < n; ++l) w.marks[l] = (*marked)[order[l]] ? 1 : 0;
    }
    return w;
}

Word best_word(const Dessin& component, const std::vector<char>* marked) {
    Word best = word_from_start(component, 0, marked);
    for (int s = 1; s < component.edge_count(); ++s) {
        Word w = word_from_start(component, s, marked);
        if (w < best) best = w;
    }
    return best;
}

struct Assembled {
    Dessin representative;
    std::string text;
    std::vector<int> mark_indices;  // marked edges in the canonical labeling
};

void append_images(std::string& out, const std::vector<int>& images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images[i]);
    }
}

/// Canonicalizes each component, sorts the words, and concatenates with
/// cumulative offsets. `marked` (when non-null) flags edges of d by
/// original index.
Assembled assemble(const Dessin& d, const std::vector<char>* marked) {
    std::vector<Word> words;
    for (const auto& comp : components(d)) {
        std::vector<char> local_marks;
        if (marked) {
            local_marks.resize(comp.dessin.edge_count());
            for (int k = 0; k < comp.dessin.edge_count(); ++k) {
                local_marks[k] = (*marked)[comp.original_edges[k]];
            }
        }
        words.push_back(best_word(comp.dessin, marked ? &local_marks : nullptr));
    }
    std::sort(words.begin(), words.end());

    const int n = d.edge_count();
    std::vector<int> im0, im1;
    im0.reserve(n);
    im1.reserve(n);
    Assembled out;
    int offset = 0;
    for (const auto& w : words) {
        const int m = static_cast<int>(w.core.size()) / 2;
        for (int l = 0; l < m; ++l) im0.push_back(w.core[l] + offset);
        for (int l = 0; l < m; ++l) im1.push_back(w.core[m + l] + offset);
        for (int l = 0; l < static_cast<int>(w.marks.size()); ++l) {
            if (w.marks[l]) out.mark_indices.push_back(l + offset);
        }
        offset += m;
    }
    out.representative = Dessin(Permutation(im0), Permutation(im1));
    out.text = std::to_string(n) + ":";
    append_images(out.text, im0);
    out.text += '/';
    append_images(out.text, im1);
    return out;
}

std::vector<int> parse_int_list(const std::string& s, std::size_t begin, std::size_t end) {
    std::vector<int> out;
    std::size_t i = begin;
    while (i < end) {
        std::size_t j = i;
        while (j < end && s[j] != ',') ++j;
        if (j == i) throw ValidationError("empty entry in key text");
        int value = 0;
        for (std::size_t k = i; k < j; ++k) {
            if (s[k] < '0' || s[k] > '9') throw ValidationError("bad character in key text");
            value = value * 10 + (s[k] - '0');
        }
        out.push_back(value);
        i = (j < end) ? j + 1 : j;
    }
    return out;
}

Dessin parse_key_text(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ValidationError("key text missing ':'");
    const auto slash = text.find('/', colon + 1);
    if (slash == std::string::npos) throw ValidationError("key text missing '/'");
    int n = 0;
    if (colon == 0) throw ValidationError("key text missing edge count");
    for (std::size_t k = 0; k < colon; ++k) {
        if (text[k] < '0' || text[k] > '9') throw ValidationError("bad edge count in key text");
        n = n * 10 + (text[k] - '0');
    }
    auto im0 = parse_int_list(text, colon + 1, slash);
    auto im1 = parse_int_list(text, slash + 1, text.size());
    return Dessin::validate(n, im0, im1);
}

}  // namespace

CanonicalForm canonical_form(const Dessin& d) {
    Assembled a = assemble(d, nullptr);
    DessinKey key;
    key.edges_ = d.edge_count();
    key.text_ = std::move(a.text);
    return CanonicalForm{std::move(key), std::move(a.representative)};
}

DessinKey canonical_key(const Dessin& d) {
    return canonical_form(d).key;
}

DessinKey DessinKey::from_text(const std::string& text) {
    Dessin d = parse_key_text(text);
    CanonicalForm cf = canonical_form(d);
    if (cf.key.text() != text) {
        throw ValidationError("key text is not in canonical form: " + text);
    }
    return cf.key;
}

bool isomorphic(const Dessin& a, const Dessin& b) {
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

Dessin dessin_from_key(const DessinKey& key) {
    return parse_key_text(key.text());
}

std::string canonical_marked_key(const Dessin& d, const std::vector<int>& marked) {
    std::vector<char> flags(d.edge_count(), 0);
    for (int e : marked) {
        if (e < 0 || e >= d.edge_count()) {
            throw ValidationError("marked edge " + std::to_string(e) + " out of range");
        }
        flags[e] = 1;
    }
    Assembled a = assemble(d, &flags);
    std::string out = std::move(a.text);
    out += '|';
    for (std::size_t i = 0; i < a.mark_indices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.mark_indices[i]);
    }
    return out;
}

long long monodromy_order(const Dessin& d, int max_edges) {
    if (d.empty()) throw ValidationError("monodromy order of the empty dessin is undefined");
    if (d.edge_count() > max_edges) {
        throw BoundError("monodromy closure bound exceeded: n=" + std::to_string(d.edge_count()) +
                         " > " + std::to_string(max_edges));
    }
    if (!is_connected(d)) throw ValidationError("monodromy order requires a connected dessin");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    seen.insert(Permutation::identity(d.edge_count()).images());
    frontier.push_back(*seen.begin());
    const Permutation gens[2] = {d.sigma0(), d.sigma1()};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& images : frontier) {
            const Permutation p{std::vector<int>(images)};
            for (const auto& g : gens) {
                auto prod = g.compose(p).images();
                if (seen.insert(prod).second) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

}  // namespace dessin
