#include <doctest.h>

#include <random>

#include "dessin/canonical.hpp"
#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "dessin/sampling.hpp"
#include "oracles.hpp"

using namespace dessin;

namespace {

Dessin make(int n, std::vector<int> im0, std::vector<int> im1) {
    return Dessin::validate(n, im0, im1);
}

Dessin conjugate(const Dessin& d, const Permutation& pi) {
    const Permutation inv = pi.inverse();
    return Dessin(pi.compose(d.sigma0()).compose(inv), pi.compose(d.sigma1()).compose(inv));
}

const Dessin kOneEdge = make(1, {0}, {0});

}  // namespace

TEST_CASE("validate accepts permutation pairs and rejects junk") {
    CHECK(make(1, {0}, {0}).edge_count() == 1);
    CHECK(make(2, {1, 0}, {0, 1}).edge_count() == 2);
    CHECK_THROWS_AS(make(2, {0, 0}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(make(2, {0, 1}, {0}), ValidationError);
    CHECK_THROWS_AS(make(2, {0, 2}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(make(2, {-1, 0}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(Dessin(Permutation{{0}}, Permutation{{0, 1}}), ValidationError);
    CHECK(Dessin().edge_count() == 0);
}

TEST_CASE("delete_edges restricts cyclic orders and relabels") {
    SUBCASE("empty deletion is the identity") {
        const Dessin d = make(3, {1, 2, 0}, {0, 1, 2});
        const EdgeDeletion del = delete_edges(d, {});
        CHECK(del.dessin == d);
        CHECK(del.new_index_of == std::vector<int>{0, 1, 2});
    }
    SUBCASE("deleting the only edge yields the empty dessin") {
        const EdgeDeletion del = delete_edges(kOneEdge, {0});
        CHECK(del.dessin.empty());
        CHECK(del.new_index_of == std::vector<int>{-1});
    }
    SUBCASE("a 3-cycle with one edge removed becomes a 2-cycle") {
        // sigma0 = (0 1 2), sigma1 = id, remove edge 1
        const Dessin d = make(3, {1, 2, 0}, {0, 1, 2});
        const EdgeDeletion del = delete_edges(d, {1});
        CHECK(del.dessin == make(2, {1, 0}, {0, 1}));
        CHECK(del.new_index_of == std::vector<int>{0, -1, 1});
        CHECK(del.survivor_pairs() ==
              std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(delete_edges(kOneEdge, {1}), ValidationError);
        CHECK_THROWS_AS(delete_edges(kOneEdge, {-1}), ValidationError);
    }
    SUBCASE("sequential deletions agree with one-shot deletion") {
        std::mt19937 rng(99);
        for (int t = 0; t < 50; ++t) {
            const Dessin d = random_dessin(rng, 2, 7);
            const std::vector<int> t1 = random_subset(rng, d.edge_count());
            std::vector<int> t2;
            for (int e = 0; e < d.edge_count(); ++e) {
                const bool in_t1 = std::find(t1.begin(), t1.end(), e) != t1.end();
                if (!in_t1 && (rng() & 1u)) t2.push_back(e);
            }
            const EdgeDeletion first = delete_edges(d, t1);
            const EdgeDeletion second = delete_edges(first.dessin, first.map_surviving(t2));
            std::vector<int> both = t1;
            both.insert(both.end(), t2.begin(), t2.end());
            CHECK(second.dessin == delete_edges(d, both).dessin);
            // composed survivor maps equal the one-shot survivor map
            for (int e = 0; e < d.edge_count(); ++e) {
                const int once = delete_edges(d, both).new_index_of[e];
                const int step1 = first.new_index_of[e];
                const int composed = step1 < 0 ? -1 : second.new_index_of[step1];
                CHECK(once == composed);
            }
        }
    }
}

TEST_CASE("components decompose into orbits") {
    CHECK(components(Dessin{}).empty());
    CHECK(components(kOneEdge).size() == 1);
    const auto two_loose = components(make(2, {0, 1}, {0, 1}));
    REQUIRE(two_loose.size() == 2);
    CHECK(two_loose[0].dessin == kOneEdge);
    CHECK(two_loose[1].dessin == kOneEdge);
    CHECK(two_loose[0].original_edges == std::vector<int>{0});
    CHECK(two_loose[1].original_edges == std::vector<int>{1});
    CHECK(components(make(2, {1, 0}, {0, 1})).size() == 1);
}

TEST_CASE("genus from the Euler relation") {
    CHECK(genus(kOneEdge) == 0);
    CHECK(genus(make(3, {1, 2, 0}, {1, 2, 0})) == 1);  // torus dessin
    CHECK(genus(make(2, {1, 0}, {1, 0})) == 0);
    CHECK_THROWS_AS(genus(Dessin{}), ValidationError);
    CHECK_THROWS_AS(genus(make(2, {0, 1}, {0, 1})), ValidationError);
}

TEST_CASE("passport") {
    const Passport one = passport(kOneEdge);
    CHECK(one.black_degrees == std::vector<int>{1});
    CHECK(one.white_degrees == std::vector<int>{1});
    CHECK(one.face_degrees == std::vector<int>{1});
    CHECK(one.component_count == 1);
    CHECK(one.genus_list == std::vector<int>{0});

    const Passport p = passport(make(2, {1, 0}, {0, 1}));
    CHECK(p.black_degrees == std::vector<int>{2});
    CHECK(p.white_degrees == std::vector<int>{1, 1});
    CHECK(p.face_degrees == std::vector<int>{2});
    CHECK(p.genus_list == std::vector<int>{0});

    const Passport empty = passport(Dessin{});
    CHECK(empty.black_degrees.empty());
    CHECK(empty.component_count == 0);
    CHECK(empty.genus_list.empty());
}

TEST_CASE("cycle length sums equal the edge count") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Dessin d = random_dessin(rng, 1, 7);
        const Passport p = passport(d);
        auto total = [](const std::vector<int>& v) {
            int s = 0;
            for (int x : v) s += x;
            return s;
        };
        CHECK(total(p.black_degrees) == d.edge_count());
        CHECK(total(p.white_degrees) == d.edge_count());
        CHECK(total(p.face_degrees) == d.edge_count());
    }
}

TEST_CASE("canonical form is conjugation-invariant and idempotent") {
    const Dessin a = make(2, {1, 0}, {0, 1});
    const Dessin b = make(2, {0, 1}, {1, 0});
    CHECK(canonical_key(a) != canonical_key(b));  // colors are not exchangeable

    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
        const Dessin d = random_dessin(rng, 1, 7);
        const Dessin relabeled = conjugate(d, random_permutation(rng, d.edge_count()));
        CHECK(canonical_key(d) == canonical_key(relabeled));
    }
    for (int t = 0; t < 50; ++t) {
        const Dessin d = random_dessin(rng, 1, 7);
        const CanonicalForm cf = canonical_form(d);
        const CanonicalForm again = canonical_form(cf.representative);
        CHECK(cf.key == again.key);
        CHECK(cf.representative == again.representative);
    }
    CHECK(canonical_key(Dessin{}).text() == "0:/");
    CHECK(canonical_key(kOneEdge).text() == "1:0/0");
}

TEST_CASE("key text parses back to the representative") {
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        const CanonicalForm cf = canonical_form(random_dessin(rng, 0, 6));
        const DessinKey parsed = DessinKey::from_text(cf.key.text());
        CHECK(parsed == cf.key);
        CHECK(dessin_from_key(parsed) == cf.representative);
    }
    CHECK_THROWS_AS(DessinKey::from_text("2:1,0"), ValidationError);
    CHECK_THROWS_AS(DessinKey::from_text("2:0,0/0,1"), ValidationError);
    CHECK_THROWS_AS(DessinKey::from_text("junk"), ValidationError);
    // structurally valid but not canonical
    CHECK_THROWS_AS(DessinKey::from_text("2:0,1/1,0"), ValidationError);
}

TEST_CASE("isomorphic matches brute-force conjugation search on 3 edges") {
    CHECK(isomorphic(kOneEdge, kOneEdge));
    CHECK(isomorphic(Dessin{}, Dessin{}));
    std::vector<Dessin> all;
    std::vector<int> im(3);
    for (im[0] = 0; im[0] < 3; ++im[0])
        for (im[1] = 0; im[1] < 3; ++im[1])
            for (im[2] = 0; im[2] < 3; ++im[2]) {
                std::vector<int> jm(3);
                for (jm[0] = 0; jm[0] < 3; ++jm[0])
                    for (jm[1] = 0; jm[1] < 3; ++jm[1])
                        for (jm[2] = 0; jm[2] < 3; ++jm[2]) {
                            try {
                                all.push_back(make(3, im, jm));
                            } catch (const ValidationError&) {
                            }
                        }
            }
    REQUIRE(all.size() == 36);  // 6 x 6 valid pairs
    for (const auto& d1 : all) {
        for (const auto& d2 : all) {
            CHECK(isomorphic(d1, d2) == oracles::isomorphic_bruteforce(d1, d2));
        }
    }
}

TEST_CASE("isomorphic dessins share passports (n <= 4, random conjugates)") {
    std::mt19937 rng(31);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 40; ++t) {
            const Dessin d = random_dessin(rng, n, n);
            const Dessin e = conjugate(d, random_permutation(rng, n));
            REQUIRE(isomorphic(d, e));
            CHECK(passport(d) == passport(e));
        }
    }
}

TEST_CASE("monodromy order by closure enumeration") {
    CHECK(monodromy_order(kOneEdge) == 1);
    CHECK(monodromy_order(make(3, {1, 2, 0}, {0, 1, 2})) == 3);
    CHECK(monodromy_order(make(3, {1, 2, 0}, {1, 0, 2})) == 6);
    CHECK_THROWS_AS(monodromy_order(make(2, {0, 1}, {0, 1})), ValidationError);
    CHECK_THROWS_AS(monodromy_order(Dessin{}), ValidationError);
    const Dessin big = make(9, {1, 2, 3, 4, 5, 6, 7, 8, 0}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(monodromy_order(big), BoundError);
    CHECK(monodromy_order(big, 9) == 9);
}

TEST_CASE("marked canonical key distinguishes marks but not labelings") {
    const Dessin d = make(3, {1, 2, 0}, {0, 1, 2});
    CHECK(canonical_marked_key(d, {0}) == canonical_marked_key(d, {1}));
    CHECK(canonical_marked_key(d, {0}) != canonical_marked_key(d, {0, 1}));
    std::mt19937 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Dessin r = random_dessin(rng, 1, 6);
        const std::vector<int> marks = random_subset(rng, r.edge_count());
        const Permutation pi = random_permutation(rng, r.edge_count());
        std::vector<int> moved;
        for (int e : marks) moved.push_back(pi(e));
        CHECK(canonical_marked_key(r, marks) == canonical_marked_key(conjugate(r, pi), moved));
    }
}
