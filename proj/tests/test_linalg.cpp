#include <doctest.h>

#include <algorithm>
#include <random>

#include "dessin/error.hpp"
#include "dessin/filtration.hpp"
#include "dessin/rational.hpp"
#include "dessin/subspace.hpp"
#include "oracles.hpp"

using namespace dessin;

namespace {

// Distinct keys for hand-built vectors, in ascending basis order.
const DessinKey kA = DessinKey::from_text("1:0/0");
const DessinKey kB = DessinKey::from_text("2:0,1/0,1");
const DessinKey kC = DessinKey::from_text("2:0,1/1,0");

SparseVector vec(std::initializer_list<std::pair<DessinKey, Rational>> terms) {
    SparseVector v;
    for (const auto& [k, c] : terms) v.add_term(k, c);
    return v;
}

}  // namespace

TEST_CASE("fraction strings") {
    CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
    CHECK(to_fraction_string(Rational(-4, 2)) == "-2");
    CHECK(to_fraction_string(Rational(0)) == "0");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ValidationError);
    CHECK_THROWS_AS(rational_from_string(""), ValidationError);
}

TEST_CASE("vector_combine is exact and drops zeros") {
    const SparseVector u = vec({{kA, 1}, {kB, 2}});
    const SparseVector v = vec({{kA, 1}, {kC, -1}});
    CHECK(vector_combine(1, u, 0, v) == u);
    CHECK(vector_combine(1, u, -1, u).is_zero());
    CHECK(vector_combine(Rational(1, 2), vec({{kA, 1}}), Rational(1, 3), vec({{kA, 3}})) ==
          vec({{kA, Rational(3, 2)}}));
    const SparseVector w = vector_combine(2, u, 3, v);
    CHECK(w.coeff(kA) == 5);
    CHECK(w.coeff(kB) == 4);
    CHECK(w.coeff(kC) == -3);
    CHECK(w.term_count() == 3);
}

TEST_CASE("reduce eliminates pivots only") {
    Subspace s;
    const SparseVector v = vec({{kA, 1}, {kB, 1}});
    CHECK(s.reduce(v) == v);  // empty subspace
    s.insert(v);
    CHECK(s.reduce(v).is_zero());
    const SparseVector r = s.reduce(vec({{kA, 2}, {kB, 1}}));
    CHECK(r == vec({{kB, -1}}));
}

TEST_CASE("insert grows rank by zero or one and keeps RREF") {
    Subspace s;
    CHECK(s.insert(vec({{kA, 1}, {kB, 1}})));
    CHECK(s.rank() == 1);
    CHECK_FALSE(s.insert(vec({{kA, 2}, {kB, 2}})));
    CHECK(s.rank() == 1);
    CHECK(s.insert(vec({{kB, 1}, {kC, Rational(1, 3)}})));
    CHECK(s.rank() == 2);
    // back-substitution: the first row must no longer touch pivot kB
    for (const auto& row : s.rows()) {
        const auto& pivots = s.pivots();
        int pivot_hits = 0;
        for (const auto& [key, c] : row.terms()) {
            if (pivots.count(key)) ++pivot_hits;
        }
        CHECK(pivot_hits == 1);  // exactly its own pivot
        CHECK(row.coeff(row.leading_key()) == 1);
    }
}

TEST_CASE("subspace_leq") {
    Subspace a, b, empty;
    a.insert(vec({{kA, 1}}));
    b.insert(vec({{kB, 1}}));
    CHECK(Subspace::leq(a, a));
    CHECK(Subspace::leq(empty, b));
    CHECK_FALSE(Subspace::leq(a, b));
    CHECK_FALSE(Subspace::leq(b, a));
}

TEST_CASE("full expansions over the N=2 window match dense elimination") {
    const BasisWindow w = enumerate_window(2, Mode::All);
    REQUIRE(w.dimension() == 6);
    std::vector<SparseVector> generators;
    for (const auto& key : w.keys) {
        if (key.edge_count() != 2) continue;
        const Dessin rep = dessin_from_key(key);
        generators.push_back(expansion(rep, {0, 1}));
    }
    REQUIRE(generators.size() == 4);
    Subspace s;
    for (const auto& g : generators) s.insert(g);
    CHECK(s.rank() == 4);
    CHECK(s.rank() == oracles::dense_rank(w, generators));
}

TEST_CASE("insert-then-reduce returns zero") {
    std::mt19937 rng(7);
    const BasisWindow w = enumerate_window(3, Mode::All);
    Subspace s;
    std::uniform_int_distribution<int> pick(0, w.dimension() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < 40; ++t) {
        SparseVector v;
        for (int j = 0; j < 4; ++j) v.add_term(w.keys[pick(rng)], coeff(rng));
        s.insert(v);
        CHECK(s.reduce(v).is_zero());
    }
}

TEST_CASE("rank is independent of insertion order and equals dense rank") {
    std::mt19937 rng(11);
    const BasisWindow w = enumerate_window(4, Mode::All);
    std::uniform_int_distribution<int> pick(0, w.dimension() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<SparseVector> generators;
    for (int i = 0; i < 30; ++i) {
        SparseVector v;
        for (int j = 0; j < 5; ++j) v.add_term(w.keys[pick(rng)], coeff(rng));
        generators.push_back(std::move(v));
    }
    Subspace reference;
    for (const auto& g : generators) reference.insert(g);
    CHECK(reference.rank() == oracles::dense_rank(w, generators));

    for (int order = 0; order < 10; ++order) {
        std::vector<SparseVector> shuffled = generators;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Subspace s;
        for (const auto& g : shuffled) s.insert(g);
        CHECK(s.rank() == reference.rank());
        // mutual inclusion, hence equality of the spans
        CHECK(Subspace::leq(s, reference));
        CHECK(Subspace::leq(reference, s));
        // and the reduced bases agree row by row
        const auto rows_a = s.reduced_basis();
        const auto rows_b = reference.reduced_basis();
        REQUIRE(rows_a.size() == rows_b.size());
        for (std::size_t i = 0; i < rows_a.size(); ++i) CHECK(rows_a[i] == rows_b[i]);
    }
}
