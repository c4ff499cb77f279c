#include <doctest.h>

#include <cstdlib>

#include "dessin/enumeration.hpp"
#include "dessin/error.hpp"
#include "oracles.hpp"

using namespace dessin;

TEST_CASE("class counts for small edge counts") {
    CHECK(enumerate_exact(0, Mode::All).size() == 1);
    CHECK(enumerate_exact(1, Mode::All).size() == 1);
    CHECK(enumerate_exact(2, Mode::All).size() == 4);
    CHECK(enumerate_exact(3, Mode::All).size() == 11);
    CHECK(enumerate_exact(4, Mode::All).size() == 43);

    CHECK(enumerate_exact(0, Mode::Connected).empty());
    CHECK(enumerate_exact(1, Mode::Connected).size() == 1);
    CHECK(enumerate_exact(2, Mode::Connected).size() == 3);
    CHECK(enumerate_exact(3, Mode::Connected).size() == 7);
}

TEST_CASE("enumerate_exact equals the exhaustive oracle") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_exact(n, Mode::All) == oracle_enumerate(n));
    }
}

TEST_CASE("counts match the literal Burnside formula") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(static_cast<long long>(enumerate_exact(n, Mode::All).size()) ==
              oracles::burnside_pair_class_count(n));
    }
}

TEST_CASE("connected classes equal the transitivity-filtered oracle") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_exact(n, Mode::Connected) == oracles::oracle_enumerate_connected(n));
    }
}

TEST_CASE("emitted keys are canonical fixed points") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& key : enumerate_exact(n, Mode::All)) {
            CHECK(canonical_key(dessin_from_key(key)) == key);
        }
    }
}

TEST_CASE("windows concatenate in order") {
    const BasisWindow w1 = enumerate_window(1, Mode::All);
    REQUIRE(w1.dimension() == 2);
    CHECK(w1.keys[0].text() == "0:/");
    CHECK(w1.keys[1].text() == "1:0/0");

    const BasisWindow w3 = enumerate_window(3, Mode::All);
    CHECK(w3.dimension() == 17);
    for (int i = 0; i < w3.dimension(); ++i) CHECK(w3.ordinal(w3.keys[i]) == i);
    for (int i = 1; i < w3.dimension(); ++i) CHECK(w3.keys[i - 1] < w3.keys[i]);

    CHECK(enumerate_window(4, Mode::All).dimension() == 60);
    CHECK(enumerate_window(3, Mode::All, /*include_empty=*/false).dimension() == 16);
    CHECK(enumerate_window(3, Mode::Connected).dimension() == 11);  // 1+3+7, no empty

    CHECK_THROWS_AS(w3.ordinal(DessinKey::from_text("4:1,2,3,0/0,1,2,3")), ValidationError);
}

TEST_CASE("window_from_keys validates ordering") {
    const BasisWindow w = enumerate_window(2, Mode::All);
    std::vector<DessinKey> shuffled = w.keys;
    std::swap(shuffled[0], shuffled[1]);
    CHECK_THROWS_AS(window_from_keys(2, Mode::All, true, shuffled), ValidationError);
    const BasisWindow rebuilt = window_from_keys(2, Mode::All, true, w.keys);
    CHECK(rebuilt.keys == w.keys);
    CHECK(rebuilt.index == w.index);
}

TEST_CASE("bounds are enforced") {
    EnumerationOptions opts;
    opts.max_edges = 3;
    CHECK_THROWS_AS(enumerate_exact(4, Mode::All, opts), BoundError);
    opts.max_oracle_edges = 2;
    CHECK_THROWS_AS(oracle_enumerate(3, opts), BoundError);
    CHECK_THROWS_AS(enumerate_exact(-1, Mode::All), ValidationError);
}

TEST_CASE("threaded enumeration matches sequential") {
    EnumerationOptions two;
    two.threads = 2;
    for (int n = 3; n <= 5; ++n) {
        CHECK(enumerate_exact(n, Mode::All, two) == enumerate_exact(n, Mode::All));
    }
}

TEST_CASE("slow: n=5 and n=6 against the oracle" * doctest::skip(std::getenv("DESSIN_SLOW") == nullptr)) {
    CHECK(enumerate_exact(5, Mode::All) == oracle_enumerate(5));
    CHECK(static_cast<long long>(enumerate_exact(5, Mode::All).size()) ==
          oracles::burnside_pair_class_count(5));
    CHECK(enumerate_exact(6, Mode::All) == oracle_enumerate(6));
}
