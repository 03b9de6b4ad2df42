#include "tsc/arith.hpp"
#include "tsc/homalg.hpp"
#include "tsc/properties.hpp"
#include "tsc/serialize.hpp"

#include <doctest.h>

using namespace tsc;

namespace {
using IC = Pseudocomplex<IntArith>;
DeltaPoly delta() {
    DeltaPoly p;
    p.c = {0, 1};
    return p;
}
} // namespace

TEST_CASE("monodromy of small integer complexes") {
    IC empty;
    CHECK(monodromy(empty).empty());
    IC P;
    int a = P.add("a", "x", 0, 0), b = P.add("b", "x", 1, 1), c = P.add("c", "x", 2, 2);
    P.set(a, b, delta());
    P.set(b, c, 3);
    auto mu = monodromy(P);
    REQUIRE(mu.size() == 1);
    CHECK(mu.at({a, c}) == DeltaPoly(3));
    IC bad;
    int x = bad.add("x", "x", 0, 0), y = bad.add("y", "x", 1, 1), z = bad.add("z", "x", 2, 2);
    bad.set(x, y, 1);
    bad.set(y, z, 1);
    CHECK_THROWS(validate(bad));
}

TEST_CASE("Gaussian elimination") {
    IC P;
    int a = P.add("a", "x", 0, 0), a1 = P.add("a'", "x", 0, 1);
    P.set(a, a1, 1);
    auto r = gaussian_eliminate(P, a, a1);
    CHECK(r.Q.size() == 0);

    auto pit = pitfall_complex();
    auto g = gaussian_eliminate(pit, 0, 2);
    REQUIRE(g.Q.size() == 2);
    // the surviving b -> b' entry is 1 - 1 = 0
    CHECK(g.Q.d.empty());
    CHECK_THROWS_AS(simultaneous_eliminate(pit, {{0, 2}, {1, 3}}), std::invalid_argument);
    CHECK(independence_witness(pit, {{0, 2}, {1, 3}}).has_value());
}

TEST_CASE("simultaneous elimination with zigzags") {
    // a -> a', b -> b' with a -> b' nonzero only: independent, one zigzag of length 2
    IC P;
    int a = P.add("a", "x", 0, 0), b = P.add("b", "x", 0, 0), c = P.add("c", "x", 0, 0);
    int a1 = P.add("a'", "x", 0, 1), b1 = P.add("b'", "x", 0, 1), c1 = P.add("c'", "x", 0, 1);
    P.set(a, a1, 1);
    P.set(b, b1, -1);
    P.set(a, b1, 2);
    P.set(c, a1, 5);
    P.set(b, c1, 7);
    P.set(c, c1, 3);
    std::vector<IsoPair> fam{{a, a1}, {b, b1}};
    REQUIRE_FALSE(independence_witness(P, fam));
    auto sim = simultaneous_eliminate(P, fam);
    auto g1 = gaussian_eliminate(P, a, a1);
    auto g2 = gaussian_eliminate(g1.Q, g1.Q.find("b"), g1.Q.find("b'"));
    REQUIRE(sim.Q.size() == 2);
    int sc = sim.Q.find("c"), sc1 = sim.Q.find("c'");
    int ic = g2.Q.find("c"), ic1 = g2.Q.find("c'");
    // c -> c' = 3 - 5 * 1 * 0 - 7 * (-1) * 0 + the zigzag c -> a' -> a -> b' -> b -> c'
    CHECK(*sim.Q.entry(sc, sc1) == *g2.Q.entry(ic, ic1));
    CHECK(*sim.Q.entry(sc, sc1) == DeltaPoly(3 - 5 * 2 * 7));
}

TEST_CASE("tensor products") {
    IC unit;
    unit.add("1", "x", 0, 0);
    std::mt19937_64 rng(7);
    auto Q = random_int_complex(rng);
    auto T = tensor(unit, Q);
    REQUIRE(T.size() == Q.size());
    CHECK(equal(IntArith{}, T.d, Q.d));
}

TEST_CASE("random property suite") {
    auto cert = verify_ge_properties(100, 3);
    CHECK_MESSAGE(cert.verdict, cert.failure());
}

TEST_CASE("JSON round trip of integer complexes") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        auto P = random_int_complex(rng);
        auto j = complex_to_json(P);
        CHECK(complex_to_json(int_complex_from_json(j)) == j);
    }
}
