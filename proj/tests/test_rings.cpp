#include "tsc/laurent.hpp"
#include "tsc/linalg.hpp"
#include "tsc/poly.hpp"

#include <doctest.h>

using namespace tsc;

namespace {
Poly P(int n, const char *s) { return Poly::parse(n, s); }
} // namespace

TEST_CASE("simple roots") {
    CHECK(simple_root(3, 1) == P(3, "x1 - x2"));
    CHECK(simple_root(3, 0) + simple_root(3, 1) + simple_root(3, 2) == Poly::delta(3));
    CHECK(simple_root(2, 0) == P(2, "x2 - x1 + d"));
}

TEST_CASE("Weyl action on polynomials") {
    CHECK(act_simple(0, Poly::x(3, 1)) == P(3, "x3 + d"));
    for (int i = 0; i < 3; ++i) CHECK(act_simple(i, Poly::delta(3)) == Poly::delta(3));
    CHECK(act_simple(1, P(2, "x1*x2")) == P(2, "x1*x2"));
    CHECK(act_tau(Poly::x(3, 3)) == P(3, "x1 - d"));
    CHECK(act_tau(simple_root(4, 3)) == simple_root(4, 0));
    Poly f = Poly::x(4, 1);
    for (int k = 0; k < 4; ++k) f = act_tau(f);
    CHECK(f == P(4, "x1 - d"));
    CHECK(act_tau_inv(act_tau(P(3, "x1^2*x3 + d"))) == P(3, "x1^2*x3 + d"));
    CHECK(act_sigma(Poly::x(2, 1)) == -Poly::x(2, 2));
    CHECK(act_sigma(Poly::delta(3)) == Poly::delta(3));
    CHECK(act_sigma(act_sigma(P(3, "x1 + 3*x2"))) == P(3, "x1 + 3*x2"));
}

TEST_CASE("Demazure operators") {
    CHECK(demazure(1, Poly::x(3, 1)) == Poly::constant(3, 1));
    CHECK(demazure(0, Poly::x(3, 3)) == Poly::constant(3, 1));
    for (int i = 0; i < 3; ++i) CHECK(demazure(i, Poly::delta(3)).is_zero());
    for (int i = 0; i < 3; ++i) CHECK(demazure(i, xi(3, i)) == Poly::constant(3, 1));
    // twisted Leibniz rule on a sample
    Poly f = P(3, "x1^2 + x2*d"), g = P(3, "x3 - 2*x1");
    for (int i = 0; i < 3; ++i)
        CHECK(demazure(i, f * g) == demazure(i, f) * g + act_simple(i, f) * demazure(i, g));
}

TEST_CASE("polynomial text round trip and ordering") {
    for (const char *s : {"x1^2*x2 - 3*d", "x1 - x2", "1/2*x3^3 + d^2 - 7", "0"}) {
        Poly p = P(3, s);
        CHECK(P(3, p.str().c_str()) == p);
    }
    CHECK(P(3, "d + x2 + x1^2").str() == "x1^2 + x2 + d");
    CHECK(P(3, "x1^2*x2 - 3*d^2*x3").degree() == 6);
    CHECK_FALSE(P(3, "x1^2*x2 - 3*d").is_homogeneous());
    CHECK_THROWS_WITH_AS(P(3, "x1 + * 2"), doctest::Contains("position"), std::invalid_argument);
    CHECK_THROWS(P(3, "x4"));
    CHECK(P(3, "x1^2 - x2^2").divide_exact(P(3, "x1 - x2")) == P(3, "x1 + x2"));
    CHECK_THROWS(P(3, "x1^2 + 1").divide_exact(P(3, "x1 - x2")));
    CHECK(P(3, "x1 + d").mod_delta() == Poly::x(3, 1));
}

TEST_CASE("Laurent polynomials") {
    Laurent q = Laurent::quantum2();
    CHECK(q.str() == "v+v^-1");
    CHECK((q * q).str() == "v^2+2+v^-2");
    CHECK(Laurent::v(3).bar() == Laurent::v(-3));
    CHECK((q * q).at_one() == 4);
    CHECK((q - q).is_zero());
    CHECK(Laurent(-2, 3).str() == "-2v^3");
    CHECK_THROWS(checked_mul(INT64_MAX, 2));
}

TEST_CASE("row echelon over Q") {
    RowEchelon e(3);
    CHECK(e.insert({{0, 1}, {1, 2}}));
    CHECK(e.insert({{1, 1}, {2, 1}}));
    CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 1}}));
    CHECK(e.rank() == 2);
    auto ns = e.nullspace();
    REQUIRE(ns.size() == 1);
    auto &x = ns[0];
    CHECK(x[0] + 2 * x[1] == 0);
    CHECK(x[1] + x[2] == 0);
}
