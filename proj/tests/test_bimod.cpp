#include "tsc/bimod.hpp"

#include <doctest.h>

using namespace tsc;

TEST_CASE("Bott-Samelson bases") {
    CHECK(Morphism::identity(3, {}).rows() == 1);
    CHECK(Morphism::identity(3, {1}).rows() == 2);
    CHECK(basis_degree({1}, 0) == -1);
    CHECK(basis_degree({1}, 1) == 1);
    CHECK(basis_degree({0, 2, 1}, 0b101) == 1);
    Morphism a = left_mult(3, {1}, simple_root(3, 1));
    CHECK(a.is_bimodule_map());
    CHECK(a.degree() == 2);
    CHECK(a.degree_consistent());
}

TEST_CASE("dots and barbells") {
    for (int i = 0; i < 3; ++i) {
        Morphism barbell = enddot(3, {i}, 0) * startdot(3, {}, 0, i);
        CHECK(barbell == left_mult(3, {}, simple_root(3, i)));
        CHECK(startdot(3, {}, 0, i).is_bimodule_map());
        CHECK(enddot(3, {i}, 0).is_bimodule_map());
    }
    Morphism d2 = enddot(2, {0}, 0) * startdot(2, {}, 0, 0) + enddot(2, {1}, 0) * startdot(2, {}, 0, 1);
    CHECK(d2 == left_mult(2, {}, Poly::delta(2)));
}

TEST_CASE("polynomial forcing") {
    Poly f = Poly::parse(3, "x1^2*x3 + x2*x1*d");
    for (int i = 0; i < 3; ++i) {
        Morphism left = left_mult(3, {i}, f);
        Morphism right = Morphism::identity(3, {i}).times(act_simple(i, f));
        Morphism broken = startdot(3, {}, 0, i) * enddot(3, {i}, 0);
        CHECK(left - right == broken.times(demazure(i, f)));
    }
}

TEST_CASE("trivalent vertices") {
    for (int i = 0; i < 3; ++i) {
        CHECK(merge(3, {i, i}, 0) * startdot(3, {i}, 0, i) == Morphism::identity(3, {i}));
        CHECK(merge(3, {i, i}, 0) * startdot(3, {i}, 1, i) == Morphism::identity(3, {i}));
        CHECK((merge(3, {i, i}, 0) * split(3, {i}, 0)).is_zero());
        // the eye with xi inside is the identity, so B_i B_i splits off B_i twice
        Morphism eye = merge(3, {i, i}, 0) * poly_box(3, {i, i}, 1, xi(3, i)) * split(3, {i}, 0);
        CHECK(eye == Morphism::identity(3, {i}));
        CHECK(split(3, {i}, 0).is_bimodule_map());
        CHECK(merge(3, {i, i}, 0).is_bimodule_map());
    }
    CHECK_THROWS(merge(3, {0, 1}, 0));
}

TEST_CASE("distant crossings and rex moves") {
    Morphism c = crossing(4, {1, 3}, 0);
    CHECK(crossing(4, {3, 1}, 0) * c == Morphism::identity(4, {1, 3}));
    CHECK(c.is_bimodule_map());
    Subset X = Subset::of(4, {1, 3});
    CHECK(theta(X, {3, 1}) == Morphism::identity(4, {3, 1}));
    CHECK(theta(X, {1, 3}) == -crossing(4, {3, 1}, 0));
    CHECK(theta_inverse(X, {1, 3}) * theta(X, {1, 3}) == Morphism::identity(4, {3, 1}));
    // 0, 2, 4 pairwise distant at n = 6: the two routes from 024 to 420 agree
    CHECK(rex_move(6, {0, 2, 4}, {4, 2, 0}) ==
          rex_move(6, {2, 0, 4}, {4, 2, 0}) * rex_move(6, {0, 2, 4}, {2, 0, 4}));
}

TEST_CASE("signed dots between cyclical bimodules") {
    for (int i = 0; i < 3; ++i) CHECK(dot_up(Subset(3, 0), Subset::of(3, {i})) == startdot(3, {}, 0, i));
    // 0 and 2 must be distant for both words 02 and 20 to be reduced, so n = 4
    Subset X = Subset::of(4, {0}), Y = Subset::of(4, {0, 2});
    CHECK(dot_up(X, Y) == -startdot(4, {0}, 1, 2));
    CHECK(dot_up_via(X, Y, {2, 0}) == dot_up(X, Y));
    CHECK(theta(Y, {2, 0}) * dot_up(X, Y) == startdot(4, {0}, 0, 2));
    CHECK(dot_down_via(Y, X, {2, 0}) == dot_down(Y, X));
    CHECK(dot_sign(X, Y) == -1);
    CHECK(dot_sign(Subset::of(4, {2}), Y) == 1);
    CHECK_THROWS(dot_up_via(Subset::of(3, {0}), Subset::of(3, {0, 2}), {2, 0}));
}

TEST_CASE("Hom spaces") {
    // Hom(R, B_i) in degree 1 is spanned by the startdot
    CHECK(hom_basis(3, {}, {1}, 1).size() == 1);
    CHECK(hom_basis(3, {1}, {1}, 0).size() == 1);
    CHECK(hom_basis(3, {1}, {}, -1).empty());
    CHECK(hom_basis(3, {1}, {1, 1}, -1).size() == 1);
}
