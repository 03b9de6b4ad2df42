#include "tsc/hecke.hpp"

#include <doctest.h>

using namespace tsc;

namespace {
Hecke E(int n) { return Hecke::scalar(n, 1); }
Laurent v(int k = 1) { return Laurent::v(k); }
} // namespace

TEST_CASE("quadratic relation") {
    for (int i = 0; i < 3; ++i) {
        Hecke Hs = Hecke::H_s(3, i);
        CHECK(Hs * Hs == E(3) + (v(-1) - v(1)) * Hs);
        CHECK(Hecke::b_s(3, i) * Hecke::b_s(3, i) == Laurent::quantum2() * Hecke::b_s(3, i));
        CHECK(Hs * Hecke::H_s_inverse(3, i) == E(3));
    }
    Hecke a = Hecke::b_s(3, 0) * Hecke::H_s(3, 2) + Hecke::H_omega(3);
    CHECK(E(3) * a == a);
    CHECK(Hecke::H_omega(3) * Hecke::H_s(3, 1) == Hecke::H_s(3, 2) * Hecke::H_omega(3));
}

TEST_CASE("bar involution") {
    CHECK(Hecke::H_s(2, 1).bar() == Hecke::H_s(2, 1) + (v(1) - v(-1)) * E(2));
    CHECK(Hecke::b_s(3, 2).bar() == Hecke::b_s(3, 2));
    CHECK(Hecke::scalar(2, v(1)).bar() == Hecke::scalar(2, v(-1)));
    Hecke a = Hecke::H_s(3, 0) * Hecke::H_omega(3) + Hecke::scalar(3, v(2));
    CHECK(a.bar().bar() == a);
}

TEST_CASE("KL basis and smoothness") {
    Weyl s = Weyl::s(3, 1);
    CHECK(sigma_element(s) == Hecke::b_s(3, 1));
    CHECK(is_smooth(s));
    Weyl sts = Weyl::from_word(3, {0, 1, 0});
    CHECK(is_smooth(sts));
    CHECK(kl_basis(sts) == sigma_element(sts));
    CHECK(kl_basis(sts) == Hecke::b_s(3, 0) * Hecke::b_s(3, 1) * Hecke::b_s(3, 0) - Hecke::b_s(3, 0));
    Weyl wI = longest_element(Subset::of(3, {1, 2}));
    CHECK(kl_basis(wI) == sigma_element(wI));
    for (auto &w : bruhat_interval(Weyl::from_word(4, {1, 2, 1, 0, 3}), 8)) {
        Hecke b = kl_basis(w);
        CHECK(b.bar() == b);
        CHECK(kl_coefficients_positive_degree(b, w));
    }
    // 3412 in the copy of S_4 generated by s_1, s_2, s_3
    CHECK_FALSE(is_smooth(Weyl::from_word(4, {2, 1, 3, 2})));
}

TEST_CASE("c elements") {
    Subset I = Subset::of(4, {0}), X = Subset::of(4, {1, 2});
    CHECK(c_element(I, X, Subset(4, 0)) == kl_basis(longest_element(I)) * kl_basis(h_of(X)));
    CHECK_THROWS_AS(c_element(I, Subset(4, 0), Subset::of(4, {3})), std::invalid_argument);
    CHECK(c_element_order_independent(Subset::of(4, {0, 1}), Subset::of(4, {1, 2, 3}), Subset::of(4, {2, 3})));
}

TEST_CASE("symbols and KL printing") {
    Hecke F2 = symbol(2, {{Weyl::identity(2), -1, -1}, {Weyl::s(2, 0), 0, 0}, {Weyl::s(2, 1), 0, 0}, {Weyl::identity(2), 1, 1}});
    CHECK(F2 == Hecke::scalar(2, -v(-1)) + Hecke::b_s(2, 0) + Hecke::b_s(2, 1) - Hecke::scalar(2, v(1)));
    CHECK(symbol(3, {}).is_zero());
    CHECK((Hecke::b_s(2, 1) * Hecke::b_s(2, 1)).str_kl() == "(v+v^-1) b1");
    CHECK(kl_label(Weyl::from_word(3, {1, 0})) == "b10");
    CHECK(kl_label(Weyl::omega(3, 2)) == "w^2");
    CHECK(kl_label(Weyl::identity(3)) == "1");
}

TEST_CASE("center characters") {
    CHECK(center_character(3, 3) == Hecke::H_omega(3, 3));
    CHECK(is_central(center_character(3, 3)));
    CHECK(is_central(center_character(2, 1)));
    CHECK(is_central(center_character(3, 2)));
    CHECK_FALSE(is_central(braid_image(y_braid(2, 1))));
}

TEST_CASE("flattening the Hecke algebra") {
    CHECK(flatten_hecke(E(3)) == E(3));
    CHECK(flatten_hecke(Hecke::b_s(2, 0)) == Hecke::b_s(2, 1));
    for (int i = 1; i <= 3; ++i) CHECK(flatten_hecke(braid_image(y_braid(3, i))) == braid_image(jm_braid(3, i)));
}
