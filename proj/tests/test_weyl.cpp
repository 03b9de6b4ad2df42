#include "tsc/weyl.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tsc;

namespace {
Subset S(int n, std::vector<int> m) { return Subset::of(n, m); }

Weyl prod(int n, const std::vector<std::vector<int>> &factors) {
    Weyl w = Weyl::identity(n);
    for (auto &f : factors) w = w * Weyl::from_word(n, f);
    return w;
}
} // namespace

TEST_CASE("words and relations") {
    CHECK(Weyl::from_word(3, {}) == Weyl::identity(3));
    CHECK(Weyl::from_word(2, {kOmega, 1, kOmegaInv}) == Weyl::s(2, 0));
    for (int k = 0; k < 4; ++k)
        CHECK(Weyl::from_word(4, {kOmega, k, kOmegaInv}) == Weyl::s(4, (k + 1) % 4));
    CHECK(Weyl::from_word(3, {0, 1, 0}) == Weyl::from_word(3, {1, 0, 1}));
    CHECK(Weyl::from_word(4, {0, 2}) == Weyl::from_word(4, {2, 0}));
    CHECK(Weyl::s(3, 1) * Weyl::s(3, 1) == Weyl::identity(3));
    CHECK(Weyl::parse_word(3, "s0 s1 w") == Weyl::from_word(3, {0, 1, kOmega}));
    CHECK_THROWS(Weyl::parse_word(3, "s0 x"));
}

TEST_CASE("length and descents") {
    CHECK(Weyl::identity(4).length() == 0);
    CHECK(longest_element(S(3, {1, 2})).length() == 3);
    CHECK(Weyl::from_word(3, {0, 2, 1, 2}).length() == 4);
    CHECK(Weyl::omega(3).length() == 0);
    CHECK(Weyl::identity(3).right_descents().empty());
    for (int n : {3, 4, 5}) CHECK(longest_element(S(n, {0, 1})).right_descents() == S(n, {0, 1}));
    CHECK(Weyl::from_word(4, {0, 2, 1}).right_descents() == S(4, {1}));
    CHECK_FALSE(bruhat_leq(Weyl::s(4, 1), Weyl::from_word(4, {0, 2})));
    CHECK(bruhat_leq(Weyl::s(4, 2), Weyl::from_word(4, {0, 2})));
    CHECK(bruhat_interval(Weyl::from_word(3, {0, 1, 0})).size() == 6);
}

TEST_CASE("anticyclic Coxeter elements h_X") {
    Subset X = S(9, {0, 1, 3, 4, 6, 8});
    CHECK(h_word(X, 7) == std::vector<int>{6, 4, 3, 1, 0, 8});
    CHECK(Weyl::from_word(9, h_word(X, 2)) == Weyl::from_word(9, h_word(X, 7)));
    CHECK(h_of(Subset(5, 0)) == Weyl::identity(5));
    // preferred words use aleph = min of the complement
    CHECK(preferred_word(S(4, {1, 3})) == std::vector<int>{3, 1});
    CHECK(preferred_word(S(4, {0, 2})) == std::vector<int>{0, 2});
    CHECK(preferred_word(S(4, {0, 1, 3})) == std::vector<int>{1, 0, 3});
    CHECK(preferred_word(S(3, {0, 2})) == std::vector<int>{0, 2});
    for (int n : {3, 4, 5})
        for (auto &Y : proper_subsets(n)) CHECK(h_of(Y).length() == Y.size());
}

TEST_CASE("tau components") {
    auto norm = [](std::vector<std::vector<int>> c) {
        for (auto &b : c) std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        return c;
    };
    CHECK(norm(tau_components(S(12, {1, 2, 3, 5, 9, 10}))) ==
          norm({{1, 2, 3, 4}, {5, 6}, {7}, {8}, {9, 10, 11}, {0}}));
    CHECK(tau_components(Subset(5, 0)).size() == 5);
    CHECK(norm(tau_components(S(4, {0, 1}))) == norm({{0, 1, 2}, {3}}));
}

TEST_CASE("rewriting w_I h_X") {
    Subset I = S(12, {1, 2, 3, 5, 9, 10}), X = S(12, {0, 1, 3, 4, 6, 7, 8, 10, 11});
    auto factors = rewrite_wIhX(I, X, 2);
    CHECK(factors.size() == 7);
    CHECK(prod(12, factors) == longest_element(I) * h_of(X));
    int len = 0;
    for (auto &f : factors) len += static_cast<int>(f.size());
    CHECK(len == longest_element(I).length() + X.size());
    // no I: single letters of h_X
    auto single = rewrite_wIhX(Subset(5, 0), S(5, {0, 2, 3}), 1);
    int letters = 0;
    for (auto &f : single) {
        CHECK(f.size() <= 1);
        letters += static_cast<int>(f.size());
    }
    CHECK(letters == 3);
    CHECK(prod(5, single) == h_of(S(5, {0, 2, 3})));
    CHECK(prod(5, rewrite_wIhX(S(5, {1, 2}), Subset(5, 0), 0)) == longest_element(S(5, {1, 2})));
}

TEST_CASE("correspondent Y") {
    CHECK(correspondent_Y(S(4, {0}), S(4, {1, 2, 3})) == S(4, {0, 2, 3}));
    for (int n : {3, 4, 5})
        for (auto &I : proper_subsets(n)) CHECK(correspondent_Y(I, I.tau()) == I);
}

TEST_CASE("commutation classes and letter signs") {
    CHECK(commutation_equivalent(4, {3, 1}, {1, 3}));
    CHECK_FALSE(commutation_equivalent(4, {2, 1}, {1, 2}));
    CHECK(commutation_class(5, {0, 2, 4}).size() == 3); // only 0 and 4 fail to commute
    CHECK(letter_permutation_sign({3, 1}, {1, 3}) == -1);
    CHECK(letter_permutation_sign({1, 0, 3}, {1, 0, 3}) == 1);
    CHECK(word_str({1, 0, 3}) == "103");
    CHECK(word_str({11, 0}) == "11,0");
}
