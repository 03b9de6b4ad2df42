#include "tsc/braid.hpp"
#include "tsc/hecke.hpp"

#include <doctest.h>

using namespace tsc;

TEST_CASE("parse and print") {
    for (const char *s : {"w f1 f0-", "w- f2", "", "f3 f3 w"}) {
        auto b = BraidWord::parse(4, s);
        CHECK(BraidWord::parse(4, b.str()) == b);
        CHECK(b.str() == std::string(s));
    }
    CHECK_THROWS(BraidWord::parse(3, "f5"));
    CHECK_THROWS(BraidWord::parse(3, "g1"));
}

TEST_CASE("evaluation and winding") {
    CHECK(evaluate(BraidWord(3)) == Weyl::identity(3));
    CHECK(evaluate(y_braid(2, 1)) == Weyl::omega(2) * Weyl::s(2, 1));
    CHECK(evaluate(BraidWord::parse(3, "f1 f1-")) == Weyl::identity(3));
    CHECK(total_winding(BraidWord::parse(3, "w")) == 1);
    CHECK(total_winding(BraidWord::parse(3, "f1 f0- f2")) == 0);
    CHECK(total_winding(BraidWord::parse(3, "w w w")) == 3);
    CHECK(strand_winding(BraidWord::parse(4, "w f3 f2 f1")) == std::vector<int>{1, 0, 0, 0});
    CHECK(strand_winding(BraidWord::parse(3, "w w w")) == std::vector<int>{1, 1, 1});
    CHECK(strand_winding(BraidWord(3)) == std::vector<int>{0, 0, 0});
}

TEST_CASE("translation braids y_i") {
    CHECK(y_braid(2, 1).str() == "w f1");
    CHECK(y_braid(2, 2).str() == "w f0-");
    CHECK(y_braid(3, 2).str() == "w f0- f2");
    for (int n : {2, 3, 4})
        for (int i = 1; i <= n; ++i) {
            std::vector<int> e(n, 0);
            e[i - 1] = 1;
            CHECK(strand_winding(y_braid(n, i)) == e);
        }
    // y_i commute in the Hecke image
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(braid_image(y_braid(3, i) * y_braid(3, j)) == braid_image(y_braid(3, j) * y_braid(3, i)));
    CHECK(braid_image(w_lambda({1, 1, 0, 0})) == braid_image(BraidWord::parse(4, "w w f2 f1 f3 f2")));
    CHECK(braid_image(w_lambda({1, 1, 1})) == Hecke::H_omega(3, 3));
    CHECK(w_lambda({1, 0, 0}) == y_braid(3, 1));
}

TEST_CASE("flattening and Jucys-Murphy braids") {
    CHECK(flatten(BraidWord::parse(3, "w")).str() == "f1 f2");
    CHECK(flatten(BraidWord::parse(5, "w")).str() == "f1 f2 f3 f4");
    CHECK(jm_braid(4, 2).str() == "f2 f3 f3 f2");
    CHECK(jm_braid(4, 4).letters.empty());
    for (int n : {2, 3, 4}) {
        CHECK(braid_image(flatten(y_braid(n, n))) == Hecke::scalar(n, 1));
        for (int i = 1; i <= n; ++i) CHECK(braid_image(flatten(y_braid(n, i))) == braid_image(jm_braid(n, i)));
    }
    // j_i evaluates to the identity permutation: a full wrap of strand i
    for (int i = 1; i <= 4; ++i) CHECK(evaluate(jm_braid(4, i)) == Weyl::identity(4));
    CHECK(flatten(BraidWord::parse(3, "w")).finite);
}
