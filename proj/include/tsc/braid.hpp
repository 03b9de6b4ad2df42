#pragma once

#include "tsc/weyl.hpp"

#include <string>
#include <vector>

namespace tsc {

// f_i^{exp} for gen = i in [0, n), or omega^{exp} for gen = kOmega
struct BraidLetter {
    int gen = 0;
    int exp = 1;
    friend bool operator==(const BraidLetter &, const BraidLetter &) = default;
};

struct BraidWord {
    int n = 0;
    bool finite = false; // finite braids use only f_1 .. f_{n-1}
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(int n_, bool finite_ = false, std::vector<BraidLetter> l = {});
    // tokens "w", "w-", "f3", "f0-"
    static BraidWord parse(int n, const std::string &text, bool finite = false);
    std::string str() const;

    BraidWord operator*(const BraidWord &o) const;
    BraidWord inverse() const;
    BraidWord pow(int k) const;
    // overcrossings become undercrossings
    BraidWord bar() const;
    bool positive() const;
    friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

Weyl evaluate(const BraidWord &b);
int total_winding(const BraidWord &b);
// seam-crossing count of each strand of a pure braid
std::vector<int> strand_winding(const BraidWord &b);

BraidWord y_braid(int n, int i);
// prod y_i^{lambda_i}
BraidWord w_lambda(const std::vector<int> &lambda);
bool is_dominant(const std::vector<int> &lambda);
// the positive expression of w_lambda for dominant lambda
BraidWord w_lambda_positive(const std::vector<int> &lambda);
BraidWord flatten(const BraidWord &b);
BraidWord jm_braid(int n, int i);
// weights of the k-th exterior power: 0/1 vectors with k ones
std::vector<std::vector<int>> exterior_weights(int n, int k);

} // namespace tsc
