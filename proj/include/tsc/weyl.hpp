#pragma once

#include "tsc/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tsc {

// A subset of Z/n stored as a bitmask.
struct Subset {
    int n = 0;
    uint32_t bits = 0;

    Subset() = default;
    Subset(int n_, uint32_t bits_) : n(n_), bits(bits_) {}
    static Subset of(int n, const std::vector<int> &members);
    static Subset full(int n) { return Subset(n, n >= 32 ? ~0u : (1u << n) - 1); }

    bool contains(int i) const { return (bits >> mod(i)) & 1u; }
    Subset with(int i) const { return Subset(n, bits | (1u << mod(i))); }
    Subset without(int i) const { return Subset(n, bits & ~(1u << mod(i))); }
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }
    bool proper() const { return bits != full(n).bits; }
    bool subset_of(const Subset &o) const { return (bits & ~o.bits) == 0; }
    Subset complement() const { return Subset(n, full(n).bits & ~bits); }
    Subset operator|(const Subset &o) const { return Subset(n, bits | o.bits); }
    Subset operator&(const Subset &o) const { return Subset(n, bits & o.bits); }
    Subset minus(const Subset &o) const { return Subset(n, bits & ~o.bits); }
    // tau(X) = X + 1, sigma(X) = -X
    Subset tau() const;
    Subset sigma() const;
    std::vector<int> members() const;
    int mod(int i) const { return ((i % n) + n) % n; }
    // sorted comma list, "" for the empty set
    std::string str() const;

    friend bool operator==(const Subset &a, const Subset &b) { return a.n == b.n && a.bits == b.bits; }
    friend bool operator!=(const Subset &a, const Subset &b) { return !(a == b); }
    friend bool operator<(const Subset &a, const Subset &b) { return a.bits < b.bits; }
};

// all proper subsets of Z/n, by bitmask
std::vector<Subset> proper_subsets(int n);

// Word letters: i >= 0 is s_i, kOmega is omega, kOmegaInv its inverse.
constexpr int kOmega = -1;
constexpr int kOmegaInv = -2;

// Element of the extended affine Weyl group as a bijection f of Z with
// f(i+n) = f(i)+n, stored by its window (f(1), ..., f(n)).
class Weyl {
public:
    Weyl() = default;
    explicit Weyl(std::vector<int> window);
    static Weyl identity(int n);
    static Weyl s(int n, int i);
    static Weyl omega(int n, int k = 1);
    static Weyl from_word(int n, const std::vector<int> &word);
    // "s0 s1 w w-" tokens
    static Weyl parse_word(int n, const std::string &text);

    int n() const { return static_cast<int>(w_.size()); }
    const std::vector<int> &window() const { return w_; }
    int operator()(int i) const;
    int omega_power() const;
    // omega^-k w, the W_aff part where w = omega^k * perm
    Weyl perm() const;

    Weyl operator*(const Weyl &o) const;
    Weyl inverse() const;
    int length() const;
    bool is_right_descent(int i) const;
    bool is_left_descent(int i) const;
    Subset right_descents() const;
    Subset left_descents() const;
    // letters of a reduced word for w * omega^-k by leftmost left descents,
    // so that w = s_{a_1} ... s_{a_l} omega^k
    std::vector<int> reduced_word() const;
    bool is_translation_free() const { return omega_power() == 0; }

    // "w^k | f(1) ... f(n)" with the window of perm()
    std::string str() const;

    friend bool operator==(const Weyl &a, const Weyl &b) { return a.w_ == b.w_; }
    friend bool operator!=(const Weyl &a, const Weyl &b) { return a.w_ != b.w_; }
    friend bool operator<(const Weyl &a, const Weyl &b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

// Bruhat order, same omega power required
bool bruhat_leq(const Weyl &x, const Weyl &y);
// all y <= w; throws std::length_error when the length exceeds cap
std::vector<Weyl> bruhat_interval(const Weyl &w, int length_cap = 14);

// x_i -> x_{w(i)} with x_{j+n} = x_j - d
Poly act(const Weyl &w, const Poly &f);

bool letters_commute(int n, int i, int j);
// longest element of the parabolic subgroup W_I
Weyl longest_element(const Subset &I);
std::vector<int> longest_word(const Subset &I);
// h_X for the anticyclic order starting at aleph (aleph not in X)
std::vector<int> h_word(const Subset &X, int aleph);
Weyl h_of(const Subset &X, int aleph);
Weyl h_of(const Subset &X);
// the preferred word: aleph = min(S \ X)
std::vector<int> preferred_word(const Subset &X);

// tau-components of I: each block listed in its own order
std::vector<std::vector<int>> tau_components(const Subset &I);
// components relabelled so that A_0 contains aleph and the rest follow
// cyclically from aleph
std::vector<std::vector<int>> tau_components_from(const Subset &I, int aleph);
// Y is a tau-suffix if Y meets every component in a suffix
bool is_tau_suffix(const Subset &I, const Subset &Y);

// ordered factors of the commutation rewriting of w_I h_X
std::vector<std::vector<int>> rewrite_wIhX(const Subset &I, const Subset &X, int aleph);
// Y with w_I h_X = h_Y w_{tau(I)}
Subset correspondent_Y(const Subset &I, const Subset &X);

// words related by commuting moves only (same heap)
bool commutation_equivalent(int n, const std::vector<int> &a, const std::vector<int> &b);
// every word commutation-equivalent to a word with distinct letters
std::vector<std::vector<int>> commutation_class(int n, const std::vector<int> &word);
// sign of the letter permutation taking a to b (distinct letters)
int letter_permutation_sign(const std::vector<int> &a, const std::vector<int> &b);

std::string word_str(const std::vector<int> &word);

} // namespace tsc
