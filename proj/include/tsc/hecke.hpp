#pragma once

#include "tsc/braid.hpp"
#include "tsc/laurent.hpp"
#include "tsc/weyl.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tsc {

// Element of the extended affine Hecke algebra in the standard basis H_w.
// Elements with only finite w form the finite Hecke algebra.
class Hecke {
public:
    using Map = std::map<Weyl, Laurent>;

    Hecke() = default;
    explicit Hecke(int n) : n_(n) {}
    static Hecke scalar(int n, const Laurent &c);
    static Hecke H(const Weyl &w, const Laurent &c = 1);
    static Hecke H_s(int n, int i);
    static Hecke H_s_inverse(int n, int i);
    static Hecke H_omega(int n, int k = 1);
    static Hecke b_s(int n, int i);
    // product of b_s over a word
    static Hecke bott_samelson(int n, const std::vector<int> &word);

    int n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const Map &terms() const { return c_; }
    Laurent coeff(const Weyl &w) const;

    Hecke operator-() const;
    Hecke &operator+=(const Hecke &o);
    Hecke &operator-=(const Hecke &o);
    friend Hecke operator+(Hecke a, const Hecke &b) { return a += b; }
    friend Hecke operator-(Hecke a, const Hecke &b) { return a -= b; }
    friend Hecke operator*(const Hecke &a, const Hecke &b);
    friend Hecke operator*(const Laurent &c, const Hecke &a);
    friend bool operator==(const Hecke &a, const Hecke &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Hecke &a, const Hecke &b) { return !(a == b); }

    Hecke times_H_s(int i) const;
    Hecke times_H_s_inverse(int i) const;
    Hecke times_b_s(int i) const;
    Hecke H_s_times(int i) const;
    Hecke times_omega(int k) const;

    Hecke bar() const;
    // coefficients in the KL basis, found by peeling off top-length terms
    std::vector<std::pair<Weyl, Laurent>> kl_coefficients(int length_cap = 24) const;
    // "(omega_power, window) : laurent" lines ordered by (length, window)
    std::string serialize() const;
    // KL-basis form such as "(v+v^-1) b1"
    std::string str_kl(int length_cap = 24) const;

private:
    void add(const Weyl &w, const Laurent &c);
    int n_ = 0;
    Map c_;
};

// label for b_w in printed output: "b" + reduced word, then "w" / "w^k" for omega
std::string kl_label(const Weyl &w);

Hecke sigma_element(const Weyl &w, int length_cap = 14);
bool is_smooth(const Weyl &w, int length_cap = 14);
// self-dual KL basis element by the standard recursion (memoized)
Hecke kl_basis(const Weyl &w, int length_cap = 14);
bool kl_coefficients_positive_degree(const Hecke &b, const Weyl &w);

// c_{I,X,Y}; throws std::invalid_argument if Y is not a tau-suffix inside X
Hecke c_element(const Subset &I, const Subset &X, const Subset &Y);
// true if every insertion order of Y gives the same element
bool c_element_order_independent(const Subset &I, const Subset &X, const Subset &Y);

struct SymbolTerm {
    Weyl w;
    int shift = 0;
    int degree = 0;
};
// sum (-1)^degree v^shift b_w
Hecke symbol(int n, const std::vector<SymbolTerm> &terms);

Hecke braid_image(const BraidWord &b);
Hecke center_character(int n, int k);
bool is_central(const Hecke &a);
// algebra map induced by flattening
Hecke flatten_hecke(const Hecke &a);

// sums and products of integers, v, w (omega), H<word> and b<word>, with ^k
// (negative k for v, w and H); "b{1,10}" for indices past 9
Hecke parse_hecke(int n, const std::string &text);

} // namespace tsc
