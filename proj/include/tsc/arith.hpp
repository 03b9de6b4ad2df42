#pragma once

#include "tsc/bimod.hpp"

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tsc {

// Polynomial in delta with integer coefficients, c[k] the coefficient of delta^k.
struct DeltaPoly {
    std::vector<int64_t> c;

    DeltaPoly() = default;
    DeltaPoly(int64_t k) {
        if (k) c = {k};
    }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const DeltaPoly &a, const DeltaPoly &b) { return a.c == b.c; }
    std::string str() const;
};

DeltaPoly operator+(const DeltaPoly &a, const DeltaPoly &b);
DeltaPoly operator*(const DeltaPoly &a, const DeltaPoly &b);

// rank one summands over Z[delta]: an integer matrix complex entry by entry
struct IntArith {
    using Obj = std::string;
    using Mor = DeltaPoly;

    Mor identity(const Obj &) const { return 1; }
    Mor compose(const Mor &g, const Mor &f) const { return g * f; }
    Mor add(const Mor &a, const Mor &b) const { return a + b; }
    Mor neg(const Mor &a) const { return a * DeltaPoly(-1); }
    Mor scale(const Mor &a, int k) const { return a * DeltaPoly(k); }
    bool is_zero(const Mor &a) const { return a.is_zero(); }
    bool equal(const Mor &a, const Mor &b) const { return a == b; }
    Mor times_delta(const Mor &a) const;
    std::optional<Mor> divide_delta(const Mor &a) const;
    std::optional<Mor> inverse(const Mor &a) const;
    Obj tensor_obj(const Obj &a, const Obj &b) const { return a + b; }
    Mor tensor(const Mor &a, const Mor &b) const { return a * b; }
    Obj dual_obj(const Obj &a) const { return a; }
    Mor dual(const Mor &a) const { return a; }
    std::string describe(const Mor &a) const { return a.str(); }
};

// Marker bookkeeping for dots between cyclical bimodules. A morphism is a
// signed sum of op sequences (first applied first); composition concatenates
// and sorts stably by strand index, so dots on distinct strands commute.
struct SignOp {
    int index;
    char kind; // 'A' (removes index), 'V' (adds index), 'd' (delta)
    friend auto operator<=>(const SignOp &, const SignOp &) = default;
};

struct SignMor {
    std::map<std::vector<SignOp>, int64_t> terms;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const SignMor &a, const SignMor &b) { return a.terms == b.terms; }
    std::string str() const;
};

SignMor sign_marker(const std::vector<SignOp> &ops, int64_t coeff);

struct SignArith {
    using Obj = std::string;
    using Mor = SignMor;

    Mor identity(const Obj &) const { return sign_marker({}, 1); }
    Mor compose(const Mor &g, const Mor &f) const;
    Mor add(const Mor &a, const Mor &b) const;
    Mor neg(const Mor &a) const { return scale(a, -1); }
    Mor scale(const Mor &a, int k) const;
    bool is_zero(const Mor &a) const { return a.is_zero(); }
    bool equal(const Mor &a, const Mor &b) const { return a == b; }
    Mor times_delta(const Mor &a) const;
    // strips one delta marker from every term
    std::optional<Mor> divide_delta(const Mor &a) const;
    // only the markers +-identity are invertible
    std::optional<Mor> inverse(const Mor &a) const;
    Obj tensor_obj(const Obj &a, const Obj &b) const { return a + "|" + b; }
    Mor tensor(const Mor &a, const Mor &b) const { return compose(b, a); }
    Obj dual_obj(const Obj &a) const { return a; }
    // reverse each sequence, exchanging A and V
    Mor dual(const Mor &a) const;
    std::string describe(const Mor &a) const { return a.str(); }
};

// inverse by elimination with constant pivots; empty if none is found
std::optional<Morphism> invert(const Morphism &m);

// exact bimodule morphisms between Bott-Samelson objects
struct BimodArith {
    using Obj = BSWord;
    using Mor = Morphism;

    int n = 2;

    Mor identity(const Obj &w) const { return Morphism::identity(n, w); }
    Mor compose(const Mor &g, const Mor &f) const { return g * f; }
    Mor add(const Mor &a, const Mor &b) const { return a + b; }
    Mor neg(const Mor &a) const { return -a; }
    Mor scale(const Mor &a, int k) const { return mpq_class(k) * a; }
    bool is_zero(const Mor &a) const { return a.is_zero(); }
    bool equal(const Mor &a, const Mor &b) const { return a == b; }
    Mor times_delta(const Mor &a) const { return a.times(Poly::delta(n)); }
    std::optional<Mor> divide_delta(const Mor &a) const;
    std::optional<Mor> inverse(const Mor &a) const { return invert(a); }
    Obj tensor_obj(const Obj &a, const Obj &b) const;
    Mor tensor(const Mor &a, const Mor &b) const { return tsc::tensor(a, b); }
    std::string describe(const Mor &a) const { return a.str(); }
};

} // namespace tsc
