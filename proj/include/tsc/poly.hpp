#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tsc {

// Polynomial in x_1..x_n, d (= delta) over Q. Every variable has degree 2.
// Monomials pack one exponent byte per variable, x_1 in the top byte, so
// integer order on the packed key is lex order on (x_1, ..., x_n, d).
class Poly {
public:
    using Mono = uint64_t;
    using Term = std::pair<Mono, mpq_class>;
    static constexpr int kMaxN = 7;

    Poly() = default; // zero, compatible with every n
    explicit Poly(int n);
    static Poly constant(int n, const mpq_class &c);
    static Poly x(int n, int i); // 1 <= i <= n
    static Poly delta(int n);
    static Poly monomial(int n, const std::vector<int> &exps, const mpq_class &c = 1);
    // parse the textual syntax "x1^2*x2 - 3*d + 1/2"
    static Poly parse(int n, const std::string &text);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    const std::vector<Term> &terms() const { return terms_; }

    // exponent of variable v (0-based, v == n means d)
    static int exponent(Mono m, int v) { return static_cast<int>((m >> (8 * (7 - v))) & 0xff); }
    static int total_degree(Mono m);
    static Mono pack(const std::vector<int> &exps);

    // doubled (cohomological) degree; -1 for zero, throws if inhomogeneous
    int degree() const;
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const mpq_class &c);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const mpq_class &c) { return a *= c; }
    friend Poly operator*(const mpq_class &c, Poly a) { return a *= c; }
    friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly pow(int k) const;
    // substitute variable v -> images[v] (images has n+1 entries)
    Poly substitute(const std::vector<Poly> &images) const;
    // d -> 0
    Poly mod_delta() const;
    // exact quotient by a nonzero g; throws std::logic_error on a remainder
    Poly divide_exact(const Poly &g) const;
    // true and quotient if g divides this
    bool divides_by(const Poly &g, Poly &quotient) const;

    // sorted monomials, leading first: "x1^2*x2 - 3*d"
    std::string str() const;

private:
    static int common_n(const Poly &a, const Poly &b);
    static std::vector<Term> combine(std::vector<Term> terms);

    int n_ = 0;
    std::vector<Term> terms_; // strictly decreasing keys, nonzero coefficients
};

// The standard affine realization: simple roots, the W_ext action, Demazure operators.
Poly simple_root(int n, int i);
Poly act_simple(int i, const Poly &f);
Poly act_tau(const Poly &f);
Poly act_tau_inv(const Poly &f);
Poly act_sigma(const Poly &f);
Poly demazure(int i, const Poly &f);
// the element xi_i with demazure(i, xi_i) == 1 used for BS bases
Poly xi(int n, int i);

} // namespace tsc
