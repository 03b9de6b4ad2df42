#pragma once

#include "tsc/arith.hpp"
#include "tsc/bimod.hpp"
#include "tsc/hecke.hpp"
#include "tsc/homalg.hpp"
#include "tsc/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tsc {

// k -> subsets, each list ordered by (size, bitmask)
using SubsetFamily = std::map<int, std::vector<Subset>>;

bool in_P(const Subset &X, int k);
SubsetFamily build_P(int n);
// Q_k = P_{k+1} for k >= 0 and P_{k-1} for k <= 0
SubsetFamily build_Q(int n);

// "B21", "R" for the empty word
std::string word_label(const BSWord &w);
// "B21@0": label of the preferred word and homological degree
std::string summand_id(const Subset &X, int k);

// coefficient of the signed dot X -> X + i (or back) against the bare sign
// marker, in preferred coordinates: epsilon times the rex move sign
int dot_coefficient(const Subset &X, const Subset &Y);

// a complex whose summands are indexed by subsets of Z/n
template <class A> struct IndexedComplex {
    Pseudocomplex<A> P;
    std::vector<Subset> sets;

    int index(const Subset &X, int k) const {
        for (int i = 0; i < P.size(); ++i)
            if (sets[i] == X && P.summands[i].degree == k) return i;
        return -1;
    }
};

using SignComplex = IndexedComplex<SignArith>;
using BimodComplex = IndexedComplex<BimodArith>;

SignComplex build_F_sign(int n);
BimodComplex build_F_bimod(int n);
// the differential is minus the signed dots
SignComplex build_I_sign(int n);
BimodComplex build_I_bimod(int n);

// P(a)[b]: degree d - b, shift s + a, differential times (-1)^b
template <class A> Pseudocomplex<A> shifted(const Pseudocomplex<A> &P, int grading, int hom) {
    Pseudocomplex<A> Q(P.ar);
    for (auto &s : P.summands) Q.add(s.id, s.label, s.shift + grading, s.degree - hom);
    for (auto &[key, m] : P.d) Q.d.emplace(key, hom % 2 ? P.ar.neg(m) : m);
    return Q;
}

// I(1)[-1] -> F and F -> I(-1)[1], identities on matching subsets
template <class A> struct MonodromyFactors {
    SparseMor<A> inclusion;  // I index -> F index
    SparseMor<A> projection; // F index -> I index
    SparseMor<A> mu;         // inclusion after projection, F -> F(-2)[2]
};

template <class A>
MonodromyFactors<A> monodromy_factors(const IndexedComplex<A> &F, const IndexedComplex<A> &I) {
    MonodromyFactors<A> r;
    for (int j = 0; j < I.P.size(); ++j) {
        int k = I.P.summands[j].degree;
        if (int a = F.index(I.sets[j], k + 1); a >= 0)
            r.inclusion.emplace(std::make_pair(j, a), F.P.ar.identity(F.P.summands[a].label));
        if (int b = F.index(I.sets[j], k - 1); b >= 0)
            r.projection.emplace(std::make_pair(b, j), F.P.ar.identity(F.P.summands[b].label));
    }
    r.mu = compose(F.P.ar, r.inclusion, r.projection);
    return r;
}

// verdict record for every verifier; serialized as a certificate line
struct Certificate {
    std::string theorem;
    int n = 0;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> steps;
    bool verdict = true;

    void step(std::string s) { steps.push_back(std::move(s)); }
    void check(bool ok, const std::string &what) {
        if (!ok) {
            verdict = false;
            steps.push_back("FAIL " + what);
        }
    }
    // first failing step, or empty
    std::string failure() const;
};

// d^2 = mu delta on the sign level, with the diagonal reduced by the
// double-differential lemma; the complexes F and F* are exercised
Certificate verify_d2_sign(int n);
// exact bimodule matrices, n <= 4
Certificate verify_d2_bimod(int n);
// d^2 = mu delta on a complex read back from JSON; summand sets come from the labels
Certificate verify_d2_loaded(const Pseudocomplex<SignArith> &P, int n);
Certificate verify_d2_loaded(const Pseudocomplex<BimodArith> &P);

// sigma / tau applied to labels, index sets and sign markers; tau returns to
// preferred words through the signed rex moves
SignComplex sigma_complex(const SignComplex &F);
SignComplex tau_complex(const SignComplex &F);
SignComplex build_Fstar_sign(int n);
// shift-preserving matching of summands by (set, degree) with diagonal +-1
// gauge making the differentials agree; empty if none exists
std::optional<std::vector<int>> sign_gauge(const SignComplex &A, const SignComplex &B);
Certificate verify_symmetries(int n);

// Wakimoto cube index (1..n) of each summand of build_F_sign(n)
std::vector<int> wakimoto_assignment(int n);
Certificate verify_wakimoto(int n);

// Hecke symbol sum (-1)^k v^k b_{h_X} of F
Hecke F_symbol(int n);

// N_I on the Hecke backend: labels b_{w_I h_X}, sets X with tau(I) inside X
struct HeckeComplex {
    SignComplex C;
    std::vector<Weyl> elems;
    Hecke symbol() const;
};
HeckeComplex build_N(const Subset &I);
// M_J for J = tau(I): sets Y containing I, labels b_{h_Y w_J}
HeckeComplex build_M(const Subset &I);

// a(X) summed over tau-components inside X
int crossover_exponent(const Subset &I, const Subset &X);
int crossover_sign(const Subset &I, const Subset &X);
// sign of the letter permutation sorting w into tau-component blocks; the
// crossover sign applies to differentials read in block order
int block_order_sign(const Subset &I, const BSWord &w);
Certificate verify_N_equals_M(const Subset &I);

// one object of the elimination trace: c_{I,Z,Y}(shift) in a homological degree
struct GEObject {
    Subset Z, Y;
    int shift = 0, degree = 0;
    Hecke symbol;
};

struct TensorBITrace {
    Certificate cert;
    std::vector<GEObject> survivors;
};
TensorBITrace tensorBI_object_GE(const Subset &I);
Certificate verify_tensorBI(int n);

// H : F -> F of homological degree -1 on the bimodule backend
SparseMor<BimodArith> build_H_homotopy(const BimodComplex &F);
Certificate verify_x1_commutation(int n);

// summands counted per degree with label R
std::map<int, int> underlying_vector_space(const SignComplex &F);
Certificate verify_underlying(int n);

// the rotation map phi_s : B_1 F -> F B_0, startdot and enddot squares at n = 2
struct PhiN2 {
    Pseudocomplex<BimodArith> F, B1F, FB0;
    SparseMor<BimodArith> phi;
};
PhiN2 build_phi_n2();
Certificate verify_phi_squares_n2();

// homotopies h : P -> Q of homological degree -1 and internal degree e with
// d h + h d = g, modulo delta if asked. Returns one solution and the
// dimension of the space of solutions of the homogeneous equation.
struct HomotopySearch {
    bool solvable = false;
    SparseMor<BimodArith> h;
    int kernel_dim = 0;
    // span of d K - K d inside that kernel, K of homological degree -2
    int trivial_dim = 0;
};
HomotopySearch find_homotopy(const Pseudocomplex<BimodArith> &P, const Pseudocomplex<BimodArith> &Q,
                             const SparseMor<BimodArith> &g, int e, bool mod_delta);

// minimal complex of F B_1 at n = 2 after splitting B_1 B_1
Certificate verify_FB1_n2();

// descents, smoothness, c_{I,X,Y} and flattening
Certificate verify_descent(int n);
Certificate verify_plethysm_finite(int N);
Certificate verify_c_elements(int n, int smooth_max_n = 4);
Certificate verify_flattening(int n);

} // namespace tsc
