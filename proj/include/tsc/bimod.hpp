#pragma once

#include "tsc/poly.hpp"
#include "tsc/weyl.hpp"

#include <string>
#include <vector>

namespace tsc {

using BSWord = std::vector<int>;

// Right-R-linear map BS(src) -> BS(tgt). Both are free right modules with the
// basis b_e = xi^{e_1} (x) ... (x) xi^{e_l} (x) 1, e a bitmask with bit k for
// letter k; deg b_e = -l + 2|e|. Entries are stored as m[target][source].
class Morphism {
public:
    Morphism() = default;
    Morphism(int n, BSWord src, BSWord tgt, int degree);
    static Morphism identity(int n, const BSWord &w);

    int n() const { return n_; }
    const BSWord &src() const { return src_; }
    const BSWord &tgt() const { return tgt_; }
    int degree() const { return degree_; }
    int rows() const { return 1 << tgt_.size(); }
    int cols() const { return 1 << src_.size(); }
    const Poly &at(int r, int c) const { return m_[static_cast<size_t>(r) * cols() + c]; }
    Poly &at(int r, int c) { return m_[static_cast<size_t>(r) * cols() + c]; }

    bool is_zero() const;
    // this after o
    Morphism operator*(const Morphism &o) const;
    Morphism operator-() const;
    Morphism &operator+=(const Morphism &o);
    Morphism &operator-=(const Morphism &o);
    friend Morphism operator+(Morphism a, const Morphism &b) { return a += b; }
    friend Morphism operator-(Morphism a, const Morphism &b) { return a -= b; }
    friend Morphism operator*(const mpq_class &c, Morphism a);
    friend bool operator==(const Morphism &a, const Morphism &b);
    friend bool operator!=(const Morphism &a, const Morphism &b) { return !(a == b); }
    // right multiplication by p (a bimodule map of degree deg p)
    Morphism times(const Poly &p) const;
    Morphism mod_delta() const;

    // commutes with left multiplication by each x_i and d
    bool is_bimodule_map() const;
    // every entry homogeneous of the degree forced by the basis degrees
    bool degree_consistent() const;
    std::string str() const;

private:
    void check_composable(const Morphism &o, const char *what) const;
    int n_ = 0;
    BSWord src_, tgt_;
    int degree_ = 0;
    std::vector<Poly> m_;
};

int basis_degree(const BSWord &w, int e);
// left multiplication by p on BS(w)
Morphism left_mult(int n, const BSWord &w, const Poly &p);

// generators acting at position p of a word
Morphism startdot(int n, const BSWord &w, int p, int i); // BS(w) -> BS(w with i inserted at p)
Morphism enddot(int n, const BSWord &w, int p);          // removes letter p
Morphism merge(int n, const BSWord &w, int p);           // letters p, p+1 equal
Morphism split(int n, const BSWord &w, int p);           // letter p doubled
Morphism crossing(int n, const BSWord &w, int p);        // distant letters p, p+1 swapped
// polynomial box in the region left of letter p (p = |w| is the far right)
Morphism poly_box(int n, const BSWord &w, int p, const Poly &f);
// id_prefix (x) phi (x) id_suffix
Morphism local(const BSWord &prefix, const Morphism &phi, const BSWord &suffix);
// horizontal juxtaposition a (x) b
Morphism tensor(const Morphism &a, const Morphism &b);

// unsigned crossing-only rex move between commutation-equivalent words
Morphism rex_move(int n, const BSWord &from, const BSWord &to);
// theta_X : B_X = BS(preferred word) -> BS(word), signed by the crossing count
Morphism theta(const Subset &X, const BSWord &word);
Morphism theta_inverse(const Subset &X, const BSWord &word);

// signed dots between cyclical bimodules in preferred coordinates
Morphism dot_up(const Subset &X, const Subset &Y);   // B_X -> B_Y(1), Y = X + i
Morphism dot_down(const Subset &Y, const Subset &X); // B_Y -> B_X(1)
// the same maps computed through a chosen reduced word of h_Y
Morphism dot_up_via(const Subset &X, const Subset &Y, const BSWord &wordY);
Morphism dot_down_via(const Subset &Y, const Subset &X, const BSWord &wordY);
// (-1)^{k-1} for the k-th letter of the preferred word of Y
int dot_sign(const Subset &X, const Subset &Y);

// Q-basis of bimodule maps BS(src) -> BS(tgt) of the given degree,
// optionally over R/(d)
std::vector<Morphism> hom_basis(int n, const BSWord &src, const BSWord &tgt, int degree, bool mod_delta = false);

} // namespace tsc
