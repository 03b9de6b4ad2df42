#include "tsc/bimod.hpp"

#include "tsc/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tsc {

namespace {

constexpr size_t kMaxWord = 12;

void check_word(int n, const BSWord &w) {
    if (w.size() > kMaxWord) throw std::length_error("Bott-Samelson word too long");
    for (int l : w)
        if (l < 0 || l >= n) throw std::invalid_argument("letter out of range in Bott-Samelson word");
}

BSWord erase_at(BSWord w, int p) {
    w.erase(w.begin() + p);
    return w;
}

BSWord concat(const BSWord &a, const BSWord &b) {
    BSWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

} // namespace

Morphism::Morphism(int n, BSWord src, BSWord tgt, int degree)
    : n_(n), src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree) {
    check_word(n, src_);
    check_word(n, tgt_);
    m_.assign(static_cast<size_t>(rows()) * cols(), Poly());
}

Morphism Morphism::identity(int n, const BSWord &w) {
    Morphism m(n, w, w, 0);
    for (int e = 0; e < m.cols(); ++e) m.at(e, e) = Poly::constant(n, 1);
    return m;
}

bool Morphism::is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const Poly &p) { return p.is_zero(); });
}

void Morphism::check_composable(const Morphism &o, const char *what) const {
    if (n_ != o.n_) throw std::invalid_argument(std::string(what) + ": rank mismatch");
    if (what[0] == 'c') {
        if (o.tgt_ != src_) throw std::invalid_argument("composition of maps with mismatched endpoints");
    } else if (src_ != o.src_ || tgt_ != o.tgt_ || degree_ != o.degree_) {
        throw std::invalid_argument(std::string(what) + ": maps with different source, target or degree");
    }
}

Morphism Morphism::operator*(const Morphism &o) const {
    check_composable(o, "compose");
    Morphism r(n_, o.src_, tgt_, degree_ + o.degree_);
    int mid = cols();
    for (int k = 0; k < mid; ++k)
        for (int j = 0; j < o.cols(); ++j) {
            const Poly &b = o.at(k, j);
            if (b.is_zero()) continue;
            for (int i = 0; i < rows(); ++i) {
                const Poly &a = at(i, k);
                if (!a.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Morphism Morphism::operator-() const {
    Morphism r = *this;
    for (auto &p : r.m_) p = -p;
    return r;
}

Morphism &Morphism::operator+=(const Morphism &o) {
    if (degree_ != o.degree_ && src_ == o.src_ && tgt_ == o.tgt_) {
        if (o.is_zero()) return *this;
        if (is_zero()) degree_ = o.degree_;
    }
    check_composable(o, "add");
    for (size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
}

Morphism &Morphism::operator-=(const Morphism &o) {
    if (degree_ != o.degree_ && src_ == o.src_ && tgt_ == o.tgt_) {
        if (o.is_zero()) return *this;
        if (is_zero()) degree_ = o.degree_;
    }
    check_composable(o, "subtract");
    for (size_t k = 0; k < m_.size(); ++k) m_[k] -= o.m_[k];
    return *this;
}

Morphism operator*(const mpq_class &c, Morphism a) {
    for (auto &p : a.m_) p *= c;
    return a;
}

bool operator==(const Morphism &a, const Morphism &b) {
    if (a.src_ != b.src_ || a.tgt_ != b.tgt_) return false;
    const bool za = a.is_zero(), zb = b.is_zero();
    if (za || zb) return za && zb;
    return a.degree_ == b.degree_ && a.m_ == b.m_;
}

Morphism Morphism::times(const Poly &p) const {
    int d = p.is_zero() ? 0 : p.degree();
    Morphism r(n_, src_, tgt_, degree_ + d);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k] * p;
    return r;
}

Morphism Morphism::mod_delta() const {
    Morphism r = *this;
    for (auto &p : r.m_) p = p.mod_delta();
    return r;
}

bool Morphism::is_bimodule_map() const {
    for (int i = 1; i <= n_ + 1; ++i) {
        Poly f = i <= n_ ? Poly::x(n_, i) : Poly::delta(n_);
        Morphism lhs = left_mult(n_, tgt_, f) * *this;
        Morphism rhs = *this * left_mult(n_, src_, f);
        lhs.degree_ = rhs.degree_;
        if (lhs != rhs) return false;
    }
    return true;
}

bool Morphism::degree_consistent() const {
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) {
            const Poly &p = at(r, c);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.degree() != basis_degree(src_, c) + degree_ - basis_degree(tgt_, r))
                return false;
        }
    return true;
}

std::string Morphism::str() const {
    std::ostringstream out;
    out << "BS(" << word_str(src_) << ") -> BS(" << word_str(tgt_) << ") degree " << degree_ << "\n";
    for (int r = 0; r < rows(); ++r) {
        out << "  [";
        for (int c = 0; c < cols(); ++c) {
            const Poly &p = at(r, c);
            out << (c ? ", " : "") << (p.is_zero() ? "0" : p.str());
        }
        out << "]\n";
    }
    return out.str();
}

int basis_degree(const BSWord &w, int e) { return -static_cast<int>(w.size()) + 2 * __builtin_popcount(e); }

namespace {

// push g, sitting in the factor left of tensor k, to the far right
void force_right(int n, const BSWord &w, size_t k, int mask, int e, const Poly &g, std::vector<Poly> &column) {
    if (g.is_zero()) return;
    if (k == w.size()) {
        column[mask] += g;
        return;
    }
    Poly dg = demazure(w[k], g);
    Poly inv = g - xi(n, w[k]) * dg;
    auto carry = [&](const Poly &c) {
        if (k + 1 < w.size() && ((e >> (k + 1)) & 1)) return c * xi(n, w[k + 1]);
        return c;
    };
    if (!dg.is_zero()) force_right(n, w, k + 1, mask | (1 << k), e, carry(dg), column);
    force_right(n, w, k + 1, mask, e, carry(inv), column);
}

} // namespace

Morphism left_mult(int n, const BSWord &w, const Poly &p) {
    static std::mutex mu;
    static std::map<std::pair<BSWord, std::string>, Morphism> cache;
    check_word(n, w);
    auto key = std::make_pair(concat({n}, w), p.str());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int d = p.is_zero() ? 0 : p.degree();
    Morphism m(n, w, w, d);
    std::vector<Poly> column(m.rows());
    for (int e = 0; e < m.cols(); ++e) {
        std::fill(column.begin(), column.end(), Poly());
        Poly g = p;
        if (!w.empty() && (e & 1)) g = g * xi(n, w[0]);
        force_right(n, w, 0, 0, e, g, column);
        for (int r = 0; r < m.rows(); ++r) m.at(r, e) = column[r];
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, m);
    return m;
}

Morphism local(const BSWord &prefix, const Morphism &phi, const BSWord &suffix) {
    int n = phi.n();
    BSWord src = concat(concat(prefix, phi.src()), suffix), tgt = concat(concat(prefix, phi.tgt()), suffix);
    Morphism r(n, src, tgt, phi.degree());
    int pu = prefix.size(), pa = phi.src().size(), pb = phi.tgt().size();
    int nu = 1 << pu, ns = 1 << suffix.size();
    std::map<std::string, Morphism> lcache;
    for (int ea = 0; ea < phi.cols(); ++ea)
        for (int eb = 0; eb < phi.rows(); ++eb) {
            const Poly &f = phi.at(eb, ea);
            if (f.is_zero()) continue;
            Morphism L = left_mult(n, suffix, f);
            for (int eu = 0; eu < nu; ++eu)
                for (int e2 = 0; e2 < ns; ++e2)
                    for (int e2p = 0; e2p < ns; ++e2p) {
                        const Poly &c = L.at(e2p, e2);
                        if (c.is_zero()) continue;
                        int sc = eu | (ea << pu) | (e2 << (pu + pa));
                        int tc = eu | (eb << pu) | (e2p << (pu + pb));
                        r.at(tc, sc) += c;
                    }
        }
    return r;
}

Morphism tensor(const Morphism &a, const Morphism &b) {
    return local({}, a, b.tgt()) * local(a.src(), b, {});
}

Morphism startdot(int n, const BSWord &w, int p, int i) {
    if (p < 0 || p > static_cast<int>(w.size())) throw std::invalid_argument("startdot position out of range");
    Morphism d(n, {}, {i}, 1);
    d.at(0, 0) = -act_simple(i, xi(n, i));
    d.at(1, 0) = Poly::constant(n, 1);
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p, w.end()));
}

Morphism enddot(int n, const BSWord &w, int p) {
    if (p < 0 || p >= static_cast<int>(w.size())) throw std::invalid_argument("enddot position out of range");
    Morphism d(n, {w[p]}, {}, 1);
    d.at(0, 0) = Poly::constant(n, 1);
    d.at(0, 1) = xi(n, w[p]);
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p + 1, w.end()));
}

Morphism merge(int n, const BSWord &w, int p) {
    if (p < 0 || p + 1 >= static_cast<int>(w.size()) || w[p] != w[p + 1])
        throw std::invalid_argument("merge needs two equal adjacent letters");
    int i = w[p];
    Morphism d(n, {i, i}, {i}, -1);
    d.at(0, 2) = Poly::constant(n, 1);
    d.at(1, 3) = Poly::constant(n, 1);
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p + 2, w.end()));
}

Morphism split(int n, const BSWord &w, int p) {
    if (p < 0 || p >= static_cast<int>(w.size())) throw std::invalid_argument("split position out of range");
    int i = w[p];
    Morphism d(n, {i}, {i, i}, -1);
    d.at(0, 0) = Poly::constant(n, 1);
    d.at(1, 1) = Poly::constant(n, 1);
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p + 1, w.end()));
}

Morphism crossing(int n, const BSWord &w, int p) {
    if (p < 0 || p + 1 >= static_cast<int>(w.size())) throw std::invalid_argument("crossing position out of range");
    int i = w[p], j = w[p + 1];
    if (!letters_commute(n, i, j)) throw std::invalid_argument("crossing needs distant colors");
    Morphism d(n, {i, j}, {j, i}, 0);
    for (int e = 0; e < 4; ++e) d.at(((e & 1) << 1) | (e >> 1), e) = Poly::constant(n, 1);
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p + 2, w.end()));
}

Morphism poly_box(int n, const BSWord &w, int p, const Poly &f) {
    if (p < 0 || p > static_cast<int>(w.size())) throw std::invalid_argument("polynomial box position out of range");
    Morphism d(n, {}, {}, f.is_zero() ? 0 : f.degree());
    d.at(0, 0) = f;
    return local(BSWord(w.begin(), w.begin() + p), d, BSWord(w.begin() + p, w.end()));
}

Morphism rex_move(int n, const BSWord &from, const BSWord &to) {
    if (!commutation_equivalent(n, from, to)) throw std::invalid_argument("words are not related by distant crossings");
    BSWord sf = from;
    std::sort(sf.begin(), sf.end());
    if (std::adjacent_find(sf.begin(), sf.end()) != sf.end())
        throw std::invalid_argument("rex moves are implemented for words with distinct letters");
    std::vector<int> pos(from.size());
    for (size_t k = 0; k < from.size(); ++k) pos[k] = std::find(to.begin(), to.end(), from[k]) - to.begin();
    Morphism m(n, from, to, 0);
    for (int e = 0; e < m.cols(); ++e) {
        int t = 0;
        for (size_t k = 0; k < from.size(); ++k)
            if ((e >> k) & 1) t |= 1 << pos[k];
        m.at(t, e) = Poly::constant(n, 1);
    }
    return m;
}

Morphism theta(const Subset &X, const BSWord &word) {
    BSWord pref = preferred_word(X);
    if (!commutation_equivalent(X.n, pref, word)) throw std::invalid_argument("word is not a reduced expression of h_X");
    return mpq_class(letter_permutation_sign(pref, word)) * rex_move(X.n, pref, word);
}

Morphism theta_inverse(const Subset &X, const BSWord &word) {
    BSWord pref = preferred_word(X);
    if (!commutation_equivalent(X.n, pref, word)) throw std::invalid_argument("word is not a reduced expression of h_X");
    return mpq_class(letter_permutation_sign(pref, word)) * rex_move(X.n, word, pref);
}

namespace {

int added_index(const Subset &X, const Subset &Y) {
    if (!X.proper() || !Y.proper()) throw std::invalid_argument("signed dots need proper subsets");
    Subset d = Y.minus(X);
    if (!X.subset_of(Y) || d.size() != 1) throw std::invalid_argument("signed dots need Y = X + i");
    return d.members().front();
}

} // namespace

int dot_sign(const Subset &X, const Subset &Y) {
    int i = added_index(X, Y);
    BSWord w = preferred_word(Y);
    int k = std::find(w.begin(), w.end(), i) - w.begin();
    return k % 2 ? -1 : 1;
}

Morphism dot_up_via(const Subset &X, const Subset &Y, const BSWord &wordY) {
    int i = added_index(X, Y);
    int n = X.n;
    int k = std::find(wordY.begin(), wordY.end(), i) - wordY.begin();
    if (k == static_cast<int>(wordY.size())) throw std::invalid_argument("word does not contain the added letter");
    BSWord wordX = erase_at(wordY, k);
    mpq_class eps = k % 2 ? -1 : 1;
    return theta_inverse(Y, wordY) * (eps * startdot(n, wordX, k, i)) * theta(X, wordX);
}

Morphism dot_down_via(const Subset &Y, const Subset &X, const BSWord &wordY) {
    int i = added_index(X, Y);
    int n = X.n;
    int k = std::find(wordY.begin(), wordY.end(), i) - wordY.begin();
    if (k == static_cast<int>(wordY.size())) throw std::invalid_argument("word does not contain the added letter");
    BSWord wordX = erase_at(wordY, k);
    mpq_class eps = k % 2 ? -1 : 1;
    return theta_inverse(X, wordX) * (eps * enddot(n, wordY, k)) * theta(Y, wordY);
}

Morphism dot_up(const Subset &X, const Subset &Y) { return dot_up_via(X, Y, preferred_word(Y)); }

Morphism dot_down(const Subset &Y, const Subset &X) { return dot_down_via(Y, X, preferred_word(Y)); }

namespace {

void monomials(int nv, int total, std::vector<int> &cur, int v, std::vector<std::vector<int>> &out) {
    if (v == nv - 1) {
        cur[v] = total;
        out.push_back(cur);
        return;
    }
    for (int a = total; a >= 0; --a) {
        cur[v] = a;
        monomials(nv, total - a, cur, v + 1, out);
    }
}

} // namespace

std::vector<Morphism> hom_basis(int n, const BSWord &src, const BSWord &tgt, int degree, bool mod_delta) {
    Morphism shape(n, src, tgt, degree);
    struct Unknown {
        int r, c;
        std::vector<int> exps;
    };
    std::vector<Unknown> unknowns;
    int nv = mod_delta ? n : n + 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.cols(); ++c) {
            int d = basis_degree(src, c) + degree - basis_degree(tgt, r);
            if (d < 0 || d % 2) continue;
            std::vector<std::vector<int>> ms;
            std::vector<int> cur(nv, 0);
            monomials(nv, d / 2, cur, 0, ms);
            for (auto &e : ms) {
                e.resize(n + 1, 0);
                unknowns.push_back({r, c, e});
            }
        }
    const int nu = static_cast<int>(unknowns.size());
    // constraint (L_f^tgt M - M L_f^src) = 0, collected by (generator, entry, monomial)
    std::map<std::tuple<int, int, int, Poly::Mono>, SparseRow> eqs;
    for (int g = 1; g <= n; ++g) {
        Poly f = Poly::x(n, g);
        Morphism Lt = left_mult(n, tgt, f), Ls = left_mult(n, src, f);
        if (mod_delta) {
            Lt = Lt.mod_delta();
            Ls = Ls.mod_delta();
        }
        for (int u = 0; u < nu; ++u) {
            auto &uk = unknowns[u];
            Poly mono = Poly::monomial(n, uk.exps);
            for (int r = 0; r < shape.rows(); ++r) {
                const Poly &a = Lt.at(r, uk.r);
                if (a.is_zero()) continue;
                Poly prod = a * mono;
                for (auto &[m, c] : prod.terms()) eqs[{g, r, uk.c, m}][u] += c;
            }
            for (int c = 0; c < shape.cols(); ++c) {
                const Poly &b = Ls.at(uk.c, c);
                if (b.is_zero()) continue;
                Poly prod = mono * b;
                for (auto &[m, cc] : prod.terms()) eqs[{g, uk.r, c, m}][u] -= cc;
            }
        }
    }
    RowEchelon ech(nu);
    for (auto &kv : eqs) ech.insert(kv.second);
    std::vector<Morphism> out;
    for (auto &v : ech.nullspace()) {
        Morphism m = shape;
        for (int u = 0; u < nu; ++u)
            if (v[u] != 0) m.at(unknowns[u].r, unknowns[u].c) += Poly::monomial(n, unknowns[u].exps, v[u]);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace tsc
