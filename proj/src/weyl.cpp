#include "tsc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsc {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Subset Subset::of(int n, const std::vector<int> &members) {
    Subset s(n, 0);
    for (int m : members) s = s.with(m);
    return s;
}

Subset Subset::tau() const {
    Subset r(n, 0);
    for (int i : members()) r = r.with(i + 1);
    return r;
}

Subset Subset::sigma() const {
    Subset r(n, 0);
    for (int i : members()) r = r.with(-i);
    return r;
}

std::vector<int> Subset::members() const {
    std::vector<int> m;
    for (int i = 0; i < n; ++i)
        if (contains(i)) m.push_back(i);
    return m;
}

std::string Subset::str() const {
    std::string s;
    for (int i : members()) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
}

std::vector<Subset> proper_subsets(int n) {
    std::vector<Subset> out;
    uint32_t full = Subset::full(n).bits;
    for (uint32_t b = 0; b < full; ++b) out.emplace_back(n, b);
    return out;
}

Weyl::Weyl(std::vector<int> window) : w_(std::move(window)) {
    int n = static_cast<int>(w_.size());
    if (n < 1) throw std::invalid_argument("empty window");
    std::vector<bool> seen(n, false);
    long excess = 0;
    for (int i = 0; i < n; ++i) {
        int r = ((w_[i] % n) + n) % n;
        if (seen[r]) throw std::invalid_argument("window entries must be distinct mod n");
        seen[r] = true;
        excess += w_[i] - (i + 1);
    }
    if (excess % n != 0) throw std::invalid_argument("window sum must be congruent to n(n+1)/2 mod n");
}

Weyl Weyl::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Weyl(std::move(w));
}

Weyl Weyl::s(int n, int i) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    i = ((i % n) + n) % n;
    auto w = identity(n).w_;
    if (i == 0) {
        w[0] = 0;
        w[n - 1] = n + 1;
    } else {
        std::swap(w[i - 1], w[i]);
    }
    return Weyl(std::move(w));
}

Weyl Weyl::omega(int n, int k) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 + k;
    return Weyl(std::move(w));
}

Weyl Weyl::from_word(int n, const std::vector<int> &word) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    Weyl r = identity(n);
    for (int g : word) {
        if (g == kOmega) r = r * omega(n, 1);
        else if (g == kOmegaInv) r = r * omega(n, -1);
        else if (g >= 0 && g < n) r = r * s(n, g);
        else throw std::invalid_argument("bad generator " + std::to_string(g));
    }
    return r;
}

Weyl Weyl::parse_word(int n, const std::string &text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> word;
    while (in >> tok) {
        if (tok == "w") word.push_back(kOmega);
        else if (tok == "w-") word.push_back(kOmegaInv);
        else {
            std::string digits = tok[0] == 's' ? tok.substr(1) : tok;
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw std::invalid_argument("bad Weyl word token '" + tok + "'");
            word.push_back(std::stoi(digits));
        }
    }
    return from_word(n, word);
}

int Weyl::operator()(int i) const {
    int n = this->n();
    int q = floor_div(i - 1, n);
    int r = i - q * n;
    return w_[r - 1] + q * n;
}

int Weyl::omega_power() const {
    int n = this->n();
    long e = 0;
    for (int i = 0; i < n; ++i) e += w_[i] - (i + 1);
    return static_cast<int>(e / n);
}

Weyl Weyl::perm() const { return omega(n(), -omega_power()) * *this; }

Weyl Weyl::operator*(const Weyl &o) const {
    if (o.n() != n()) throw std::invalid_argument("Weyl elements of different rank");
    std::vector<int> w(n());
    for (int i = 0; i < n(); ++i) w[i] = (*this)(o.w_[i]);
    Weyl r;
    r.w_ = std::move(w);
    return r;
}

Weyl Weyl::inverse() const {
    int n = this->n();
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) {
        int j = w_[i - 1];
        int q = floor_div(j - 1, n);
        int r = j - q * n;
        w[r - 1] = i - q * n;
    }
    Weyl r;
    r.w_ = std::move(w);
    return r;
}

int Weyl::length() const {
    int n = this->n(), l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) l += std::abs(floor_div(w_[j] - w_[i], n));
    return l;
}

bool Weyl::is_right_descent(int i) const {
    int n = this->n();
    i = ((i % n) + n) % n;
    return (*this)(i) > (*this)(i + 1);
}

bool Weyl::is_left_descent(int i) const { return inverse().is_right_descent(i); }

Subset Weyl::right_descents() const {
    Subset d(n(), 0);
    for (int i = 0; i < n(); ++i)
        if (is_right_descent(i)) d = d.with(i);
    return d;
}

Subset Weyl::left_descents() const { return inverse().right_descents(); }

std::vector<int> Weyl::reduced_word() const {
    std::vector<int> word;
    Weyl cur = *this;
    int n = this->n();
    while (cur.length() > 0) {
        Weyl inv = cur.inverse();
        int i = 0;
        while (!inv.is_right_descent(i)) ++i;
        word.push_back(i);
        cur = s(n, i) * cur;
    }
    return word;
}

std::string Weyl::str() const {
    std::string out = "w^" + std::to_string(omega_power()) + " |";
    for (int x : perm().w_) out += " " + std::to_string(x);
    return out;
}

bool bruhat_leq(const Weyl &x, const Weyl &y) {
    if (x.omega_power() != y.omega_power()) throw std::invalid_argument("Bruhat comparison needs equal omega powers");
    Weyl a = x, b = y;
    int n = x.n();
    for (;;) {
        int lb = b.length();
        if (a.length() > lb) return false;
        if (lb == 0) return a == b;
        Weyl binv = b.inverse();
        int s = 0;
        while (!binv.is_right_descent(s)) ++s;
        Weyl sw = Weyl::s(n, s);
        if (a.is_left_descent(s)) a = sw * a;
        b = sw * b;
    }
}

std::vector<Weyl> bruhat_interval(const Weyl &w, int length_cap) {
    if (w.length() > length_cap)
        throw std::length_error("Bruhat interval below an element of length " + std::to_string(w.length()) +
                                " exceeds the cap " + std::to_string(length_cap));
    auto word = w.reduced_word();
    int n = w.n();
    std::set<Weyl> cur{Weyl::omega(n, w.omega_power())};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Weyl s = Weyl::s(n, *it);
        std::vector<Weyl> add;
        for (auto &y : cur) add.push_back(s * y);
        cur.insert(add.begin(), add.end());
    }
    return {cur.begin(), cur.end()};
}

Poly act(const Weyl &w, const Poly &f) {
    int n = w.n();
    if (f.is_zero()) return f;
    if (f.n() != n) throw std::invalid_argument("rank mismatch in Weyl action");
    std::vector<Poly> im;
    for (int i = 1; i <= n; ++i) {
        int j = w(i);
        int q = floor_div(j - 1, n);
        im.push_back(Poly::x(n, j - q * n) - Poly::delta(n) * mpq_class(q));
    }
    im.push_back(Poly::delta(n));
    return f.substitute(im);
}

bool letters_commute(int n, int i, int j) {
    int d = (((i - j) % n) + n) % n;
    return d != 0 && d != 1 && d != n - 1;
}

Weyl longest_element(const Subset &I) {
    if (!I.proper()) throw std::invalid_argument("parabolic subset must be proper");
    int n = I.n;
    Weyl w = Weyl::identity(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : I.members())
            if (!w.is_right_descent(i)) {
                w = w * Weyl::s(n, i);
                changed = true;
            }
    }
    return w;
}

std::vector<int> longest_word(const Subset &I) { return longest_element(I).reduced_word(); }

std::vector<int> h_word(const Subset &X, int aleph) {
    int n = X.n;
    if (X.contains(aleph)) throw std::invalid_argument("aleph must not lie in X");
    auto m = X.members();
    auto rank = [&](int x) { return (((x - aleph) % n) + n) % n; };
    std::sort(m.begin(), m.end(), [&](int a, int b) { return rank(a) > rank(b); });
    return m;
}

Weyl h_of(const Subset &X, int aleph) { return Weyl::from_word(X.n, h_word(X, aleph)); }

Weyl h_of(const Subset &X) { return Weyl::from_word(X.n, preferred_word(X)); }

std::vector<int> preferred_word(const Subset &X) {
    if (!X.proper()) throw std::invalid_argument("h_X needs a proper subset");
    return h_word(X, X.complement().members().front());
}

std::vector<std::vector<int>> tau_components(const Subset &I) {
    if (!I.proper()) throw std::invalid_argument("tau-components need a proper subset");
    int n = I.n;
    std::vector<std::vector<int>> comps;
    for (int a = 0; a < n; ++a) {
        if (I.contains(a - 1)) continue;
        std::vector<int> c{a};
        while (I.contains(c.back())) c.push_back((c.back() + 1) % n);
        comps.push_back(std::move(c));
    }
    return comps;
}

std::vector<std::vector<int>> tau_components_from(const Subset &I, int aleph) {
    auto comps = tau_components(I);
    int n = I.n;
    auto rank = [&](const std::vector<int> &c) { return (((c.front() - aleph) % n) + n) % n; };
    auto holds = [&](const std::vector<int> &c) { return std::find(c.begin(), c.end(), I.mod(aleph)) != c.end(); };
    std::stable_sort(comps.begin(), comps.end(), [&](const auto &a, const auto &b) {
        if (holds(a) != holds(b)) return holds(a);
        return rank(a) < rank(b);
    });
    return comps;
}

bool is_tau_suffix(const Subset &I, const Subset &Y) {
    for (auto &c : tau_components(I)) {
        bool in = false;
        for (int a : c) {
            if (Y.contains(a)) in = true;
            else if (in) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> rewrite_wIhX(const Subset &I, const Subset &X, int aleph) {
    if (!X.proper()) throw std::invalid_argument("X must be proper");
    if (X.contains(aleph)) throw std::invalid_argument("aleph must not lie in X");
    int n = I.n;
    auto comps = tau_components_from(I, aleph);
    auto restrict = [&](const std::vector<int> &elems) { return Subset::of(n, elems); };
    auto cat = [](std::vector<int> a, const std::vector<int> &b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    const auto &A0 = comps[0];
    auto at = std::find(A0.begin(), A0.end(), I.mod(aleph)) - A0.begin();
    std::vector<int> below(A0.begin(), A0.begin() + at), above(A0.begin() + at + 1, A0.end());
    std::vector<std::vector<int>> factors;
    auto wpart = [&](const std::vector<int> &A) {
        Subset s = I & restrict(A);
        return s.empty() ? std::vector<int>{} : longest_word(s);
    };
    factors.push_back(cat(wpart(A0), h_word(X & restrict(below), aleph)));
    for (size_t i = comps.size() - 1; i >= 1; --i)
        factors.push_back(cat(wpart(comps[i]), h_word(X & restrict(comps[i]), aleph)));
    factors.push_back(h_word(X & restrict(above), aleph));
    return factors;
}

Subset correspondent_Y(const Subset &I, const Subset &X) {
    Subset J = I.tau();
    if (!J.subset_of(X)) throw std::invalid_argument("correspondent needs tau(I) inside X");
    if (!X.proper()) throw std::invalid_argument("X must be proper");
    Subset Y(I.n, 0);
    for (auto &c : tau_components(I)) {
        Subset A = Subset::of(I.n, c);
        if ((X & A) == A) Y = Y | A;
        else Y = Y | (I & A);
    }
    return Y;
}

bool commutation_equivalent(int n, const std::vector<int> &a, const std::vector<int> &b) {
    if (a.size() != b.size()) return false;
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    for (size_t x = 0; x < sa.size(); ++x)
        for (size_t y = x; y < sa.size(); ++y) {
            int p = sa[x], q = sa[y];
            if (p != q && letters_commute(n, p, q)) continue;
            std::vector<int> pa, pb;
            for (int l : a)
                if (l == p || l == q) pa.push_back(l);
            for (int l : b)
                if (l == p || l == q) pb.push_back(l);
            if (pa != pb) return false;
        }
    return true;
}

std::vector<std::vector<int>> commutation_class(int n, const std::vector<int> &word) {
    std::set<std::vector<int>> seen{word};
    std::deque<std::vector<int>> todo{word};
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop_front();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (!letters_commute(n, w[i], w[i + 1])) continue;
            auto v = w;
            std::swap(v[i], v[i + 1]);
            if (seen.insert(v).second) todo.push_back(v);
        }
    }
    return {seen.begin(), seen.end()};
}

int letter_permutation_sign(const std::vector<int> &a, const std::vector<int> &b) {
    if (a.size() != b.size()) throw std::invalid_argument("words of different length");
    std::vector<int> pos;
    for (int l : b) {
        auto it = std::find(a.begin(), a.end(), l);
        if (it == a.end()) throw std::invalid_argument("words use different letters");
        pos.push_back(static_cast<int>(it - a.begin()));
    }
    int inv = 0;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j) inv += pos[i] > pos[j];
    return inv % 2 ? -1 : 1;
}

std::string word_str(const std::vector<int> &word) {
    std::string s;
    bool wide = false;
    for (int l : word) wide |= l >= 10 || l < 0;
    for (int l : word) {
        if (wide && !s.empty()) s += ",";
        s += std::to_string(l);
    }
    return s;
}

} // namespace tsc
