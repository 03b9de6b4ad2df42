#include "tsc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace tsc {

namespace {

void check_n(int n) {
    if (n < 1 || n > Poly::kMaxN)
        throw std::invalid_argument("polynomial ring needs 1 <= n <= " + std::to_string(Poly::kMaxN));
}

bool mono_divides(Poly::Mono a, Poly::Mono b) {
    for (int v = 0; v < 8; ++v)
        if (Poly::exponent(a, v) > Poly::exponent(b, v)) return false;
    return true;
}

std::string var_name(int n, int v) { return v == n ? "d" : "x" + std::to_string(v + 1); }

} // namespace

Poly::Poly(int n) : n_(n) { check_n(n); }

Poly Poly::constant(int n, const mpq_class &c) {
    Poly p(n);
    if (c != 0) p.terms_.emplace_back(0, c);
    return p;
}

Poly Poly::x(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("x_i needs 1 <= i <= n");
    std::vector<int> e(n + 1, 0);
    e[i - 1] = 1;
    return monomial(n, e);
}

Poly Poly::delta(int n) {
    std::vector<int> e(n + 1, 0);
    e[n] = 1;
    return monomial(n, e);
}

Poly Poly::monomial(int n, const std::vector<int> &exps, const mpq_class &c) {
    Poly p(n);
    if (static_cast<int>(exps.size()) != n + 1) throw std::invalid_argument("exponent vector size must be n+1");
    if (c != 0) p.terms_.emplace_back(pack(exps), c);
    return p;
}

Poly::Mono Poly::pack(const std::vector<int> &exps) {
    Mono m = 0;
    int total = 0;
    for (size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] < 0) throw std::invalid_argument("negative exponent");
        total += exps[v];
        m |= static_cast<Mono>(exps[v]) << (8 * (7 - v));
    }
    if (total > 255) throw std::overflow_error("monomial degree exceeds 255");
    return m;
}

int Poly::total_degree(Mono m) {
    int t = 0;
    for (int v = 0; v < 8; ++v) t += exponent(m, v);
    return t;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

mpq_class Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return 0;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    int d = total_degree(terms_[0].first);
    for (auto &t : terms_)
        if (total_degree(t.first) != d) throw std::domain_error("inhomogeneous polynomial " + str());
    return 2 * d;
}

bool Poly::is_homogeneous() const {
    for (auto &t : terms_)
        if (total_degree(t.first) != total_degree(terms_[0].first)) return false;
    return true;
}

int Poly::common_n(const Poly &a, const Poly &b) {
    if (a.n_ == 0) return b.n_;
    if (b.n_ == 0 || a.n_ == b.n_) return a.n_;
    throw std::invalid_argument("polynomials over different rings");
}

std::vector<Poly::Term> Poly::combine(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
    std::vector<Term> out;
    for (auto &t : terms) {
        if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term &t) { return t.second == 0; }), out.end());
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto &t : r.terms_) t.second = -t.second;
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    n_ = common_n(*this, o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            mpq_class s = terms_[i].second + o.terms_[j].second;
            if (s != 0) out.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) { return *this += -o; }

Poly &Poly::operator*=(const mpq_class &c) {
    if (c == 0) terms_.clear();
    else
        for (auto &t : terms_) t.second *= c;
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    Poly r;
    r.n_ = Poly::common_n(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::vector<Poly::Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (auto &s : a.terms_) {
        int ds = Poly::total_degree(s.first);
        for (auto &t : b.terms_) {
            if (ds + Poly::total_degree(t.first) > 255) throw std::overflow_error("monomial degree exceeds 255");
            acc.emplace_back(s.first + t.first, s.second * t.second);
        }
    }
    r.terms_ = Poly::combine(std::move(acc));
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = constant(n_ == 0 ? 1 : n_, 1);
    if (n_ == 0) r.n_ = 0;
    Poly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly> &images) const {
    if (terms_.empty()) return *this;
    if (static_cast<int>(images.size()) != n_ + 1) throw std::invalid_argument("substitute needs n+1 images");
    std::vector<std::vector<Poly>> powers(n_ + 1);
    auto power = [&](int v, int e) -> const Poly & {
        auto &pv = powers[v];
        if (pv.empty()) pv.push_back(constant(n_, 1));
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * images[v]);
        return pv[e];
    };
    Poly r(n_);
    for (auto &t : terms_) {
        Poly m = constant(n_, t.second);
        for (int v = 0; v <= n_; ++v) {
            int e = exponent(t.first, v);
            if (e) m = m * power(v, e);
        }
        r += m;
    }
    return r;
}

Poly Poly::mod_delta() const {
    Poly r = *this;
    r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                  [&](const Term &t) { return exponent(t.first, n_) != 0; }),
                   r.terms_.end());
    return r;
}

bool Poly::divides_by(const Poly &g, Poly &quotient) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    int n = common_n(*this, g);
    std::map<Mono, mpq_class, std::greater<Mono>> r;
    for (auto &t : terms_) r.emplace(t.first, t.second);
    const Term &lead = g.terms_[0];
    std::vector<Term> q;
    while (!r.empty()) {
        auto it = r.begin();
        if (!mono_divides(lead.first, it->first)) return false;
        Mono m = it->first - lead.first;
        mpq_class c = it->second / lead.second;
        q.emplace_back(m, c);
        for (auto &t : g.terms_) {
            auto &slot = r[t.first + m];
            slot -= c * t.second;
            if (slot == 0) r.erase(t.first + m);
        }
    }
    quotient = Poly();
    quotient.n_ = n;
    quotient.terms_ = combine(std::move(q));
    return true;
}

Poly Poly::divide_exact(const Poly &g) const {
    Poly q;
    if (!divides_by(g, q)) throw std::logic_error("inexact division of " + str() + " by " + g.str());
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto &t : terms_) {
        mpq_class c = t.second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono;
        for (int v = 0; v <= n_; ++v) {
            int e = exponent(t.first, v);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(n_, v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += c.get_str();
        else if (c == 1) out += mono;
        else out += c.get_str() + "*" + mono;
    }
    return out;
}

namespace {

struct PolyParser {
    int n;
    const std::string &s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }
    Poly expr() {
        Poly r(n);
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!first) break;
            Poly t = term();
            r += sign > 0 ? t : -t;
            first = false;
        }
        return r;
    }
    Poly term() {
        Poly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    Poly factor() {
        Poly b = base();
        if (eat('^')) b = b.pow(static_cast<int>(number()));
        return b;
    }
    Poly base() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(std::to_string(number()));
            mpq_class q(num);
            skip();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                long den = number();
                if (den == 0) fail("zero denominator");
                q = mpq_class(num, mpz_class(den));
                q.canonicalize();
            }
            return Poly::constant(n, q);
        }
        if (c == 'd') {
            ++pos;
            return Poly::delta(n);
        }
        if (c == 'x') {
            ++pos;
            long i = number();
            if (i < 1 || i > n) fail("variable index out of range");
            return Poly::x(n, static_cast<int>(i));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Poly Poly::parse(int n, const std::string &text) {
    check_n(n);
    PolyParser p{n, text};
    Poly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Poly simple_root(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("simple root index out of range");
    if (i == 0) return Poly::x(n, n) - Poly::x(n, 1) + Poly::delta(n);
    return Poly::x(n, i) - Poly::x(n, i + 1);
}

namespace {

std::vector<Poly> identity_images(int n) {
    std::vector<Poly> im;
    for (int i = 1; i <= n; ++i) im.push_back(Poly::x(n, i));
    im.push_back(Poly::delta(n));
    return im;
}

} // namespace

Poly act_simple(int i, const Poly &f) {
    int n = f.n();
    if (f.is_zero()) return f;
    if (i < 0 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    auto im = identity_images(n);
    if (i == 0) {
        im[0] = Poly::x(n, n) + Poly::delta(n);
        im[n - 1] = Poly::x(n, 1) - Poly::delta(n);
    } else {
        std::swap(im[i - 1], im[i]);
    }
    return f.substitute(im);
}

Poly act_tau(const Poly &f) {
    int n = f.n();
    if (f.is_zero()) return f;
    auto im = identity_images(n);
    for (int i = 1; i < n; ++i) im[i - 1] = Poly::x(n, i + 1);
    im[n - 1] = Poly::x(n, 1) - Poly::delta(n);
    return f.substitute(im);
}

Poly act_tau_inv(const Poly &f) {
    int n = f.n();
    if (f.is_zero()) return f;
    auto im = identity_images(n);
    for (int i = 2; i <= n; ++i) im[i - 1] = Poly::x(n, i - 1);
    im[0] = Poly::x(n, n) + Poly::delta(n);
    return f.substitute(im);
}

Poly act_sigma(const Poly &f) {
    int n = f.n();
    if (f.is_zero()) return f;
    auto im = identity_images(n);
    for (int i = 1; i <= n; ++i) im[i - 1] = -Poly::x(n, n + 1 - i);
    return f.substitute(im);
}

Poly demazure(int i, const Poly &f) {
    if (f.is_zero()) return f;
    return (f - act_simple(i, f)).divide_exact(simple_root(f.n(), i));
}

Poly xi(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("index out of range");
    return Poly::x(n, i == 0 ? n : i);
}

} // namespace tsc
