#include "tsc/hecke.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tsc {

namespace {

const Laurent kVDiff = Laurent::v(-1) - Laurent::v(1); // v^-1 - v

bool length_window_less(const Weyl &a, const Weyl &b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    if (a.omega_power() != b.omega_power()) return a.omega_power() < b.omega_power();
    return a.window() < b.window();
}

} // namespace

void Hecke::add(const Weyl &w, const Laurent &c) {
    if (c.is_zero()) return;
    if (n_ == 0) n_ = w.n();
    else if (n_ != w.n()) throw std::invalid_argument("Hecke elements of different rank");
    auto it = c_.find(w);
    if (it == c_.end()) {
        c_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

Hecke Hecke::scalar(int n, const Laurent &c) { return H(Weyl::identity(n), c); }

Hecke Hecke::H(const Weyl &w, const Laurent &c) {
    Hecke h(w.n());
    h.add(w, c);
    return h;
}

Hecke Hecke::H_s(int n, int i) { return H(Weyl::s(n, i)); }

Hecke Hecke::H_s_inverse(int n, int i) { return H_s(n, i) - scalar(n, kVDiff); }

Hecke Hecke::H_omega(int n, int k) { return H(Weyl::omega(n, k)); }

Hecke Hecke::b_s(int n, int i) { return H_s(n, i) + scalar(n, Laurent::v(1)); }

Hecke Hecke::bott_samelson(int n, const std::vector<int> &word) {
    Hecke h = scalar(n, 1);
    for (int i : word) h = h.times_b_s(i);
    return h;
}

Laurent Hecke::coeff(const Weyl &w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Laurent() : it->second;
}

Hecke Hecke::operator-() const {
    Hecke r(n_);
    for (auto &[w, c] : c_) r.c_.emplace(w, -c);
    return r;
}

Hecke &Hecke::operator+=(const Hecke &o) {
    for (auto &[w, c] : o.c_) add(w, c);
    if (n_ == 0) n_ = o.n_;
    return *this;
}

Hecke &Hecke::operator-=(const Hecke &o) { return *this += -o; }

Hecke operator*(const Laurent &c, const Hecke &a) {
    Hecke r(a.n_);
    for (auto &[w, x] : a.c_) r.add(w, c * x);
    return r;
}

Hecke Hecke::times_H_s(int i) const {
    Hecke r(n_);
    for (auto &[w, c] : c_) {
        Weyl ws = w * Weyl::s(n_, i);
        r.add(ws, c);
        if (ws.length() < w.length()) r.add(w, c * kVDiff);
    }
    return r;
}

Hecke Hecke::H_s_times(int i) const {
    Hecke r(n_);
    for (auto &[w, c] : c_) {
        Weyl sw = Weyl::s(n_, i) * w;
        r.add(sw, c);
        if (sw.length() < w.length()) r.add(w, c * kVDiff);
    }
    return r;
}

Hecke Hecke::times_H_s_inverse(int i) const { return times_H_s(i) - kVDiff * *this; }

Hecke Hecke::times_b_s(int i) const { return times_H_s(i) + Laurent::v(1) * *this; }

Hecke Hecke::times_omega(int k) const {
    Hecke r(n_);
    if (k == 0) return *this;
    for (auto &[w, c] : c_) r.add(w * Weyl::omega(n_, k), c);
    return r;
}

Hecke operator*(const Hecke &a, const Hecke &b) {
    if (a.n_ && b.n_ && a.n_ != b.n_) throw std::invalid_argument("Hecke elements of different rank");
    Hecke r(a.n_ ? a.n_ : b.n_);
    for (auto &[y, c] : b.c_) {
        Hecke t = a;
        for (int l : y.reduced_word()) t = t.times_H_s(l);
        r += c * t.times_omega(y.omega_power());
    }
    return r;
}

Hecke Hecke::bar() const {
    Hecke r(n_);
    for (auto &[w, c] : c_) {
        Hecke t = H(Weyl::identity(n_), c.bar());
        for (int l : w.reduced_word()) t = t.times_H_s_inverse(l);
        r += t.times_omega(w.omega_power());
    }
    return r;
}

std::vector<std::pair<Weyl, Laurent>> Hecke::kl_coefficients(int length_cap) const {
    std::vector<std::pair<Weyl, Laurent>> out;
    Hecke rest = *this;
    while (!rest.is_zero()) {
        auto top = rest.c_.begin();
        for (auto it = rest.c_.begin(); it != rest.c_.end(); ++it)
            if (length_window_less(top->first, it->first)) top = it;
        Weyl w = top->first;
        Laurent c = top->second;
        out.emplace_back(w, c);
        rest -= c * kl_basis(w, length_cap);
    }
    std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return length_window_less(a.first, b.first); });
    return out;
}

std::string Hecke::serialize() const {
    std::vector<Weyl> keys;
    for (auto &kv : c_) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), length_window_less);
    std::ostringstream out;
    for (auto &w : keys) {
        out << "(" << w.omega_power() << ", [";
        for (size_t i = 0; i < w.window().size(); ++i) out << (i ? "," : "") << w.window()[i];
        out << "]) : " << c_.at(w).str() << "\n";
    }
    return out.str();
}

std::string kl_label(const Weyl &w) {
    auto word = (w * Weyl::omega(w.n(), -w.omega_power())).reduced_word();
    int k = w.omega_power();
    std::string s = word.empty() ? "" : "b" + word_str(word);
    if (k != 0) {
        if (!s.empty()) s += " ";
        s += k == 1 ? "w" : "w^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

std::string Hecke::str_kl(int length_cap) const {
    auto terms = kl_coefficients(length_cap);
    if (terms.empty()) return "0";
    std::string out;
    for (auto &[w, c] : terms) {
        std::string label = kl_label(w), piece;
        bool neg = false;
        Laurent coef = c;
        if (c.terms() == 1 && c.coeff(c.low()) < 0) {
            neg = true;
            coef = -c;
        }
        std::string cs = coef.str();
        if (label == "1") piece = coef.terms() > 1 ? cs : cs;
        else if (coef == Laurent(1)) piece = label;
        else if (coef.terms() == 1) piece = cs + " " + label;
        else piece = "(" + cs + ") " + label;
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

Hecke sigma_element(const Weyl &w, int length_cap) {
    Hecke s(w.n());
    int l = w.length();
    for (auto &y : bruhat_interval(w, length_cap)) s += Hecke::H(y, Laurent::v(l - y.length()));
    return s;
}

bool is_smooth(const Weyl &w, int length_cap) {
    Hecke s = sigma_element(w, length_cap);
    return s.bar() == s;
}

Hecke kl_basis(const Weyl &w, int length_cap) {
    static std::mutex mu;
    static std::map<Weyl, Hecke> cache;
    if (w.length() > length_cap)
        throw std::length_error("KL basis element of length " + std::to_string(w.length()) + " exceeds the cap " +
                                std::to_string(length_cap));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    int n = w.n(), k = w.omega_power();
    Hecke result;
    if (k != 0) {
        result = kl_basis(w * Weyl::omega(n, -k), length_cap).times_omega(k);
    } else if (w.length() == 0) {
        result = Hecke::H(w);
    } else {
        int s = 0;
        while (!w.is_right_descent(s)) ++s;
        Weyl x = w * Weyl::s(n, s);
        Hecke b = kl_basis(x, length_cap).times_b_s(s);
        for (;;) {
            const Weyl *bad = nullptr;
            for (auto &[y, c] : b.terms())
                if (y != w && c.low() <= 0 && (!bad || length_window_less(*bad, y))) bad = &y;
            if (!bad) break;
            Weyl y = *bad;
            Laurent c = b.coeff(y), q;
            for (int e = c.low(); e <= 0; ++e) {
                q += Laurent(c.coeff(e), e);
                if (e < 0) q += Laurent(c.coeff(e), -e);
            }
            b -= q * kl_basis(y, length_cap);
        }
        result = b;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, result);
    return result;
}

bool kl_coefficients_positive_degree(const Hecke &b, const Weyl &w) {
    if (b.coeff(w) != Laurent(1)) return false;
    for (auto &[y, c] : b.terms())
        if (y != w && c.low() < 1) return false;
    return b.bar() == b;
}

namespace {

void check_c_args(const Subset &I, const Subset &X, const Subset &Y) {
    if (!I.proper() || !X.proper()) throw std::invalid_argument("I and X must be proper");
    if (!Y.subset_of(X)) throw std::invalid_argument("Y must lie inside X");
    if (!is_tau_suffix(I, Y)) throw std::invalid_argument("Y is not a tau-suffix for I");
}

// options for peeling one element off Y: (m, whether m grows)
std::vector<std::pair<int, bool>> peel_options(const Subset &I, const Subset &Y) {
    std::vector<std::pair<int, bool>> out;
    for (auto &A : tau_components(I)) {
        auto it = std::find_if(A.begin(), A.end(), [&](int a) { return Y.contains(a); });
        if (it == A.end()) continue;
        out.emplace_back(*it, *it != A.back());
    }
    return out;
}

Hecke c_base(const Subset &I, const Subset &X) {
    Hecke b = I.empty() ? Hecke::scalar(I.n, 1) : kl_basis(longest_element(I), 64);
    for (int l : preferred_word(X)) b = b.times_b_s(l);
    return b;
}

using CKey = std::tuple<int, uint32_t, uint32_t, uint32_t>;

} // namespace

Hecke c_element(const Subset &I, const Subset &X, const Subset &Y) {
    check_c_args(I, X, Y);
    static std::mutex mu;
    static std::map<CKey, Hecke> cache;
    CKey key{I.n, I.bits, X.bits, Y.bits};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Hecke r;
    if (Y.empty()) {
        r = c_base(I, X);
    } else {
        auto [m, grows] = peel_options(I, Y).front();
        r = c_element(I, X, Y.without(m));
        if (grows) r -= c_element(I, X.without(m).without(m + 1), Y.without(m).without(m + 1));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
}

bool c_element_order_independent(const Subset &I, const Subset &X, const Subset &Y) {
    check_c_args(I, X, Y);
    std::map<std::pair<uint32_t, uint32_t>, Hecke> memo;
    bool ok = true;
    std::function<Hecke(const Subset &, const Subset &)> go = [&](const Subset &x, const Subset &y) -> Hecke {
        auto key = std::make_pair(x.bits, y.bits);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Hecke r;
        if (y.empty()) {
            r = c_base(I, x);
        } else {
            bool first = true;
            for (auto [m, grows] : peel_options(I, y)) {
                Hecke t = go(x, y.without(m));
                if (grows) t -= go(x.without(m).without(m + 1), y.without(m).without(m + 1));
                if (first) r = t;
                else if (t != r) ok = false;
                first = false;
            }
        }
        memo.emplace(key, r);
        return r;
    };
    go(X, Y);
    return ok;
}

Hecke symbol(int n, const std::vector<SymbolTerm> &terms) {
    Hecke r(n);
    for (auto &t : terms) {
        Laurent c(t.degree % 2 ? -1 : 1, t.shift);
        r += c * kl_basis(t.w, 64);
    }
    return r;
}

Hecke braid_image(const BraidWord &b) {
    Hecke r = Hecke::scalar(b.n, 1);
    for (auto &x : b.letters) {
        if (x.gen == kOmega) r = r.times_omega(x.exp);
        else r = x.exp > 0 ? r.times_H_s(x.gen) : r.times_H_s_inverse(x.gen);
    }
    return r;
}

Hecke center_character(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("center character needs 1 <= k <= n");
    Hecke r(n);
    for (auto &lam : exterior_weights(n, k)) r += braid_image(w_lambda(lam));
    return r;
}

bool is_central(const Hecke &a) {
    int n = a.n();
    if (n == 0) return true;
    for (int i = 0; i < n; ++i)
        if (a.times_b_s(i) != Hecke::b_s(n, i) * a) return false;
    return a.times_omega(1) == Hecke::H_omega(n) * a;
}

Hecke flatten_hecke(const Hecke &a) {
    Hecke r(a.n());
    for (auto &[w, c] : a.terms()) {
        BraidWord b(w.n());
        int k = w.omega_power();
        for (int l : (w * Weyl::omega(w.n(), -k)).reduced_word()) b.letters.push_back({l, 1});
        for (int j = 0; j < std::abs(k); ++j) b.letters.push_back({kOmega, k > 0 ? 1 : -1});
        r += c * braid_image(flatten(b));
    }
    return r;
}

} // namespace tsc

namespace tsc {

namespace {

struct HeckeParser {
    int n;
    const std::string &s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("hecke parse error at position " + std::to_string(pos) + ": " + what);
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
    bool digit() const { return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); }
    long number() {
        skip();
        size_t start = pos;
        while (digit()) ++pos;
        if (start == pos) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }
    // "b10" reads letter by letter; "b{1,10}" for wide indices
    std::vector<int> letters() {
        std::vector<int> word;
        auto check = [&](long i) {
            if (i >= n) fail("generator index " + std::to_string(i) + " out of range");
            word.push_back(static_cast<int>(i));
        };
        if (pos < s.size() && s[pos] == '{') {
            ++pos;
            do check(number());
            while (eat(','));
            if (!eat('}')) fail("expected '}'");
        } else {
            if (!digit()) fail("expected generator indices");
            while (digit()) check(s[pos++] - '0');
        }
        return word;
    }
    Hecke expr() {
        Hecke r(n);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!first) break;
            Hecke t = term();
            r += sign > 0 ? t : -t;
            first = false;
        }
        return r;
    }
    Hecke term() {
        Hecke r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    // an atom with its inverse when it has one
    std::pair<Hecke, std::optional<Hecke>> atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Hecke h = expr();
            if (!eat(')')) fail("expected ')'");
            return {h, std::nullopt};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return {Hecke::scalar(n, Laurent(number())), std::nullopt};
        ++pos;
        if (c == 'v') return {Hecke::scalar(n, Laurent::v(1)), Hecke::scalar(n, Laurent::v(-1))};
        if (c == 'w') return {Hecke::H_omega(n, 1), Hecke::H_omega(n, -1)};
        if (c == 'b') {
            auto word = letters();
            Weyl w = Weyl::from_word(n, word);
            if (w.length() != static_cast<int>(word.size())) fail("b needs a reduced word");
            return {kl_basis(w), std::nullopt};
        }
        if (c == 'H') {
            auto word = letters();
            Hecke h = Hecke::scalar(n, 1), inv = Hecke::scalar(n, 1);
            for (int i : word) h = h.times_H_s(i);
            for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv.times_H_s_inverse(*it);
            return {h, inv};
        }
        --pos;
        fail(std::string("unexpected '") + c + "'");
    }
    Hecke factor() {
        auto [h, inv] = atom();
        if (!eat('^')) return h;
        bool neg = eat('-');
        long k = number();
        if (neg && !inv) fail("negative power of a non-invertible factor");
        Hecke base = neg ? *inv : h, r = Hecke::scalar(n, 1);
        for (long i = 0; i < k; ++i) r = r * base;
        return r;
    }
};

} // namespace

Hecke parse_hecke(int n, const std::string &text) {
    HeckeParser p{n, text};
    Hecke h = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return h;
}

} // namespace tsc
