#include "tsc/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsc {

BraidWord::BraidWord(int n_, bool finite_, std::vector<BraidLetter> l) : n(n_), finite(finite_), letters(std::move(l)) {
    if (n < 2) throw std::invalid_argument("braid words need n >= 2");
    for (auto &x : letters) {
        if (x.exp != 1 && x.exp != -1) throw std::invalid_argument("letter exponent must be +-1");
        if (x.gen == kOmega) {
            if (finite) throw std::invalid_argument("finite braid cannot contain omega");
        } else if (x.gen < 0 || x.gen >= n) {
            throw std::invalid_argument("generator index out of range");
        } else if (finite && x.gen == 0) {
            throw std::invalid_argument("finite braid cannot contain f0");
        }
    }
}

BraidWord BraidWord::parse(int n, const std::string &text, bool finite) {
    std::istringstream in(text);
    std::string tok;
    std::vector<BraidLetter> l;
    while (in >> tok) {
        int exp = 1;
        if (tok.size() > 1 && tok.back() == '-') {
            exp = -1;
            tok.pop_back();
        }
        if (tok == "w") {
            l.push_back({kOmega, exp});
            continue;
        }
        if (tok.size() < 2 || tok[0] != 'f' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
            throw std::invalid_argument("bad braid token '" + tok + "'");
        l.push_back({std::stoi(tok.substr(1)), exp});
    }
    return BraidWord(n, finite, std::move(l));
}

std::string BraidWord::str() const {
    std::string s;
    for (auto &x : letters) {
        if (!s.empty()) s += ' ';
        s += x.gen == kOmega ? std::string("w") : "f" + std::to_string(x.gen);
        if (x.exp < 0) s += '-';
    }
    return s;
}

BraidWord BraidWord::operator*(const BraidWord &o) const {
    if (n != o.n) throw std::invalid_argument("braid words of different n");
    BraidWord r = *this;
    r.finite = finite && o.finite;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

BraidWord BraidWord::inverse() const {
    BraidWord r = *this;
    std::reverse(r.letters.begin(), r.letters.end());
    for (auto &x : r.letters) x.exp = -x.exp;
    return r;
}

BraidWord BraidWord::pow(int k) const {
    BraidWord base = k < 0 ? inverse() : *this, r(n, finite);
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

BraidWord BraidWord::bar() const {
    BraidWord r = *this;
    for (auto &x : r.letters)
        if (x.gen != kOmega) x.exp = -x.exp;
    return r;
}

bool BraidWord::positive() const {
    return std::all_of(letters.begin(), letters.end(), [](auto &x) { return x.gen == kOmega || x.exp > 0; });
}

Weyl evaluate(const BraidWord &b) {
    Weyl w = Weyl::identity(b.n);
    for (auto &x : b.letters) w = w * (x.gen == kOmega ? Weyl::omega(b.n, x.exp) : Weyl::s(b.n, x.gen));
    return w;
}

int total_winding(const BraidWord &b) {
    if (b.finite) throw std::invalid_argument("winding is defined for cylindrical braids");
    int k = 0;
    for (auto &x : b.letters)
        if (x.gen == kOmega) k += x.exp;
    return k;
}

std::vector<int> strand_winding(const BraidWord &b) {
    int n = b.n;
    std::vector<int> wind(n);
    for (int i = 1; i <= n; ++i) {
        // follow the strand from the bottom through each letter
        int pos = i;
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
            if (it->gen == kOmega) {
                pos += it->exp;
                continue;
            }
            int r = ((pos - 1) % n + n) % n + 1; // residue in 1..n
            int g = it->gen;
            int lo = g == 0 ? n : g;
            if (r == lo) pos += 1;
            else if (r == lo % n + 1) pos -= 1;
        }
        if (((pos - i) % n + n) % n != 0) throw std::invalid_argument("strand winding needs a pure braid");
        wind[i - 1] = (pos - i) / n;
    }
    return wind;
}

BraidWord y_braid(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("y_i needs 1 <= i <= n");
    std::vector<BraidLetter> l{{kOmega, 1}};
    for (int j = i - 2; j >= 0; --j) l.push_back({j, -1});
    for (int j = n - 1; j >= i; --j) l.push_back({j, 1});
    return BraidWord(n, false, std::move(l));
}

BraidWord w_lambda(const std::vector<int> &lambda) {
    int n = static_cast<int>(lambda.size());
    BraidWord r(n);
    for (int i = 1; i <= n; ++i) r = r * y_braid(n, i).pow(lambda[i - 1]);
    return r;
}

bool is_dominant(const std::vector<int> &lambda) {
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    return true;
}

BraidWord w_lambda_positive(const std::vector<int> &lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("positive expression needs a dominant weight");
    int n = static_cast<int>(lambda.size());
    BraidWord r(n);
    // lambda = sum a_k varpi_k with a_k = lambda_k - lambda_{k+1}
    for (int k = 1; k <= n; ++k) {
        int a = k < n ? lambda[k - 1] - lambda[k] : lambda[n - 1];
        if (a == 0) continue;
        if (k == n) {
            r = r * BraidWord(n, false, {{kOmega, a > 0 ? 1 : -1}}).pow(std::abs(a) * n);
            continue;
        }
        BraidWord yk(n);
        for (int i = 1; i <= k; ++i) yk = yk * y_braid(n, i);
        Weyl u = Weyl::omega(n, -k) * evaluate(yk);
        std::vector<BraidLetter> l(k, BraidLetter{kOmega, 1});
        for (int g : u.reduced_word()) l.push_back({g, 1});
        r = r * BraidWord(n, false, std::move(l)).pow(a);
    }
    return r;
}

BraidWord flatten(const BraidWord &b) {
    if (b.finite) return b;
    int n = b.n;
    BraidWord r(n, true);
    BraidWord om(n, true), f0(n, true);
    for (int i = 1; i <= n - 1; ++i) om.letters.push_back({i, 1});
    for (int i = n - 1; i >= 2; --i) f0.letters.push_back({i, -1});
    f0.letters.push_back({1, 1});
    for (int i = 2; i <= n - 1; ++i) f0.letters.push_back({i, 1});
    for (auto &x : b.letters) {
        if (x.gen == kOmega) r = r * (x.exp > 0 ? om : om.inverse());
        else if (x.gen == 0) r = r * (x.exp > 0 ? f0 : f0.inverse());
        else r.letters.push_back(x);
    }
    return r;
}

BraidWord jm_braid(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("j_i needs 1 <= i <= n");
    BraidWord r(n, true);
    for (int j = i; j <= n - 1; ++j) r.letters.push_back({j, 1});
    for (int j = n - 1; j >= i; --j) r.letters.push_back({j, 1});
    return r;
}

std::vector<std::vector<int>> exterior_weights(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    std::fill(e.begin(), e.begin() + k, 1);
    do out.push_back(e);
    while (std::prev_permutation(e.begin(), e.end()));
    return out;
}

} // namespace tsc
