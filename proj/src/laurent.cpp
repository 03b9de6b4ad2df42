#include "tsc/laurent.hpp"

#include <stdexcept>

namespace tsc {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

Laurent::Laurent(int64_t c, int exponent) {
    if (c != 0) {
        lo_ = exponent;
        c_.push_back(c);
    }
}

void Laurent::normalize() {
    size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t last = c_.size();
    while (c_[last - 1] == 0) --last;
    if (first > 0 || last < c_.size()) {
        c_ = std::vector<int64_t>(c_.begin() + first, c_.begin() + last);
        lo_ += static_cast<int>(first);
    }
}

int64_t Laurent::coeff(int e) const {
    if (c_.empty() || e < lo_ || e > high()) return 0;
    return c_[e - lo_];
}

int Laurent::terms() const {
    int t = 0;
    for (auto c : c_) t += c != 0;
    return t;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

Laurent &Laurent::operator+=(const Laurent &o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(high(), o.high());
    std::vector<int64_t> r(hi - lo + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[lo_ - lo + i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) {
        auto &x = r[o.lo_ - lo + i];
        x = checked_add(x, o.c_[i]);
    }
    lo_ = lo;
    c_ = std::move(r);
    normalize();
    return *this;
}

Laurent &Laurent::operator-=(const Laurent &o) { return *this += -o; }

Laurent operator*(const Laurent &a, const Laurent &b) {
    Laurent r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    r.normalize();
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    if (c_.empty()) return r;
    r.lo_ = -high();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (!r.c_.empty()) r.lo_ += k;
    return r;
}

int64_t Laurent::at_one() const {
    int64_t s = 0;
    for (auto c : c_) s = checked_add(s, c);
    return s;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int e = high(); e >= lo_; --e) {
        int64_t c = c_[e - lo_];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        int64_t a = c < 0 ? -c : c;
        if (e == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += "v";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace tsc
