#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsc {

// Laurent polynomial in v with int64 coefficients; overflow throws.
class Laurent {
public:
    Laurent() = default;
    Laurent(int64_t c) : Laurent(c, 0) {}
    Laurent(int64_t c, int exponent);

    static Laurent v(int exponent = 1) { return Laurent(1, exponent); }
    static Laurent quantum2() { return Laurent::v(1) + Laurent::v(-1); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int64_t coeff(int exponent) const;
    // number of nonzero coefficients
    int terms() const;

    Laurent operator-() const;
    Laurent &operator+=(const Laurent &o);
    Laurent &operator-=(const Laurent &o);
    friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
    friend Laurent operator*(const Laurent &a, const Laurent &b);
    friend bool operator==(const Laurent &a, const Laurent &b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

    // v -> v^-1
    Laurent bar() const;
    Laurent shifted(int k) const;
    // evaluate at v=1
    int64_t at_one() const;

    // descending exponents, e.g. "v+v^-1", "-2v^3+1"
    std::string str() const;

private:
    void normalize();

    int lo_ = 0;
    std::vector<int64_t> c_;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

} // namespace tsc
