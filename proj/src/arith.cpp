#include "tsc/arith.hpp"

#include "tsc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tsc {

DeltaPoly operator+(const DeltaPoly &a, const DeltaPoly &b) {
    DeltaPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = checked_add(r.c[k], a.c[k]);
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = checked_add(r.c[k], b.c[k]);
    r.trim();
    return r;
}

DeltaPoly operator*(const DeltaPoly &a, const DeltaPoly &b) {
    DeltaPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = checked_add(r.c[i + j], checked_mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

std::string DeltaPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        if (!c[k]) continue;
        int64_t v = c[k];
        if (!first) os << (v < 0 ? "-" : "+");
        else if (v < 0) os << "-";
        int64_t a = v < 0 ? -v : v;
        if (a != 1 || k == 0) os << a;
        if (k > 0) os << "d" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return os.str();
}

IntArith::Mor IntArith::times_delta(const Mor &a) const {
    if (a.is_zero()) return a;
    Mor r = a;
    r.c.insert(r.c.begin(), 0);
    return r;
}

std::optional<IntArith::Mor> IntArith::divide_delta(const Mor &a) const {
    if (a.is_zero()) return a;
    if (a.c[0] != 0) return std::nullopt;
    Mor r = a;
    r.c.erase(r.c.begin());
    return r;
}

std::optional<IntArith::Mor> IntArith::inverse(const Mor &a) const {
    if (a.c.size() == 1 && (a.c[0] == 1 || a.c[0] == -1)) return a;
    return std::nullopt;
}

SignMor sign_marker(const std::vector<SignOp> &ops, int64_t coeff) {
    SignMor m;
    if (coeff) m.terms[ops] = coeff;
    return m;
}

std::string SignMor::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[ops, c] : terms) {
        if (!first || c < 0) os << (c < 0 ? "-" : "+");
        int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a;
        if (ops.empty()) os << "id";
        for (size_t k = 0; k < ops.size(); ++k) {
            if (k) os << ".";
            if (ops[k].kind == 'd') os << "d";
            else os << (ops[k].kind == 'V' ? "V" : "A") << ops[k].index;
        }
        first = false;
    }
    return os.str();
}

namespace {

void accumulate(SignMor &m, std::vector<SignOp> ops, int64_t c) {
    std::stable_sort(ops.begin(), ops.end(), [](const SignOp &a, const SignOp &b) { return a.index < b.index; });
    auto it = m.terms.find(ops);
    if (it == m.terms.end()) m.terms.emplace(std::move(ops), c);
    else {
        it->second = checked_add(it->second, c);
        if (!it->second) m.terms.erase(it);
    }
}

} // namespace

SignMor SignArith::compose(const Mor &g, const Mor &f) const {
    SignMor r;
    for (auto &[fo, fc] : f.terms)
        for (auto &[go, gc] : g.terms) {
            auto ops = fo;
            ops.insert(ops.end(), go.begin(), go.end());
            accumulate(r, std::move(ops), checked_mul(fc, gc));
        }
    return r;
}

SignMor SignArith::add(const Mor &a, const Mor &b) const {
    SignMor r = a;
    for (auto &[o, c] : b.terms) accumulate(r, o, c);
    return r;
}

SignMor SignArith::scale(const Mor &a, int k) const {
    SignMor r;
    if (!k) return r;
    for (auto &[o, c] : a.terms) r.terms.emplace(o, checked_mul(c, k));
    return r;
}

SignMor SignArith::times_delta(const Mor &a) const {
    SignMor r;
    for (auto &[o, c] : a.terms) {
        auto ops = o;
        ops.push_back({INT_MIN, 'd'});
        accumulate(r, std::move(ops), c);
    }
    return r;
}

std::optional<SignMor> SignArith::divide_delta(const Mor &a) const {
    SignMor r;
    for (auto &[o, c] : a.terms) {
        auto it = std::find_if(o.begin(), o.end(), [](const SignOp &op) { return op.kind == 'd'; });
        if (it == o.end()) return std::nullopt;
        auto ops = o;
        ops.erase(ops.begin() + (it - o.begin()));
        accumulate(r, std::move(ops), c);
    }
    return r;
}

std::optional<SignMor> SignArith::inverse(const Mor &a) const {
    if (a.terms.size() == 1 && a.terms.begin()->first.empty() &&
        (a.terms.begin()->second == 1 || a.terms.begin()->second == -1))
        return a;
    return std::nullopt;
}

SignMor SignArith::dual(const Mor &a) const {
    SignMor r;
    for (auto &[o, c] : a.terms) {
        std::vector<SignOp> ops(o.rbegin(), o.rend());
        for (auto &op : ops)
            if (op.kind != 'd') op.kind = op.kind == 'A' ? 'V' : 'A';
        accumulate(r, std::move(ops), c);
    }
    return r;
}

std::optional<Morphism> BimodArith::divide_delta(const Mor &a) const {
    Morphism r(a.n(), a.src(), a.tgt(), a.degree() - 2);
    Poly d = Poly::delta(a.n());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            if (!a.at(i, j).divides_by(d, r.at(i, j))) return std::nullopt;
        }
    return r;
}

BSWord BimodArith::tensor_obj(const Obj &a, const Obj &b) const {
    BSWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::optional<Morphism> invert(const Morphism &m) {
    int size = m.rows();
    if (size != m.cols()) return std::nullopt;
    int n = m.n();
    // row-reduce [m | id] treating rows of the target basis
    std::vector<std::vector<Poly>> a(size, std::vector<Poly>(size)), b(size, std::vector<Poly>(size));
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) a[r][c] = m.at(r, c);
    for (int r = 0; r < size; ++r) b[r][r] = Poly::constant(n, 1);
    std::vector<bool> row_used(size, false), col_used(size, false);
    std::vector<int> pivot_row_of(size, -1);
    for (int step = 0; step < size; ++step) {
        int pr = -1, pc = -1;
        for (int c = 0; c < size && pr < 0; ++c) {
            if (col_used[c]) continue;
            for (int r = 0; r < size; ++r)
                if (!row_used[r] && !a[r][c].is_zero() && a[r][c].is_constant()) {
                    pr = r;
                    pc = c;
                    break;
                }
        }
        if (pr < 0) return std::nullopt;
        mpq_class inv = 1 / a[pr][pc].constant_term();
        for (int c = 0; c < size; ++c) {
            a[pr][c] *= inv;
            b[pr][c] *= inv;
        }
        for (int r = 0; r < size; ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            Poly f = a[r][pc];
            for (int c = 0; c < size; ++c) {
                if (!a[pr][c].is_zero()) a[r][c] -= f * a[pr][c];
                if (!b[pr][c].is_zero()) b[r][c] -= f * b[pr][c];
            }
        }
        row_used[pr] = col_used[pc] = true;
        pivot_row_of[pc] = pr;
    }
    // a is now a permutation matrix: source column c sits in row pivot_row_of[c]
    Morphism inv(n, m.tgt(), m.src(), -m.degree());
    for (int c = 0; c < size; ++c)
        for (int r = 0; r < size; ++r) inv.at(c, r) = b[pivot_row_of[c]][r];
    if (m * inv != Morphism::identity(n, m.tgt()) || inv * m != Morphism::identity(n, m.src())) return std::nullopt;
    return inv;
}

} // namespace tsc
