#include "tsc/gaitsgory.hpp"
#include "tsc/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace tsc {

namespace {

using BMor = SparseMor<BimodArith>;

bool bzero(const BMor &m, bool mod_delta) {
    for (auto &[key, x] : m)
        if (!(mod_delta ? x.mod_delta() : x).is_zero()) return false;
    return true;
}

// coordinates of a list of sparse maps: (pair, row, col, monomial) -> column
struct Flattener {
    std::map<std::tuple<int, int, int, int, Poly::Mono>, int> cols;
    bool mod_delta = false;

    SparseRow row(const BMor &m) {
        SparseRow r;
        for (auto &[key, x] : m) {
            Morphism y = mod_delta ? x.mod_delta() : x;
            for (int i = 0; i < y.rows(); ++i)
                for (int j = 0; j < y.cols(); ++j)
                    for (auto &[mono, c] : y.at(i, j).terms()) {
                        auto k = std::make_tuple(key.first, key.second, i, j, mono);
                        auto it = cols.try_emplace(k, static_cast<int>(cols.size())).first;
                        r[it->second] += c;
                    }
        }
        for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
        return r;
    }
};

// solve sum_t x_t images[t] = target; transposes the coordinate vectors
std::optional<std::vector<mpq_class>> solve_linear(const std::vector<BMor> &images, const BMor &target, bool mod_delta,
                                                   int *kernel = nullptr) {
    Flattener fl;
    fl.mod_delta = mod_delta;
    std::vector<SparseRow> vecs;
    for (auto &m : images) vecs.push_back(fl.row(m));
    SparseRow tv = fl.row(target);
    int nu = static_cast<int>(images.size());
    // one equation per coordinate, unknowns x_0..x_{nu-1} and t (column nu)
    std::map<int, SparseRow> eqs;
    for (int u = 0; u < nu; ++u)
        for (auto &[c, v] : vecs[u]) eqs[c][u] = v;
    for (auto &[c, v] : tv) eqs[c][nu] = -v;
    RowEchelon re(nu + 1);
    for (auto &[c, r] : eqs) re.insert(r);
    auto ns = re.nullspace();
    std::optional<std::vector<mpq_class>> sol;
    int with_t = 0;
    for (auto &v : ns)
        if (v[nu] != 0) {
            ++with_t;
            if (!sol) {
                std::vector<mpq_class> x(nu);
                for (int u = 0; u < nu; ++u) x[u] = v[u] / v[nu];
                sol = x;
            }
        }
    if (kernel) *kernel = static_cast<int>(ns.size()) - (with_t ? 1 : 0);
    return sol;
}

int span_rank(const std::vector<BMor> &maps, bool mod_delta) {
    Flattener fl;
    fl.mod_delta = mod_delta;
    std::vector<SparseRow> rows;
    for (auto &m : maps) rows.push_back(fl.row(m));
    RowEchelon re(static_cast<int>(fl.cols.size()));
    int r = 0;
    for (auto &row : rows) r += re.insert(row);
    return r;
}

// all basis maps P -> Q of homological degree hom and internal degree e
std::vector<BMor> map_basis(const Pseudocomplex<BimodArith> &P, const Pseudocomplex<BimodArith> &Q, int hom, int e,
                            bool mod_delta) {
    std::vector<BMor> out;
    int n = P.ar.n;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < Q.size(); ++b) {
            if (Q.summands[b].degree != P.summands[a].degree + hom) continue;
            int raw = e + Q.summands[b].shift - P.summands[a].shift;
            for (auto &m : hom_basis(n, P.summands[a].label, Q.summands[b].label, raw, mod_delta))
                out.push_back(BMor{{{a, b}, m}});
        }
    return out;
}

Pseudocomplex<BimodArith> one_term(int n, const BSWord &w) {
    Pseudocomplex<BimodArith> P(BimodArith{n});
    P.add(word_label(w), w, 0, 0);
    return P;
}

BSWord concat(BSWord a, const BSWord &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

HomotopySearch find_homotopy(const Pseudocomplex<BimodArith> &P, const Pseudocomplex<BimodArith> &Q, const BMor &g,
                             int e, bool mod_delta) {
    const auto &ar = P.ar;
    HomotopySearch r;
    auto basis = map_basis(P, Q, -1, e, mod_delta);
    std::vector<BMor> images;
    for (auto &h : basis) images.push_back(nulhomotopic(P, Q, h));
    auto sol = solve_linear(images, g, mod_delta, &r.kernel_dim);
    if (sol) {
        r.solvable = true;
        for (size_t t = 0; t < basis.size(); ++t)
            if ((*sol)[t] != 0)
                for (auto &[key, m] : basis[t]) {
                    Morphism x = (*sol)[t] * m;
                    auto it = r.h.find(key);
                    if (it == r.h.end()) r.h.emplace(key, x);
                    else it->second += x;
                }
        for (auto it = r.h.begin(); it != r.h.end();) it = it->second.is_zero() ? r.h.erase(it) : std::next(it);
    }
    std::vector<BMor> trivial;
    for (auto &K : map_basis(P, Q, -2, e, mod_delta))
        trivial.push_back(add(ar, compose(ar, Q.d, K), compose(ar, K, P.d), -1));
    r.trivial_dim = span_rank(trivial, mod_delta);
    return r;
}

// ---------------------------------------------------------------- H

BMor build_H_homotopy(const BimodComplex &F) {
    BMor H;
    if (F.sets.empty()) return H;
    int n = F.sets[0].n;
    for (int a = 0; a < F.P.size(); ++a) {
        const Subset &Z = F.sets[a];
        int k = F.P.summands[a].degree;
        if (Z.contains(1)) {
            int b = F.index(Z.without(1), k - 1);
            if (b >= 0) H.emplace(std::make_pair(a, b), dot_down(Z, Z.without(1)));
        } else if (k == n - 1 - Z.size()) {
            for (int i = 0; i < n; ++i) {
                if (i == 1 || Z.contains(i) || !Z.with(i).proper()) continue;
                int b = F.index(Z.with(i), k - 1);
                if (b < 0) continue;
                Morphism m = -dot_up(Z, Z.with(i));
                auto it = H.find({a, b});
                if (it == H.end()) H.emplace(std::make_pair(a, b), m);
                else it->second += m;
            }
        }
    }
    return H;
}

Certificate verify_x1_commutation(int n) {
    if (n > 4) throw std::invalid_argument("bimodule backend is capped at n = 4");
    Certificate cert{"x_1 on the left is homotopic to x_2 on the right", n, {{"backend", "bimodule"}}, {}, true};
    auto F = build_F_bimod(n);
    auto H = build_H_homotopy(F);
    auto dh = nulhomotopic(F.P, F.P, H);
    int diag = 0;
    for (int a = 0; a < F.P.size(); ++a) {
        const BSWord &w = F.P.summands[a].label;
        Morphism want = left_mult(n, w, Poly::x(n, 1)) - Morphism::identity(n, w).times(Poly::x(n, 2));
        auto it = dh.find({a, a});
        Morphism got = it == dh.end() ? Morphism(n, w, w, 2) : it->second;
        bool ok = (got - want).mod_delta().is_zero();
        cert.check(ok, "dH + Hd differs from x_1 - x_2 at " + F.P.summands[a].id);
        diag += ok;
    }
    for (auto &[key, m] : dh)
        if (key.first != key.second)
            cert.check(m.mod_delta().is_zero(), "dH + Hd has an off-diagonal entry " + F.P.summands[key.first].id + " -> " +
                                                    F.P.summands[key.second].id);
    cert.step(std::to_string(H.size()) + " homotopy entries, " + std::to_string(diag) + " diagonal entries match");
    return cert;
}

// ---------------------------------------------------------------- phi at n = 2

PhiN2 build_phi_n2() {
    const int n = 2;
    PhiN2 r;
    r.F = build_F_bimod(n).P;
    r.B1F = tensor(one_term(n, {1}), r.F);
    r.FB0 = tensor(r.F, one_term(n, {0}));
    auto at = [](const Pseudocomplex<BimodArith> &P, const BSWord &w) {
        for (int i = 0; i < P.size(); ++i)
            if (P.summands[i].label == w && P.summands[i].degree == 0) return i;
        throw std::logic_error("missing summand " + word_str(w));
    };
    int s11 = at(r.B1F, {1, 1}), s10 = at(r.B1F, {1, 0});
    int t10 = at(r.FB0, {1, 0}), t00 = at(r.FB0, {0, 0});
    Morphism m11 = merge(n, {1, 1}, 0);
    Morphism cap = enddot(n, {1}, 0) * m11;
    Morphism cup = split(n, {0}, 0) * startdot(n, {}, 0, 0);
    r.phi.emplace(std::make_pair(s11, t10), startdot(n, {1}, 1, 0) * m11);
    r.phi.emplace(std::make_pair(s10, t10), -Morphism::identity(n, {1, 0}));
    r.phi.emplace(std::make_pair(s11, t00), -(cup * cap));
    r.phi.emplace(std::make_pair(s10, t00), tensor(enddot(n, {1}, 0), split(n, {0}, 0)));
    return r;
}

Certificate verify_phi_squares_n2() {
    const int n = 2;
    Certificate cert{"phi_s squares at n = 2", n, {{"backend", "bimodule"}}, {}, true};
    auto p = build_phi_n2();
    const auto &ar = p.F.ar;
    cert.check(bzero(chain_defect(p.B1F, p.FB0, p.phi), true), "phi is not a chain map mod delta");
    cert.check(bzero(chain_defect(p.B1F, p.FB0, p.phi), false), "phi is not an exact chain map");
    // zero exactly out of the summands B_1 R(+-1)
    bool zeros = true, nonzero = false;
    for (auto &[key, m] : p.phi) {
        auto &s = p.B1F.summands[key.first];
        if (s.label.size() == 1) zeros = false;
        if (s.label == BSWord{1, 1}) nonzero |= !m.is_zero();
    }
    cert.check(zeros, "phi is nonzero on B_1 R");
    cert.check(nonzero, "phi vanishes on B_1 B_1");

    BMor sd_right, sd_left, ed_left, ed_right;
    for (int i = 0; i < p.F.size(); ++i) {
        const BSWord &w = p.F.summands[i].label;
        sd_right.emplace(std::make_pair(i, i), startdot(n, w, static_cast<int>(w.size()), 0));
        sd_left.emplace(std::make_pair(i, i), startdot(n, w, 0, 1));
        ed_left.emplace(std::make_pair(i, i), enddot(n, concat({1}, w), 0));
        ed_right.emplace(std::make_pair(i, i), enddot(n, concat(w, {0}), static_cast<int>(w.size())));
    }
    auto g = add(ar, sd_right, compose(ar, p.phi, sd_left), -1);
    cert.check(bzero(chain_defect(p.F, p.FB0, g), true), "startdot square defect is not a chain map");
    {
        auto hs = find_homotopy(p.F, p.FB0, g, 1, true);
        cert.check(hs.solvable, "startdot square is not nulhomotopic mod delta");
        if (hs.solvable) cert.check(bzero(add(ar, nulhomotopic(p.F, p.FB0, hs.h), g, -1), true), "startdot homotopy residual");
        cert.check(hs.kernel_dim == hs.trivial_dim, "startdot homotopy is not unique up to double homotopies");
        cert.step("startdot square: " + std::to_string(hs.h.size()) + " homotopy entries, kernel " +
                  std::to_string(hs.kernel_dim) + ", trivial " + std::to_string(hs.trivial_dim) + ", exact lift " +
                  (find_homotopy(p.F, p.FB0, g, 1, false).solvable ? "exists" : "does not exist"));
        if (hs.solvable) {
            // the unique solution: identity B_0 -> B_0 and the cup R -> B_0 B_0
            for (auto &[key, m] : hs.h) {
                auto &s = p.F.summands[key.first];
                auto &t = p.FB0.summands[key.second];
                std::string what = p.F.summands[key.first].id + " -> " + p.FB0.summands[key.second].id;
                if (s.label == BSWord{0}) cert.check(m.mod_delta() == Morphism::identity(n, {0}), "homotopy entry " + what);
                else if (s.label.empty() && t.label == BSWord{0, 0})
                    cert.check(m.mod_delta() == (split(n, {0}, 0) * startdot(n, {}, 0, 0)).mod_delta(), "homotopy entry " + what);
                else cert.check(false, "unexpected homotopy entry " + what);
            }
        }
    }
    auto ge = add(ar, compose(ar, ed_right, p.phi), ed_left, -1);
    cert.check(bzero(chain_defect(p.B1F, p.F, ge), true), "enddot square defect is not a chain map");
    {
        auto hs = find_homotopy(p.B1F, p.F, ge, 1, true);
        cert.check(hs.solvable, "enddot square is not nulhomotopic mod delta");
        if (hs.solvable) cert.check(bzero(add(ar, nulhomotopic(p.B1F, p.F, hs.h), ge, -1), true), "enddot homotopy residual");
        cert.check(hs.kernel_dim == hs.trivial_dim, "enddot homotopy is not unique up to double homotopies");
        cert.step("enddot square: " + std::to_string(hs.h.size()) + " homotopy entries, kernel " +
                  std::to_string(hs.kernel_dim) + ", trivial " + std::to_string(hs.trivial_dim));
    }
    return cert;
}

// ---------------------------------------------------------------- F B_1 at n = 2

Certificate verify_FB1_n2() {
    const int n = 2;
    Certificate cert{"F B_1 reduces to B_0 B_1 at n = 2", n, {{"backend", "bimodule"}}, {}, true};
    auto F = build_F_bimod(n).P;
    auto T = tensor(F, one_term(n, {1}));
    const auto &ar = T.ar;
    int mid = -1;
    for (int i = 0; i < T.size(); ++i)
        if (T.summands[i].label == BSWord{1, 1}) mid = i;
    const BSWord w11{1, 1}, w1{1};
    Morphism sp = split(n, w1, 0), mg = merge(n, w11, 0);
    Morphism iota1 = poly_box(n, w11, 1, xi(n, 1)) * sp, pi1 = mg;
    Morphism iota2 = sp;
    std::vector<BMor> imgs;
    auto cand = hom_basis(n, w11, w1, 1);
    for (auto &b : cand) imgs.push_back(BMor{{{0, 0}, b * iota2}, {{0, 1}, b * iota1}});
    auto sol = solve_linear(imgs, BMor{{{0, 0}, Morphism::identity(n, w1)}}, false);
    cert.check(bool(sol), "no projection onto the upper B_1 summand");
    if (!sol) return cert;
    Morphism pi2(n, w11, w1, 1);
    for (size_t t = 0; t < cand.size(); ++t) pi2 += (*sol)[t] * cand[t];
    cert.check(pi1 * iota1 == Morphism::identity(n, w1) && (pi1 * iota2).is_zero() && (pi2 * iota1).is_zero() &&
                   pi2 * iota2 == Morphism::identity(n, w1),
               "B_1 B_1 splitting maps are not orthogonal idempotents");
    cert.check(iota1 * pi1 + iota2 * pi2 == Morphism::identity(n, w11), "B_1 B_1 splitting is incomplete");

    // replace B_1 B_1 by B_1(-1) + B_1(1)
    Pseudocomplex<BimodArith> S(ar);
    std::vector<int> to(T.size(), -1);
    for (int i = 0; i < T.size(); ++i)
        if (i != mid) to[i] = S.add(T.summands[i].id, T.summands[i].label, T.summands[i].shift, T.summands[i].degree);
    int p1 = S.add("B1(-1)@0", w1, -1, 0), p2 = S.add("B1(1)@0", w1, 1, 0);
    for (auto &[key, m] : T.d) {
        auto [a, b] = key;
        if (a == mid) {
            S.set(p1, to[b], m * iota1);
            S.set(p2, to[b], m * iota2);
        } else if (b == mid) {
            S.set(to[a], p1, pi1 * m);
            S.set(to[a], p2, pi2 * m);
        } else S.set(to[a], to[b], m);
    }
    try {
        validate(S);
    } catch (const std::exception &e) {
        cert.check(false, std::string("split complex: ") + e.what());
        return cert;
    }
    auto find = [&](const Pseudocomplex<BimodArith> &P, const BSWord &w, int deg) {
        for (int i = 0; i < P.size(); ++i)
            if (P.summands[i].label == w && P.summands[i].degree == deg && P.summands[i].shift == deg) return i;
        return -1;
    };
    try {
        auto g1 = gaussian_eliminate(S, find(S, w1, -1), p1);
        auto &Q1 = g1.Q;
        int q2 = -1;
        for (int i = 0; i < Q1.size(); ++i)
            if (Q1.summands[i].id == "B1(1)@0") q2 = i;
        auto g2 = gaussian_eliminate(Q1, q2, find(Q1, w1, 1));
        auto &R = g2.Q;
        cert.check(R.size() == 1 && R.summands[0].label == BSWord({0, 1}) && R.summands[0].shift == 0 &&
                       R.summands[0].degree == 0,
                   "survivor is not B_0 B_1 in degree 0");
        cert.check(equal(ar, compose(ar, g1.alpha, g1.beta), identity_map(Q1)), "first elimination: alpha beta != id");
        cert.step("eliminated B_1(-1) against the lower piece and the upper piece against B_1(1)");
    } catch (const std::exception &e) {
        cert.check(false, e.what());
    }
    return cert;
}

} // namespace tsc
