#include "tsc/gaitsgory.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsc {

std::string Certificate::failure() const {
    for (auto &s : steps)
        if (s.rfind("FAIL ", 0) == 0) return s.substr(5);
    return {};
}

bool in_P(const Subset &X, int k) {
    if (!X.proper()) return false;
    int m = X.size(), n = X.n;
    return m <= n - 1 - std::abs(k) && (n - 1 - k - m) % 2 == 0;
}

namespace {

bool size_then_bits(const Subset &a, const Subset &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits < b.bits;
}

void check_n(int n) {
    if (n < 2 || n > Poly::kMaxN) throw std::invalid_argument("n must lie in [2, " + std::to_string(Poly::kMaxN) + "]");
}

} // namespace

SubsetFamily build_P(int n) {
    check_n(n);
    SubsetFamily P;
    auto all = proper_subsets(n);
    std::sort(all.begin(), all.end(), size_then_bits);
    for (int k = -(n - 1); k <= n - 1; ++k)
        for (auto &X : all)
            if (in_P(X, k)) P[k].push_back(X);
    return P;
}

SubsetFamily build_Q(int n) {
    auto P = build_P(n);
    SubsetFamily Q;
    for (int k = -n; k <= n; ++k) {
        auto it = P.find(k >= 0 ? k + 1 : k - 1);
        if (it != P.end()) Q[k] = it->second;
    }
    return Q;
}

std::string word_label(const BSWord &w) { return w.empty() ? "R" : "B" + word_str(w); }

std::string summand_id(const Subset &X, int k) { return word_label(preferred_word(X)) + "@" + std::to_string(k); }

int dot_coefficient(const Subset &X, const Subset &Y) {
    bool up = X.subset_of(Y);
    const Subset &small = up ? X : Y, &big = up ? Y : X;
    int i = big.minus(small).members().front();
    BSWord w = preferred_word(big);
    w.erase(std::find(w.begin(), w.end(), i));
    return dot_sign(small, big) * letter_permutation_sign(preferred_word(small), w);
}

namespace {

bool adjacent(const Subset &X, const Subset &Y) { return __builtin_popcount(X.bits ^ Y.bits) == 1; }

template <class A, class Label, class Dot>
IndexedComplex<A> dot_complex(A ar, const SubsetFamily &fam, Label label, Dot dot, int sign) {
    IndexedComplex<A> C{Pseudocomplex<A>(std::move(ar)), {}};
    for (auto &[k, sets] : fam)
        for (auto &X : sets) {
            C.P.add(summand_id(X, k), label(X), k, k);
            C.sets.push_back(X);
        }
    for (int a = 0; a < C.P.size(); ++a)
        for (int b = 0; b < C.P.size(); ++b) {
            if (C.P.summands[b].degree != C.P.summands[a].degree + 1 || !adjacent(C.sets[a], C.sets[b])) continue;
            auto m = dot(C.sets[a], C.sets[b]);
            C.P.set(a, b, sign == 1 ? m : C.P.ar.neg(m));
        }
    return C;
}

SignMor sign_dot(const Subset &X, const Subset &Y) {
    bool up = X.subset_of(Y);
    int i = (up ? Y.minus(X) : X.minus(Y)).members().front();
    return sign_marker({{i, up ? 'V' : 'A'}}, dot_coefficient(X, Y));
}

Morphism bimod_dot(const Subset &X, const Subset &Y) { return X.subset_of(Y) ? dot_up(X, Y) : dot_down(X, Y); }

std::string set_label(const Subset &X) { return word_label(preferred_word(X)); }

} // namespace

SignComplex build_F_sign(int n) { return dot_complex(SignArith{}, build_P(n), set_label, sign_dot, 1); }

SignComplex build_I_sign(int n) { return dot_complex(SignArith{}, build_Q(n), set_label, sign_dot, -1); }

BimodComplex build_F_bimod(int n) {
    return dot_complex(BimodArith{n}, build_P(n), [](const Subset &X) { return preferred_word(X); }, bimod_dot, 1);
}

BimodComplex build_I_bimod(int n) {
    return dot_complex(BimodArith{n}, build_Q(n), [](const Subset &X) { return preferred_word(X); }, bimod_dot, -1);
}

// ---------------------------------------------------------------- d^2

namespace {

// the double differential B_Z -> B_Z summed over all indices
SignMor same_sum(const Subset &Z) {
    SignMor s;
    for (int i = 0; i < Z.n; ++i) {
        if (Z.contains(i)) s.terms[{{i, 'A'}, {i, 'V'}}] = 1;
        else s.terms[{{i, 'V'}, {i, 'A'}}] = 1;
    }
    return s;
}

// replace each diagonal d^2 entry equal to the full double differential by delta
template <class Cplx>
SparseMor<SignArith> reduce_same(const Cplx &C, const SparseMor<SignArith> &dd, Certificate &cert, const std::string &name) {
    SparseMor<SignArith> out;
    int bad = 0;
    for (auto &[key, m] : dd) {
        auto [a, b] = key;
        if (C.sets[a] != C.sets[b]) {
            if (bad++ < 3)
                cert.check(false, name + ": off-diagonal d^2 " + C.P.summands[a].id + " -> " + C.P.summands[b].id + " = " +
                                      m.str());
            continue;
        }
        if (!(m == same_sum(C.sets[a]))) {
            if (bad++ < 3) cert.check(false, name + ": diagonal d^2 at " + C.P.summands[a].id + " = " + m.str());
            continue;
        }
        out.emplace(key, sign_marker({{INT_MIN, 'd'}}, 1));
    }
    return out;
}

template <class A> bool is_zero_map(const A &ar, const SparseMor<A> &m) {
    for (auto &kv : m)
        if (!ar.is_zero(kv.second)) return false;
    return true;
}

template <class A>
void check_monodromy_structure(const IndexedComplex<A> &F, const IndexedComplex<A> &I, const SparseMor<A> &mu,
                               Certificate &cert, const std::string &name) {
    const auto &ar = F.P.ar;
    auto fac = monodromy_factors(F, I);
    cert.check(equal(ar, mu, fac.mu), name + ": mu differs from inclusion after projection");
    auto sub = shifted(I.P, 1, -1), quo = shifted(I.P, -1, 1);
    cert.check(is_zero_map(ar, chain_defect(sub, F.P, fac.inclusion)), name + ": I(1)[-1] is not a subcomplex");
    cert.check(is_zero_map(ar, chain_defect(F.P, quo, fac.projection)), name + ": I(-1)[1] is not a quotient");
    // mu : F -> F(-2)[2] is a chain map, exactly
    cert.check(is_zero_map(ar, chain_defect(F.P, F.P, mu)), name + ": mu is not a chain map");
    auto mu2 = compose(ar, mu, mu);
    bool nil = is_zero_map(ar, mu2);
    cert.check(nil == (F.P.size() > 0 && F.sets[0].n == 2), name + ": mu^2 vanishes exactly when n = 2");
    cert.step(name + ": " + std::to_string(mu.size()) + " mu entries, mu^2 " + (nil ? "zero" : "nonzero"));
}

} // namespace

Certificate verify_d2_sign(int n) {
    Certificate cert{"d2 = mu delta (sign level)", n, {{"backend", "sign"}}, {}, true};
    auto F = build_F_sign(n);
    auto I = build_I_sign(n);
    cert.step("F has " + std::to_string(F.P.size()) + " summands, " + std::to_string(F.P.d.size()) + " dots");
    auto reduced = reduce_same(F, d_squared(F.P), cert, "F");
    auto mu = divide_by_delta(F.P.ar, reduced, "d^2");
    check_monodromy_structure(F, I, mu, cert, "F");
    auto Ired = reduce_same(I, d_squared(I.P), cert, "I");
    cert.step("I: " + std::to_string(Ired.size()) + " diagonal d^2 entries reduce to delta");
    auto Fs = build_Fstar_sign(n);
    auto Is = sigma_complex(I);
    auto mus = divide_by_delta(Fs.P.ar, reduce_same(Fs, d_squared(Fs.P), cert, "F*"), "d^2");
    check_monodromy_structure(Fs, Is, mus, cert, "F*");
    return cert;
}

namespace {

Subset set_of_label(int n, const std::string &label) {
    std::vector<int> members;
    if (label != "R") {
        if (label.empty() || label[0] != 'B') throw std::invalid_argument("bad summand label '" + label + "'");
        std::string body = label.substr(1);
        if (body.find(',') != std::string::npos) {
            std::istringstream in(body);
            for (std::string tok; std::getline(in, tok, ',');) members.push_back(std::stoi(tok));
        } else {
            for (char c : body) members.push_back(c - '0');
        }
    }
    return Subset::of(n, members);
}

Subset set_of_label(int n, const BSWord &w) { return Subset::of(n, w); }

template <class A, class Check>
Certificate verify_d2_loaded_impl(const Pseudocomplex<A> &P, int n, const std::string &backend, Check same_object) {
    Certificate cert{"d2 = mu delta (loaded complex)", n, {{"backend", backend}}, {}, true};
    IndexedComplex<A> C{P, {}};
    for (auto &s : P.summands) C.sets.push_back(set_of_label(n, s.label));
    cert.step(std::to_string(P.size()) + " summands, " + std::to_string(P.d.size()) + " differential entries");
    SparseMor<A> mu;
    try {
        mu = same_object(C, cert);
    } catch (const std::exception &e) {
        cert.check(false, e.what());
        return cert;
    }
    for (auto &[key, m] : mu)
        cert.check(key.first != key.second && C.sets[key.first] == C.sets[key.second],
                   "mu leaves the summand set at " + P.summands[key.first].id);
    cert.step("mu has " + std::to_string(mu.size()) + " entries, all between copies of one B_X");
    return cert;
}

} // namespace

Certificate verify_d2_loaded(const Pseudocomplex<SignArith> &P, int n) {
    return verify_d2_loaded_impl(P, n, "sign", [](const SignComplex &C, Certificate &cert) {
        return divide_by_delta(C.P.ar, reduce_same(C, d_squared(C.P), cert, "loaded"), "d^2");
    });
}

Certificate verify_d2_loaded(const Pseudocomplex<BimodArith> &P) {
    return verify_d2_loaded_impl(P, P.ar.n, "bimodule", [](const BimodComplex &C, Certificate &) { return monodromy(C.P); });
}

Certificate verify_d2_bimod(int n) {
    if (n > 4) throw std::invalid_argument("bimodule backend is capped at n = 4");
    Certificate cert{"d2 = mu delta (bimodule)", n, {{"backend", "bimodule"}}, {}, true};
    auto F = build_F_bimod(n);
    auto I = build_I_bimod(n);
    auto dd = d_squared(F.P);
    for (auto &[key, m] : dd)
        cert.check(m.mod_delta().is_zero(), "d^2 mod delta nonzero at " + F.P.summands[key.first].id + " -> " +
                                                F.P.summands[key.second].id);
    SparseMor<BimodArith> mu;
    try {
        mu = monodromy(F.P);
    } catch (const std::exception &e) {
        cert.check(false, e.what());
        return cert;
    }
    for (auto &[key, m] : mu)
        cert.check(key.first != key.second && F.sets[key.first] == F.sets[key.second] &&
                       m == Morphism::identity(n, F.P.summands[key.first].label),
                   "mu is not the identity at " + F.P.summands[key.first].id);
    check_monodromy_structure(F, I, mu, cert, "F");
    return cert;
}

// ---------------------------------------------------------------- symmetries

namespace {

BSWord label_word(const std::string &label) {
    BSWord w;
    if (label == "R") return w;
    std::string body = label.substr(1);
    if (body.find(',') != std::string::npos) {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : body) w.push_back(c - '0');
    }
    return w;
}

template <class F> SignComplex relabel(const SignComplex &C, F letter) {
    SignComplex R{Pseudocomplex<SignArith>(C.P.ar), {}};
    for (int i = 0; i < C.P.size(); ++i) {
        auto &s = C.P.summands[i];
        BSWord w = label_word(s.label);
        for (int &l : w) l = letter(l);
        Subset X(C.sets[i].n, 0);
        for (int a : C.sets[i].members()) X = X.with(letter(a));
        R.P.add(word_label(w) + "@" + std::to_string(s.degree), word_label(w), s.shift, s.degree);
        R.sets.push_back(X);
    }
    for (auto &[key, m] : C.P.d) {
        SignMor t;
        for (auto &[ops, c] : m.terms) {
            auto o = ops;
            for (auto &op : o)
                if (op.kind != 'd') op.index = letter(op.index);
            std::stable_sort(o.begin(), o.end(), [](const SignOp &a, const SignOp &b) { return a.index < b.index; });
            t.terms[o] += c;
        }
        R.P.d.emplace(key, t);
    }
    return R;
}

} // namespace

SignComplex sigma_complex(const SignComplex &F) {
    int n = F.sets.empty() ? 1 : F.sets[0].n;
    return relabel(F, [n](int l) { return (n - l) % n; });
}

SignComplex tau_complex(const SignComplex &F) {
    int n = F.sets.empty() ? 1 : F.sets[0].n;
    SignComplex R = relabel(F, [n](int l) { return (l + 1) % n; });
    // back to preferred words through the signed rex moves
    std::vector<int> g(R.P.size(), 1);
    for (int a = 0; a < R.P.size(); ++a) {
        auto &s = R.P.summands[a];
        BSWord w = label_word(s.label), p = preferred_word(R.sets[a]);
        if (w == p) continue;
        g[a] = letter_permutation_sign(w, p);
        s.label = word_label(p);
        s.id = summand_id(R.sets[a], s.degree);
    }
    for (auto &[key, m] : R.P.d)
        if (g[key.first] * g[key.second] < 0) m = R.P.ar.neg(m);
    return R;
}

SignComplex build_Fstar_sign(int n) { return sigma_complex(build_F_sign(n)); }

std::optional<std::vector<int>> sign_gauge(const SignComplex &A, const SignComplex &B) {
    if (A.P.size() != B.P.size()) return std::nullopt;
    std::vector<int> match(A.P.size(), -1);
    for (int i = 0; i < A.P.size(); ++i) {
        int j = B.index(A.sets[i], A.P.summands[i].degree);
        if (j < 0 || B.P.summands[j].shift != A.P.summands[i].shift || B.P.summands[j].label != A.P.summands[i].label)
            return std::nullopt;
        match[i] = j;
    }
    // B.d(match a, match b) g_a = g_b A.d(a, b)
    std::map<int, std::vector<std::pair<int, int>>> adj; // a -> (b, relative sign)
    int edges = 0;
    for (auto &[key, m] : A.P.d) {
        const SignMor *other = B.P.entry(match[key.first], match[key.second]);
        if (!other) return std::nullopt;
        int rel;
        if (*other == m) rel = 1;
        else if (*other == SignArith{}.neg(m)) rel = -1;
        else return std::nullopt;
        adj[key.first].push_back({key.second, rel});
        adj[key.second].push_back({key.first, rel});
        ++edges;
    }
    if (edges != static_cast<int>(B.P.d.size())) return std::nullopt;
    std::vector<int> g(A.P.size(), 0);
    for (int s = 0; s < A.P.size(); ++s) {
        if (g[s]) continue;
        g[s] = 1;
        std::deque<int> todo{s};
        while (!todo.empty()) {
            int a = todo.front();
            todo.pop_front();
            for (auto [b, rel] : adj[a]) {
                int want = g[a] * rel;
                if (!g[b]) {
                    g[b] = want;
                    todo.push_back(b);
                } else if (g[b] != want) return std::nullopt;
            }
        }
    }
    return g;
}

Certificate verify_symmetries(int n) {
    Certificate cert{"tau, sigma and duality symmetries of F", n, {{"backend", "sign"}}, {}, true};
    auto F = build_F_sign(n);
    auto trivial = [](const std::vector<int> &g) { return std::all_of(g.begin(), g.end(), [](int x) { return x == 1; }); };

    auto ss = sigma_complex(sigma_complex(F));
    auto g = sign_gauge(ss, F);
    cert.check(g && trivial(*g), "sigma sigma F = F");

    auto gt = sign_gauge(tau_complex(F), F);
    cert.check(gt && trivial(*gt), "tau(F) = F with the identity assignment");
    if (gt) {
        int flips = static_cast<int>(std::count(gt->begin(), gt->end(), -1));
        cert.step("tau gauge flips " + std::to_string(flips) + " of " + std::to_string(gt->size()) + " summands");
    }
    // tau^n acts trivially on labels
    SignComplex t = F;
    for (int i = 0; i < n; ++i) t = tau_complex(t);
    auto gn = sign_gauge(t, F);
    cert.check(gn && trivial(*gn), "tau^n F = F");

    SignComplex D{dualize(F.P), F.sets};
    auto gd = sign_gauge(D, F);
    cert.check(gd && trivial(*gd), "D(F) = F with the identity assignment");
    SignComplex DD{dualize(D.P), F.sets};
    auto gdd = sign_gauge(DD, F);
    cert.check(gdd && trivial(*gdd), "DD = id");
    bool swapped = true;
    for (auto &[key, m] : F.P.d) {
        const SignMor *dm = D.P.entry(key.second, key.first);
        for (auto &[ops, c] : m.terms)
            swapped &= dm && dm->terms.count({{ops[0].index, ops[0].kind == 'V' ? 'A' : 'V'}}) == 1;
    }
    cert.check(swapped, "duality swaps the dot kinds");

    if (n == 2) {
        auto gs = sign_gauge(build_Fstar_sign(n), F);
        cert.check(bool(gs), "F* is isomorphic to F at n = 2");
    }
    return cert;
}

// ---------------------------------------------------------------- Wakimoto

std::vector<int> wakimoto_assignment(int n) {
    auto F = build_F_sign(n);
    std::vector<int> cube(F.P.size(), 0);
    for (int a = 0; a < F.P.size(); ++a) {
        const Subset &X = F.sets[a];
        int k = F.P.summands[a].degree;
        int m = (n - 1 - X.size() - k) / 2;
        for (int i = 1; i <= n; ++i) {
            if (X.contains(i - 1)) continue;
            int below = 0;
            for (int j = 0; j <= i - 2; ++j) below += X.contains(j);
            if (below != i - 1 - m) continue;
            if (cube[a]) throw std::logic_error("Wakimoto cubes overlap at " + F.P.summands[a].id);
            cube[a] = i;
        }
        if (!cube[a]) throw std::logic_error("summand " + F.P.summands[a].id + " lies in no Wakimoto cube");
    }
    return cube;
}

Hecke F_symbol(int n) {
    Hecke r(n);
    auto F = build_F_sign(n);
    for (int a = 0; a < F.P.size(); ++a) {
        auto &s = F.P.summands[a];
        r += Laurent(s.degree % 2 ? -1 : 1, s.shift) * Hecke::bott_samelson(n, preferred_word(F.sets[a]));
    }
    return r;
}

Certificate verify_wakimoto(int n) {
    Certificate cert{"Wakimoto filtration of F", n, {}, {}, true};
    auto F = build_F_sign(n);
    std::vector<int> cube;
    try {
        cube = wakimoto_assignment(n);
    } catch (const std::exception &e) {
        cert.check(false, e.what());
        return cert;
    }
    std::vector<int> sizes(n + 1, 0);
    for (int c : cube) ++sizes[c];
    for (int i = 1; i <= n; ++i)
        cert.check(sizes[i] == (1 << (n - 1)), "cube " + std::to_string(i) + " has " + std::to_string(sizes[i]) + " summands");
    for (auto &[key, m] : F.P.d)
        cert.check(cube[key.second] <= cube[key.first], "differential " + F.P.summands[key.first].id + " -> " +
                                                            F.P.summands[key.second].id + " raises the cube index");
    for (int i = 1; i <= n; ++i) {
        Hecke sym(n);
        for (int a = 0; a < F.P.size(); ++a) {
            if (cube[a] != i) continue;
            auto &s = F.P.summands[a];
            sym += Laurent(s.degree % 2 ? -1 : 1, s.shift) * Hecke::bott_samelson(n, preferred_word(F.sets[a]));
        }
        Hecke target = braid_image(y_braid(n, i));
        cert.check(Hecke::H_omega(n) * sym == target, "cube " + std::to_string(i) + " symbol differs from y_" + std::to_string(i));
    }
    cert.step("cube sizes 2^" + std::to_string(n - 1) + ", closure and symbols checked");
    return cert;
}

// ---------------------------------------------------------------- N_I and M_J

Hecke HeckeComplex::symbol() const {
    std::vector<SymbolTerm> t;
    for (int a = 0; a < C.P.size(); ++a) t.push_back({elems[a], C.P.summands[a].shift, C.P.summands[a].degree});
    int n = C.sets.empty() ? 0 : C.sets[0].n;
    return tsc::symbol(n, t);
}

namespace {

HeckeComplex descent_complex(const Subset &I, bool left) {
    int n = I.n;
    if (!I.proper()) throw std::invalid_argument("I must be proper");
    Subset J = I.tau();
    Weyl wI = longest_element(I), wJ = longest_element(J);
    SubsetFamily fam;
    for (auto &[k, sets] : build_P(n))
        for (auto &X : sets)
            if ((left ? J : I).subset_of(X)) fam[k].push_back(X);
    auto elem = [&](const Subset &X) { return left ? wI * h_of(X) : h_of(X) * wJ; };
    HeckeComplex H;
    H.C = dot_complex(SignArith{}, fam, [&](const Subset &X) { return kl_label(elem(X)); }, sign_dot, 1);
    for (int a = 0; a < H.C.P.size(); ++a) {
        H.elems.push_back(elem(H.C.sets[a]));
        H.C.P.summands[a].id = H.C.P.summands[a].label + "@" + std::to_string(H.C.P.summands[a].degree);
    }
    return H;
}

} // namespace

HeckeComplex build_N(const Subset &I) { return descent_complex(I, true); }
HeckeComplex build_M(const Subset &I) { return descent_complex(I, false); }

int crossover_exponent(const Subset &I, const Subset &X) {
    if (!I.tau().subset_of(X)) throw std::invalid_argument("crossover sign needs tau(I) inside X");
    int a = 0;
    for (auto &c : tau_components(I)) {
        Subset A = Subset::of(I.n, c);
        if (A.subset_of(X)) a += static_cast<int>(c.size()) - 1;
    }
    return a;
}

int crossover_sign(const Subset &I, const Subset &X) { return crossover_exponent(I, X) % 2 ? -1 : 1; }

int block_order_sign(const Subset &I, const BSWord &w) {
    auto comps = tau_components(I);
    auto block = [&](int x) {
        for (size_t i = 0; i < comps.size(); ++i)
            if (std::find(comps[i].begin(), comps[i].end(), x) != comps[i].end()) return static_cast<int>(i);
        throw std::invalid_argument("letter outside every tau-component");
    };
    int s = 1;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (block(w[i]) > block(w[j])) s = -s;
    return s;
}

Certificate verify_N_equals_M(const Subset &I) {
    int n = I.n;
    Certificate cert{"N_I and M_J agree up to crossover signs", n, {{"I", I.str()}}, {}, true};
    auto N = build_N(I), M = build_M(I);
    cert.check(N.C.P.size() == M.C.P.size(), "N and M have different sizes");
    std::vector<int> corr(N.C.P.size(), -1), beta(N.C.P.size(), 1);
    for (int a = 0; a < N.C.P.size(); ++a) {
        Subset Y = correspondent_Y(I, N.C.sets[a]);
        int b = M.C.index(Y, N.C.P.summands[a].degree);
        cert.check(b >= 0 && M.elems[b] == N.elems[a], "correspondent of " + N.C.P.summands[a].id + " is missing");
        corr[a] = b;
        beta[a] = block_order_sign(I, preferred_word(N.C.sets[a])) * block_order_sign(I, preferred_word(Y));
    }
    if (!cert.verdict) return cert;
    auto comps = tau_components(I);
    int edges = 0, plain_fail = 0;
    for (auto &[key, m] : N.C.P.d) {
        auto [a, b] = key;
        const SignMor *mm = M.C.P.entry(corr[a], corr[b]);
        std::string what = N.C.P.summands[a].id + " -> " + N.C.P.summands[b].id;
        if (!mm) {
            cert.check(false, "no M differential for " + what);
            continue;
        }
        ++edges;
        int cn = static_cast<int>(m.terms.begin()->second), cm = static_cast<int>(mm->terms.begin()->second);
        int ga = crossover_sign(I, N.C.sets[a]), gb = crossover_sign(I, N.C.sets[b]);
        plain_fail += gb * cn != cm * ga;
        // in block order both dots read off strand counts; they differ by (-1)^{|A|-1}
        cert.check(gb * beta[b] * cn == cm * beta[a] * ga, "crossover signs fail to intertwine " + what);
        const Subset &big = N.C.sets[a].size() > N.C.sets[b].size() ? N.C.sets[a] : N.C.sets[b];
        int x = __builtin_ctz(N.C.sets[a].bits ^ N.C.sets[b].bits);
        for (auto &c : comps)
            if (std::find(c.begin(), c.end(), x) != c.end()) {
                int expect = (Subset::of(n, c).subset_of(big) && (c.size() - 1) % 2) ? -1 : 1;
                cert.check(cn * cm * beta[a] * beta[b] == expect, "dot signs differ by other than (-1)^{|A|-1} at " + what);
            }
    }
    cert.check(edges == static_cast<int>(M.C.P.d.size()), "M has extra differentials");
    cert.step(std::to_string(edges) + " differentials intertwined; the bare sign (-1)^{a(X)} in preferred words fails on " +
              std::to_string(plain_fail));
    return cert;
}

// ---------------------------------------------------------------- B_I F elimination trace

namespace {

std::string obj_str(const GEObject &o) {
    return "c(" + o.Z.str() + "|" + o.Y.str() + ")(" + std::to_string(o.shift) + ")@" + std::to_string(o.degree);
}

} // namespace

TensorBITrace tensorBI_object_GE(const Subset &I) {
    int n = I.n;
    TensorBITrace tr;
    tr.cert = Certificate{"B_I F reduces to N_I (object level)", n, {{"I", I.str()}}, {}, true};
    auto &cert = tr.cert;
    Subset J = I.tau();
    const Laurent q2 = Laurent::quantum2();
    Subset none(n, 0);
    std::vector<GEObject> objs;
    for (auto &[k, sets] : build_P(n))
        for (auto &X : sets) objs.push_back({X, none, k, k, c_element(I, X, none)});

    for (auto &A : tau_components(I)) {
        if (A.size() < 2) continue;
        for (size_t t = A.size() - 1; t >= 1; --t) {
            int a = A[t], b = A[t - 1];
            if (t == A.size() - 1)
                for (auto &o : objs)
                    if (o.Z.contains(a)) {
                        Hecke s = c_element(I, o.Z, o.Y.with(a));
                        cert.check(s == o.symbol, "initiate " + std::to_string(a) + " at " + obj_str(o));
                        o.Y = o.Y.with(a);
                    }
            // block key (Z without b, a ; Y without a) -> pieces
            struct Block {
                std::map<int, int> plain, down, em, ep; // degree -> index into pool
            };
            std::vector<GEObject> pool, kept;
            std::map<std::pair<uint32_t, uint32_t>, Block> blocks;
            auto key = [&](const GEObject &o) { return std::make_pair(o.Z.bits, o.Y.without(a).bits); };
            auto put = [&](std::map<int, int> &slot, GEObject o, const char *what) {
                if (slot.count(o.degree)) cert.check(false, std::string("two ") + what + " pieces at " + obj_str(o));
                slot[o.degree] = static_cast<int>(pool.size());
                pool.push_back(std::move(o));
            };
            for (auto &o : objs) {
                bool hb = o.Z.contains(b), ha = o.Z.contains(a);
                if (!hb && !ha) {
                    put(blocks[key(o)].plain, o, "plain");
                } else if (hb && !ha) {
                    Subset Z = o.Z.without(b);
                    Hecke s = c_element(I, Z, o.Y);
                    cert.check(o.symbol == q2 * s, "godown " + std::to_string(b) + " at " + obj_str(o));
                    GEObject lo{Z, o.Y, o.shift - 1, o.degree, s};
                    GEObject hi{Z, o.Y, o.shift + 1, o.degree, s};
                    put(blocks[key(lo)].em, lo, "e-");
                    put(blocks[key(hi)].ep, hi, "e+");
                } else if (!hb && ha) {
                    kept.push_back(o);
                } else {
                    GEObject up{o.Z, o.Y.with(b), o.shift, o.degree, c_element(I, o.Z, o.Y.with(b))};
                    Subset Z = o.Z.without(a).without(b);
                    GEObject dn{Z, o.Y.without(a), o.shift, o.degree, c_element(I, Z, o.Y.without(a))};
                    cert.check(o.symbol == up.symbol + dn.symbol, "grow " + std::to_string(b) + " at " + obj_str(o));
                    kept.push_back(up);
                    put(blocks[key(dn)].down, dn, "e-down");
                }
            }
            int pairs = 0;
            for (auto &[bk, blk] : blocks) {
                std::set<int> used;
                int ell = n - 1 - Subset(n, bk.first).size();
                auto cancel = [&](int p, int q) {
                    const GEObject &x = pool[p], &y = pool[q];
                    cert.check(x.shift == y.shift && x.symbol == y.symbol &&
                                   y.degree == x.degree + 1,
                               "mismatched pair " + obj_str(x) + " / " + obj_str(y));
                    cert.check(used.insert(p).second && used.insert(q).second, "piece cancelled twice: " + obj_str(x));
                    ++pairs;
                };
                for (auto [k, p] : blk.em) {
                    auto it = blk.plain.find(k - 1);
                    if (it == blk.plain.end()) cert.check(false, "e- piece without partner: " + obj_str(pool[p]));
                    else cancel(it->second, p);
                }
                for (auto [k, p] : blk.ep) {
                    if (auto it = blk.down.find(k + 1); it != blk.down.end()) cancel(p, it->second);
                    else if (auto jt = blk.plain.find(k + 1); jt != blk.plain.end()) {
                        cert.check(k + 1 == ell, "e+ piece meets plain summand below the top degree: " + obj_str(pool[p]));
                        cancel(p, jt->second);
                    } else cert.check(false, "e+ piece without partner: " + obj_str(pool[p]));
                }
                for (auto &slot : {blk.plain, blk.down})
                    for (auto [k, p] : slot)
                        cert.check(used.count(p) == 1, "summand survives elimination: " + obj_str(pool[p]));
            }
            cert.step("absence of " + std::to_string(a) + ": " + std::to_string(pairs) + " pairs cancelled, " +
                      std::to_string(kept.size()) + " objects remain");
            objs = std::move(kept);
            // the pool objects that were not plain/down/e+- are already in kept
        }
    }

    auto N = build_N(I);
    cert.check(static_cast<int>(objs.size()) == N.C.P.size(),
               "survivor count " + std::to_string(objs.size()) + " vs " + std::to_string(N.C.P.size()));
    for (auto &o : objs) {
        int a = N.C.index(o.Z, o.degree);
        bool ok = a >= 0 && o.shift == o.degree && J.subset_of(o.Z);
        if (ok) ok = o.symbol == kl_basis(N.elems[a], 64);
        cert.check(ok, "survivor " + obj_str(o) + " is not a summand of N_I");
    }
    tr.survivors = objs;
    Hecke lhs = (I.empty() ? Hecke::scalar(n, 1) : kl_basis(longest_element(I), 64)) * F_symbol(n);
    cert.check(lhs == N.symbol(), "b_{w_I} [F] differs from [N_I]");
    Hecke sum(n);
    for (auto &o : objs) sum += Laurent(o.degree % 2 ? -1 : 1, o.shift) * o.symbol;
    cert.check(sum == N.symbol(), "survivor symbols differ from [N_I]");
    return tr;
}

Certificate verify_tensorBI(int n) {
    Certificate cert{"B_I F = N_I for every proper I", n, {}, {}, true};
    for (auto &I : proper_subsets(n)) {
        TensorBITrace tr;
        try {
            tr = tensorBI_object_GE(I);
        } catch (const std::exception &e) {
            cert.check(false, "I = {" + I.str() + "}: " + e.what());
            continue;
        }
        auto N = build_N(I);
        bool mfp = is_multiplicity_free_perverse(N.C.P), conn = apparently_indecomposable(N.C.P);
        cert.check(tr.cert.verdict, "I = {" + I.str() + "}: " + tr.cert.failure());
        cert.check(mfp, "N_I is not multiplicity-free perverse for I = {" + I.str() + "}");
        cert.check(conn, "N_I is disconnected for I = {" + I.str() + "}");
        cert.step("I = {" + I.str() + "}: " + std::to_string(tr.survivors.size()) + " survivors");
    }
    return cert;
}

// ---------------------------------------------------------------- underlying vector space

std::map<int, int> underlying_vector_space(const SignComplex &F) {
    return degree_counts(F.P, [](const std::string &l) { return l == "R"; });
}

Certificate verify_underlying(int n) {
    Certificate cert{"underlying graded vector space of F", n, {}, {}, true};
    auto F = build_F_sign(n);
    auto dims = underlying_vector_space(F);
    for (auto [k, c] : dims) {
        bool expect = std::abs(k) <= n - 1 && (n - 1 - k) % 2 == 0;
        cert.check(c == (expect ? 1 : 0), "dimension in degree " + std::to_string(k));
    }
    // mu on the R summands is the regular nilpotent shift R(k) -> R(k+2)
    auto mu = monodromy_factors(F, build_I_sign(n)).mu;
    int chain = 0;
    for (int a = 0; a < F.P.size(); ++a) {
        if (!F.sets[a].empty()) continue;
        int k = F.P.summands[a].degree;
        int b = F.index(F.sets[a], k + 2);
        bool has = mu.count({a, b}) == 1;
        cert.check(has == (b >= 0), "mu does not shift R in degree " + std::to_string(k));
        chain += has;
    }
    cert.check(chain == n - 1, "mu on R is not a single Jordan block");
    return cert;
}

} // namespace tsc
