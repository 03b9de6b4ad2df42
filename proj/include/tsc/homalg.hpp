#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tsc {

// A morphism arithmetic A provides types Obj, Mor and const members
//   identity(Obj), compose(g, f) = g after f, add, neg, scale(m, int), is_zero,
//   equal, times_delta, divide_delta -> optional, inverse -> optional,
//   tensor_obj(a, b), tensor(f, g), describe(m)
// and optionally dual(m), dual_obj(o).

template <class A> struct Summand {
    std::string id;
    typename A::Obj label;
    int shift = 0;
    int degree = 0;
};

// sparse map between summand lists, keyed by (source index, target index)
template <class A> using SparseMor = std::map<std::pair<int, int>, typename A::Mor>;

template <class A> class Pseudocomplex {
public:
    using Obj = typename A::Obj;
    using Mor = typename A::Mor;

    Pseudocomplex() = default;
    explicit Pseudocomplex(A a) : ar(std::move(a)) {}

    A ar;
    std::vector<Summand<A>> summands;
    SparseMor<A> d;

    int size() const { return static_cast<int>(summands.size()); }
    int add(std::string id, Obj label, int shift, int degree) {
        summands.push_back({std::move(id), std::move(label), shift, degree});
        return size() - 1;
    }
    void set(int from, int to, Mor m) {
        if (from < 0 || to < 0 || from >= size() || to >= size()) throw std::out_of_range("summand index");
        if (summands[to].degree != summands[from].degree + 1)
            throw std::invalid_argument("differential must raise homological degree by one: " + summands[from].id +
                                        " -> " + summands[to].id);
        if (ar.is_zero(m)) d.erase({from, to});
        else d[{from, to}] = std::move(m);
    }
    const Mor *entry(int from, int to) const {
        auto it = d.find({from, to});
        return it == d.end() ? nullptr : &it->second;
    }
    int find(const std::string &id) const {
        for (int i = 0; i < size(); ++i)
            if (summands[i].id == id) return i;
        return -1;
    }
    std::vector<int> in_degree(int k) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (summands[i].degree == k) out.push_back(i);
        return out;
    }
    std::pair<int, int> degree_range() const {
        if (summands.empty()) return {0, -1};
        int lo = summands[0].degree, hi = lo;
        for (auto &s : summands) {
            lo = std::min(lo, s.degree);
            hi = std::max(hi, s.degree);
        }
        return {lo, hi};
    }
};

template <class A> SparseMor<A> compose(const A &ar, const SparseMor<A> &g, const SparseMor<A> &f) {
    std::map<int, std::vector<std::pair<int, const typename A::Mor *>>> by_src;
    for (auto &[key, m] : g) by_src[key.first].push_back({key.second, &m});
    SparseMor<A> out;
    for (auto &[key, m] : f) {
        auto it = by_src.find(key.second);
        if (it == by_src.end()) continue;
        for (auto &[k, gm] : it->second) {
            auto c = ar.compose(*gm, m);
            auto slot = out.find({key.first, k});
            if (slot == out.end()) out.emplace(std::make_pair(key.first, k), std::move(c));
            else slot->second = ar.add(slot->second, c);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (ar.is_zero(it->second)) it = out.erase(it);
        else ++it;
    }
    return out;
}

template <class A> SparseMor<A> add(const A &ar, SparseMor<A> a, const SparseMor<A> &b, int sign = 1) {
    for (auto &[key, m] : b) {
        auto term = sign == 1 ? m : ar.neg(m);
        auto it = a.find(key);
        if (it == a.end()) a.emplace(key, std::move(term));
        else {
            it->second = ar.add(it->second, term);
            if (ar.is_zero(it->second)) a.erase(it);
        }
    }
    return a;
}

template <class A> bool equal(const A &ar, const SparseMor<A> &a, const SparseMor<A> &b) {
    auto diff = add(ar, a, b, -1);
    for (auto &kv : diff)
        if (!ar.is_zero(kv.second)) return false;
    return true;
}

template <class A> SparseMor<A> identity_map(const Pseudocomplex<A> &P) {
    SparseMor<A> id;
    for (int i = 0; i < P.size(); ++i) id.emplace(std::make_pair(i, i), P.ar.identity(P.summands[i].label));
    return id;
}

template <class A> SparseMor<A> d_squared(const Pseudocomplex<A> &P) { return compose(P.ar, P.d, P.d); }

template <class A> SparseMor<A> divide_by_delta(const A &ar, const SparseMor<A> &m, const std::string &what,
                                                const std::function<std::string(int, int)> &name = {}) {
    SparseMor<A> out;
    for (auto &[key, x] : m) {
        auto q = ar.divide_delta(x);
        if (!q) {
            std::string where = name ? name(key.first, key.second)
                                     : std::to_string(key.first) + " -> " + std::to_string(key.second);
            throw std::runtime_error(what + " is not divisible by delta at " + where);
        }
        if (!ar.is_zero(*q)) out.emplace(key, std::move(*q));
    }
    return out;
}

// mu with d^2 = mu * delta
template <class A> SparseMor<A> monodromy(const Pseudocomplex<A> &P) {
    return divide_by_delta(P.ar, d_squared(P), "d^2",
                           [&](int a, int b) { return P.summands[a].id + " -> " + P.summands[b].id; });
}

template <class A> void validate(const Pseudocomplex<A> &P) { (void)monodromy(P); }

// d_Q f - f d_P
template <class A>
SparseMor<A> chain_defect(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q, const SparseMor<A> &f) {
    return add(P.ar, compose(P.ar, Q.d, f), compose(P.ar, f, P.d), -1);
}

// nu_f with d f - f d = nu_f delta; throws if f is not a pseudochain map
template <class A> SparseMor<A> chain_nu(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q, const SparseMor<A> &f) {
    return divide_by_delta(P.ar, chain_defect(P, Q, f), "chain map defect");
}

// d h + h d for a homotopy h : P -> Q[-1]
template <class A>
SparseMor<A> nulhomotopic(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q, const SparseMor<A> &h) {
    return add(P.ar, compose(P.ar, Q.d, h), compose(P.ar, h, P.d));
}

template <class A> struct GEResult {
    Pseudocomplex<A> Q;
    SparseMor<A> alpha; // P -> Q
    SparseMor<A> beta;  // Q -> P
    SparseMor<A> q;     // P -> P[-1], with beta alpha + d q + q d = id
    std::vector<int> kept; // P-index of each Q summand
};

// eliminate the invertible entry phi : F -> F'
template <class A> GEResult<A> gaussian_eliminate(const Pseudocomplex<A> &P, int F, int Fp) {
    const auto &ar = P.ar;
    const auto *phi = P.entry(F, Fp);
    if (!phi) throw std::invalid_argument("no differential entry " + P.summands[F].id + " -> " + P.summands[Fp].id);
    auto inv = ar.inverse(*phi);
    if (!inv) throw std::invalid_argument("entry " + P.summands[F].id + " -> " + P.summands[Fp].id + " is not invertible");
    GEResult<A> r;
    r.Q = Pseudocomplex<A>(ar);
    std::vector<int> to_q(P.size(), -1);
    for (int i = 0; i < P.size(); ++i) {
        if (i == F || i == Fp) continue;
        to_q[i] = r.Q.add(P.summands[i].id, P.summands[i].label, P.summands[i].shift, P.summands[i].degree);
        r.kept.push_back(i);
    }
    for (auto &[key, m] : P.d) {
        auto [a, b] = key;
        if (to_q[a] < 0 || to_q[b] < 0) continue;
        r.Q.d.emplace(std::make_pair(to_q[a], to_q[b]), m);
    }
    // zigzag correction B -> C : c - e phi^-1 d
    std::vector<std::pair<int, typename A::Mor>> into, outof; // B -> F', F -> C
    for (auto &[key, m] : P.d) {
        if (key.second == Fp && key.first != F) into.push_back({key.first, m});
        if (key.first == F && key.second != Fp) outof.push_back({key.second, m});
    }
    for (auto &[b, dm] : into)
        for (auto &[c, em] : outof) {
            auto z = ar.neg(ar.compose(em, ar.compose(*inv, dm)));
            auto k = std::make_pair(to_q[b], to_q[c]);
            auto it = r.Q.d.find(k);
            if (it == r.Q.d.end()) r.Q.d.emplace(k, z);
            else {
                it->second = ar.add(it->second, z);
                if (ar.is_zero(it->second)) r.Q.d.erase(it);
            }
        }
    for (int i : r.kept) {
        auto id = ar.identity(P.summands[i].label);
        r.alpha.emplace(std::make_pair(i, to_q[i]), id);
        r.beta.emplace(std::make_pair(to_q[i], i), id);
    }
    for (auto &[c, em] : outof) r.alpha.emplace(std::make_pair(Fp, to_q[c]), ar.neg(ar.compose(em, *inv)));
    for (auto &[b, dm] : into) r.beta.emplace(std::make_pair(to_q[b], F), ar.neg(ar.compose(*inv, dm)));
    r.q.emplace(std::make_pair(Fp, F), *inv);
    return r;
}

// one isomorphism phi_i : F_i -> F'_i of a simultaneous family
struct IsoPair {
    int from, to;
};

struct Zigzag {
    int source, target;       // summand indices
    std::vector<int> through; // family indices i_1, ..., i_r
};

namespace detail {

// all non-repeating zigzags from S to T, calling visit(sequence, value)
template <class A, class Visit>
void enumerate_zigzags(const Pseudocomplex<A> &P, const std::vector<IsoPair> &fam,
                       const std::vector<typename A::Mor> &inv, int S, int T, const std::vector<bool> &forbidden,
                       Visit visit) {
    const auto &ar = P.ar;
    int m = static_cast<int>(fam.size());
    std::vector<int> seq;
    std::vector<bool> used = forbidden;
    std::function<void(int, const typename A::Mor &)> go = [&](int at_family, const typename A::Mor &acc) {
        // acc : S -> F_{at_family} after phi^-1
        if (const auto *t = P.entry(fam[at_family].from, T)) visit(seq, ar.compose(*t, acc));
        for (int j = 0; j < m; ++j) {
            if (used[j]) continue;
            const auto *th = P.entry(fam[at_family].from, fam[j].to);
            if (!th) continue;
            used[j] = true;
            seq.push_back(j);
            go(j, ar.compose(inv[j], ar.compose(*th, acc)));
            seq.pop_back();
            used[j] = false;
        }
    };
    for (int j = 0; j < m; ++j) {
        if (used[j]) continue;
        const auto *s = P.entry(S, fam[j].to);
        if (!s) continue;
        used[j] = true;
        seq.push_back(j);
        go(j, ar.compose(inv[j], *s));
        seq.pop_back();
        used[j] = false;
    }
}

} // namespace detail

// empty if the family is independent, else a nonzero zigzag F_j -> F'_j
template <class A>
std::optional<Zigzag> independence_witness(const Pseudocomplex<A> &P, const std::vector<IsoPair> &fam) {
    std::vector<typename A::Mor> inv;
    for (auto &p : fam) {
        const auto *phi = P.entry(p.from, p.to);
        auto i = phi ? P.ar.inverse(*phi) : std::nullopt;
        if (!i) throw std::invalid_argument("family member " + P.summands[p.from].id + " is not an isomorphism");
        inv.push_back(*i);
    }
    int m = static_cast<int>(fam.size());
    std::optional<Zigzag> bad;
    for (int j = 0; j < m && !bad; ++j) {
        std::vector<bool> forbidden(m, false);
        forbidden[j] = true;
        // sums over all zigzags with the same sequence are single terms here
        std::map<std::vector<int>, typename A::Mor> sums;
        detail::enumerate_zigzags(P, fam, inv, fam[j].from, fam[j].to, forbidden,
                                  [&](const std::vector<int> &seq, const typename A::Mor &z) {
                                      auto it = sums.find(seq);
                                      if (it == sums.end()) sums.emplace(seq, z);
                                      else it->second = P.ar.add(it->second, z);
                                  });
        for (auto &[seq, z] : sums)
            if (!P.ar.is_zero(z)) {
                bad = Zigzag{fam[j].from, fam[j].to, seq};
                break;
            }
    }
    return bad;
}

template <class A> struct SimultaneousResult {
    Pseudocomplex<A> Q;
    std::vector<int> kept;
};

// eliminate an independent family in one degree; throws with a witness otherwise
template <class A>
SimultaneousResult<A> simultaneous_eliminate(const Pseudocomplex<A> &P, const std::vector<IsoPair> &fam) {
    if (fam.empty()) {
        SimultaneousResult<A> r{P, {}};
        for (int i = 0; i < P.size(); ++i) r.kept.push_back(i);
        return r;
    }
    int deg = P.summands[fam[0].from].degree;
    std::set<int> removed;
    for (auto &p : fam) {
        if (P.summands[p.from].degree != deg) throw std::invalid_argument("simultaneous family must sit in one degree");
        if (!removed.insert(p.from).second || !removed.insert(p.to).second)
            throw std::invalid_argument("simultaneous family repeats a summand");
    }
    if (auto w = independence_witness(P, fam)) {
        std::string seq;
        for (int i : w->through) seq += (seq.empty() ? "" : ",") + P.summands[fam[i].from].id;
        throw std::invalid_argument("family is not independent: nonzero zigzag " + P.summands[w->source].id + " -> " +
                                    P.summands[w->target].id + " through [" + seq + "]");
    }
    std::vector<typename A::Mor> inv;
    for (auto &p : fam) inv.push_back(*P.ar.inverse(*P.entry(p.from, p.to)));
    SimultaneousResult<A> r{Pseudocomplex<A>(P.ar), {}};
    std::vector<int> to_q(P.size(), -1);
    for (int i = 0; i < P.size(); ++i) {
        if (removed.count(i)) continue;
        to_q[i] = r.Q.add(P.summands[i].id, P.summands[i].label, P.summands[i].shift, P.summands[i].degree);
        r.kept.push_back(i);
    }
    for (auto &[key, m] : P.d)
        if (to_q[key.first] >= 0 && to_q[key.second] >= 0) r.Q.d.emplace(std::make_pair(to_q[key.first], to_q[key.second]), m);
    std::vector<bool> none(fam.size(), false);
    for (int b : P.in_degree(deg)) {
        if (removed.count(b)) continue;
        for (int c : P.in_degree(deg + 1)) {
            if (removed.count(c)) continue;
            detail::enumerate_zigzags(P, fam, inv, b, c, none, [&](const std::vector<int> &seq, const typename A::Mor &z) {
                auto term = seq.size() % 2 ? P.ar.neg(z) : z;
                auto k = std::make_pair(to_q[b], to_q[c]);
                auto it = r.Q.d.find(k);
                if (it == r.Q.d.end()) r.Q.d.emplace(k, term);
                else it->second = P.ar.add(it->second, term);
            });
        }
    }
    for (auto it = r.Q.d.begin(); it != r.Q.d.end();) {
        if (P.ar.is_zero(it->second)) it = r.Q.d.erase(it);
        else ++it;
    }
    return r;
}

enum class TensorConvention { Standard, Dotted };

// P (x) Q; summand (i, j) sits at index i * |Q| + j
template <class A>
Pseudocomplex<A> tensor(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q,
                        TensorConvention conv = TensorConvention::Standard) {
    const auto &ar = P.ar;
    Pseudocomplex<A> T(ar);
    int nq = Q.size();
    for (auto &p : P.summands)
        for (auto &q : Q.summands)
            T.add(p.id + "*" + q.id, ar.tensor_obj(p.label, q.label), p.shift + q.shift, p.degree + q.degree);
    for (auto &[key, m] : P.d)
        for (int j = 0; j < nq; ++j)
            T.d.emplace(std::make_pair(key.first * nq + j, key.second * nq + j),
                        ar.tensor(m, ar.identity(Q.summands[j].label)));
    for (int i = 0; i < P.size(); ++i) {
        int deg = P.summands[i].degree;
        int sign = conv == TensorConvention::Standard ? (deg % 2 ? -1 : 1) : (deg % 2 ? 1 : -1);
        for (auto &[key, m] : Q.d) {
            auto t = ar.tensor(ar.identity(P.summands[i].label), m);
            T.d.emplace(std::make_pair(i * nq + key.first, i * nq + key.second), sign == 1 ? t : ar.neg(t));
        }
    }
    return T;
}

// lift a map on P to P (x) Q as f (x) 1 or 1 (x) f
template <class A>
SparseMor<A> tensor_left(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q, const SparseMor<A> &f) {
    SparseMor<A> out;
    int nq = Q.size();
    for (auto &[key, m] : f)
        for (int j = 0; j < nq; ++j)
            out.emplace(std::make_pair(key.first * nq + j, key.second * nq + j),
                        P.ar.tensor(m, P.ar.identity(Q.summands[j].label)));
    return out;
}

template <class A>
SparseMor<A> tensor_right(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q, const SparseMor<A> &g) {
    SparseMor<A> out;
    int nq = Q.size();
    for (int i = 0; i < P.size(); ++i)
        for (auto &[key, m] : g)
            out.emplace(std::make_pair(i * nq + key.first, i * nq + key.second),
                        P.ar.tensor(P.ar.identity(P.summands[i].label), m));
    return out;
}

// the sign isomorphism (-1)^{j+1} on P^i (x) Q^j from Standard to Dotted
template <class A> SparseMor<A> dotted_comparison(const Pseudocomplex<A> &P, const Pseudocomplex<A> &Q) {
    SparseMor<A> out;
    int nq = Q.size();
    for (int i = 0; i < P.size(); ++i)
        for (int j = 0; j < nq; ++j) {
            auto id = P.ar.identity(P.ar.tensor_obj(P.summands[i].label, Q.summands[j].label));
            out.emplace(std::make_pair(i * nq + j, i * nq + j), Q.summands[j].degree % 2 ? id : P.ar.neg(id));
        }
    return out;
}

template <class A> bool is_perverse(const Pseudocomplex<A> &P) {
    return std::all_of(P.summands.begin(), P.summands.end(), [](auto &s) { return s.shift == s.degree; });
}

template <class A> bool is_multiplicity_free_perverse(const Pseudocomplex<A> &P) {
    if (!is_perverse(P)) return false;
    std::set<std::pair<typename A::Obj, int>> seen;
    for (auto &s : P.summands)
        if (!seen.insert({s.label, s.degree}).second) return false;
    return true;
}

// connected components of the summand graph (edges at nonzero entries)
template <class A> std::vector<int> summand_components(const Pseudocomplex<A> &P) {
    std::vector<int> comp(P.size());
    for (int i = 0; i < P.size(); ++i) comp[i] = i;
    std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
    for (auto &kv : P.d)
        if (!P.ar.is_zero(kv.second)) comp[root(kv.first.first)] = root(kv.first.second);
    for (int i = 0; i < P.size(); ++i) comp[i] = root(i);
    return comp;
}

template <class A> bool apparently_indecomposable(const Pseudocomplex<A> &P) {
    auto c = summand_components(P);
    return std::set<int>(c.begin(), c.end()).size() <= 1;
}

// flip upside down: degrees and shifts negate, differentials reverse through ar.dual
template <class A> Pseudocomplex<A> dualize(const Pseudocomplex<A> &P) {
    Pseudocomplex<A> D(P.ar);
    for (auto &s : P.summands) D.add(s.id, P.ar.dual_obj(s.label), -s.shift, -s.degree);
    for (auto &[key, m] : P.d) D.d.emplace(std::make_pair(key.second, key.first), P.ar.dual(m));
    return D;
}

// graded count of summands whose label satisfies pred, indexed from the lowest degree
template <class A, class Pred> std::map<int, int> degree_counts(const Pseudocomplex<A> &P, Pred pred) {
    std::map<int, int> out;
    auto [lo, hi] = P.degree_range();
    for (int k = lo; k <= hi; ++k) out[k] = 0;
    for (auto &s : P.summands)
        if (pred(s.label)) ++out[s.degree];
    return out;
}

} // namespace tsc
