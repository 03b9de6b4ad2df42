#include "tsc/properties.hpp"

#include <stdexcept>

namespace tsc {

namespace {

using IMor = SparseMor<IntArith>;

DeltaPoly delta_times(int64_t c) {
    DeltaPoly p;
    if (c) p.c = {0, c};
    return p;
}

bool zero_mod_delta(const IMor &m) {
    for (auto &[key, x] : m)
        if (!x.is_zero() && x.c[0] != 0) return false;
    return true;
}

bool is_zero(const IMor &m) {
    for (auto &[key, x] : m)
        if (!x.is_zero()) return false;
    return true;
}

// g d g^-1 for g = id + t E_{i -> j}, i and j in the same degree
void change_basis(Pseudocomplex<IntArith> &P, int i, int j, int64_t t) {
    const IntArith ar;
    IMor g = identity_map(P), ginv = identity_map(P);
    g[{i, j}] = DeltaPoly(t);
    ginv[{i, j}] = DeltaPoly(-t);
    P.d = compose(ar, g, compose(ar, P.d, ginv));
}

std::vector<std::pair<int, int>> units(const Pseudocomplex<IntArith> &P) {
    std::vector<std::pair<int, int>> out;
    for (auto &[key, m] : P.d)
        if (P.ar.inverse(m)) out.push_back(key);
    return out;
}

// same summand ids and the same differential read through ids
bool same_complex(const Pseudocomplex<IntArith> &A, const Pseudocomplex<IntArith> &B) {
    if (A.size() != B.size() || A.d.size() != B.d.size()) return false;
    for (auto &[key, m] : A.d) {
        int a = B.find(A.summands[key.first].id), b = B.find(A.summands[key.second].id);
        if (a < 0 || b < 0) return false;
        const auto *e = B.entry(a, b);
        if (!e || !(*e == m)) return false;
    }
    return true;
}

} // namespace

Pseudocomplex<IntArith> random_int_complex(std::mt19937_64 &rng, int max_pieces) {
    Pseudocomplex<IntArith> P;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto unit = [&] { return DeltaPoly(pick(0, 1) ? 1 : -1); };
    int pieces = pick(1, max_pieces);
    int id = 0;
    auto add = [&](int deg) { return P.add("s" + std::to_string(id++), "x", deg, deg); };
    for (int p = 0; p < pieces; ++p) {
        int kind = pick(0, 3), k = pick(-1, 1);
        if (kind == 0) {
            add(pick(-1, 2));
        } else if (kind == 1) {
            int a = add(k), b = add(k + 1);
            P.set(a, b, unit());
        } else if (kind == 2) {
            int a = add(k), b = add(k + 1), c = add(k + 2);
            int64_t mu = pick(-2, 2);
            if (pick(0, 1)) {
                P.set(a, b, delta_times(1));
                P.set(b, c, DeltaPoly(mu ? mu : 1));
            } else {
                P.set(a, b, DeltaPoly(mu ? mu : 1));
                P.set(b, c, delta_times(1));
            }
        } else {
            int a = add(k), b = add(k + 1);
            P.set(a, b, pick(0, 1) ? DeltaPoly(2) : delta_times(pick(1, 3)));
        }
    }
    for (int r = pick(0, 6); r > 0; --r) {
        int i = pick(0, P.size() - 1), j = pick(0, P.size() - 1);
        if (i == j || P.summands[i].degree != P.summands[j].degree) continue;
        change_basis(P, i, j, pick(-2, 2));
    }
    return P;
}

Pseudocomplex<IntArith> pitfall_complex() {
    Pseudocomplex<IntArith> P;
    int a = P.add("a", "x", 0, 0), b = P.add("b", "x", 0, 0);
    int a1 = P.add("a'", "x", 1, 1), b1 = P.add("b'", "x", 1, 1);
    for (auto [s, t] : {std::pair{a, a1}, {b, b1}, {a, b1}, {b, a1}}) P.set(s, t, DeltaPoly(1));
    return P;
}

Certificate verify_ge_properties(int cases, uint64_t seed) {
    Certificate cert{"Gaussian elimination properties", 0, {{"cases", std::to_string(cases)}, {"seed", std::to_string(seed)}}, {}, true};
    std::mt19937_64 rng(seed);
    const IntArith ar;
    int eliminations = 0, families = 0, exact_homotopy = 0, tensors = 0;
    for (int c = 0; c < cases; ++c) {
        auto P = random_int_complex(rng);
        std::string tag = "case " + std::to_string(c) + ": ";
        try {
            validate(P);
        } catch (const std::exception &e) {
            cert.check(false, tag + "generator produced " + e.what());
            continue;
        }
        auto us = units(P);
        if (!us.empty()) {
            auto [F, Fp] = us[std::uniform_int_distribution<size_t>(0, us.size() - 1)(rng)];
            auto r = gaussian_eliminate(P, F, Fp);
            ++eliminations;
            cert.check(equal(ar, compose(ar, r.alpha, r.beta), identity_map(r.Q)), tag + "alpha beta != id");
            auto h = add(ar, compose(ar, r.beta, r.alpha), identity_map(P), -1);
            auto defect = add(ar, h, nulhomotopic(P, P, r.q));
            cert.check(zero_mod_delta(defect), tag + "beta alpha + dq + qd != id mod delta");
            exact_homotopy += is_zero(defect);
            cert.check(zero_mod_delta(chain_defect(P, r.Q, r.alpha)) && zero_mod_delta(chain_defect(r.Q, P, r.beta)),
                       tag + "alpha or beta is not a pseudochain map");
            try {
                validate(r.Q);
            } catch (const std::exception &e) {
                cert.check(false, tag + "reduced complex: " + e.what());
            }
        }
        // two disjoint isomorphisms in one degree
        for (size_t x = 0; x < us.size(); ++x)
            for (size_t y = x + 1; y < us.size(); ++y) {
                auto [a, a1] = us[x];
                auto [b, b1] = us[y];
                if (a == b || a1 == b1 || a == b1 || a1 == b || P.summands[a].degree != P.summands[b].degree) continue;
                std::vector<IsoPair> fam{{a, a1}, {b, b1}};
                if (independence_witness(P, fam)) continue;
                ++families;
                auto sim = simultaneous_eliminate(P, fam);
                auto g1 = gaussian_eliminate(P, a, a1);
                int bq = g1.Q.find(P.summands[b].id), b1q = g1.Q.find(P.summands[b1].id);
                if (!g1.Q.entry(bq, b1q) || !ar.inverse(*g1.Q.entry(bq, b1q))) {
                    cert.check(false, tag + "independent family loses its second isomorphism");
                    continue;
                }
                auto g2 = gaussian_eliminate(g1.Q, bq, b1q);
                cert.check(same_complex(sim.Q, g2.Q), tag + "simultaneous and iterated elimination differ");
                x = us.size();
                break;
            }
        // monodromy of a tensor product
        if (c % 4 == 0) {
            auto Q = random_int_complex(rng, 3);
            for (auto conv : {TensorConvention::Standard, TensorConvention::Dotted}) {
                auto T = tensor(P, Q, conv);
                auto want = add(ar, tensor_left(P, Q, monodromy(P)), tensor_right(P, Q, monodromy(Q)));
                cert.check(equal(ar, monodromy(T), want), tag + "mu of the tensor product");
            }
            ++tensors;
        }
    }
    auto pit = pitfall_complex();
    bool refused = false;
    try {
        simultaneous_eliminate(pit, {{0, 2}, {1, 3}});
    } catch (const std::invalid_argument &) {
        refused = true;
    }
    cert.check(refused, "the pitfall pair was eliminated simultaneously");
    cert.check(bool(independence_witness(pit, {{0, 2}, {1, 3}})), "no zigzag witness for the pitfall pair");
    cert.step(std::to_string(eliminations) + " eliminations (" + std::to_string(exact_homotopy) +
              " with exact homotopy), " + std::to_string(families) + " simultaneous families, " + std::to_string(tensors) +
              " tensor products");
    return cert;
}

} // namespace tsc
