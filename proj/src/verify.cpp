#include "tsc/gaitsgory.hpp"

#include <stdexcept>

namespace tsc {

namespace {

Subset left_expected(const Subset &I, const Subset &Y) {
    Subset r = I;
    for (int y : Y.members())
        if (!Y.contains(y + 1)) r = r.with(y);
    return r;
}

Subset right_expected(const Subset &J, const Subset &X) {
    Subset r = J;
    for (int x : X.members())
        if (!X.contains(x - 1)) r = r.with(x);
    return r;
}

std::string ix(const Subset &I, const Subset &X) { return "I={" + I.str() + "} X={" + X.str() + "}"; }

} // namespace

Certificate verify_descent(int n) {
    Certificate cert{"descent sets of w_I h_X", n, {}, {}, true};
    auto subsets = proper_subsets(n);
    int cases = 0, contained = 0;
    for (auto &I : subsets) {
        Subset J = I.tau();
        Weyl wI = longest_element(I), wJ = longest_element(J);
        for (auto &X : subsets) {
            ++cases;
            Weyl w = wI * h_of(X);
            Subset rc = w.right_descents();
            bool inside = J.subset_of(X);
            cert.check(inside == J.subset_of(rc), "tau(I) in X versus tau(I) in the right descents, " + ix(I, X));
            if (!inside) continue;
            ++contained;
            cert.check(w.length() == wI.length() + h_of(X).length(), "length is not additive, " + ix(I, X));
            cert.check(rc == right_expected(J, X), "right descents " + rc.str() + ", " + ix(I, X));
            Subset Y = correspondent_Y(I, X);
            Weyl v = h_of(Y) * wJ;
            cert.check(v == w, "w_I h_X != h_Y w_J, " + ix(I, X));
            cert.check(I.subset_of(Y), "I not inside Y, " + ix(I, X));
            cert.check(v.left_descents() == left_expected(I, Y), "left descents of h_Y w_J, " + ix(I, X));
            int matches = 0;
            for (auto &Z : subsets)
                if (h_of(Z) * wJ == w) ++matches;
            cert.check(matches == 1, "correspondent Y is not unique, " + ix(I, X));
        }
    }
    cert.step(std::to_string(cases) + " pairs, " + std::to_string(contained) + " with tau(I) inside X");
    return cert;
}

Certificate verify_plethysm_finite(int N) {
    int n = N + 1;
    Certificate cert{"finite plethysm for w_I h_X", n, {{"N", std::to_string(N)}}, {}, true};
    const int cap = 32;
    std::vector<int> inner, tops;
    for (int i = 1; i < N; ++i) inner.push_back(i);
    Subset I = Subset::of(n, inner);
    Weyl wI = longest_element(I);
    // Phi_k = w_I h_X for the suffix X = {N-k+1, ..., N}
    std::vector<Weyl> phi;
    for (int k = 0; k <= N; ++k) {
        std::vector<int> xs;
        for (int j = N - k + 1; j <= N; ++j) xs.push_back(j);
        phi.push_back(wI * h_of(Subset::of(n, xs)));
    }
    auto b = [&](const Weyl &w) { return kl_basis(w, cap); };
    const Laurent q2 = Laurent::quantum2();
    for (int k = 0; k <= N; ++k) {
        cert.check(is_smooth(phi[k], cap), "Phi_" + std::to_string(k) + " is not smooth");
        for (int j = 1; j <= N; ++j) {
            Hecke lhs = b(phi[k]).times_b_s(j);
            std::string what = "Phi_" + std::to_string(k) + " b_" + std::to_string(j);
            if (k == 0 && j == N) cert.check(lhs == b(phi[1]), what);
            else if (k >= 1 && k <= N - 1 && j == N - k) cert.check(lhs == b(phi[k + 1]) + b(phi[k - 1]), what);
            else cert.check(lhs == q2 * b(phi[k]), what);
        }
    }
    cert.step(std::to_string(N + 1) + " elements Phi_k, each multiplied by all finite b_j");
    return cert;
}

Certificate verify_c_elements(int n, int smooth_max_n) {
    Certificate cert{"c_{I,X,Y} consistency", n, {}, {}, true};
    auto subsets = proper_subsets(n);
    const Laurent q2 = Laurent::quantum2();
    int triples = 0, godown = 0, restricted_only = 0;
    for (auto &I : subsets)
        for (auto &X : subsets)
            for (auto &Y : subsets) {
                if (!Y.subset_of(X) || !is_tau_suffix(I, Y)) continue;
                ++triples;
                std::string what = "I={" + I.str() + "} X={" + X.str() + "} Y={" + Y.str() + "}";
                cert.check(c_element_order_independent(I, X, Y), "insertion order matters, " + what);
                Hecke c = c_element(I, X, Y);
                for (int j : X.minus(Y).members()) {
                    if (is_tau_suffix(I, Y.with(j))) continue;
                    cert.check(I.contains(j), "blocked index " + std::to_string(j) + " outside I, " + what);
                    bool holds = c == q2 * c_element(I, X.without(j), Y);
                    if (X.contains(j + 1)) {
                        restricted_only += !holds;
                        continue;
                    }
                    ++godown;
                    cert.check(holds, "godown at " + std::to_string(j) + ", " + what);
                }
                if (n <= smooth_max_n && X == Y && I.tau().subset_of(X))
                    cert.check(c.bar() == c && c == kl_basis(longest_element(I) * h_of(X), 64),
                               "c_{I,X,X} is not b_{w_I h_X}, " + what);
            }
    cert.step(std::to_string(triples) + " triples, " + std::to_string(godown) + " godown identities; " +
              std::to_string(restricted_only) + " failures outside the restriction j+1 not in X");
    return cert;
}

Certificate verify_flattening(int n) {
    Certificate cert{"flattening identities", n, {}, {}, true};
    auto one = [&] { return Hecke::scalar(n, 1); };
    std::vector<Hecke> j;
    for (int i = 1; i <= n; ++i) j.push_back(braid_image(jm_braid(n, i)));
    for (int i = 1; i <= n; ++i)
        cert.check(braid_image(flatten(y_braid(n, i))) == j[i - 1], "flat(y_" + std::to_string(i) + ") != j_" + std::to_string(i));
    for (int k = 1; k <= n; ++k) {
        Hecke lhs(n), ek(n);
        for (auto &lam : exterior_weights(n, k)) {
            lhs += braid_image(flatten(w_lambda(lam)));
            Hecke t = one();
            for (int i = 0; i < n; ++i)
                if (lam[i]) t = t * j[i];
            ek += t;
        }
        cert.check(lhs == ek, "sum of flat(w_lambda) over weights of the exterior power " + std::to_string(k));
    }
    Hecke twist = one();
    for (auto &x : j) twist = twist * x;
    cert.check(braid_image(flatten(w_lambda(std::vector<int>(n, 1)))) == twist, "flat(w_det) is not the full twist");
    if (n == 2) {
        Hecke f = flatten_hecke(F_symbol(2));
        Hecke rouquier = Hecke::H_s(2, 1) + Hecke::H_s_inverse(2, 1);
        cert.check(f == rouquier, "flat([F]) != [F_1] + [F_1^-1]");
        Hecke expect = Laurent(-1, -1) * one() + Laurent(2) * Hecke::b_s(2, 1) - Laurent::v(1) * one();
        cert.check(f == expect, "flat([F]) != -v^-1 + 2 b_1 - v");
        cert.step("flat([F]) = " + f.str_kl());
    }
    return cert;
}

} // namespace tsc
