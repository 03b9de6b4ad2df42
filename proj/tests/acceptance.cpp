// One line per acceptance criterion. All comparisons are exact; the only
// tolerances are the wall-clock budgets below.
#include "tsc/gaitsgory.hpp"
#include "tsc/properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

using namespace tsc;

namespace {

struct Criterion {
    int id;
    std::string what;
    double budget_s;
    std::function<std::vector<Certificate>()> run;
};

Certificate golden_figures() {
    Certificate cert{"golden figures", 0, {}, {}, true};
    using Shape = std::multiset<std::tuple<std::string, int>>;
    auto shape = [](const SignComplex &F) {
        Shape s;
        for (auto &x : F.P.summands) {
            s.insert({x.label, x.shift});
            if (x.shift != x.degree) return Shape{};
        }
        return s;
    };
    auto edge = [](const SignComplex &F, const std::string &a, const std::string &b) -> int64_t {
        int i = F.P.find(a), j = F.P.find(b);
        const auto *m = i >= 0 && j >= 0 ? F.P.entry(i, j) : nullptr;
        return m && m->terms.size() == 1 ? m->terms.begin()->second : 0;
    };

    auto F2 = build_F_sign(2);
    cert.check(shape(F2) == Shape{{"R", -1}, {"B0", 0}, {"B1", 0}, {"R", 1}}, "n = 2 summands");
    for (auto b : {"B0@0", "B1@0"})
        cert.check(edge(F2, "R@-1", b) == 1 && edge(F2, b, "R@1") == 1, std::string("n = 2 dots at ") + b);

    auto F3 = build_F_sign(3);
    Shape s3{{"R", -2}, {"R", 0}, {"R", 2}, {"B21", 0}, {"B10", 0}, {"B02", 0}};
    for (auto b : {"B2", "B1", "B0"})
        for (int k : {-1, 1}) s3.insert({b, k});
    cert.check(shape(F3) == s3, "n = 3 summands");
    // (from, to, sign): one identity left of the dot gives -1
    const std::vector<std::tuple<const char *, const char *, int>> signs3{
        {"B2@-1", "B21@0", -1}, {"B1@-1", "B10@0", -1}, {"B0@-1", "B02@0", -1}, {"B2@-1", "B02@0", 1},
        {"B1@-1", "B21@0", 1},  {"B0@-1", "B10@0", 1},  {"B21@0", "B2@1", -1},  {"B10@0", "B1@1", -1},
        {"B02@0", "B0@1", -1},  {"B02@0", "B2@1", 1},   {"B21@0", "B1@1", 1},   {"B10@0", "B0@1", 1}};
    for (auto &[a, b, s] : signs3) cert.check(edge(F3, a, b) == s, std::string("n = 3 sign ") + a + " -> " + b);

    auto F4 = build_F_sign(4);
    Shape s4{{"R", -3}, {"R", -1}, {"R", 1}, {"R", 3}};
    for (auto b : {"B3", "B2", "B1", "B0"})
        for (int k : {-2, 0, 2}) s4.insert({b, k});
    // the figure's B20 is stored on the preferred word 02
    for (auto b : {"B32", "B21", "B10", "B03", "B31", "B02"})
        for (int k : {-1, 1}) s4.insert({b, k});
    for (auto b : {"B321", "B210", "B103", "B032"}) s4.insert({b, 0});
    cert.check(shape(F4) == s4, "n = 4 summands");
    cert.check(edge(F4, "B31@-1", "B321@0") == -1, "n = 4 sign B31 -> B321");
    cert.check(edge(F4, "B31@-1", "B103@0") == 1, "n = 4 crossing sign B31 -> B103");
    cert.check(edge(F4, "B1@-2", "B31@-1") == 1 && edge(F4, "B3@-2", "B31@-1") == -1, "n = 4 signs into B31");
    // the signed crossing B2 B0 -> B0 B2 flips the figure's signs out of B20
    cert.check(edge(F4, "B02@-1", "B210@0") == 1 && edge(F4, "B02@-1", "B032@0") == -1, "n = 4 signs out of B20");
    cert.step("F(2), F(3), F(4) match summand for summand");
    return cert;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "d^2 = mu delta (bimodule n <= 4, sign level n = 5, 6)", 60,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 4; ++n) c.push_back(verify_d2_bimod(n));
             for (int n = 2; n <= 6; ++n) c.push_back(verify_d2_sign(n));
             return c;
         }},
        {2, "golden figures n = 2, 3, 4", 10, [] { return std::vector<Certificate>{golden_figures()}; }},
        {3, "Wakimoto filtration n = 2..6", 30,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 6; ++n) c.push_back(verify_wakimoto(n));
             return c;
         }},
        {4, "descent lemma n = 2..6", 120,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 6; ++n) c.push_back(verify_descent(n));
             return c;
         }},
        {5, "plethysm N <= 5, c-elements n <= 5, smoothness n <= 4", 120,
         [] {
             std::vector<Certificate> c;
             for (int N = 1; N <= 5; ++N) c.push_back(verify_plethysm_finite(N));
             for (int n = 2; n <= 5; ++n) c.push_back(verify_c_elements(n, 4));
             return c;
         }},
        {6, "b_{w_I} [F] = [N_I] with object-level trace, n = 2, 3, 4", 120,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 4; ++n) c.push_back(verify_tensorBI(n));
             return c;
         }},
        {7, "N_I and M_tau(I) sign-isomorphic, all I, n <= 4", 30,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 4; ++n)
                 for (auto &I : proper_subsets(n)) c.push_back(verify_N_equals_M(I));
             return c;
         }},
        {8, "flattening identities n = 2..4", 30,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 4; ++n) c.push_back(verify_flattening(n));
             return c;
         }},
        {9, "pseudocomplex engine, 500 random cases", 30,
         [] { return std::vector<Certificate>{verify_ge_properties(500, 0)}; }},
        {10, "x_1 commutation n = 2, 3, 4 and phi_s squares n = 2", 600,
         [] {
             std::vector<Certificate> c;
             for (int n = 2; n <= 4; ++n) c.push_back(verify_x1_commutation(n));
             c.push_back(verify_phi_squares_n2());
             c.push_back(verify_FB1_n2());
             return c;
         }},
    };

    int failed = 0;
    for (auto &cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Certificate> certs;
        std::string why;
        try {
            certs = cr.run();
        } catch (const std::exception &e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto &c : certs)
            if (!c.verdict && why.empty()) why = c.theorem + " n=" + std::to_string(c.n) + ": " + c.failure();
        if (why.empty() && secs > cr.budget_s) why = "over the time budget";
        bool ok = why.empty();
        failed += !ok;
        std::printf("%s criterion %2d: %s [%zu certificates, %.2fs of %.0fs]%s%s\n", ok ? "PASS" : "FAIL", cr.id,
                    cr.what.c_str(), certs.size(), secs, cr.budget_s, ok ? "" : " -- ", why.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
