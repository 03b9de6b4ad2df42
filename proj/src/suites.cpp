#include "tsc/suites.hpp"

#include "tsc/properties.hpp"

#include <stdexcept>

namespace tsc {

void check_n(int n, const std::string &backend) {
    if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
    if (n > 31) throw std::invalid_argument("n must be at most 31");
    if (backend == "bimodule" && n > 4) throw std::invalid_argument("the bimodule backend is capped at n = 4");
}

json build_f_json(int n, const std::string &backend) {
    check_n(n, backend);
    if (backend == "bimodule") return complex_to_json(build_F_bimod(n).P);
    auto F = build_F_sign(n);
    json j = complex_to_json(F.P, n, backend);
    if (backend == "hecke") {
        // attach the KL label b_{h_X} to each summand
        for (auto &s : j["summands"]) {
            int i = F.P.find(s["id"].get<std::string>());
            s["kl"] = kl_label(h_of(F.sets[i]));
        }
    }
    return j;
}

std::vector<Certificate> run_suite(const std::string &suite, int n, uint64_t seed, int cases) {
    std::vector<Certificate> out;
    auto need = [&](bool ok, const std::string &what) {
        if (!ok) throw std::invalid_argument("suite " + suite + " needs " + what);
    };
    if (suite == "d2") {
        check_n(n, "sign");
        out.push_back(verify_d2_sign(n));
        if (n <= 4) out.push_back(verify_d2_bimod(n));
        out.push_back(verify_symmetries(n));
    } else if (suite == "wakimoto") {
        check_n(n, "sign");
        out.push_back(verify_wakimoto(n));
        if (n <= 4) out.push_back(verify_underlying(n));
    } else if (suite == "descent") {
        check_n(n, "sign");
        out.push_back(verify_descent(n));
        if (n <= 5) out.push_back(verify_c_elements(n));
        if (n - 1 <= 5) out.push_back(verify_plethysm_finite(n - 1));
    } else if (suite == "tensorbi") {
        check_n(n, "sign");
        need(n <= 5, "n <= 5");
        out.push_back(verify_tensorBI(n));
    } else if (suite == "crossover") {
        check_n(n, "sign");
        need(n <= 5, "n <= 5");
        for (auto &I : proper_subsets(n)) out.push_back(verify_N_equals_M(I));
    } else if (suite == "homotopy-h") {
        check_n(n, "bimodule");
        out.push_back(verify_x1_commutation(n));
    } else if (suite == "phi-n2") {
        need(n == 2, "n = 2");
        out.push_back(verify_phi_squares_n2());
        out.push_back(verify_FB1_n2());
    } else if (suite == "ge-props") {
        out.push_back(verify_ge_properties(cases, seed));
    } else if (suite == "flatten") {
        check_n(n, "sign");
        out.push_back(verify_flattening(n));
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return out;
}

Certificate verify_complex_json(const json &j) {
    std::string backend = j.at("backend").get<std::string>();
    if (backend == "bimodule") return verify_d2_loaded(bimod_complex_from_json(j));
    if (backend == "sign" || backend == "hecke") return verify_d2_loaded(sign_complex_from_json(j), j.at("n").get<int>());
    throw std::invalid_argument("cannot check a complex with backend '" + backend + "'");
}

} // namespace tsc
