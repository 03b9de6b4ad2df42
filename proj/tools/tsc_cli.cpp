#include "tsc/braid.hpp"
#include "tsc/hecke.hpp"
#include "tsc/suites.hpp"
#include "tsc/weyl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace tsc;

namespace {

std::string output_dir() {
    const char *d = std::getenv("TSC_OUTPUT_DIR");
    return d && *d ? std::string(d) : std::string();
}

void write_output(const json &j, const std::string &out) {
    std::string path = out;
    if (path.empty() && !output_dir().empty()) path = output_dir() + "/F.json";
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
    std::cerr << "wrote " << path << "\n";
}

Certificate verify_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    return verify_complex_json(json::parse(f));
}

int report(const std::vector<Certificate> &certs, const std::string &cert_path) {
    std::string path = cert_path;
    if (path.empty()) path = (output_dir().empty() ? std::string(".") : output_dir()) + "/certificates.jsonl";
    std::ofstream log;
    if (path != "-") {
        log.open(path, std::ios::app);
        if (!log) throw std::runtime_error("cannot append to " + path);
    }
    int failed = 0;
    for (auto &c : certs) {
        std::string params;
        for (auto &[k, v] : c.parameters) params += " " + k + "=" + v;
        std::cout << (c.verdict ? "PASS " : "FAIL ") << c.theorem << " (n=" << c.n << params << ")\n";
        for (auto &s : c.steps) std::cout << "    " << s << "\n";
        if (log.is_open()) log << certificate_to_json(c).dump() << "\n";
        if (!c.verdict) {
            ++failed;
            std::cerr << "counterexample: " << c.failure() << "\n";
        }
    }
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"twisted standard complexes: build, verify and compute"};
    app.require_subcommand(1);

    int n = 2;
    std::string backend = "sign", out;
    auto *build = app.add_subcommand("build-f", "build the complex F and write it as JSON");
    build->add_option("--n", n, "number of strands")->required();
    build->add_option("--backend", backend, "sign, hecke or bimodule")
        ->check(CLI::IsMember({"sign", "hecke", "bimodule"}));
    build->add_option("--out", out, "output file (default $TSC_OUTPUT_DIR/F.json, else stdout)");

    std::string suite, in, cert_path;
    uint64_t seed = 0;
    int cases = 500;
    auto *verify = app.add_subcommand("verify", "run a verification suite and append certificates");
    verify->add_option("--suite", suite, "d2, wakimoto, descent, tensorbi, crossover, homotopy-h, phi-n2, ge-props, flatten");
    verify->add_option("--n", n, "number of strands");
    verify->add_option("--seed", seed, "seed for randomized suites");
    verify->add_option("--cases", cases, "number of random cases for ge-props");
    verify->add_option("--in", in, "check d^2 = mu delta on a complex written by build-f");
    verify->add_option("--cert", cert_path, "certificate log (default certificates.jsonl, '-' for none)");

    std::string expr, word;
    int length_cap = 24;
    auto *hecke = app.add_subcommand("hecke", "evaluate a Hecke algebra expression");
    hecke->add_option("--expr", expr, "e.g. \"b1*b1\", \"H0^-1*w\"")->required();
    hecke->add_option("--n", n, "number of strands")->required();
    hecke->add_option("--length-cap", length_cap, "length cap for the KL expansion");
    bool standard = false;
    hecke->add_flag("--standard", standard, "print in the standard basis");

    auto *flat = app.add_subcommand("flatten", "flatten a cylindrical braid word");
    flat->add_option("--word", word, "tokens such as \"w f0 f1-\"")->required();
    flat->add_option("--n", n, "number of strands")->required();

    auto *kl = app.add_subcommand("kl", "KL basis element of an affine Weyl group element");
    kl->add_option("--word", word, "word such as \"0 1 0\"")->required();
    kl->add_option("--n", n, "number of strands")->required();
    kl->add_option("--length-cap", length_cap, "Bruhat interval length cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            write_output(build_f_json(n, backend), out);
        } else if (*verify) {
            if (in.empty() && suite.empty()) throw std::invalid_argument("verify needs --suite or --in");
            std::vector<Certificate> certs;
            if (!in.empty()) certs.push_back(verify_file(in));
            if (!suite.empty()) {
                auto more = run_suite(suite, n, seed, cases);
                certs.insert(certs.end(), more.begin(), more.end());
            }
            return report(certs, cert_path);
        } else if (*hecke) {
            check_n(n, "hecke");
            Hecke h = parse_hecke(n, expr);
            std::cout << (standard ? h.serialize() : h.str_kl(length_cap) + "\n");
        } else if (*flat) {
            check_n(n, "sign");
            std::cout << flatten(BraidWord::parse(n, word)).str() << "\n";
        } else if (*kl) {
            check_n(n, "hecke");
            Weyl w = Weyl::parse_word(n, word);
            Hecke b = kl_basis(w, length_cap);
            std::cout << kl_label(w) << (is_smooth(w, length_cap) ? " = Sigma (smooth)" : " (not smooth)") << "\n";
            std::cout << b.serialize();
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
