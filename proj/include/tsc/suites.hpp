#pragma once

#include "tsc/gaitsgory.hpp"
#include "tsc/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tsc {

// throws std::invalid_argument outside 2 <= n <= 31, or n > 4 for the bimodule backend
void check_n(int n, const std::string &backend);

// F as JSON for backend sign, hecke (sign complex with KL labels) or bimodule
json build_f_json(int n, const std::string &backend);

// d2, wakimoto, descent, tensorbi, crossover, homotopy-h, phi-n2, ge-props, flatten
std::vector<Certificate> run_suite(const std::string &suite, int n, uint64_t seed = 0, int cases = 500);

// d^2 = mu delta on a complex produced by build_f_json
Certificate verify_complex_json(const json &j);

} // namespace tsc
