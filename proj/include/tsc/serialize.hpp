#pragma once

#include "tsc/arith.hpp"
#include "tsc/gaitsgory.hpp"
#include "tsc/homalg.hpp"

#include <json.hpp>

#include <string>

namespace tsc {

using json = nlohmann::json;

// morphism encodings per backend
json to_json(const DeltaPoly &m);
json to_json(const SignMor &m);
json to_json(const Morphism &m);
DeltaPoly delta_poly_from_json(const json &j);
SignMor sign_mor_from_json(const json &j);
Morphism morphism_from_json(int n, const json &j);

// { "n", "backend", "summands":[{"id","label","shift","degree"}], "diff":[{"from","to","morphism"}] }
// with summands ordered by (degree, id)
json complex_to_json(const Pseudocomplex<IntArith> &P);
json complex_to_json(const Pseudocomplex<SignArith> &P, int n, const std::string &backend = "sign");
json complex_to_json(const Pseudocomplex<BimodArith> &P);

Pseudocomplex<IntArith> int_complex_from_json(const json &j);
Pseudocomplex<SignArith> sign_complex_from_json(const json &j);
Pseudocomplex<BimodArith> bimod_complex_from_json(const json &j);

json certificate_to_json(const Certificate &c);

} // namespace tsc
