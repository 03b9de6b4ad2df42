#pragma once

#include "tsc/arith.hpp"
#include "tsc/gaitsgory.hpp"
#include "tsc/homalg.hpp"

#include <cstdint>
#include <random>

namespace tsc {

// random pseudocomplex over Z[delta]: contractible pairs, curved three-term
// chains and loose summands in degrees -1..2, then a random change of basis
Pseudocomplex<IntArith> random_int_complex(std::mt19937_64 &rng, int max_pieces = 5);

// the pair of isomorphisms a -> a', b -> b' with both zigzags a -> b' -> b -> a'
// nonzero, which must not be eliminated simultaneously
Pseudocomplex<IntArith> pitfall_complex();

// GE witnesses, simultaneous versus iterated elimination, the pitfall and
// monodromy of tensor products over `cases` random complexes
Certificate verify_ge_properties(int cases, uint64_t seed);

} // namespace tsc
