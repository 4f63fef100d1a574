#pragma once

// Seeded generators for random words and sparse algebra elements.

#include <random>

#include "psl2z/twisted_algebra.hpp"
#include "psl2z/word.hpp"

namespace psl2z {

using Rng = std::mt19937_64;

/// Normal-form word with up to max_len syllables.
GWord random_gword(Rng& rng, int max_len);
/// Reduced word with up to max_len letters.
FWord random_fword(Rng& rng, int max_len);
/// Up to max_terms words of length <= max_len, coefficients (p + q i) / den
/// with |p|, |q| <= coeff_range and den in {1, 2, 3}.
GroupAlgElem random_group_alg_elem(Rng& rng, int max_terms, int max_len, int coeff_range = 3);
/// Each of the six components drawn independently; a component is zero with
/// probability 1/3.
L1Elem random_l1_elem(Rng& rng, int max_terms, int max_len, int coeff_range = 3);

}  // namespace psl2z
