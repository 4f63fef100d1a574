#include "psl2z/random.hpp"

#include <array>

namespace psl2z {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

GWord random_gword(Rng& rng, int max_len) {
  const int len = uniform_int(rng, 0, max_len);
  std::vector<GToken> tokens;
  bool use_a = uniform_int(rng, 0, 1) == 0;
  for (int i = 0; i < len; ++i, use_a = !use_a) {
    tokens.push_back(use_a ? GToken::A : (uniform_int(rng, 0, 1) == 0 ? GToken::B : GToken::B2));
  }
  return GWord::from_tokens(tokens);
}

FWord random_fword(Rng& rng, int max_len) {
  constexpr std::array letters{FLetter::X1, FLetter::X1Inv, FLetter::X2, FLetter::X2Inv};
  const int len = uniform_int(rng, 0, max_len);
  std::vector<FLetter> out;
  while (static_cast<int>(out.size()) < len) {
    const FLetter l = letters[uniform_int(rng, 0, 3)];
    if (!out.empty() && out.back() == inverse(l)) continue;
    out.push_back(l);
  }
  return FWord::from_letters(out);
}

GroupAlgElem random_group_alg_elem(Rng& rng, int max_terms, int max_len, int coeff_range) {
  GroupAlgElem x;
  const int n = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < n; ++t) {
    const Rational den = uniform_int(rng, 1, 3);
    const Rational re = Rational(uniform_int(rng, -coeff_range, coeff_range)) / den;
    const Rational im = Rational(uniform_int(rng, -coeff_range, coeff_range)) / den;
    x.add_term(random_fword(rng, max_len), GaussianRational(re, im));
  }
  return x;
}

L1Elem random_l1_elem(Rng& rng, int max_terms, int max_len, int coeff_range) {
  L1Elem f;
  for (const KElem k : all_k_elements()) {
    if (uniform_int(rng, 0, 2) == 0) continue;
    f[k] = random_group_alg_elem(rng, max_terms, max_len, coeff_range);
  }
  return f;
}

}  // namespace psl2z
