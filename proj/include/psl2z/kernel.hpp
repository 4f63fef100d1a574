#pragma once

// The kernel H = ker(p : G -> K), free on x1 = abab^2 and x2 = ab^2ab, and
// the twisted action of K on F2 obtained from the section n(i, j) = a^i b^j.

#include <array>

#include "psl2z/word.hpp"

namespace psl2z {

bool is_in_kernel(const GWord& w);

/// Substitutes x1 -> abab^2, x2 -> ab^2ab.
GWord expand_free(const FWord& v);

/// Reidemeister-Schreier rewrite of an element of H in the free basis.
/// Throws NotInKernel when w is not in H.
FWord rewrite_to_free(const GWord& w);

/// The Schreier generator t a n(p(t a))^{-1} for the transversal element
/// n(t), written in the free basis. Trivial steps are empty words; b-steps
/// are always trivial for this transversal.
const std::array<FWord, KElem::kOrder>& schreier_a_step_table();

/// alpha_k on generators and the 2-cocycle u(k, l), both as F2 words.
class TwistedActionTable {
 public:
  const FWord& alpha(KElem k, int r) const { return alpha_[k.index()][r]; }
  const FWord& cocycle(KElem k, KElem l) const { return cocycle_[k.index() * KElem::kOrder + l.index()]; }

  /// Generator substitution followed by free reduction.
  FWord apply_alpha(KElem k, const FWord& v) const;

  friend TwistedActionTable build_twisted_table();

 private:
  std::array<std::array<FWord, 2>, KElem::kOrder> alpha_{};
  std::array<FWord, KElem::kOrder * KElem::kOrder> cocycle_{};
};

/// alpha_k(x_r) = rewrite(n(k) x_r n(k)^{-1}), u(k,l) = rewrite(n(k) n(l) n(kl)^{-1}).
TwistedActionTable build_twisted_table();

/// Process-wide table, built once.
const TwistedActionTable& twisted_table();

}  // namespace psl2z
