#include "psl2z/kernel.hpp"

#include <cassert>

#include "psl2z/error.hpp"

namespace psl2z {

namespace {

GWord generator_image(FLetter l) {
  static const GWord x1 = parse_gword("a.b.a.b2");
  static const GWord x2 = parse_gword("a.b2.a.b");
  const GWord& g = generator_index(l) == 0 ? x1 : x2;
  return is_inverse_letter(l) ? g.inverse() : g;
}

// The a-step dictionary is derived from the group rather than transcribed:
// each Schreier generator is computed in G and matched against the images of
// the four F2 letters.
std::array<FWord, KElem::kOrder> derive_a_step_table() {
  constexpr std::array letters{FLetter::X1, FLetter::X1Inv, FLetter::X2, FLetter::X2Inv};
  std::array<FWord, KElem::kOrder> table{};
  for (const KElem t : all_k_elements()) {
    const GWord schreier = section(t) * GWord::a() * section(t + KElem{1, 0}).inverse();
    if (schreier.is_unit()) continue;
    int matches = 0;
    for (const FLetter l : letters) {
      if (generator_image(l) == schreier) {
        table[t.index()] = FWord::letter(l);
        ++matches;
      }
    }
    if (matches != 1) throw Error("Schreier generator " + to_string(schreier) + " is not a basis letter");
  }
  for (const KElem t : all_k_elements()) {
    for (int e = 1; e <= 2; ++e) {
      const GWord schreier = section(t) * GWord::b(e) * section(t + KElem{0, e}).inverse();
      if (!schreier.is_unit()) throw Error("nontrivial b-step Schreier generator " + to_string(schreier));
    }
  }
  return table;
}

}  // namespace

bool is_in_kernel(const GWord& w) { return project(w).is_unit(); }

GWord expand_free(const FWord& v) {
  GWord out;
  for (const FLetter l : v.letters()) out = out * generator_image(l);
  return out;
}

const std::array<FWord, KElem::kOrder>& schreier_a_step_table() {
  static const std::array<FWord, KElem::kOrder> table = derive_a_step_table();
  return table;
}

FWord rewrite_to_free(const GWord& w) {
  if (!is_in_kernel(w)) throw NotInKernel(to_string(w) + " maps to " + to_string(project(w)));
  const auto& a_step = schreier_a_step_table();
  FWord out;
  KElem coset{};
  for (const GToken t : w.tokens()) {
    if (t == GToken::A) {
      out = out * a_step[coset.index()];
      coset = coset + KElem{1, 0};
    } else {
      coset = coset + KElem{0, t == GToken::B ? 1 : 2};
    }
  }
  assert(coset.is_unit());
  return out;
}

FWord TwistedActionTable::apply_alpha(KElem k, const FWord& v) const {
  FWord out;
  for (const FLetter l : v.letters()) {
    const FWord& image = alpha_[k.index()][generator_index(l)];
    out = out * (is_inverse_letter(l) ? image.inverse() : image);
  }
  return out;
}

TwistedActionTable build_twisted_table() {
  TwistedActionTable table;
  for (const KElem k : all_k_elements()) {
    const GWord n = section(k);
    const GWord n_inv = n.inverse();
    for (int r = 0; r < 2; ++r) {
      table.alpha_[k.index()][r] = rewrite_to_free(n * expand_free(FWord::generator(r)) * n_inv);
    }
    for (const KElem l : all_k_elements()) {
      table.cocycle_[k.index() * KElem::kOrder + l.index()] =
          rewrite_to_free(n * section(l) * section(k + l).inverse());
    }
  }
  return table;
}

const TwistedActionTable& twisted_table() {
  static const TwistedActionTable table = build_twisted_table();
  return table;
}

}  // namespace psl2z
