#include <doctest.h>

#include <map>

#include "psl2z/kernel.hpp"
#include "psl2z/random.hpp"
#include "psl2z/twisted_algebra.hpp"

using namespace psl2z;

namespace {

// Oracle: the group algebra C[G] itself. f maps to sum_k f(k) n(k), and the
// twisted operations must become the ordinary product and adjoint there.
using GroupRing = std::map<GWord, GaussianRational>;

void accumulate(GroupRing& x, const GWord& g, const GaussianRational& c) {
  auto [it, inserted] = x.try_emplace(g, c);
  if (!inserted) it->second = it->second + c;
  if (it->second.is_zero()) x.erase(it);
}

GroupRing embed(const L1Elem& f) {
  GroupRing out;
  for (const KElem k : all_k_elements()) {
    for (const auto& [w, c] : f[k].terms()) accumulate(out, expand_free(w) * section(k), c);
  }
  return out;
}

GroupRing multiply(const GroupRing& x, const GroupRing& y) {
  GroupRing out;
  for (const auto& [g, c] : x) {
    for (const auto& [h, d] : y) accumulate(out, g * h, c * d);
  }
  return out;
}

GroupRing adjoint(const GroupRing& x) {
  GroupRing out;
  for (const auto& [g, c] : x) accumulate(out, g.inverse(), c.conj());
  return out;
}

}  // namespace

TEST_CASE("Gaussian rationals and group-algebra basics") {
  const GaussianRational half(Rational(1, 2), Rational(-1, 3));
  CHECK((half * half.conj()) == GaussianRational(Rational(13, 36)));
  CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-1, 3))) == "(1/2-1/3i)");

  GroupAlgElem x = GroupAlgElem::term(parse_fword("x1"), 2);
  x.add_term(parse_fword("x1"), -2);
  CHECK(x.is_zero());

  const GroupAlgElem y = GroupAlgElem::term(parse_fword("x1.x2"), GaussianRational(1, 1));
  CHECK(y.star() == GroupAlgElem::term(parse_fword("X2.X1"), GaussianRational(1, -1)));
  CHECK(y * GroupAlgElem::unit() == y);
  CHECK((y - y).is_zero());
}

TEST_CASE("twisted convolution and involution match C[G]") {
  const auto& table = twisted_table();
  const std::uint64_t seed = 31337;
  INFO("seed = " << seed);
  Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const L1Elem f = random_l1_elem(rng, 3, 4);
    const L1Elem g = random_l1_elem(rng, 3, 4);
    CHECK(embed(twisted_convolution(table, f, g)) == multiply(embed(f), embed(g)));
    CHECK(embed(twisted_involution(table, f)) == adjoint(embed(f)));
  }
}

TEST_CASE("*-algebra laws hold exactly") {
  const auto& table = twisted_table();
  const std::uint64_t seed = 8675309;
  INFO("seed = " << seed);
  Rng rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    const L1Elem f = random_l1_elem(rng, 2, 3);
    const L1Elem g = random_l1_elem(rng, 2, 3);
    const L1Elem h = random_l1_elem(rng, 2, 3);
    CHECK(twisted_convolution(table, twisted_convolution(table, f, g), h) ==
          twisted_convolution(table, f, twisted_convolution(table, g, h)));
    CHECK(twisted_involution(table, twisted_convolution(table, f, g)) ==
          twisted_convolution(table, twisted_involution(table, g), twisted_involution(table, f)));
    CHECK(twisted_involution(table, twisted_involution(table, f)) == f);
    CHECK(twisted_convolution(table, L1Elem::unit(), f) == f);
    CHECK(twisted_convolution(table, f, L1Elem::unit()) == f);
    CHECK(twisted_convolution(table, f, g + h) ==
          twisted_convolution(table, f, g) + twisted_convolution(table, f, h));
  }
}

TEST_CASE("delta products carry the cocycle") {
  const auto& table = twisted_table();
  for (const KElem k : all_k_elements()) {
    for (const KElem l : all_k_elements()) {
      const L1Elem prod =
          twisted_convolution(table, L1Elem::delta(k, GroupAlgElem::unit()), L1Elem::delta(l, GroupAlgElem::unit()));
      CHECK(prod == L1Elem::delta(k + l, GroupAlgElem::term(table.cocycle(k, l), 1)));
    }
  }
}

TEST_CASE("l1 norm bound") {
  L1Elem f = L1Elem::delta(KElem(1, 1), GroupAlgElem::term(parse_fword("x1"), GaussianRational(Rational(1, 2), -2)));
  CHECK(l1_norm_bound(f) == Rational(5, 2));
  CHECK(l1_norm_bound(L1Elem{}) == 0);
}
