#include <doctest.h>

#include <random>
#include <string>

#include "psl2z/error.hpp"
#include "psl2z/random.hpp"
#include "psl2z/word.hpp"

using namespace psl2z;

namespace {

// Independent reducer on raw letter strings: delete "aa" and "bbb" until
// nothing changes.
std::string reduce_letters(std::string s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const std::string pat : {"aa", "bbb"}) {
      const auto pos = s.find(pat);
      if (pos != std::string::npos) {
        s.erase(pos, pat.size());
        changed = true;
      }
    }
  }
  return s;
}

std::string letters_of(const GWord& w) {
  std::string s;
  for (const GToken t : w.tokens()) s += t == GToken::A ? "a" : t == GToken::B ? "b" : "bb";
  return s;
}

}  // namespace

TEST_CASE("K arithmetic and ordering") {
  CHECK(KElem(3, 4) == KElem(1, 1));
  CHECK(KElem(-1, -1) == KElem(1, 2));
  CHECK((KElem(1, 2) + KElem(1, 2)) == KElem(0, 1));
  CHECK(KElem(1, 2).inverse() == KElem(1, 1));
  const auto all = all_k_elements();
  for (int idx = 0; idx < KElem::kOrder; ++idx) {
    CHECK(all[idx].index() == idx);
    CHECK((all[idx] - all[idx]).is_unit());
  }
  CHECK(to_string(KElem(1, 2)) == "(1,2)");
}

TEST_CASE("normal form of G-words") {
  CHECK(parse_gword("a.a").is_unit());
  CHECK(parse_gword("b.b.b").is_unit());
  CHECK(parse_gword("b.b") == GWord::b(2));
  CHECK(parse_gword("b2.b2") == GWord::b(1));
  CHECK(parse_gword("a.b.b2.a").is_unit());
  CHECK(parse_gword("1").is_unit());
  CHECK(to_string(parse_gword("a.b.a.b2")) == "a.b.a.b2");
  CHECK(to_string(GWord{}) == "1");
  CHECK_THROWS_AS(parse_gword("c"), ParseError);
  CHECK_THROWS_AS(parse_gword(""), ParseError);
}

TEST_CASE("G-word group laws on seeded random words") {
  const std::uint64_t seed = 20240501;
  INFO("seed = " << seed);
  Rng rng(seed);
  for (int trial = 0; trial < 2000; ++trial) {
    const GWord x = random_gword(rng, 8);
    const GWord y = random_gword(rng, 8);
    const GWord z = random_gword(rng, 8);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).is_unit());
    CHECK((x.inverse() * x).is_unit());
    CHECK(GWord::from_tokens(x.tokens()) == x);
    CHECK(project(x * y) == project(x) + project(y));
    CHECK(letters_of(x * y) == reduce_letters(letters_of(x) + letters_of(y)));
  }
}

TEST_CASE("section is normalized and splits the projection") {
  CHECK(section(KElem{}).is_unit());
  for (const KElem k : all_k_elements()) CHECK(project(section(k)) == k);
  CHECK(to_string(section(KElem(1, 2))) == "a.b2");
}

TEST_CASE("F-word reduction and parsing") {
  CHECK(parse_fword("x1.X1").is_unit());
  CHECK(parse_fword("x1.x2.X2.X1").is_unit());
  CHECK(to_string(parse_fword("x1.x2.X2.x2")) == "x1.x2");
  CHECK(parse_fword("X2").inverse() == FWord::generator(1));
  CHECK(to_string(FWord{}) == "1");
  CHECK_THROWS_AS(parse_fword("x3"), ParseError);

  const std::uint64_t seed = 77;
  INFO("seed = " << seed);
  Rng rng(seed);
  for (int trial = 0; trial < 2000; ++trial) {
    const FWord x = random_fword(rng, 10);
    const FWord y = random_fword(rng, 10);
    const FWord z = random_fword(rng, 10);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).is_unit());
    CHECK(FWord::from_letters(x.letters()) == x);
    CHECK(parse_fword(to_string(x)) == x);
    for (std::size_t i = 1; i < x.length(); ++i) CHECK(x.letters()[i] != inverse(x.letters()[i - 1]));
  }
}
