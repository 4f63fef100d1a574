#include <doctest.h>

#include <cmath>
#include <numbers>

#include "psl2z/error.hpp"
#include "psl2z/free_point.hpp"
#include "support.hpp"

using namespace psl2z;

namespace {

bool contains(const std::vector<Complex>& set, Complex z, double tol = 1e-9) {
  for (const Complex w : set) {
    if (std::abs(w - z) <= tol) return true;
  }
  return false;
}

const std::vector<double> kSymmetric = {0.02, 0.09, 0.21, -0.02, -0.09, -0.21};

}  // namespace

TEST_CASE("angular distance") {
  CHECK(angular_distance(1.0, -1.0) == doctest::Approx(std::numbers::pi));
  CHECK(angular_distance(unit_from_turns(0.99), unit_from_turns(0.01)) == doctest::Approx(0.04 * std::numbers::pi));
}

TEST_CASE("rotations between spectra") {
  const Spectrum s({unit_from_turns(0.0), unit_from_turns(0.25), unit_from_turns(0.5), unit_from_turns(0.75)});
  const auto rot = rotations_between(s, s, 1e-9);
  CHECK(rot.size() == 4);
  CHECK(contains(rot, Complex(0, 1)));
  const Spectrum t({unit_from_turns(0.0), unit_from_turns(0.1), unit_from_turns(0.3)});
  CHECK(rotations_between(t, t, 1e-9).size() == 1);
  CHECK(rotations_between(t, t.rotated(unit_from_turns(0.4)), 1e-9).size() == 1);
  CHECK(rotations_between(t, Spectrum({1.0}), 1e-9).empty());
}

TEST_CASE("generic model has empty base sets") {
  const OmegaSets o = compute_omegas(make_rep(6, 1), {});
  CHECK(o.omega1.empty());
  CHECK(o.omega2.empty());
  CHECK(o.omega3.empty());
  CHECK(o.forbidden().empty());
}

TEST_CASE("structured model populates every set") {
  const Complex shift = unit_from_turns(0.3);
  const RepModel m = testing::rigged_model(kSymmetric, shift, 5);
  const Complex prev = unit_from_turns(0.45);
  const OmegaSets o = compute_omegas(m, std::vector<Complex>{prev});
  CHECK(contains(o.omega1, shift));
  // The angles are symmetric, so conj(spec V2) = spec V2. Then conj(shift)
  // lies in Omega2 and +-1 lie in Omega3.
  CHECK(contains(o.omega2, std::conj(shift)));
  CHECK(contains(o.omega3, 1.0));
  CHECK(contains(o.omega3, -1.0));
  REQUIRE(o.omega_lambda.size() == 1);
  CHECK(contains(o.omega_lambda.front().second, prev));
  CHECK(contains(o.omega_lambda.front().second, std::conj(prev)));
  for (const Complex z : o.forbidden()) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-12);

  // Every enumerated member satisfies its relation.
  const Spectrum v1 = spectrum_of(m.v1());
  const Spectrum v2(m.mu());
  for (const Complex l : o.omega1) CHECK(spectra_match(v1, v2.rotated(l), 1e-8));
  for (const Complex l : o.omega2) CHECK(spectra_match(v1, v2.rotated(l).conjugated(), 1e-8));
  for (const Complex l : o.omega3) CHECK(spectra_match(v2.rotated(l), v2.rotated(l).conjugated(), 1e-8));
}

TEST_CASE("degenerate V2 is rejected") {
  const RepModel m = RepModel::from_parts(Matrix::Identity(2, 2), {0.1, 0.1 + 1e-11});
  CHECK_THROWS_AS(compute_omegas(m, {}), DegenerateSpectrum);
}

TEST_CASE("deterministic selection") {
  const RepModel generic = make_rep(6, 1);
  const LambdaChoice first = select_lambda(generic, {});
  CHECK(first.turns_text() == "0/1");
  CHECK(first.value == Complex(1.0, 0.0));

  // 1 and -1 are forbidden here.
  const RepModel rigged = testing::rigged_model(kSymmetric, 1.0, 5);
  const LambdaChoice next = select_lambda(rigged, {});
  CHECK(next.turns_text() == "1/3");
  const OmegaSets o = compute_omegas(rigged, {});
  for (const Complex z : o.forbidden()) CHECK(angular_distance(z, next.value) >= 1e-3);

  SelectOptions huge;
  huge.margin = 4.0;
  CHECK_THROWS_AS(select_lambda(rigged, {}, huge), MarginInfeasible);
}

TEST_CASE("random selection is seeded") {
  const RepModel m = make_rep(4, 2);
  SelectOptions opt;
  opt.strategy = SelectionStrategy::Random;
  opt.seed = 19;
  const LambdaChoice a = select_lambda(m, {}, opt);
  const LambdaChoice b = select_lambda(m, {}, opt);
  CHECK(a.value == b.value);
  CHECK_FALSE(a.exact_turns.has_value());
}

TEST_CASE("free-point verification") {
  const auto& table = twisted_table();
  const StabilizerReport ok = verify_free_point(make_rep(5, 4), unit_from_turns(0.37), table);
  CHECK(ok.free);
  CHECK(ok.star_holds());
  CHECK(ok.stabilizer.size() == 1);

  // lambda in Omega1: alpha_(1,1) sends x2 to x1, so its x2 witness fails and
  // the first starred condition fails.
  const Complex shift = unit_from_turns(0.3);
  const RepModel rigged = testing::rigged_model({0.05, 0.17, 0.33, 0.61}, shift, 8);
  const StabilizerReport bad = verify_free_point(rigged, shift, table);
  CHECK_FALSE(bad.witness[KElem(1, 1).index()][1]);
  CHECK_FALSE(bad.star[0]);
  CHECK_FALSE(bad.star_holds());
}

TEST_CASE("pairwise conditions and families") {
  const RepModel m = make_rep(6, 9);
  const auto family = build_family(m, 4);
  REQUIRE(family.size() == 4);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto c = pairwise_conditions(m, family[i].value, family[j].value);
      for (const bool b : c) CHECK(b);
    }
  }
  const auto same = pairwise_conditions(m, family[0].value, family[0].value);
  CHECK_FALSE(same[4]);
  CHECK_THROWS_AS(build_family(m, 0), std::invalid_argument);
}
