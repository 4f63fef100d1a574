#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "psl2z/error.hpp"
#include "psl2z/random.hpp"
#include "psl2z/rep_model.hpp"
#include "support.hpp"

using namespace psl2z;

namespace {

// Brute-force bottleneck distance over all permutations.
double brute_bottleneck(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  std::vector<int> perm(y.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("make_rep is seeded and unitary") {
  for (const int d : {1, 3, 8}) {
    const RepModel a = make_rep(d, 11);
    const RepModel b = make_rep(d, 11);
    CHECK(a.v1() == b.v1());
    CHECK(a.angle_turns() == b.angle_turns());
    CHECK(unitarity_defect(a.v1()) <= 1e-12);
    CHECK(a.dim() == d);
    CHECK(a.lambda() == Complex(1.0));
    for (std::size_t i = 0; i < a.mu().size(); ++i) {
      CHECK(std::abs(std::abs(a.mu()[i]) - 1.0) <= 1e-14);
      for (std::size_t j = i + 1; j < a.mu().size(); ++j) {
        CHECK(std::abs(std::arg(a.mu()[i] / a.mu()[j])) >= 1e-3);
      }
    }
  }
  CHECK_FALSE(make_rep(4, 11).v1().isApprox(make_rep(4, 12).v1()));
}

TEST_CASE("model validation errors") {
  CHECK_THROWS_AS(make_rep(0, 1), InvalidDimension);
  CHECK_THROWS_AS(make_rep(2, 1, std::vector<double>{0.1}), InvalidDimension);
  CHECK_THROWS_AS(make_rep(2, 1, std::vector<double>{0.1, 1.1}), DuplicateAngles);
  CHECK_THROWS_AS(with_lambda(make_rep(2, 1), Complex(1.1, 0.0)), NotUnitModulus);
  Matrix not_unitary = Matrix::Identity(2, 2);
  not_unitary(0, 1) = 0.5;
  CHECK_THROWS_AS(RepModel::from_parts(not_unitary, {0.1, 0.2}), NotUnitary);
}

TEST_CASE("evaluate is a homomorphism from F2") {
  const RepModel m = with_lambda(make_rep(5, 3), unit_from_turns(0.3));
  CHECK(evaluate(m, FWord::generator(0)).isApprox(m.v1()));
  CHECK(evaluate(m, FWord::generator(1)).isApprox(m.lambda() * m.v2()));
  CHECK(evaluate(m, FWord{}).isApprox(Matrix::Identity(5, 5)));
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const FWord v = random_fword(rng, 7);
    const FWord w = random_fword(rng, 7);
    CHECK(operator_norm(evaluate(m, v * w) - evaluate(m, v) * evaluate(m, w)) <= 1e-12);
    CHECK(operator_norm(evaluate(m, v.inverse()) - evaluate(m, v).adjoint()) <= 1e-12);
  }
}

TEST_CASE("turn conversions") {
  CHECK(std::abs(unit_from_turns(0.25) - Complex(0, 1)) <= 1e-15);
  CHECK(turns_of(Complex(0, -1)) == doctest::Approx(0.75));
  CHECK(turns_of(Complex(1, -1e-18)) == 0.0);
}

TEST_CASE("unitary equivalence by spectra") {
  const std::vector<Complex> eig = {unit_from_turns(0.1), unit_from_turns(0.4), unit_from_turns(0.7)};
  const Matrix u = testing::unitary_with_spectrum(eig, 1);
  const Matrix w = testing::unitary_with_spectrum(eig, 2);
  CHECK(unitarily_equivalent(u, w));
  CHECK_FALSE(unitarily_equivalent(u, Complex(0, 1) * w));

  // Same eigenvalue set, different multiplicities.
  const Matrix p = testing::unitary_with_spectrum({1.0, 1.0, Complex(0, 1)}, 3);
  const Matrix q = testing::unitary_with_spectrum({1.0, Complex(0, 1), Complex(0, 1)}, 4);
  CHECK_FALSE(unitarily_equivalent(p, q));
  CHECK(unitarily_equivalent(p, testing::unitary_with_spectrum({Complex(0, 1), 1.0, 1.0}, 5)));

  // Perturbation above and below tolerance.
  const Matrix near = testing::unitary_with_spectrum({eig[0] * unit_from_turns(1e-10), eig[1], eig[2]}, 6);
  const Matrix far = testing::unitary_with_spectrum({eig[0] * unit_from_turns(1e-6), eig[1], eig[2]}, 6);
  CHECK(unitarily_equivalent(u, near));
  CHECK_FALSE(unitarily_equivalent(u, far));

  CHECK_THROWS_AS(spectrum_of(Matrix::Identity(2, 2) * 2.0), NotUnitary);
}

TEST_CASE("bottleneck distance agrees with brute force") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> x, y;
    for (int i = 0; i < 5; ++i) {
      x.push_back(unit_from_turns(uniform(rng)));
      y.push_back(unit_from_turns(uniform(rng)));
    }
    const Spectrum sx(x), sy(y);
    CHECK(bottleneck_distance(sx, sy) == doctest::Approx(brute_bottleneck(sx.values(), sy.values())).epsilon(1e-12));
  }
  CHECK(std::isinf(bottleneck_distance(Spectrum({1.0}), Spectrum({1.0, -1.0}))));
}

TEST_CASE("spectrum operations") {
  const Spectrum s({unit_from_turns(0.9), unit_from_turns(0.1)});
  CHECK(turns_of(s.values()[0]) == doctest::Approx(0.1));
  CHECK(spectra_match(s.conjugated(), s, 1e-12));
  CHECK(spectra_match(s.rotated(unit_from_turns(0.5)), Spectrum({unit_from_turns(0.6), unit_from_turns(0.4)}), 1e-12));
}
