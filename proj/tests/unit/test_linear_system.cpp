#include <doctest.h>

#include <Eigen/SVD>

#include "psl2z/error.hpp"
#include "psl2z/linear_system.hpp"
#include "support.hpp"

using namespace psl2z;

namespace {

// Oracle: vec(X A - B X) = (A^T (x) I - I (x) B) vec(X), null space by SVD.
int dense_null_dimension(const std::vector<Matrix>& a, const std::vector<Matrix>& b, double rel) {
  const int p = static_cast<int>(b.front().rows());
  const int q = static_cast<int>(a.front().rows());
  Matrix stacked(static_cast<Eigen::Index>(a.size()) * p * q, p * q);
  for (std::size_t g = 0; g < a.size(); ++g) {
    Matrix block = Matrix::Zero(p * q, p * q);
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) block.block(j * p, i * p, p, p) += a[g](i, j) * Matrix::Identity(p, p);
      block.block(i * p, i * p, p, p) -= b[g];
    }
    stacked.middleRows(static_cast<Eigen::Index>(g) * p * q, p * q) = block;
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& s = svd.singularValues();
  int count = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) count += s(i) <= rel * s(0) ? 1 : 0;
  return count;
}

Matrix diag(const std::vector<Complex>& v) {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace

TEST_CASE("commutant of a diagonal with distinct entries is the diagonal algebra") {
  const std::vector<Matrix> gens = {diag({1.0, Complex(0, 1), -1.0, Complex(0, -1)})};
  const NullSpaceResult r = solve_intertwining(gens, gens);
  CHECK(r.basis.size() == 4);
  CHECK(r.residual <= 1e-12);
  CHECK(dense_null_dimension(gens, gens, 1e-8) == 4);
}

TEST_CASE("irreducible pair has a one-dimensional commutant") {
  const Matrix v = testing::random_unitary(5, 1);
  const Matrix w = diag({unit_from_turns(0.1), unit_from_turns(0.2), unit_from_turns(0.35), unit_from_turns(0.6),
                         unit_from_turns(0.8)});
  const std::vector<Matrix> gens = {v, w};
  const NullSpaceResult r = solve_intertwining(gens, gens);
  REQUIRE(r.basis.size() == 1);
  const Matrix& x = r.basis.front().front();
  // The commutant element is a multiple of the identity with unit Frobenius norm.
  CHECK((x - x(0, 0) * Matrix::Identity(5, 5)).norm() <= 1e-10);
  CHECK(x.norm() == doctest::Approx(1.0));
  CHECK(r.singular_values.size() == 25);
  CHECK(r.singular_values[1] >= 1e-4 * r.sigma_max);
}

TEST_CASE("intertwiners between conjugate tuples") {
  const Matrix s = testing::random_unitary(4, 9);
  const std::vector<Matrix> a = {testing::random_unitary(4, 2), testing::random_unitary(4, 3)};
  const std::vector<Matrix> b = {s * a[0] * s.adjoint(), s * a[1] * s.adjoint()};
  const NullSpaceResult r = solve_intertwining(a, b);
  REQUIRE(r.basis.size() == 1);
  const Matrix& x = r.basis.front().front();
  CHECK((x * a[0] - b[0] * x).norm() <= 1e-10);
  CHECK((x * a[1] - b[1] * x).norm() <= 1e-10);
  CHECK(dense_null_dimension(a, b, 1e-8) == 1);

  const std::vector<Matrix> c = {testing::random_unitary(4, 4), testing::random_unitary(4, 5)};
  CHECK(solve_intertwining(a, c).basis.empty());
  CHECK(dense_null_dimension(a, c, 1e-8) == 0);
}

TEST_CASE("rectangular intertwiners through the block system") {
  // X : C^2 -> C^3 with X A = B X, A = diag(1, i), B = diag(1, i, -1).
  const std::vector<Matrix> a = {diag({1.0, Complex(0, 1)})};
  const std::vector<Matrix> b = {diag({1.0, Complex(0, 1), -1.0})};
  const NullSpaceResult r = solve_intertwining(a, b);
  CHECK(r.basis.size() == 2);
  CHECK(dense_null_dimension(a, b, 1e-8) == 2);
}

TEST_CASE("multi-block system and residuals") {
  // X0 = X1, X0 M = M X1 and X0 N = N X1 for a generic pair M, N: the null
  // space is {(c I, c I)}.
  const Matrix m = testing::random_unitary(3, 12);
  const Matrix n = testing::random_unitary(3, 13);
  BlockSylvesterSystem sys(2, 3, 3);
  sys.add_group({{{0, std::nullopt, std::nullopt}, {1, -Matrix::Identity(3, 3), std::nullopt}}});
  sys.add_group({{{0, std::nullopt, m}, {1, -m, std::nullopt}}});
  sys.add_group({{{0, std::nullopt, n}, {1, -n, std::nullopt}}});
  CHECK(sys.unknowns() == 18);
  const NullSpaceResult r = sys.solve(1e-8);
  REQUIRE(r.basis.size() == 1);
  CHECK(sys.residual_norm(r.basis.front()) <= 1e-12);
  const std::vector<Matrix> bad = {Matrix::Identity(3, 3), Matrix::Zero(3, 3)};
  CHECK(sys.residual_norm(bad) > 0.1);

  BlockSylvesterSystem single(2, 3, 3);
  single.add_group({{{0, std::nullopt, std::nullopt}, {1, -Matrix::Identity(3, 3), std::nullopt}}});
  single.add_group({{{0, std::nullopt, m}, {1, -m, std::nullopt}}});
  // One generic unitary has a three-dimensional commutant.
  CHECK(single.solve(1e-8).basis.size() == 3);
}

TEST_CASE("solver input validation") {
  const std::vector<Matrix> one = {Matrix::Identity(2, 2)};
  const std::vector<Matrix> two = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(solve_intertwining(one, two), DimensionMismatch);
  CHECK_THROWS_AS(BlockSylvesterSystem(0, 1, 1), InvalidDimension);
}
