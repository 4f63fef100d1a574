#pragma once

// Helpers shared by the unit and acceptance tests.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "psl2z/rep_model.hpp"

namespace psl2z::testing {

inline Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) z(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ();
}

/// W diag(eigenvalues) W^* for a seeded unitary W.
inline Matrix unitary_with_spectrum(const std::vector<Complex>& eigenvalues, std::uint64_t seed) {
  const int d = static_cast<int>(eigenvalues.size());
  const Matrix w = random_unitary(d, seed);
  Matrix diag = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) diag(j, j) = eigenvalues[j];
  return w * diag * w.adjoint();
}

/// Model whose V1 has spectrum shift * spec(V2), so shift lies in Omega1.
inline RepModel rigged_model(const std::vector<double>& angle_turns, Complex shift, std::uint64_t seed) {
  std::vector<Complex> eig;
  for (const double t : angle_turns) eig.push_back(shift * unit_from_turns(t));
  return RepModel::from_parts(unitary_with_spectrum(eig, seed), angle_turns);
}

}  // namespace psl2z::testing
