#pragma once

// Finite-dimensional unitary models of representations of H = F2:
// x1 -> V1, x2 -> lambda * V2 with V2 diagonal with distinct unit entries.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "psl2z/word.hpp"

namespace psl2z {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// exp(2 pi i t) for an angle given in turns.
Complex unit_from_turns(double turns);
/// Angle of z in turns, in [0, 1).
double turns_of(Complex z);

class RepModel {
 public:
  /// V1 must be unitary to 1e-12; angles (in turns) must be pairwise distinct.
  static RepModel from_parts(Matrix v1, std::vector<double> angle_turns, Complex lambda = 1.0);

  int dim() const { return static_cast<int>(v1_.rows()); }
  const Matrix& v1() const { return v1_; }
  /// Diagonal entries mu_j of V2.
  const std::vector<Complex>& mu() const { return mu_; }
  const std::vector<double>& angle_turns() const { return angles_; }
  Matrix v2() const;
  Complex lambda() const { return lambda_; }

  /// Image of x_r under pi_lambda: V1 for r = 0, lambda V2 for r = 1.
  const Matrix& generator(int r) const { return generators_[r]; }
  const Matrix& generator_inverse(int r) const { return generator_inverses_[r]; }

 private:
  RepModel() = default;
  void refresh_generators();

  Matrix v1_;
  std::vector<double> angles_;
  std::vector<Complex> mu_;
  Complex lambda_{1.0, 0.0};
  Matrix generators_[2];
  Matrix generator_inverses_[2];

  friend RepModel with_lambda(const RepModel& m, Complex lambda);
};

/// Seeded model: V1 Haar-distributed (QR of a complex Gaussian matrix with the
/// R-diagonal phases folded into Q), V2 = diag(exp(2 pi i theta_j)) with the
/// given angles or seeded-random angles separated by at least 1e-3 rad.
/// lambda = 1. Throws InvalidDimension, DuplicateAngles.
RepModel make_rep(int dim, std::uint64_t seed, const std::optional<std::vector<double>>& angle_turns = std::nullopt);

/// Same V1, V2 with a new lambda. Throws NotUnitModulus.
RepModel with_lambda(const RepModel& m, Complex lambda);

/// pi_lambda of a word in F2.
Matrix evaluate(const RepModel& m, const FWord& v);

/// Eigenvalue multiset of a unitary, projected to the unit circle and sorted
/// by angle in [0, 2 pi).
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> values);

  const std::vector<Complex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  Spectrum conjugated() const;
  Spectrum rotated(Complex by) const;

 private:
  std::vector<Complex> values_;
};

double operator_norm(const Matrix& m);
double unitarity_defect(const Matrix& u);

/// Throws NotUnitary when ||u* u - I|| > unitary_tol.
Spectrum spectrum_of(const Matrix& u, double unitary_tol = 1e-8);

/// Smallest achievable maximum pairing distance over bijections between the
/// two multisets (infinity for different sizes).
double bottleneck_distance(const Spectrum& x, const Spectrum& y);

/// True iff a bijection exists with every paired distance <= tol.
bool spectra_match(const Spectrum& x, const Spectrum& y, double tol);

/// Unitaries are normal, so unitary equivalence is equality of spectra with
/// multiplicity. Throws NotUnitary.
bool unitarily_equivalent(const Matrix& u, const Matrix& w, double tol = 1e-8);

}  // namespace psl2z
