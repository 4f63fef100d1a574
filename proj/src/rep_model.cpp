#include "psl2z/rep_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "psl2z/error.hpp"

namespace psl2z {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinRandomSeparationRad = 1e-3;
// Angles closer than this (in turns) name the same point.
constexpr double kDuplicateTurns = 1e-14;

double wrap_turns(double t) {
  t = std::fmod(t, 1.0);
  return t < 0 ? t + 1.0 : t;
}

double circular_turn_distance(double s, double t) {
  const double d = std::abs(wrap_turns(s) - wrap_turns(t));
  return std::min(d, 1.0 - d);
}

// Kuhn augmenting-path matching on the bipartite graph {dist[i][j] <= tol}.
bool has_perfect_matching(const std::vector<std::vector<double>>& dist, double tol) {
  const std::size_t n = dist.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen(n);
  auto augment = [&](auto&& self, std::size_t left) -> bool {
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[r] || dist[left][r] > tol) continue;
      seen[r] = 1;
      if (match_right[r] < 0 || self(self, static_cast<std::size_t>(match_right[r]))) {
        match_right[r] = static_cast<int>(left);
        return true;
      }
    }
    return false;
  };
  for (std::size_t left = 0; left < n; ++left) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, left)) return false;
  }
  return true;
}

std::vector<std::vector<double>> distance_table(const Spectrum& x, const Spectrum& y) {
  std::vector<std::vector<double>> dist(x.size(), std::vector<double>(y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) dist[i][j] = std::abs(x.values()[i] - y.values()[j]);
  }
  return dist;
}

}  // namespace

Complex unit_from_turns(double turns) { return std::polar(1.0, kTwoPi * wrap_turns(turns)); }

double turns_of(Complex z) {
  double a = std::arg(z) / kTwoPi;
  if (a < 0) a += 1.0;
  return a >= 1.0 ? 0.0 : a;
}

// ---------------------------------------------------------------------------
// RepModel

RepModel RepModel::from_parts(Matrix v1, std::vector<double> angle_turns, Complex lambda) {
  if (v1.rows() == 0 || v1.rows() != v1.cols()) throw InvalidDimension("V1 must be a nonempty square matrix");
  if (static_cast<std::size_t>(v1.rows()) != angle_turns.size()) {
    throw InvalidDimension("V1 is " + std::to_string(v1.rows()) + "x" + std::to_string(v1.rows()) + " but " +
                           std::to_string(angle_turns.size()) + " angles were given");
  }
  if (unitarity_defect(v1) > 1e-12) throw NotUnitary("V1 is not unitary to 1e-12");
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw NotUnitModulus("|lambda| != 1");
  for (double& t : angle_turns) t = wrap_turns(t);
  for (std::size_t i = 0; i < angle_turns.size(); ++i) {
    for (std::size_t j = i + 1; j < angle_turns.size(); ++j) {
      if (circular_turn_distance(angle_turns[i], angle_turns[j]) <= kDuplicateTurns) {
        throw DuplicateAngles("V2 angles repeat");
      }
    }
  }

  RepModel m;
  m.v1_ = std::move(v1);
  m.angles_ = std::move(angle_turns);
  m.mu_.reserve(m.angles_.size());
  for (const double t : m.angles_) m.mu_.push_back(unit_from_turns(t));
  m.lambda_ = lambda;
  m.refresh_generators();
  return m;
}

Matrix RepModel::v2() const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) out(j, j) = mu_[j];
  return out;
}

void RepModel::refresh_generators() {
  generators_[0] = v1_;
  generator_inverses_[0] = v1_.adjoint();
  generators_[1] = lambda_ * v2();
  generator_inverses_[1] = generators_[1].adjoint();
}

RepModel make_rep(int dim, std::uint64_t seed, const std::optional<std::vector<double>>& angle_turns) {
  if (dim < 1) throw InvalidDimension("dimension must be >= 1");

  std::vector<double> angles;
  if (angle_turns) {
    angles = *angle_turns;
  } else {
    // Separate stream from the V1 draw so angles do not shift V1.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double min_sep = kMinRandomSeparationRad / kTwoPi;
    while (static_cast<int>(angles.size()) < dim) {
      const double t = uniform(rng);
      const bool clear = std::all_of(angles.begin(), angles.end(),
                                     [&](double s) { return circular_turn_distance(s, t) >= min_sep; });
      if (clear) angles.push_back(t);
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) z(r, c) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return RepModel::from_parts(std::move(q), std::move(angles));
}

RepModel with_lambda(const RepModel& m, Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw NotUnitModulus("|lambda| = " + std::to_string(std::abs(lambda)));
  RepModel out = m;
  out.lambda_ = lambda;
  out.refresh_generators();
  return out;
}

Matrix evaluate(const RepModel& m, const FWord& v) {
  Matrix out = Matrix::Identity(m.dim(), m.dim());
  for (const FLetter l : v.letters()) {
    const int r = generator_index(l);
    out = out * (is_inverse_letter(l) ? m.generator_inverse(r) : m.generator(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra

Spectrum::Spectrum(std::vector<Complex> values) : values_(std::move(values)) {
  for (Complex& z : values_) {
    const double mag = std::abs(z);
    if (mag > 0) z /= mag;
  }
  std::sort(values_.begin(), values_.end(), [](Complex x, Complex y) { return turns_of(x) < turns_of(y); });
}

Spectrum Spectrum::conjugated() const {
  std::vector<Complex> out;
  out.reserve(values_.size());
  for (const Complex z : values_) out.push_back(std::conj(z));
  return Spectrum(std::move(out));
}

Spectrum Spectrum::rotated(Complex by) const {
  std::vector<Complex> out;
  out.reserve(values_.size());
  for (const Complex z : values_) out.push_back(by * z);
  return Spectrum(std::move(out));
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_defect(const Matrix& u) {
  return operator_norm(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

Spectrum spectrum_of(const Matrix& u, double unitary_tol) {
  if (u.rows() != u.cols()) throw NotUnitary("matrix is not square");
  if (unitarity_defect(u) > unitary_tol) throw NotUnitary("matrix is not unitary within tolerance");
  Eigen::ComplexEigenSolver<Matrix> solver(u, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<Complex>(ev.data(), ev.data() + ev.size()));
}

double bottleneck_distance(const Spectrum& x, const Spectrum& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  if (x.size() == 0) return 0.0;
  const auto dist = distance_table(x, y);
  std::vector<double> levels;
  levels.reserve(x.size() * y.size());
  for (const auto& row : dist) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (has_perfect_matching(dist, levels[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return levels[lo];
}

bool spectra_match(const Spectrum& x, const Spectrum& y, double tol) {
  if (x.size() != y.size()) return false;
  return has_perfect_matching(distance_table(x, y), tol);
}

bool unitarily_equivalent(const Matrix& u, const Matrix& w, double tol) {
  if (u.rows() != w.rows()) return false;
  return spectra_match(spectrum_of(u), spectrum_of(w), tol);
}

}  // namespace psl2z
