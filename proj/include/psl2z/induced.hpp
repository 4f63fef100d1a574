#pragma once

// The covariant pair (pi_alpha, lambda_u) and the induced regular
// representation Ind pi on l2(K, C^d) = C^{6d}, with block-level access
// indexed by K x K, plus intertwiner / commutant solvers.

#include <array>
#include <cstdint>
#include <vector>

#include "psl2z/kernel.hpp"
#include "psl2z/linear_system.hpp"
#include "psl2z/rep_model.hpp"
#include "psl2z/twisted_algebra.hpp"

namespace psl2z {

/// Operator on the direct sum of the six copies H_k, stored as 6 x 6 blocks
/// of size d x d. block(k, l) maps H_l into H_k.
class InducedOperator {
 public:
  explicit InducedOperator(int block_dim);
  static InducedOperator identity(int block_dim);
  static InducedOperator from_dense(const Matrix& dense, int block_dim);

  int block_dim() const { return block_dim_; }
  const Matrix& block(KElem row, KElem col) const { return blocks_[row.index() * KElem::kOrder + col.index()]; }
  Matrix& block(KElem row, KElem col) { return blocks_[row.index() * KElem::kOrder + col.index()]; }

  Matrix to_dense() const;
  InducedOperator adjoint() const;

  friend InducedOperator operator+(const InducedOperator& x, const InducedOperator& y);
  friend InducedOperator operator-(const InducedOperator& x, const InducedOperator& y);
  friend InducedOperator operator*(const InducedOperator& x, const InducedOperator& y);
  friend InducedOperator operator*(Complex s, const InducedOperator& x);

 private:
  int block_dim_;
  std::array<Matrix, KElem::kOrder * KElem::kOrder> blocks_;
};

/// Operator norm of x - y.
double defect(const InducedOperator& x, const InducedOperator& y);

Complex to_complex(const GaussianRational& c);

/// pi applied to an element of the group algebra.
Matrix evaluate(const RepModel& m, const GroupAlgElem& a);

/// (pi_alpha(a) xi)(k) = pi(alpha_{k^{-1}}(a)) xi(k)
InducedOperator pi_alpha(const RepModel& m, const TwistedActionTable& table, const GroupAlgElem& a);

/// (lambda_u(k) xi)(l) = pi(u(l^{-1}, k)) xi(k^{-1} l)
InducedOperator lambda_u(const RepModel& m, const TwistedActionTable& table, KElem k);

/// (Ind pi)(f) = sum_k pi_alpha(f(k)) lambda_u(k)
InducedOperator induce(const RepModel& m, const TwistedActionTable& table, const L1Elem& f);

struct CovarianceReport {
  /// pi_alpha(alpha_k(a)) = lambda_u(k) pi_alpha(a) lambda_u(k)^*
  int covariance_instances = 0;
  double covariance_max_defect = 0.0;
  /// lambda_u(k) lambda_u(l) = pi_alpha(u(k,l)) lambda_u(kl)
  int multiplication_instances = 0;
  double multiplication_max_defect = 0.0;

  bool pass(double tol) const { return covariance_max_defect <= tol && multiplication_max_defect <= tol; }
};

/// Checks both covariance relations for all k, l and for a in {x1, x2} plus
/// `random_elements` seeded random group-algebra elements.
CovarianceReport check_covariance(const RepModel& m, const TwistedActionTable& table, std::uint64_t seed = 0,
                                  int random_elements = 2);

struct IntertwinerSpace {
  int dimension = 0;
  /// Orthonormal under the trace inner product.
  std::vector<InducedOperator> basis;
  /// Largest ||T A_g - B_g T|| over basis elements and generators, computed
  /// from the dense operators.
  double residual = 0.0;
  /// Singular values of the full constraint system, ascending.
  std::vector<double> singular_values;
  double sigma_max = 0.0;
  double threshold = 0.0;

  /// sigma_2 / sigma_max, or 0 when there are fewer than two values.
  double second_smallest_ratio() const;
  double smallest_ratio() const;
};

struct SolverOptions {
  double relative_threshold = 1e-8;
};

/// The generating set used for the intertwining equations: pi_alpha(x1),
/// pi_alpha(x2), then lambda_u(k) in index order.
std::vector<InducedOperator> generating_images(const RepModel& m, const TwistedActionTable& table);

/// Solves T (Ind_A g) = (Ind_B g) T over the generating set. The system is
/// split exactly into six independent subsystems, one for each orbit
/// {(k, k + delta)} of block positions, since every generator has a single
/// nonzero block per block row at a fixed K-shift. Throws DimensionMismatch
/// when the models have different dimensions.
IntertwinerSpace intertwiners(const RepModel& a, const RepModel& b, const TwistedActionTable& table,
                              const SolverOptions& options = {});

/// Dense reference solver over the full (6d)^2 unknowns; only for small d.
IntertwinerSpace intertwiners_dense(const RepModel& a, const RepModel& b, const TwistedActionTable& table,
                                    const SolverOptions& options = {});

/// Commutant of {V1, lambda V2} on C^d.
NullSpaceResult commutant(const RepModel& m, double relative_threshold = 1e-8);

struct DecomposabilityReport {
  double max_off_diagonal = 0.0;
  /// max over k, r of ||T_kk pi_A(x_r) - pi_B(x_r) T_kk||
  double max_diagonal_intertwining_defect = 0.0;
  /// max over k, l of ||T_kk - T_ll||
  double max_diagonal_spread = 0.0;
  bool pass = false;
};

/// Requires pi_A o alpha_j and pi_B inequivalent for every j != e, witnessed
/// by the spectra of the generator images; throws HypothesisNotMet otherwise.
DecomposabilityReport check_decomposability(const RepModel& a, const RepModel& b, const InducedOperator& t,
                                            const TwistedActionTable& table, double tol = 1e-8,
                                            double equivalence_tol = 1e-8);

}  // namespace psl2z
