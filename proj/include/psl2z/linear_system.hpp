#pragma once

// Homogeneous block-Sylvester systems
//
//     sum_t  L_t X_{b_t} R_t = 0      (one equation group per constraint)
//
// in unknown p x q blocks X_0, ..., X_{n-1}. The null space is found from the
// eigendecomposition of the Gram operator C^* C, assembled block by block
// from Kronecker products; the small singular values are then recomputed as
// direct residual norms ||C v|| so they are not limited by the squaring.

#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "psl2z/rep_model.hpp"

namespace psl2z {

struct SylvesterTerm {
  int block = 0;
  std::optional<Matrix> left;   // identity when empty
  std::optional<Matrix> right;  // identity when empty
};

struct SylvesterGroup {
  std::vector<SylvesterTerm> terms;
};

struct NullSpaceResult {
  /// Singular values of the stacked system, ascending.
  std::vector<double> singular_values;
  double sigma_max = 0.0;
  /// sigma <= relative_threshold * sigma_max counts as zero.
  double threshold = 0.0;
  /// Orthonormal (Frobenius) null vectors, each given as its blocks.
  std::vector<std::vector<Matrix>> basis;
  /// Largest direct residual ||C v|| over the basis.
  double residual = 0.0;
  /// Every eigenvector whose singular value was recomputed directly
  /// (sigma <= 1e-4 sigma_max), ascending; a superset of the basis.
  std::vector<std::pair<double, std::vector<Matrix>>> near_null;
};

class BlockSylvesterSystem {
 public:
  BlockSylvesterSystem(int blocks, int rows, int cols);

  void add_group(SylvesterGroup group);

  int unknowns() const { return blocks_ * rows_ * cols_; }

  /// Applies the system to a candidate solution and returns ||C x||_2.
  double residual_norm(std::span<const Matrix> x) const;

  NullSpaceResult solve(double relative_threshold) const;

 private:
  int blocks_;
  int rows_;
  int cols_;
  std::vector<SylvesterGroup> groups_;
};

/// Null space of { X : X A_g = B_g X for all g } for X of size
/// dim(B) x dim(A). Throws DimensionMismatch if the generator lists differ in
/// length.
NullSpaceResult solve_intertwining(std::span<const Matrix> a_gens, std::span<const Matrix> b_gens,
                                   double relative_threshold = 1e-8);

}  // namespace psl2z
