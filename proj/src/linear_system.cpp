#include "psl2z/linear_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "psl2z/error.hpp"

namespace psl2z {

namespace {

Matrix left_or_identity(const SylvesterTerm& t, int n) {
  return t.left ? *t.left : Matrix::Identity(n, n);
}

Matrix right_or_identity(const SylvesterTerm& t, int n) {
  return t.right ? *t.right : Matrix::Identity(n, n);
}

// Adds the Kronecker product outer (x) inner into gram at (row0, col0).
void add_kronecker(Matrix& gram, Eigen::Index row0, Eigen::Index col0, const Matrix& outer, const Matrix& inner) {
  const Eigen::Index p = inner.rows();
  for (Eigen::Index j = 0; j < outer.cols(); ++j) {
    for (Eigen::Index i = 0; i < outer.rows(); ++i) {
      const Complex s = outer(i, j);
      if (s == Complex(0.0, 0.0)) continue;
      gram.block(row0 + i * p, col0 + j * p, p, inner.cols()).noalias() += s * inner;
    }
  }
}

}  // namespace

BlockSylvesterSystem::BlockSylvesterSystem(int blocks, int rows, int cols)
    : blocks_(blocks), rows_(rows), cols_(cols) {
  if (blocks < 1 || rows < 1 || cols < 1) throw InvalidDimension("empty block system");
}

void BlockSylvesterSystem::add_group(SylvesterGroup group) { groups_.push_back(std::move(group)); }

double BlockSylvesterSystem::residual_norm(std::span<const Matrix> x) const {
  double total = 0.0;
  for (const auto& group : groups_) {
    Matrix acc;
    for (const auto& term : group.terms) {
      Matrix value = x[term.block];
      if (term.left) value = *term.left * value;
      if (term.right) value = value * *term.right;
      if (acc.size() == 0) {
        acc = std::move(value);
      } else {
        acc += value;
      }
    }
    total += acc.squaredNorm();
  }
  return std::sqrt(total);
}

NullSpaceResult BlockSylvesterSystem::solve(double relative_threshold) const {
  const Eigen::Index n = static_cast<Eigen::Index>(rows_) * cols_;
  Matrix gram = Matrix::Zero(blocks_ * n, blocks_ * n);
  for (const auto& group : groups_) {
    for (const auto& s : group.terms) {
      const Matrix ls = left_or_identity(s, rows_);
      const Matrix rs = right_or_identity(s, cols_);
      for (const auto& t : group.terms) {
        const Matrix outer = rs.conjugate() * right_or_identity(t, cols_).transpose();
        const Matrix inner = ls.adjoint() * left_or_identity(t, rows_);
        add_kronecker(gram, s.block * n, t.block * n, outer, inner);
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const Matrix& vecs = eig.eigenvectors();

  auto blocks_of = [&](Eigen::Index col) {
    std::vector<Matrix> x(blocks_, Matrix(rows_, cols_));
    for (int b = 0; b < blocks_; ++b) {
      for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i) x[b](i, j) = vecs(b * n + j * rows_ + i, col);
      }
    }
    return x;
  };

  NullSpaceResult out;
  const double ev_max = std::max(ev(ev.size() - 1), 0.0);
  out.sigma_max = std::sqrt(ev_max);
  out.threshold = relative_threshold * out.sigma_max;

  std::vector<double> sigma(ev.size());
  std::vector<char> direct(ev.size(), 0);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 1e-8 * ev_max) {
      direct[i] = 1;
      sigma[i] = residual_norm(blocks_of(i));
    } else {
      sigma[i] = std::sqrt(std::max(ev(i), 0.0));
    }
  }
  std::vector<Eigen::Index> order(ev.size());
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return sigma[x] < sigma[y]; });

  out.singular_values.reserve(order.size());
  for (const auto i : order) {
    out.singular_values.push_back(sigma[i]);
    if (direct[i]) out.near_null.emplace_back(sigma[i], blocks_of(i));
    if (sigma[i] <= out.threshold) {
      out.basis.push_back(blocks_of(i));
      out.residual = std::max(out.residual, sigma[i]);
    }
  }
  return out;
}

NullSpaceResult solve_intertwining(std::span<const Matrix> a_gens, std::span<const Matrix> b_gens,
                                   double relative_threshold) {
  if (a_gens.size() != b_gens.size() || a_gens.empty()) {
    throw DimensionMismatch("generator lists must be nonempty and of equal length");
  }
  const int q = static_cast<int>(a_gens.front().rows());
  const int p = static_cast<int>(b_gens.front().rows());
  BlockSylvesterSystem system(1, p, q);
  for (std::size_t g = 0; g < a_gens.size(); ++g) {
    if (a_gens[g].rows() != q || a_gens[g].cols() != q || b_gens[g].rows() != p || b_gens[g].cols() != p) {
      throw DimensionMismatch("generator sizes are inconsistent");
    }
    system.add_group({{SylvesterTerm{0, std::nullopt, a_gens[g]}, SylvesterTerm{0, Matrix(-b_gens[g]), std::nullopt}}});
  }
  return system.solve(relative_threshold);
}

}  // namespace psl2z
