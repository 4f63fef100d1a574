#include "psl2z/induced.hpp"

#include <algorithm>
#include <stdexcept>

#include "psl2z/error.hpp"
#include "psl2z/random.hpp"

namespace psl2z {

namespace {

constexpr int kBlocks = KElem::kOrder * KElem::kOrder;

// The K-shift s of an operator whose nonzero blocks all sit at (l, l - s).
KElem block_shift(const InducedOperator& op) {
  std::optional<KElem> shift;
  for (const KElem row : all_k_elements()) {
    for (const KElem col : all_k_elements()) {
      if (op.block(row, col).isZero(0.0)) continue;
      const KElem s = row - col;
      if (shift && !(*shift == s)) throw std::logic_error("generator is not block-shift structured");
      shift = s;
    }
  }
  return shift.value_or(KElem{});
}

IntertwinerSpace finish_space(std::vector<InducedOperator> basis, std::vector<double> singular_values,
                              double sigma_max, double threshold, const std::vector<InducedOperator>& a_gens,
                              const std::vector<InducedOperator>& b_gens) {
  IntertwinerSpace space;
  space.dimension = static_cast<int>(basis.size());
  space.singular_values = std::move(singular_values);
  std::sort(space.singular_values.begin(), space.singular_values.end());
  space.sigma_max = sigma_max;
  space.threshold = threshold;
  for (const auto& t : basis) {
    for (std::size_t g = 0; g < a_gens.size(); ++g) {
      space.residual = std::max(space.residual, defect(t * a_gens[g], b_gens[g] * t));
    }
  }
  space.basis = std::move(basis);
  return space;
}

void require_same_dim(const RepModel& a, const RepModel& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("models have dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// InducedOperator

InducedOperator::InducedOperator(int block_dim) : block_dim_(block_dim) {
  if (block_dim < 1) throw InvalidDimension("block dimension must be >= 1");
  for (auto& b : blocks_) b = Matrix::Zero(block_dim, block_dim);
}

InducedOperator InducedOperator::identity(int block_dim) {
  InducedOperator op(block_dim);
  for (const KElem k : all_k_elements()) op.block(k, k) = Matrix::Identity(block_dim, block_dim);
  return op;
}

InducedOperator InducedOperator::from_dense(const Matrix& dense, int block_dim) {
  if (dense.rows() != KElem::kOrder * block_dim || dense.cols() != KElem::kOrder * block_dim) {
    throw DimensionMismatch("dense operator has the wrong size");
  }
  InducedOperator op(block_dim);
  for (const KElem row : all_k_elements()) {
    for (const KElem col : all_k_elements()) {
      op.block(row, col) = dense.block(row.index() * block_dim, col.index() * block_dim, block_dim, block_dim);
    }
  }
  return op;
}

Matrix InducedOperator::to_dense() const {
  const int n = KElem::kOrder * block_dim_;
  Matrix out(n, n);
  for (const KElem row : all_k_elements()) {
    for (const KElem col : all_k_elements()) {
      out.block(row.index() * block_dim_, col.index() * block_dim_, block_dim_, block_dim_) = block(row, col);
    }
  }
  return out;
}

InducedOperator InducedOperator::adjoint() const {
  InducedOperator out(block_dim_);
  for (const KElem row : all_k_elements()) {
    for (const KElem col : all_k_elements()) out.block(col, row) = block(row, col).adjoint();
  }
  return out;
}

InducedOperator operator+(const InducedOperator& x, const InducedOperator& y) {
  InducedOperator out(x.block_dim_);
  for (int i = 0; i < kBlocks; ++i) out.blocks_[i] = x.blocks_[i] + y.blocks_[i];
  return out;
}

InducedOperator operator-(const InducedOperator& x, const InducedOperator& y) {
  InducedOperator out(x.block_dim_);
  for (int i = 0; i < kBlocks; ++i) out.blocks_[i] = x.blocks_[i] - y.blocks_[i];
  return out;
}

InducedOperator operator*(const InducedOperator& x, const InducedOperator& y) {
  InducedOperator out(x.block_dim_);
  for (const KElem row : all_k_elements()) {
    for (const KElem mid : all_k_elements()) {
      const Matrix& left = x.block(row, mid);
      if (left.isZero(0.0)) continue;
      for (const KElem col : all_k_elements()) {
        const Matrix& right = y.block(mid, col);
        if (right.isZero(0.0)) continue;
        out.block(row, col).noalias() += left * right;
      }
    }
  }
  return out;
}

InducedOperator operator*(Complex s, const InducedOperator& x) {
  InducedOperator out(x.block_dim_);
  for (int i = 0; i < kBlocks; ++i) out.blocks_[i] = s * x.blocks_[i];
  return out;
}

double defect(const InducedOperator& x, const InducedOperator& y) { return operator_norm((x - y).to_dense()); }

// ---------------------------------------------------------------------------
// Covariant pair

Complex to_complex(const GaussianRational& c) {
  return {c.re.convert_to<double>(), c.im.convert_to<double>()};
}

Matrix evaluate(const RepModel& m, const GroupAlgElem& a) {
  Matrix out = Matrix::Zero(m.dim(), m.dim());
  for (const auto& [w, c] : a.terms()) out += to_complex(c) * evaluate(m, w);
  return out;
}

InducedOperator pi_alpha(const RepModel& m, const TwistedActionTable& table, const GroupAlgElem& a) {
  InducedOperator op(m.dim());
  for (const KElem k : all_k_elements()) op.block(k, k) = evaluate(m, apply_alpha(table, k.inverse(), a));
  return op;
}

InducedOperator lambda_u(const RepModel& m, const TwistedActionTable& table, KElem k) {
  InducedOperator op(m.dim());
  for (const KElem l : all_k_elements()) op.block(l, k.inverse() + l) = evaluate(m, table.cocycle(l.inverse(), k));
  return op;
}

InducedOperator induce(const RepModel& m, const TwistedActionTable& table, const L1Elem& f) {
  InducedOperator out(m.dim());
  for (const KElem k : all_k_elements()) {
    if (f[k].is_zero()) continue;
    out = out + pi_alpha(m, table, f[k]) * lambda_u(m, table, k);
  }
  return out;
}

CovarianceReport check_covariance(const RepModel& m, const TwistedActionTable& table, std::uint64_t seed,
                                  int random_elements) {
  std::vector<GroupAlgElem> elements{GroupAlgElem::term(FWord::generator(0), 1),
                                     GroupAlgElem::term(FWord::generator(1), 1)};
  Rng rng(seed);
  for (int i = 0; i < random_elements; ++i) elements.push_back(random_group_alg_elem(rng, 3, 6));

  std::array<InducedOperator, KElem::kOrder> lambdas{
      lambda_u(m, table, KElem::from_index(0)), lambda_u(m, table, KElem::from_index(1)),
      lambda_u(m, table, KElem::from_index(2)), lambda_u(m, table, KElem::from_index(3)),
      lambda_u(m, table, KElem::from_index(4)), lambda_u(m, table, KElem::from_index(5))};

  CovarianceReport report;
  for (const auto& a : elements) {
    const InducedOperator pa = pi_alpha(m, table, a);
    for (const KElem k : all_k_elements()) {
      const auto& lk = lambdas[k.index()];
      const double d = defect(pi_alpha(m, table, apply_alpha(table, k, a)), lk * pa * lk.adjoint());
      report.covariance_max_defect = std::max(report.covariance_max_defect, d);
      ++report.covariance_instances;
    }
  }
  for (const KElem k : all_k_elements()) {
    for (const KElem l : all_k_elements()) {
      const auto twist = pi_alpha(m, table, GroupAlgElem::term(table.cocycle(k, l), 1));
      const double d = defect(lambdas[k.index()] * lambdas[l.index()], twist * lambdas[(k + l).index()]);
      report.multiplication_max_defect = std::max(report.multiplication_max_defect, d);
      ++report.multiplication_instances;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Intertwiners

double IntertwinerSpace::second_smallest_ratio() const {
  if (singular_values.size() < 2 || sigma_max == 0.0) return 0.0;
  return singular_values[1] / sigma_max;
}

double IntertwinerSpace::smallest_ratio() const {
  if (singular_values.empty() || sigma_max == 0.0) return 0.0;
  return singular_values[0] / sigma_max;
}

std::vector<InducedOperator> generating_images(const RepModel& m, const TwistedActionTable& table) {
  std::vector<InducedOperator> gens;
  gens.push_back(pi_alpha(m, table, GroupAlgElem::term(FWord::generator(0), 1)));
  gens.push_back(pi_alpha(m, table, GroupAlgElem::term(FWord::generator(1), 1)));
  for (const KElem k : all_k_elements()) gens.push_back(lambda_u(m, table, k));
  return gens;
}

IntertwinerSpace intertwiners(const RepModel& a, const RepModel& b, const TwistedActionTable& table,
                              const SolverOptions& options) {
  require_same_dim(a, b);
  const int d = a.dim();
  const auto a_gens = generating_images(a, table);
  const auto b_gens = generating_images(b, table);
  std::vector<KElem> shifts;
  for (std::size_t g = 0; g < a_gens.size(); ++g) {
    shifts.push_back(block_shift(a_gens[g]));
    if (!(block_shift(b_gens[g]) == shifts.back())) throw std::logic_error("generator block patterns differ");
  }

  // Orbit delta holds X_k = T(k, k + delta). For a generator with shift s the
  // output block (k, k + delta - s) of T A - B T reads
  //   X_k A(k + delta, k + delta - s) - B(k, k - s) X_{k - s}.
  std::vector<NullSpaceResult> orbit_results;
  double sigma_max = 0.0;
  std::vector<double> singular_values;
  for (const KElem delta : all_k_elements()) {
    BlockSylvesterSystem system(KElem::kOrder, d, d);
    for (std::size_t g = 0; g < a_gens.size(); ++g) {
      const KElem s = shifts[g];
      for (const KElem k : all_k_elements()) {
        const KElem col = k + delta;
        SylvesterGroup group;
        group.terms.push_back({k.index(), std::nullopt, a_gens[g].block(col, col - s)});
        group.terms.push_back({(k - s).index(), Matrix(-b_gens[g].block(k, k - s)), std::nullopt});
        system.add_group(std::move(group));
      }
    }
    orbit_results.push_back(system.solve(options.relative_threshold));
    sigma_max = std::max(sigma_max, orbit_results.back().sigma_max);
    const auto& sv = orbit_results.back().singular_values;
    singular_values.insert(singular_values.end(), sv.begin(), sv.end());
  }

  const double threshold = options.relative_threshold * sigma_max;
  std::vector<InducedOperator> basis;
  for (const KElem delta : all_k_elements()) {
    for (const auto& [sigma, blocks] : orbit_results[delta.index()].near_null) {
      if (sigma > threshold) continue;
      InducedOperator t(d);
      for (const KElem k : all_k_elements()) t.block(k, k + delta) = blocks[k.index()];
      basis.push_back(std::move(t));
    }
  }
  return finish_space(std::move(basis), std::move(singular_values), sigma_max, threshold, a_gens, b_gens);
}

IntertwinerSpace intertwiners_dense(const RepModel& a, const RepModel& b, const TwistedActionTable& table,
                                    const SolverOptions& options) {
  require_same_dim(a, b);
  const auto a_gens = generating_images(a, table);
  const auto b_gens = generating_images(b, table);
  std::vector<Matrix> a_dense;
  std::vector<Matrix> b_dense;
  for (const auto& g : a_gens) a_dense.push_back(g.to_dense());
  for (const auto& g : b_gens) b_dense.push_back(g.to_dense());
  auto result = solve_intertwining(a_dense, b_dense, options.relative_threshold);
  std::vector<InducedOperator> basis;
  for (const auto& v : result.basis) basis.push_back(InducedOperator::from_dense(v.front(), a.dim()));
  return finish_space(std::move(basis), std::move(result.singular_values), result.sigma_max, result.threshold,
                      a_gens, b_gens);
}

NullSpaceResult commutant(const RepModel& m, double relative_threshold) {
  const std::vector<Matrix> gens{m.generator(0), m.generator(1)};
  return solve_intertwining(gens, gens, relative_threshold);
}

DecomposabilityReport check_decomposability(const RepModel& a, const RepModel& b, const InducedOperator& t,
                                            const TwistedActionTable& table, double tol, double equivalence_tol) {
  require_same_dim(a, b);
  std::vector<std::string> failures;
  for (const KElem j : all_k_elements()) {
    if (j.is_unit()) continue;
    bool witnessed = false;
    for (int r = 0; r < 2 && !witnessed; ++r) {
      const Matrix image = evaluate(a, table.apply_alpha(j, FWord::generator(r)));
      witnessed = !unitarily_equivalent(image, b.generator(r), equivalence_tol);
    }
    if (!witnessed) failures.push_back(to_string(j));
  }
  if (!failures.empty()) {
    std::string which;
    for (const auto& f : failures) which += (which.empty() ? "" : ", ") + f;
    throw HypothesisNotMet("no spectral witness that pi_A o alpha_j and pi_B differ for j in {" + which + "}");
  }

  DecomposabilityReport report;
  for (const KElem k : all_k_elements()) {
    for (const KElem l : all_k_elements()) {
      if (k == l) continue;
      report.max_off_diagonal = std::max(report.max_off_diagonal, operator_norm(t.block(k, l)));
      report.max_diagonal_spread =
          std::max(report.max_diagonal_spread, operator_norm(t.block(k, k) - t.block(l, l)));
    }
    for (int r = 0; r < 2; ++r) {
      const Matrix& tk = t.block(k, k);
      report.max_diagonal_intertwining_defect = std::max(
          report.max_diagonal_intertwining_defect, operator_norm(tk * a.generator(r) - b.generator(r) * tk));
    }
  }
  report.pass = report.max_off_diagonal <= tol && report.max_diagonal_intertwining_defect <= tol;
  return report;
}

}  // namespace psl2z
