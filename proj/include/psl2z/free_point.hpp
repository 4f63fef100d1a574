#pragma once

// Forbidden parameter sets and free-point selection for the gauge family
// pi_lambda = pi o gamma_lambda (x1 -> V1, x2 -> lambda V2).
//
//   Omega1 = { l : V1 ~ l V2 }          Omega2 = { l : V1 ~ (l V2)^* }
//   Omega3 = { l : l V2 ~ (l V2)^* }
//   Omega_l = { w : l V2 ~ w V2  or  (l V2)^* ~ w V2 }
//
// At finite dimension each set is finite and is enumerated exactly: every
// member must carry one fixed eigenvalue of the source onto some eigenvalue
// of the target, which leaves d candidates, each validated by a full
// multiset comparison.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psl2z/kernel.hpp"
#include "psl2z/rep_model.hpp"

namespace psl2z {

/// Arc distance in radians between two points of the unit circle.
double angular_distance(Complex x, Complex y);

/// All unit scalars c with c * source ~ target as multisets (within tol).
std::vector<Complex> rotations_between(const Spectrum& source, const Spectrum& target, double tol);

struct OmegaSets {
  std::vector<Complex> omega1;
  std::vector<Complex> omega2;
  std::vector<Complex> omega3;
  /// One entry per previously chosen lambda.
  std::vector<std::pair<Complex, std::vector<Complex>>> omega_lambda;
  double tol = 1e-8;

  /// Omega1 u Omega2 u Omega3 u every Omega_lambda.
  std::vector<Complex> forbidden() const;
};

/// Throws DegenerateSpectrum when two entries of V2 lie within tol.
OmegaSets compute_omegas(const RepModel& m, std::span<const Complex> previous, double tol = 1e-8);

enum class SelectionStrategy { Deterministic, Random };

struct SelectOptions {
  SelectionStrategy strategy = SelectionStrategy::Deterministic;
  /// Minimum arc distance (radians) from every forbidden point.
  double margin = 1e-3;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

struct LambdaChoice {
  Complex value;
  double turns = 0.0;
  /// (p, q) with lambda = exp(2 pi i p / q), for the deterministic strategy.
  std::optional<std::pair<long long, long long>> exact_turns;

  /// "p/q" when exact, otherwise the decimal angle in turns.
  std::string turns_text() const;
};

/// Deterministic: the first p/q in order of increasing q, then p, with
/// gcd(p, q) = 1, whose point clears the margin. Random: seeded uniform
/// rejection sampling. Throws MarginInfeasible when the margin leaves no room.
LambdaChoice select_lambda(const RepModel& m, std::span<const Complex> previous, const SelectOptions& options = {});

struct StabilizerReport {
  std::vector<KElem> stabilizer;
  bool free = false;
  /// witness[k][r]: (pi_lambda o alpha_k)(x_r) is not equivalent to pi_lambda(x_r).
  std::array<std::array<bool, 2>, KElem::kOrder> witness{};
  /// V1 !~ lambda V2, V1 !~ (lambda V2)^*, lambda V2 !~ (lambda V2)^*.
  std::array<bool, 3> star{};

  bool star_holds() const { return star[0] && star[1] && star[2]; }
};

/// Evaluates both generator images of pi_lambda o alpha_k for every k != e and
/// compares spectra with pi_lambda. The lambda stored in m is replaced.
StabilizerReport verify_free_point(const RepModel& m, Complex lambda, const TwistedActionTable& table,
                                   double tol = 1e-8);

/// The six conditions making Ind pi_lambda and Ind pi_lambda' inequivalent:
/// V1 !~ lV2, V1 !~ (lV2)^*, V1 !~ l'V2, V1 !~ (l'V2)^*, lV2 !~ l'V2,
/// (lV2)^* !~ l'V2.
std::array<bool, 6> pairwise_conditions(const RepModel& m, Complex lambda, Complex lambda2, double tol = 1e-8);

/// lambda_1, ..., lambda_count with lambda_i chosen outside
/// Omega u Omega_{lambda_1} u ... u Omega_{lambda_{i-1}}.
std::vector<LambdaChoice> build_family(const RepModel& m, int count, const SelectOptions& options = {});

}  // namespace psl2z
