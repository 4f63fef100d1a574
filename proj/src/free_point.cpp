#include "psl2z/free_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "psl2z/error.hpp"
#include "psl2z/random.hpp"

namespace psl2z {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void push_unique(std::vector<Complex>& out, Complex z, double tol) {
  for (const Complex w : out) {
    if (std::abs(w - z) <= tol) return;
  }
  out.push_back(z);
}

double min_distance_to(const std::vector<Complex>& set, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex w : set) best = std::min(best, angular_distance(w, z));
  return best;
}

// Largest arc between consecutive forbidden points, in radians.
double largest_gap(const std::vector<Complex>& forbidden) {
  std::vector<double> angles;
  for (const Complex z : forbidden) angles.push_back(turns_of(z) * kTwoPi);
  std::sort(angles.begin(), angles.end());
  double gap = kTwoPi - angles.back() + angles.front();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap;
}

}  // namespace

double angular_distance(Complex x, Complex y) {
  return std::abs(std::arg(x * std::conj(y)));
}

std::vector<Complex> rotations_between(const Spectrum& source, const Spectrum& target, double tol) {
  std::vector<Complex> out;
  if (source.size() != target.size() || source.size() == 0) return out;
  const Complex anchor = target.values().front();
  for (const Complex s : source.values()) {
    Complex c = anchor * std::conj(s);
    c /= std::abs(c);
    if (spectra_match(source.rotated(c), target, tol)) push_unique(out, c, tol);
  }
  return out;
}

std::vector<Complex> OmegaSets::forbidden() const {
  std::vector<Complex> out;
  for (const auto* set : {&omega1, &omega2, &omega3}) {
    for (const Complex z : *set) push_unique(out, z, tol);
  }
  for (const auto& [lambda, set] : omega_lambda) {
    for (const Complex z : set) push_unique(out, z, tol);
  }
  return out;
}

OmegaSets compute_omegas(const RepModel& m, std::span<const Complex> previous, double tol) {
  const auto& mu = m.mu();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = i + 1; j < mu.size(); ++j) {
      if (std::abs(mu[i] - mu[j]) <= tol) throw DegenerateSpectrum("V2 has colliding diagonal entries");
    }
  }
  const Spectrum v1 = spectrum_of(m.v1());
  const Spectrum v2(mu);

  OmegaSets out;
  out.tol = tol;
  out.omega1 = rotations_between(v2, v1, tol);
  // V1 ~ (l V2)^*  <=>  conj(spec V1) = l spec V2.
  out.omega2 = rotations_between(v2, v1.conjugated(), tol);
  // l V2 ~ (l V2)^*  <=>  l^2 spec V2 = conj(spec V2).
  for (const Complex s : rotations_between(v2, v2.conjugated(), tol)) {
    const Complex root = std::sqrt(s);
    for (const Complex l : {root, -root}) {
      const Spectrum rotated = v2.rotated(l);
      if (spectra_match(rotated, rotated.conjugated(), tol)) push_unique(out.omega3, l, tol);
    }
  }
  for (const Complex lambda : previous) {
    const Spectrum scaled = v2.rotated(lambda);
    std::vector<Complex> set = rotations_between(v2, scaled, tol);
    for (const Complex w : rotations_between(v2, scaled.conjugated(), tol)) push_unique(set, w, tol);
    out.omega_lambda.emplace_back(lambda, std::move(set));
  }
  return out;
}

std::string LambdaChoice::turns_text() const {
  if (exact_turns) return std::to_string(exact_turns->first) + "/" + std::to_string(exact_turns->second);
  std::ostringstream os;
  os.precision(17);
  os << turns;
  return os.str();
}

LambdaChoice select_lambda(const RepModel& m, std::span<const Complex> previous, const SelectOptions& options) {
  const OmegaSets omegas = compute_omegas(m, previous, options.tol);
  const std::vector<Complex> forbidden = omegas.forbidden();
  if (options.margin < 0) throw MarginInfeasible("margin must be nonnegative");
  if (!forbidden.empty() && largest_gap(forbidden) <= 2.0 * options.margin) {
    throw MarginInfeasible("margin " + std::to_string(options.margin) + " rad leaves no admissible point");
  }
  auto admissible = [&](Complex z) { return forbidden.empty() || min_distance_to(forbidden, z) >= options.margin; };

  if (options.strategy == SelectionStrategy::Random) {
    Rng rng(options.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
      const double t = uniform(rng);
      const Complex z = unit_from_turns(t);
      if (admissible(z)) return {z, t, std::nullopt};
    }
    throw MarginInfeasible("random search found no admissible point");
  }

  // An admissible arc of positive length exists, so some p/q lands in it once
  // 1/q is shorter than that arc.
  for (long long q = 1; q <= 100'000'000; ++q) {
    for (long long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double t = static_cast<double>(p) / static_cast<double>(q);
      const Complex z = unit_from_turns(t);
      if (admissible(z)) return {z, t, std::make_pair(p, q)};
    }
  }
  throw MarginInfeasible("no small-denominator point found");
}

StabilizerReport verify_free_point(const RepModel& m, Complex lambda, const TwistedActionTable& table, double tol) {
  const RepModel model = with_lambda(m, lambda);
  StabilizerReport report;
  report.stabilizer.push_back(KElem{});
  for (const KElem k : all_k_elements()) {
    if (k.is_unit()) continue;
    for (int r = 0; r < 2; ++r) {
      const Matrix image = evaluate(model, table.apply_alpha(k, FWord::generator(r)));
      report.witness[k.index()][r] = !unitarily_equivalent(image, model.generator(r), tol);
    }
    if (!report.witness[k.index()][0] && !report.witness[k.index()][1]) report.stabilizer.push_back(k);
  }
  report.free = report.stabilizer.size() == 1;
  const Matrix& scaled = model.generator(1);
  report.star[0] = !unitarily_equivalent(model.v1(), scaled, tol);
  report.star[1] = !unitarily_equivalent(model.v1(), scaled.adjoint(), tol);
  report.star[2] = !unitarily_equivalent(scaled, scaled.adjoint(), tol);
  return report;
}

std::array<bool, 6> pairwise_conditions(const RepModel& m, Complex lambda, Complex lambda2, double tol) {
  const Spectrum v1 = spectrum_of(m.v1());
  const Spectrum v2(m.mu());
  const Spectrum s1 = v2.rotated(lambda);
  const Spectrum s2 = v2.rotated(lambda2);
  return {!spectra_match(v1, s1, tol),
          !spectra_match(v1, s1.conjugated(), tol),
          !spectra_match(v1, s2, tol),
          !spectra_match(v1, s2.conjugated(), tol),
          !spectra_match(s1, s2, tol),
          !spectra_match(s1.conjugated(), s2, tol)};
}

std::vector<LambdaChoice> build_family(const RepModel& m, int count, const SelectOptions& options) {
  if (count < 1) throw std::invalid_argument("family size must be >= 1");
  std::vector<LambdaChoice> family;
  std::vector<Complex> previous;
  for (int i = 0; i < count; ++i) {
    SelectOptions step = options;
    step.seed = options.seed + static_cast<std::uint64_t>(i);
    family.push_back(select_lambda(m, previous, step));
    previous.push_back(family.back().value);
  }
  return family;
}

}  // namespace psl2z
