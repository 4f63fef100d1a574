#include "psl2z/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "psl2z/error.hpp"
#include "psl2z/free_point.hpp"
#include "psl2z/induced.hpp"
#include "psl2z/kernel.hpp"
#include "psl2z/random.hpp"
#include "psl2z/rep_model.hpp"
#include "psl2z/twisted_algebra.hpp"

namespace psl2z::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kNumericTol = 1e-9;
constexpr double kCommutantGap = 1e-4;
constexpr int kRandomPairs = 10;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

LambdaChoice parse_turns(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const long long p = std::stoll(text.substr(0, slash));
      const long long q = std::stoll(text.substr(slash + 1));
      if (q <= 0) throw ParseError("denominator must be positive in '" + text + "'");
      const double t = static_cast<double>(p) / static_cast<double>(q);
      return {unit_from_turns(t), t - std::floor(t), std::make_pair(((p % q) + q) % q, q)};
    }
    std::size_t used = 0;
    const double t = std::stod(text, &used);
    if (used != text.size()) throw ParseError("trailing characters in '" + text + "'");
    return {unit_from_turns(t), t - std::floor(t), std::nullopt};
  } catch (const std::logic_error&) {
    throw ParseError("cannot parse angle '" + text + "' (expected p/q or a decimal, in turns)");
  }
}

std::optional<std::vector<double>> parse_angles(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  std::vector<double> out;
  std::stringstream ss(*text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_turns(item).turns);
  return out;
}

Json lambda_json(const LambdaChoice& c) {
  return Json{{"turns", c.turns_text()}, {"value", complex_json(c.value)}};
}

Json stabilizer_json(const StabilizerReport& r) {
  Json stab = Json::array();
  for (const KElem k : r.stabilizer) stab.push_back(to_string(k));
  Json witnesses = Json::object();
  for (const KElem k : all_k_elements()) {
    if (k.is_unit()) continue;
    witnesses[to_string(k)] = Json::array({r.witness[k.index()][0], r.witness[k.index()][1]});
  }
  return Json{{"free", r.free},
              {"stabilizer", stab},
              {"witnesses", witnesses},
              {"star_conditions", Json::array({r.star[0], r.star[1], r.star[2]})}};
}

Json points_json(const std::vector<Complex>& pts) {
  Json out = Json::array();
  for (const Complex z : pts) out.push_back(Json{{"turns", turns_of(z)}, {"value", complex_json(z)}});
  return out;
}

RepModel model_for(const RunConfig& c) { return make_rep(c.dim, c.seed, parse_angles(c.angles)); }

SelectOptions select_options(const RunConfig& c) {
  SelectOptions o;
  o.margin = c.margin;
  o.tol = c.tol;
  o.seed = c.seed;
  return o;
}

void add_free_point_check(Report& report, const std::string& name, const StabilizerReport& s) {
  report.checks.push_back({name, KElem::kOrder - 1, 0.0, s.free});
}

void add_intertwiner_checks(Report& report, const std::string& prefix, const IntertwinerSpace& space,
                            int expected_dim) {
  report.checks.push_back({prefix + "_dimension", 1, static_cast<double>(std::abs(space.dimension - expected_dim)),
                           space.dimension == expected_dim});
  if (expected_dim == 1) {
    report.checks.push_back({prefix + "_gap", 1, space.second_smallest_ratio(),
                             space.second_smallest_ratio() >= kCommutantGap});
  }
  report.checks.push_back({prefix + "_residual", static_cast<long long>(space.basis.size()), space.residual,
                           space.residual <= kNumericTol});
}

Json space_json(const IntertwinerSpace& space) {
  return Json{{"dimension", space.dimension},
              {"smallest_singular_ratio", space.smallest_ratio()},
              {"second_singular_ratio", space.second_smallest_ratio()},
              {"sigma_max", space.sigma_max},
              {"residual", space.residual}};
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_table(Report& report) {
  const auto& table = twisted_table();
  Json alpha = Json::array();
  for (const KElem k : all_k_elements()) {
    alpha.push_back(Json{{"k", to_string(k)}, {"x1", to_string(table.alpha(k, 0))}, {"x2", to_string(table.alpha(k, 1))}});
  }
  Json u = Json::array();
  long long in_kernel = 0;
  for (const KElem k : all_k_elements()) {
    for (const KElem l : all_k_elements()) {
      const FWord& value = table.cocycle(k, l);
      u.push_back(Json{{"k", to_string(k)}, {"l", to_string(l)}, {"value", to_string(value)}});
      in_kernel += is_in_kernel(expand_free(value)) ? 1 : 0;
    }
  }
  bool round_trip = true;
  for (const KElem k : all_k_elements()) {
    for (int r = 0; r < 2; ++r) {
      const GWord conj = section(k) * expand_free(FWord::generator(r)) * section(k).inverse();
      round_trip = round_trip && expand_free(table.alpha(k, r)) == conj;
    }
  }
  report.checks.push_back({"alpha_round_trip", 12, 0.0, round_trip});
  report.checks.push_back({"cocycle_in_kernel", 36, 0.0, in_kernel == 36});
  report.data["alpha"] = std::move(alpha);
  report.data["u"] = std::move(u);
}

void cmd_verify_axioms(Report& report) {
  const AxiomReport axioms = verify_twisted_axioms(twisted_table());
  for (const AxiomKind kind : {AxiomKind::AdTwist, AxiomKind::Cocycle, AxiomKind::Normalization}) {
    report.checks.push_back({to_string(kind), axioms.checked(kind), 0.0, axioms.passed(kind) == axioms.checked(kind)});
  }
  if (report.config.json) {
    Json instances = Json::array();
    for (const auto& x : axioms.instances) {
      instances.push_back(Json{{"kind", to_string(x.kind)},
                               {"k", to_string(x.k)},
                               {"l", to_string(x.l)},
                               {"m", to_string(x.m)},
                               {"pass", x.pass}});
    }
    report.data["instances"] = std::move(instances);
  }
}

void cmd_make_rep(Report& report) {
  const RepModel m = model_for(report.config);
  Json angles = Json::array();
  for (const double t : m.angle_turns()) angles.push_back(t);
  Json v2 = Json::array();
  for (const Complex z : m.mu()) v2.push_back(complex_json(z));
  Json v1_spec = Json::array();
  const Spectrum v1_spectrum = spectrum_of(m.v1());
  for (const Complex z : v1_spectrum.values()) v1_spec.push_back(complex_json(z));
  Complex checksum = 0.0;
  for (int j = 0; j < m.dim(); ++j) {
    for (int i = 0; i < m.dim(); ++i) checksum += static_cast<double>(i * m.dim() + j + 1) * m.v1()(i, j);
  }
  const double unitarity = unitarity_defect(m.v1());
  report.checks.push_back({"v1_unitary", 1, unitarity, unitarity <= 1e-12});
  report.data["dim"] = m.dim();
  report.data["v2_angles_turns"] = std::move(angles);
  report.data["v2_eigenvalues"] = std::move(v2);
  report.data["v1_eigenvalues"] = std::move(v1_spec);
  report.data["v1_checksum"] = complex_json(checksum);
}

void cmd_check_induced(Report& report) {
  const RunConfig& c = report.config;
  const auto& table = twisted_table();
  const RepModel base = model_for(c);
  const LambdaChoice lambda =
      c.lambda ? parse_turns(*c.lambda) : select_lambda(base, std::span<const Complex>{}, select_options(c));
  const RepModel pi = with_lambda(base, lambda.value);

  const CovarianceReport cov = check_covariance(pi, table, c.seed);
  report.checks.push_back({"covariance", cov.covariance_instances, cov.covariance_max_defect,
                           cov.covariance_max_defect <= kNumericTol});
  report.checks.push_back({"multiplication", cov.multiplication_instances, cov.multiplication_max_defect,
                           cov.multiplication_max_defect <= kNumericTol});

  Rng rng(c.seed);
  double hom = 0.0;
  double inv = 0.0;
  for (int i = 0; i < kRandomPairs; ++i) {
    const L1Elem f = random_l1_elem(rng, 2, 4);
    const L1Elem g = random_l1_elem(rng, 2, 4);
    hom = std::max(hom, defect(induce(pi, table, twisted_convolution(table, f, g)),
                               induce(pi, table, f) * induce(pi, table, g)));
    inv = std::max(inv, defect(induce(pi, table, twisted_involution(table, f)), induce(pi, table, f).adjoint()));
  }
  report.checks.push_back({"homomorphism", kRandomPairs, hom, hom <= kNumericTol});
  report.checks.push_back({"involution", kRandomPairs, inv, inv <= kNumericTol});

  const StabilizerReport stab = verify_free_point(base, lambda.value, table, c.tol);
  add_free_point_check(report, "free_point", stab);

  SolverOptions solver;
  solver.relative_threshold = c.solver_threshold;
  const IntertwinerSpace space = intertwiners(pi, pi, table, solver);
  add_intertwiner_checks(report, "commutant", space, 1);

  if (stab.free && !space.basis.empty()) {
    const DecomposabilityReport dec = check_decomposability(pi, pi, space.basis.front(), table, 1e-8, c.tol);
    report.checks.push_back({"decomposable", 30, dec.max_off_diagonal, dec.pass});
    report.checks.push_back({"diagonal_blocks_equal", 15, dec.max_diagonal_spread, dec.max_diagonal_spread <= 1e-8});
  }

  report.data["lambda"] = lambda_json(lambda);
  report.data["free_point"] = stabilizer_json(stab);
  report.data["commutant"] = space_json(space);
}

void cmd_compare(Report& report) {
  const RunConfig& c = report.config;
  const auto& table = twisted_table();
  const RepModel base = model_for(c);
  std::vector<LambdaChoice> family;
  if (!c.lambda || !c.lambda2) family = build_family(base, 2, select_options(c));
  const LambdaChoice l1 = c.lambda ? parse_turns(*c.lambda) : family[0];
  const LambdaChoice l2 = c.lambda2 ? parse_turns(*c.lambda2) : family[1];

  const auto conditions = pairwise_conditions(base, l1.value, l2.value, c.tol);
  const bool all_hold = std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; });
  report.checks.push_back({"inequivalence_conditions", 6, 0.0, all_hold});

  SolverOptions solver;
  solver.relative_threshold = c.solver_threshold;
  const IntertwinerSpace space =
      intertwiners(with_lambda(base, l1.value), with_lambda(base, l2.value), table, solver);
  add_intertwiner_checks(report, "intertwiner", space, 0);

  report.data["lambda"] = lambda_json(l1);
  report.data["lambda2"] = lambda_json(l2);
  report.data["conditions"] = Json(std::vector<bool>(conditions.begin(), conditions.end()));
  report.data["intertwiners"] = space_json(space);
}

void cmd_select_lambda(Report& report) {
  const RunConfig& c = report.config;
  const auto& table = twisted_table();
  const RepModel base = model_for(c);
  const auto family = build_family(base, c.count, select_options(c));

  std::vector<Complex> values;
  for (const auto& f : family) values.push_back(f.value);
  const OmegaSets omegas = compute_omegas(base, values, c.tol);
  Json omega_lambda = Json::array();
  for (const auto& [lambda, set] : omegas.omega_lambda) {
    omega_lambda.push_back(Json{{"lambda", complex_json(lambda)}, {"members", points_json(set)}});
  }

  Json lambdas = Json::array();
  Json reports = Json::array();
  int free_count = 0;
  for (const auto& f : family) {
    lambdas.push_back(lambda_json(f));
    const StabilizerReport s = verify_free_point(base, f.value, table, c.tol);
    free_count += s.free ? 1 : 0;
    reports.push_back(stabilizer_json(s));
  }
  report.checks.push_back({"free_points", c.count, 0.0, free_count == c.count});

  long long pairs = 0;
  long long good = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto cond = pairwise_conditions(base, family[i].value, family[j].value, c.tol);
      ++pairs;
      good += std::all_of(cond.begin(), cond.end(), [](bool b) { return b; }) ? 1 : 0;
    }
  }
  report.checks.push_back({"pairwise_conditions", pairs, 0.0, good == pairs});

  report.data["omegas"] = Json{{"omega1", points_json(omegas.omega1)},
                               {"omega2", points_json(omegas.omega2)},
                               {"omega3", points_json(omegas.omega3)},
                               {"omega_lambda", std::move(omega_lambda)}};
  report.data["lambdas"] = std::move(lambdas);
  report.data["reports"] = std::move(reports);
}

void cmd_theorem2(Report& report) {
  const RunConfig& c = report.config;
  const auto& table = twisted_table();

  const AxiomReport axioms = verify_twisted_axioms(table);
  report.checks.push_back({"twisted_axioms", static_cast<long long>(axioms.instances.size()), 0.0, axioms.all_pass()});

  const RepModel base = model_for(c);
  const auto family = build_family(base, 2, select_options(c));
  SolverOptions solver;
  solver.relative_threshold = c.solver_threshold;

  Json lambdas = Json::array();
  Json commutants = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string tag = i == 0 ? "lambda" : "lambda2";
    add_free_point_check(report, "free_point_" + tag, verify_free_point(base, family[i].value, table, c.tol));
    const IntertwinerSpace space = intertwiners(with_lambda(base, family[i].value),
                                                with_lambda(base, family[i].value), table, solver);
    add_intertwiner_checks(report, "commutant_" + tag, space, 1);
    lambdas.push_back(lambda_json(family[i]));
    commutants.push_back(space_json(space));
  }
  const IntertwinerSpace cross = intertwiners(with_lambda(base, family[0].value),
                                              with_lambda(base, family[1].value), table, solver);
  add_intertwiner_checks(report, "intertwiner", cross, 0);

  report.data["lambdas"] = std::move(lambdas);
  report.data["commutants"] = std::move(commutants);
  report.data["intertwiners"] = space_json(cross);
}

Json config_json(const RunConfig& c) {
  auto opt = [](const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); };
  return Json{{"subcommand", c.subcommand}, {"dim", c.dim},     {"seed", c.seed},
              {"lambda", opt(c.lambda)},    {"lambda2", opt(c.lambda2)}, {"angles", opt(c.angles)},
              {"tol", c.tol},               {"solver_threshold", c.solver_threshold},
              {"margin", c.margin},         {"count", c.count}};
}

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

nlohmann::ordered_json Report::to_json() const {
  Json out{{"schema", kSchema}, {"command", config.subcommand}, {"config", config_json(config)}};
  Json records = Json::array();
  for (const auto& r : checks) {
    records.push_back(Json{{"name", r.name}, {"instances", r.instances}, {"max_defect", r.max_defect}, {"pass", r.pass}});
  }
  out["checks"] = std::move(records);
  out["pass"] = pass();
  for (const auto& [key, value] : data.items()) out[key] = value;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "psl2z " << config.subcommand << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& r : checks) {
    os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.name << "  instances=" << r.instances
       << "  max_defect=" << r.max_defect << "\n";
  }
  for (const auto& [key, value] : data.items()) os << "  " << key << ": " << value.dump() << "\n";
  for (const auto& note : notes) os << "  note: " << note << "\n";
  return os.str();
}

Report execute(const RunConfig& config) {
  Report report;
  report.config = config;
  const std::string& cmd = config.subcommand;
  if (cmd == "table") {
    cmd_table(report);
  } else if (cmd == "verify-axioms") {
    cmd_verify_axioms(report);
  } else if (cmd == "make-rep") {
    cmd_make_rep(report);
  } else if (cmd == "check-induced") {
    cmd_check_induced(report);
  } else if (cmd == "compare") {
    cmd_compare(report);
  } else if (cmd == "select-lambda") {
    cmd_select_lambda(report);
  } else if (cmd == "theorem2") {
    cmd_theorem2(report);
  } else {
    throw ParseError("unknown subcommand '" + cmd + "'");
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive checks for the induced representations of PSL(2,Z) = Z2 * Z3", "psl2z"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub, bool model) {
    if (model) {
      sub->add_option("--dim", config.dim, "Dimension d of the model of pi")->check(CLI::PositiveNumber);
      sub->add_option("--seed", config.seed, "Seed for V1 and random angles");
      sub->add_option("--angles", config.angles, "Comma-separated V2 angles in turns (p/q or decimal)");
      sub->add_option("--tol", config.tol, "Spectral equivalence tolerance")->check(CLI::PositiveNumber);
      sub->add_option("--margin", config.margin, "Angular margin (rad) around forbidden points")
          ->check(CLI::PositiveNumber);
    }
    sub->add_flag("--json", config.json, "Emit the JSON report");
    sub->add_option("--out", config.out_path, "Write the report to PATH instead of stdout");
  };

  add_common(app.add_subcommand("table", "Twisted action table (always JSON)"), false);
  add_common(app.add_subcommand("verify-axioms", "Exact twisted-action axiom check"), false);
  add_common(app.add_subcommand("make-rep", "Build a seeded model and summarize it"), true);
  auto* induced = app.add_subcommand("check-induced", "Covariance, homomorphism and commutant checks");
  add_common(induced, true);
  induced->add_option("--lambda", config.lambda, "lambda as an angle in turns; selected when omitted");
  auto* compare = app.add_subcommand("compare", "Intertwiners between Ind pi_lambda and Ind pi_lambda2");
  add_common(compare, true);
  compare->add_option("--lambda", config.lambda, "First angle in turns");
  compare->add_option("--lambda2", config.lambda2, "Second angle in turns");
  auto* select = app.add_subcommand("select-lambda", "Forbidden sets and a family of free points");
  add_common(select, true);
  select->add_option("--count", config.count, "Family size")->check(CLI::PositiveNumber);
  add_common(app.add_subcommand("theorem2", "End-to-end pipeline"), true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "psl2z: " << e.what() << "\n";
    return 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.subcommand == "table") config.json = true;

  Report report;
  try {
    report = execute(config);
  } catch (const ParseError& e) {
    err << "psl2z: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDimension& e) {
    err << "psl2z: " << e.what() << "\n";
    return 2;
  } catch (const DuplicateAngles& e) {
    err << "psl2z: " << e.what() << "\n";
    return 2;
  } catch (const NotUnitModulus& e) {
    err << "psl2z: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "psl2z: " << e.what() << "\n";
    return 1;
  }

  const std::string rendered = config.json ? report.to_json().dump(2) + "\n" : report.to_text();
  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) {
      err << "psl2z: cannot write " << *config.out_path << "\n";
      return 2;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return report.pass() ? 0 : 1;
}

}  // namespace psl2z::cli
