#include "divkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "divkit/csv.hpp"
#include "divkit/errors.hpp"
#include "divkit/estimation.hpp"
#include "divkit/expression.hpp"
#include "divkit/sampling.hpp"
#include "divkit/theorem_lab.hpp"

namespace divkit::cli {
namespace {

using Json = nlohmann::ordered_json;

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw FormatError("malformed number '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Splits "name:rest" at the first colon.
std::pair<std::string_view, std::string_view> head_tail(std::string_view text) {
  const std::size_t pos = text.find(':');
  if (pos == std::string_view::npos) return {text, {}};
  return {text.substr(0, pos), text.substr(pos + 1)};
}

ScalarFn custom_function(std::string_view kind, std::string_view rest) {
  if (kind == "table") {
    auto table = std::make_shared<Table>(read_table_csv(std::string(rest)));
    return [table](double z) { return (*table)(z); };
  }
  return compile_expression(rest);
}

void expect_no_parameter(std::string_view name, std::string_view rest, std::string_view flag) {
  if (!rest.empty()) throw FormatError(std::string(flag) + " '" + std::string(name) + "' takes no parameter");
}

Json brackets_json(const BracketTriple& b) {
  Json j;
  j["gamma"] = b.gamma;
  j["X"] = b.X;
  j["Y"] = b.Y;
  j["Z"] = b.Z ? Json(*b.Z) : Json(nullptr);
  if (b.log_terms) {
    const auto& lb = *b.log_terms;
    j["kl"] = lb.kl ? Json(*lb.kl) : Json(nullptr);
    j["g_log_g"] = lb.g_log_g ? Json(*lb.g_log_g) : Json(nullptr);
    j["g_log_f"] = lb.g_log_f;
    j["mass_g"] = lb.mass_g;
    j["mass_f"] = lb.mass_f;
  }
  return j;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json spec_json(const SpecFlags& f) {
  Json j;
  j["family"] = f.family;
  j["gamma"] = f.gamma;
  j["zeta"] = optional_json(f.zeta);
  j["eta"] = f.eta ? Json(*f.eta) : Json(nullptr);
  j["phi"] = f.phi ? Json(*f.phi) : Json(nullptr);
  j["xi"] = f.xi ? Json(*f.xi) : Json(nullptr);
  return j;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw FormatError("cannot open output file '" + output + "'");
  file << text;
  if (!file) throw FormatError("failed writing output file '" + output + "'");
}

void emit_json(const Json& j, const std::string& output, std::ostream& out) { emit(j.dump(2) + "\n", output, out); }

// ---------------------------------------------------------------------------

struct CommonFlags {
  SpecFlags spec;
  std::string eta, phi, xi;
  double zeta = 0.0;
  std::string output;

  void bind_generators(CLI::App* app) {
    app->add_option("--eta", eta, "Hölder generator: dpd | ps | bhd:K | jhhb:Z | table:PATH | expr:EXPR");
    app->add_option("--phi", phi, "FDPD generator: identity | log | power:Z | bdpd:L1:L2 | exp-minus-one | ...");
    app->add_option("--xi", xi, "inner transform: identity | power:Z | log1p | table:PATH | expr:EXPR");
    app->add_option("--zeta", zeta, "JHHB parameter");
  }

  // Copies flags that were actually given into `spec`.
  void resolve(CLI::App* app) {
    if (app->count("--eta")) spec.eta = eta;
    if (app->count("--phi")) spec.phi = phi;
    if (app->count("--xi")) spec.xi = xi;
    if (app->count("--zeta")) spec.zeta = zeta;
  }
};

struct VerifyFlags {
  std::string theorem;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string g, f;
  std::vector<std::string> densities;
  double c = 2.0;
};

std::uint64_t require_seed(const VerifyFlags& v) {
  if (!v.has_seed) throw FormatError("--seed is required for randomized checks");
  return v.seed;
}

int cmd_compute(CommonFlags& flags, const std::string& g_path, const std::string& f_path, std::ostream& out) {
  const DivergenceSpec spec = build_spec(flags.spec);
  const DensityObject g = parse_density(g_path);
  const DensityObject f = parse_density(f_path);
  const BracketTriple b = bracket_integrals(g, f, spec.gamma());

  Json j;
  j["command"] = "compute";
  j["config"] = {{"spec", spec_json(flags.spec)}, {"g", g_path}, {"f", f_path}};
  j["family"] = spec.label();
  j["brackets"] = brackets_json(b);
  j["score"] = score(b, spec);
  j["divergence"] = divergence(b, spec);
  emit_json(j, flags.output, out);
  return kOk;
}

Json config_json(const VerifyFlags& v, const SpecFlags& s) {
  Json j;
  j["theorem"] = v.theorem;
  j["gamma"] = s.gamma;
  j["zeta"] = optional_json(s.zeta);
  j["phi"] = s.phi ? Json(*s.phi) : Json(nullptr);
  j["xi"] = s.xi ? Json(*s.xi) : Json(nullptr);
  j["trials"] = v.trials;
  j["seed"] = v.has_seed ? Json(v.seed) : Json(nullptr);
  j["g"] = v.g.empty() ? Json(nullptr) : Json(v.g);
  j["f"] = v.f.empty() ? Json(nullptr) : Json(v.f);
  j["c"] = v.c;
  return j;
}

int cmd_verify(const VerifyFlags& v, const CommonFlags& flags, std::ostream& out) {
  const SpecFlags& s = flags.spec;
  Json report;
  report["theorem"] = v.theorem;
  Json params;
  Json worst;
  bool pass = false;
  std::size_t trials = v.trials;
  Json seed = v.has_seed ? Json(v.seed) : Json(nullptr);

  auto need_phi = [&] {
    if (!s.phi) throw FormatError("--phi is required for --theorem " + v.theorem);
    return parse_phi(*s.phi);
  };

  if (v.theorem == "affine-invariance") {
    const GeneratorPhi phi = need_phi();
    const auto r = check_affine_invariance(phi, s.gamma, v.trials, require_seed(v));
    params = {{"phi", r.phi}, {"gamma", r.gamma}, {"zeta", optional_json(r.zeta)}, {"tolerance", r.tolerance}};
    worst = {{"max_relative_violation", r.max_relative_violation},
             {"predicted_scale", r.predicted_scale},
             {"sigma", r.worst_sigma},
             {"mu", r.worst_mu},
             {"skipped", r.skipped}};
    pass = r.pass;
  } else if (v.theorem == "jhhb-representation") {
    if (!s.zeta) throw FormatError("--zeta is required for --theorem jhhb-representation");
    const auto r = verify_jhhb_holder_representation(*s.zeta, s.gamma, v.trials, require_seed(v));
    params = {{"zeta", r.zeta}, {"gamma", r.gamma}, {"tolerance", kRepresentationTolerance}};
    worst = {{"max_abs_error", r.max_abs_error}, {"brackets", brackets_json(r.worst)}};
    pass = r.pass;
  } else if (v.theorem == "fdps-lower-bound") {
    const GeneratorPhi phi = need_phi();
    LowerBoundReport r;
    if (!v.g.empty() || !v.f.empty()) {
      if (v.g.empty() || v.f.empty()) throw FormatError("--g and --f must be given together");
      const BracketTriple b = bracket_integrals(parse_density(v.g), parse_density(v.f), s.gamma);
      r = check_fdps_lower_bound(phi, std::span<const BracketTriple>(&b, 1));
      trials = 1;
    } else {
      r = check_fdps_lower_bound(phi, s.gamma, v.trials, require_seed(v));
      trials = r.trials;
    }
    params = {{"phi", r.phi}, {"gamma", s.gamma}, {"tolerance", kLowerBoundTolerance}};
    worst = {{"worst_gap", r.worst_gap},
             {"tight_at", r.tight_at ? brackets_json(*r.tight_at) : Json(nullptr)},
             {"invalid_trials", r.invalid_trials},
             {"bound_is_fdps", r.bound_is_fdps},
             {"certificate", r.certificate}};
    pass = r.holds;
  } else if (v.theorem == "uv-consistency") {
    if (!s.xi) throw FormatError("--xi is required for --theorem uv-consistency");
    const GeneratorXi xi = parse_xi(*s.xi);
    std::vector<DensityObject> densities;
    for (const auto& d : v.densities) densities.push_back(parse_density(d));
    if (!v.g.empty()) densities.push_back(parse_density(v.g));
    if (!v.f.empty()) densities.push_back(parse_density(v.f));
    if (densities.empty()) {
      const std::uint64_t sd = require_seed(v);
      for (std::size_t i = 0; i < v.trials; ++i) {
        auto rng = trial_rng(sd, i);
        densities.push_back(random_discrete_pair(rng).g);
      }
    }
    const auto r = check_uv_consistency(xi, s.gamma, densities);
    trials = r.pairs;
    params = {{"xi", r.xi}, {"gamma", r.gamma}, {"densities", r.densities}};
    worst = {{"max_abs_error", r.max_abs_error},
             {"max_identity_error", r.max_identity_error},
             {"max_score_error", r.max_score_error}};
    pass = r.pass;
  } else if (v.theorem == "equality-conditions") {
    const GeneratorPhi phi = need_phi();
    if (v.f.empty()) throw FormatError("--f is required for --theorem equality-conditions");
    const auto r = equality_condition_probe(phi, s.gamma, parse_density(v.f), v.c);
    trials = 1;
    params = {{"phi", phi.name()}, {"gamma", s.gamma}, {"c", r.c}};
    worst = {{"D_value", r.D_value},
             {"jensen_gap", r.jensen_gap},
             {"psi_strictly_convex", r.psi_strictly_convex},
             {"predicted_zero", r.predicted_zero}};
    const bool is_zero = std::fabs(r.D_value) <= 1e-10;
    pass = r.predicted_zero == is_zero;
  } else if (v.theorem == "xi-propriety") {
    if (!s.xi || !s.eta) throw FormatError("--eta and --xi are required for --theorem xi-propriety");
    const GeneratorEta eta = parse_eta(*s.eta, s.gamma);
    const GeneratorXi xi = parse_xi(*s.xi);
    const auto r = check_xi_holder_propriety(eta, xi, v.trials, require_seed(v));
    params = {{"eta", eta.name()}, {"xi", xi.name()}, {"gamma", s.gamma}};
    worst = {{"worst_margin", r.worst_margin},
             {"brackets", r.worst ? brackets_json(*r.worst) : Json(nullptr)},
             {"psi_certificate_valid", r.psi_certificate_valid}};
    pass = r.proper;
  } else {
    throw FormatError("unknown theorem '" + v.theorem + "'");
  }

  report["parameters"] = params;
  report["trials"] = trials;
  report["seed"] = seed;
  report["worst_case"] = worst;
  report["pass"] = pass;
  report["config"] = config_json(v, s);
  emit_json(report, flags.output, out);
  return pass ? kOk : kFalsified;
}

Json result_json(const EstimationResult& r) {
  return {{"mu_hat", r.mu_hat},
          {"sigma_hat", r.sigma_hat},
          {"score_at_min", r.score_at_min},
          {"score_at_initial", r.score_at_initial},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"runs", r.runs},
          {"runs_converged", r.runs_converged},
          {"sigma_at_lower_bound", r.sigma_at_lower_bound}};
}

int cmd_estimate(CommonFlags& flags, const std::string& samples_path, const OptimizerConfig& optimizer,
                 std::ostream& out) {
  const DivergenceSpec spec = build_spec(flags.spec);
  require_proper_score(spec);
  EstimationProblem problem{read_samples_csv(samples_path), spec, optimizer};
  const auto r = fit(problem);

  Json j;
  j["command"] = "estimate";
  j["config"] = {{"spec", spec_json(flags.spec)},
                 {"samples", samples_path},
                 {"initial_mu", optional_json(optimizer.initial_mu)},
                 {"initial_sigma", optional_json(optimizer.initial_sigma)},
                 {"max_iterations", optimizer.max_iterations},
                 {"tolerance", optimizer.tolerance},
                 {"restarts", optimizer.restarts}};
  j["family"] = spec.label();
  j["n"] = problem.samples.size();
  j["result"] = result_json(r);
  emit_json(j, flags.output, out);
  return r.runs_converged == 0 ? kNotConverged : kOk;
}

int cmd_sweep(const std::vector<std::string>& spec_texts, const std::vector<double>& epsilons, double outlier,
              std::size_t n, std::uint64_t seed, const std::string& format, const std::string& output,
              std::ostream& out) {
  std::vector<SpecFlags> flags;
  if (spec_texts.empty()) {
    flags.push_back(SpecFlags{"fdpd", std::nullopt, "identity", std::nullopt, 0.0, std::nullopt});
    flags.push_back(SpecFlags{"holder", "dpd", std::nullopt, std::nullopt, 0.5, std::nullopt});
    flags.push_back(SpecFlags{"jhhb", std::nullopt, std::nullopt, std::nullopt, 0.5, 0.0});
  }
  for (const auto& t : spec_texts) flags.push_back(parse_spec_string(t));
  std::vector<DivergenceSpec> specs;
  for (const auto& f : flags) specs.push_back(build_spec(f));

  const auto rows = contamination_sweep(epsilons, outlier, specs, n, seed);
  if (format == "csv") {
    std::ostringstream text;
    write_sweep_csv(rows, text);
    emit(text.str(), output, out);
  } else {
    Json j;
    j["command"] = "sweep";
    Json spec_list = Json::array();
    for (const auto& f : flags) spec_list.push_back(spec_json(f));
    j["config"] = {{"specs", spec_list}, {"epsilons", epsilons}, {"outlier", outlier}, {"n", n}, {"seed", seed}};
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back({{"epsilon", r.epsilon},
                       {"family", r.family},
                       {"gamma", r.gamma},
                       {"zeta", optional_json(r.zeta)},
                       {"mu_hat", r.mu_hat},
                       {"sigma_hat", r.sigma_hat},
                       {"bias", r.bias},
                       {"converged", r.converged}});
    }
    j["rows"] = table;
    emit_json(j, output, out);
  }
  for (const auto& r : rows) {
    if (!r.converged) return kNotConverged;
  }
  return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

GeneratorEta parse_eta(std::string_view text, double gamma) {
  const auto [name, rest] = head_tail(text);
  if (name == "dpd") {
    expect_no_parameter(name, rest, "--eta");
    return GeneratorEta::dpd(gamma);
  }
  if (name == "ps") {
    expect_no_parameter(name, rest, "--eta");
    return GeneratorEta::ps(gamma);
  }
  if (name == "bhd") return GeneratorEta::bhd(parse_number(rest, "--eta bhd"), gamma);
  if (name == "jhhb") return GeneratorEta::jhhb(parse_number(rest, "--eta jhhb"), gamma);
  if (name == "table" || name == "expr") return GeneratorEta::custom(custom_function(name, rest), gamma, std::string(text));
  throw FormatError("unknown eta generator '" + std::string(text) + "'");
}

GeneratorPhi parse_phi(std::string_view text) {
  const auto [name, rest] = head_tail(text);
  if (name == "identity") {
    expect_no_parameter(name, rest, "--phi");
    return GeneratorPhi::identity();
  }
  if (name == "log") {
    expect_no_parameter(name, rest, "--phi");
    return GeneratorPhi::log();
  }
  if (name == "exp-minus-one") {
    expect_no_parameter(name, rest, "--phi");
    return GeneratorPhi::exp_minus_one();
  }
  if (name == "power") return GeneratorPhi::power(parse_number(rest, "--phi power"));
  if (name == "bdpd") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw FormatError("--phi bdpd expects bdpd:LAMBDA1:LAMBDA2");
    return GeneratorPhi::bdpd(parse_number(parts[0], "--phi bdpd"), parse_number(parts[1], "--phi bdpd"));
  }
  if (name == "table" || name == "expr") return GeneratorPhi::custom(custom_function(name, rest), std::string(text));
  throw FormatError("unknown phi generator '" + std::string(text) + "'");
}

GeneratorXi parse_xi(std::string_view text) {
  const auto [name, rest] = head_tail(text);
  if (name == "identity") {
    expect_no_parameter(name, rest, "--xi");
    return GeneratorXi::identity();
  }
  if (name == "log1p") {
    expect_no_parameter(name, rest, "--xi");
    return GeneratorXi::custom([](double z) { return std::log1p(z); }, "log1p");
  }
  if (name == "power") return GeneratorXi::power(parse_number(rest, "--xi power"));
  if (name == "table" || name == "expr") return GeneratorXi::custom(custom_function(name, rest), std::string(text));
  throw FormatError("unknown xi transform '" + std::string(text) + "'");
}

DensityObject parse_density(const std::string& text) {
  constexpr std::string_view prefix = "gaussian:";
  if (std::string_view(text).substr(0, prefix.size()) == prefix) {
    const auto parts = split(std::string_view(text).substr(prefix.size()), ',');
    if (parts.size() != 2 && parts.size() != 3) throw FormatError("expected gaussian:MU,SIGMA[,MASS]");
    const double mu = parse_number(parts[0], "gaussian density");
    const double sigma = parse_number(parts[1], "gaussian density");
    const double mass = parts.size() == 3 ? parse_number(parts[2], "gaussian density") : 1.0;
    return DensityObject::gaussian(mu, sigma, mass);
  }
  return read_density_csv(text);
}

DivergenceSpec build_spec(const SpecFlags& flags) {
  const double gamma = flags.gamma;
  auto need = [&](const std::optional<std::string>& v, const char* flag) -> const std::string& {
    if (!v) throw FormatError(std::string(flag) + " is required for --family " + flags.family);
    return *v;
  };
  if (flags.family == "holder") {
    if (gamma == 0.0) return DivergenceSpec::holder_kl();
    return DivergenceSpec::holder(parse_eta(need(flags.eta, "--eta"), gamma));
  }
  if (flags.family == "fdpd") return DivergenceSpec::fdpd(parse_phi(need(flags.phi, "--phi")), gamma);
  if (flags.family == "jhhb") {
    if (!flags.zeta) throw FormatError("--zeta is required for --family jhhb");
    return DivergenceSpec::jhhb(*flags.zeta, gamma);
  }
  if (flags.family == "xi_holder" || flags.family == "xi-holder") {
    return DivergenceSpec::xi_holder(parse_eta(need(flags.eta, "--eta"), gamma), parse_xi(need(flags.xi, "--xi")));
  }
  throw FormatError("unknown family '" + flags.family + "'");
}

SpecFlags parse_spec_string(std::string_view text) {
  SpecFlags flags;
  bool has_family = false, has_gamma = false;
  for (const auto item : split(text, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw FormatError("spec entries must be key=value: '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string value(item.substr(eq + 1));
    if (key == "family") {
      flags.family = value;
      has_family = true;
    } else if (key == "eta") {
      flags.eta = value;
    } else if (key == "phi") {
      flags.phi = value;
    } else if (key == "xi") {
      flags.xi = value;
    } else if (key == "gamma") {
      flags.gamma = parse_number(value, "spec gamma");
      has_gamma = true;
    } else if (key == "zeta") {
      flags.zeta = parse_number(value, "spec zeta");
    } else {
      throw FormatError("unknown spec key '" + std::string(key) + "'");
    }
  }
  if (!has_family || !has_gamma) throw FormatError("spec '" + std::string(text) + "' needs family= and gamma=");
  return flags;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hölder-type and functional density power divergences"};
  app.require_subcommand(1);

  CommonFlags common;

  auto* compute = app.add_subcommand("compute", "Score, divergence and brackets for one pair");
  std::string g_path, f_path;
  compute->add_option("--family", common.spec.family, "holder | fdpd | jhhb | xi_holder")->required();
  compute->add_option("--gamma", common.spec.gamma)->required();
  compute->add_option("--g", g_path, "density CSV or gaussian:MU,SIGMA[,MASS]")->required();
  compute->add_option("--f", f_path, "density CSV or gaussian:MU,SIGMA[,MASS]")->required();
  compute->add_option("--output,-o", common.output);
  common.bind_generators(compute);

  auto* verify = app.add_subcommand("verify", "Numerical verification of a structural result");
  VerifyFlags vf;
  verify->add_option("--theorem", vf.theorem)
      ->required()
      ->check(CLI::IsMember({"affine-invariance", "jhhb-representation", "fdps-lower-bound", "uv-consistency",
                             "equality-conditions", "xi-propriety"}));
  verify->add_option("--gamma", common.spec.gamma)->required();
  verify->add_option("--trials", vf.trials);
  auto* seed_opt = verify->add_option("--seed", vf.seed);
  verify->add_option("--g", vf.g);
  verify->add_option("--f", vf.f);
  verify->add_option("--density", vf.densities, "extra densities for uv-consistency");
  verify->add_option("--c", vf.c, "g^{1+gamma} = c f^{1+gamma} for equality-conditions");
  verify->add_option("--output,-o", common.output);
  common.bind_generators(verify);

  auto* estimate = app.add_subcommand("estimate", "Minimum-score Gaussian fit");
  std::string samples_path;
  OptimizerConfig optimizer;
  double mu0 = 0.0, sigma0 = 1.0;
  estimate->add_option("--samples", samples_path, "single-column CSV with header x")->required();
  estimate->add_option("--family", common.spec.family)->required();
  estimate->add_option("--gamma", common.spec.gamma)->required();
  estimate->add_option("--mu0", mu0);
  estimate->add_option("--sigma0", sigma0);
  estimate->add_option("--max-iterations", optimizer.max_iterations);
  estimate->add_option("--tolerance", optimizer.tolerance);
  estimate->add_option("--restarts", optimizer.restarts);
  estimate->add_option("--seed", vf.seed, "accepted for uniformity; the fit is deterministic");
  estimate->add_option("--output,-o", common.output);
  common.bind_generators(estimate);

  auto* sweep = app.add_subcommand("sweep", "Contamination experiment over several specs");
  std::vector<std::string> spec_texts;
  std::vector<double> epsilons = {0.0, 0.1, 0.2};
  double outlier = 8.0;
  std::size_t n = 2000;
  std::uint64_t sweep_seed = 0;
  std::string format = "csv";
  sweep->add_option("--spec", spec_texts, "family=...,eta=...,phi=...,xi=...,gamma=...,zeta=... (repeatable)");
  sweep->add_option("--epsilons", epsilons)->delimiter(',');
  sweep->add_option("--outlier", outlier);
  sweep->add_option("--n", n);
  sweep->add_option("--seed", sweep_seed)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output,-o", common.output);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("divkit");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (compute->parsed()) {
      common.resolve(compute);
      return cmd_compute(common, g_path, f_path, out);
    }
    if (verify->parsed()) {
      common.resolve(verify);
      vf.has_seed = seed_opt->count() > 0;
      return cmd_verify(vf, common, out);
    }
    if (estimate->parsed()) {
      common.resolve(estimate);
      if (estimate->count("--mu0")) optimizer.initial_mu = mu0;
      if (estimate->count("--sigma0")) optimizer.initial_sigma = sigma0;
      return cmd_estimate(common, samples_path, optimizer, out);
    }
    return cmd_sweep(spec_texts, epsilons, outlier, n, sweep_seed, format, common.output, out);
  } catch (const GeneratorError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidGenerator;
  } catch (const ProprietyError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidGenerator;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace divkit::cli
