#include "rtmp/cli.hpp"

#include "rtmp/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace rtmp::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kExample3x = R"({
  "kind": "rtmp",
  "K": [["0", "1"]],
  "poles": {
    "k0": 0,
    "real": [{"lambda": "0", "k": 1}, {"lambda": "1", "k": 1}],
    "complex": []
  },
  "moments": {
    "gamma0": ["1/48"],
    "real": [["1/24", "5/12"], ["-1/24", "5/12"]],
    "complex": []
  }
})";

constexpr const char* kExample4x = R"({
  "kind": "rtmp",
  "K": [["-inf", "0"], ["1", "2"], ["3", "inf"]],
  "poles": {
    "k0": 0,
    "real": [{"lambda": "0", "k": 1}, {"lambda": "1", "k": 1}, {"lambda": "2", "k": 1}],
    "complex": []
  },
  "moments": {
    "gamma0": ["1539/128"],
    "real": [["-255/64", "235/32"], ["3/64", "313/96"], ["253/64", "713/96"]],
    "complex": []
  },
  "forced": [["370", "2000"]]
})";

const std::map<std::string, const char*>& presets() {
  static const std::map<std::string, const char*> table = {
      {"example-3x", kExample3x},
      {"example-4x", kExample4x},
  };
  return table;
}

// Command-line overrides; only explicitly set values are applied on top of
// the problem file's config block.
struct Flags {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_retries;
  std::optional<std::string> output;
  std::optional<std::string> emit_csv;
  std::string format = "text";
};

void apply_flags(SolverConfig& cfg, const Flags& flags) {
  if (flags.tol) cfg.tol = *flags.tol;
  if (flags.max_retries) cfg.max_retries = *flags.max_retries;
  if (flags.seed) cfg.rng_seed = *flags.seed;
  if (const char* env = std::getenv("RTMP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') cfg.rng_seed = v;
  }
}

std::string verdict_name(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::strictly_positive: return "strictly_positive";
    case CertificateVerdict::positive_singular: return "positive_singular";
    case CertificateVerdict::violated: return "violated";
  }
  return "unknown";
}

std::string psd_name(PsdStatus s) {
  switch (s) {
    case PsdStatus::positive_definite: return "positive_definite";
    case PsdStatus::psd_singular: return "psd_singular";
    case PsdStatus::indefinite: return "indefinite";
  }
  return "unknown";
}

std::string infeasible_name(InfeasibleKind k) {
  switch (k) {
    case InfeasibleKind::positivity_violated: return "positivity_violated";
    case InfeasibleKind::pole_hit: return "pole_hit";
    case InfeasibleKind::unbounded_kernel_condition_failed:
      return "unbounded_kernel_condition_failed";
    case InfeasibleKind::verification_failed: return "verification_failed";
  }
  return "unknown";
}

ordered_json config_json(const SolverConfig& cfg) {
  ordered_json j;
  j["tol"] = format_sig17(cfg.tol);
  j["density_floor"] = format_sig17(cfg.density_floor);
  j["max_retries"] = cfg.max_retries;
  if (cfg.max_extension_steps) j["max_extension_steps"] = *cfg.max_extension_steps;
  else j["max_extension_steps"] = nullptr;
  j["rng_seed"] = cfg.rng_seed;
  return j;
}

ordered_json certificate_json(const PositivityCertificate& cert) {
  ordered_json j;
  j["verdict"] = verdict_name(cert.verdict);
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < cert.products.size(); ++i) {
    ordered_json p;
    p["f"] = cert.products[i].f.str();
    p["status"] = psd_name(cert.reports[i].status);
    p["rank"] = cert.reports[i].rank;
    ordered_json eig = ordered_json::array();
    for (double e : cert.reports[i].eigenvalue_estimates) eig.push_back(format_sig17(e));
    p["eigenvalues"] = eig;
    products.push_back(std::move(p));
  }
  j["products"] = products;
  if (cert.witness) j["witness"] = cert.products[*cert.witness].f.str();
  return j;
}

ordered_json measure_json(const AtomicMeasure& mu) {
  ordered_json j;
  ordered_json atoms = ordered_json::array();
  ordered_json dens = ordered_json::array();
  for (double a : mu.atoms) atoms.push_back(format_sig17(a));
  for (double d : mu.densities) dens.push_back(format_sig17(d));
  j["atoms"] = atoms;
  j["densities"] = dens;
  if (mu.exact) {
    ordered_json ea = ordered_json::array();
    ordered_json ed = ordered_json::array();
    for (const Rat& a : mu.atoms_exact) ea.push_back(rat_str(a));
    for (const Rat& d : mu.densities_exact) ed.push_back(rat_str(d));
    j["atoms_exact"] = ea;
    j["densities_exact"] = ed;
  }
  return j;
}

ordered_json circle_measure_json(const CircleMeasure& mu) {
  ordered_json j;
  ordered_json atoms = ordered_json::array();
  ordered_json dens = ordered_json::array();
  for (const CircleAtom& a : mu.atoms)
    atoms.push_back({format_sig17(a.x), format_sig17(a.y)});
  for (double d : mu.densities) dens.push_back(format_sig17(d));
  j["atoms"] = atoms;
  j["densities"] = dens;
  return j;
}

ordered_json infeasible_json(const InfeasibleReason& reason) {
  ordered_json j;
  j["kind"] = infeasible_name(reason.kind);
  j["detail"] = reason.detail;
  if (reason.witness_product) j["witness_product"] = reason.witness_product->str();
  if (reason.pole) j["pole"] = rat_str(*reason.pole);
  if (reason.line_measure) j["line_measure"] = measure_json(*reason.line_measure);
  return j;
}

ordered_json report_json(const SolveLog& log) {
  ordered_json j;
  j["extension_steps"] = log.extension_steps;
  j["retries"] = log.retries;
  if (log.binding_product) j["binding_product"] = log.binding_product->str();
  ordered_json bounds = ordered_json::array();
  for (const auto& [f, q, lower] : log.first_bounds) {
    ordered_json b;
    b["f"] = f.str();
    b["type"] = lower ? "lower" : "upper";
    b["a"] = rat_str(q.a);
    b["b"] = rat_str(q.b);
    b["c"] = rat_str(q.c);
    bounds.push_back(std::move(b));
  }
  j["first_bounds"] = bounds;
  if (log.flat_window)
    j["flat_window"] = {format_sig17(log.flat_window->first),
                        format_sig17(log.flat_window->second)};
  j["sampled_pair"] = {format_sig17(log.sampled_pair.first),
                       format_sig17(log.sampled_pair.second)};
  return j;
}

ordered_json verification_json(bool ok, double max_residual, const std::string& detail) {
  ordered_json j;
  j["ok"] = ok;
  j["max_moment_residual"] = format_sig17(max_residual);
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

// Everything one run produces; rendered as JSON or text.
struct RunResult {
  int exit_code = 1;
  ordered_json doc;
  std::optional<AtomicMeasure> measure;
  std::optional<CircleMeasure> circle;
};

void render_text(const ordered_json& doc, std::ostream& out) {
  out << "problem: " << doc.value("kind", "?") << " (" << doc.value("source", "?")
      << ")\n";
  if (doc.contains("certificate")) {
    const auto& cert = doc["certificate"];
    out << "certificate: " << cert.value("verdict", "?") << "\n";
    for (const auto& p : cert["products"]) {
      out << "  f = " << p.value("f", "?") << ": " << p.value("status", "?") << ", rank "
          << p["rank"].get<int>() << ", eigenvalues";
      for (const auto& e : p["eigenvalues"]) out << " " << e.get<std::string>();
      out << "\n";
    }
    if (cert.contains("witness"))
      out << "  witness: " << cert["witness"].get<std::string>() << "\n";
  }
  if (doc.contains("relations_ok"))
    out << "circle relations: " << (doc["relations_ok"].get<bool>() ? "ok" : "violated")
        << "\n";
  out << "status: " << doc.value("status", "?");
  if (doc.contains("infeasible"))
    out << " (" << doc["infeasible"].value("kind", "?") << ")";
  out << "\n";
  if (doc.contains("infeasible")) {
    const auto& inf = doc["infeasible"];
    if (inf.contains("detail") && !inf["detail"].get<std::string>().empty())
      out << "  detail: " << inf["detail"].get<std::string>() << "\n";
    if (inf.contains("witness_product"))
      out << "  witness product: " << inf["witness_product"].get<std::string>() << "\n";
    if (inf.contains("pole")) out << "  pole: " << inf["pole"].get<std::string>() << "\n";
    if (inf.contains("line_measure")) {
      const auto& m = inf["line_measure"];
      out << "  line measure (before pole check):\n";
      const auto& atoms = m.contains("atoms_exact") ? m["atoms_exact"] : m["atoms"];
      const auto& dens =
          m.contains("densities_exact") ? m["densities_exact"] : m["densities"];
      for (std::size_t i = 0; i < atoms.size(); ++i)
        out << "    atom " << atoms[i].get<std::string>() << "  density "
            << dens[i].get<std::string>() << "\n";
    }
  }
  if (doc.contains("measure") && doc["measure"].is_object()) {
    const auto& m = doc["measure"];
    const auto& atoms = m["atoms"];
    const auto& dens = m["densities"];
    out << "measure: " << atoms.size() << " atoms\n";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].is_array())
        out << "  atom (" << atoms[i][0].get<std::string>() << ", "
            << atoms[i][1].get<std::string>() << ")";
      else
        out << "  atom " << atoms[i].get<std::string>();
      out << "  density " << dens[i].get<std::string>() << "\n";
    }
  }
  if (doc.contains("converted")) {
    out << "power moments:";
    for (const auto& g : doc["converted"]) out << " " << g.get<std::string>();
    out << "\n";
  }
  if (doc.contains("report")) {
    const auto& r = doc["report"];
    out << "report: extension steps " << r["extension_steps"].get<int>() << ", retries "
        << r["retries"].get<int>() << "\n";
    if (r.contains("binding_product"))
      out << "  binding product: " << r["binding_product"].get<std::string>() << "\n";
    if (r.contains("first_bounds") && !r["first_bounds"].empty()) {
      out << "  first extension bounds (y vs q(x) = a x^2 + b x + c):\n";
      for (const auto& b : r["first_bounds"])
        out << "    f = " << b["f"].get<std::string>() << ": "
            << (b["type"].get<std::string>() == "lower" ? "y >= " : "y <= ") << "["
            << b["a"].get<std::string>() << ", " << b["b"].get<std::string>() << ", "
            << b["c"].get<std::string>() << "]\n";
    }
    if (r.contains("flat_window"))
      out << "  flat window: [" << r["flat_window"][0].get<std::string>() << ", "
          << r["flat_window"][1].get<std::string>() << "]\n";
    out << "  sampled pair: (" << r["sampled_pair"][0].get<std::string>() << ", "
        << r["sampled_pair"][1].get<std::string>() << ")\n";
  }
  if (doc.contains("verification")) {
    const auto& v = doc["verification"];
    out << "verification: " << (v["ok"].get<bool>() ? "ok" : "FAILED")
        << ", max residual " << v["max_moment_residual"].get<std::string>() << "\n";
  }
}

void emit(const RunResult& res, const Flags& flags, std::ostream& out) {
  if (flags.format == "json")
    out << res.doc.dump(2) << "\n";
  else
    render_text(res.doc, out);
  if (flags.output) {
    std::ofstream f(*flags.output);
    if (!f) throw std::runtime_error(*flags.output + ": cannot write");
    f << res.doc.dump(2) << "\n";
  }
  if (flags.emit_csv) {
    std::ofstream f(*flags.emit_csv);
    if (!f) throw std::runtime_error(*flags.emit_csv + ": cannot write");
    if (res.circle) {
      f << "x,y,density\n";
      for (std::size_t i = 0; i < res.circle->atoms.size(); ++i)
        f << format_sig17(res.circle->atoms[i].x) << ","
          << format_sig17(res.circle->atoms[i].y) << ","
          << format_sig17(res.circle->densities[i]) << "\n";
    } else if (res.measure) {
      f << "atom,density\n";
      for (std::size_t i = 0; i < res.measure->atoms.size(); ++i)
        f << format_sig17(res.measure->atoms[i]) << ","
          << format_sig17(res.measure->densities[i]) << "\n";
    }
  }
}

MomentSequence power_moments_of(const ProblemFile& problem) {
  if (problem.kind == ProblemKind::power_tmp) return problem.moments;
  if (problem.kind == ProblemKind::circle) {
    const auto [data, spec] = circle_to_univariate(*problem.beta);
    return rational_to_power(data, spec);
  }
  return rational_to_power(problem.data, problem.spec);
}

RunResult run_solve(const ProblemFile& problem, const std::string& source,
                    const Flags& flags) {
  RunResult res;
  SolverConfig cfg = problem.config;
  apply_flags(cfg, flags);

  res.doc["status"] = "error";
  res.doc["kind"] = problem_kind_name(problem.kind);
  res.doc["source"] = source;
  res.doc["config"] = config_json(cfg);

  const auto started = std::chrono::steady_clock::now();

  if (problem.kind == ProblemKind::circle) {
    const auto outcome = circle_solve(*problem.beta, cfg);
    if (std::holds_alternative<CircleMeasure>(outcome)) {
      const CircleMeasure& mu = std::get<CircleMeasure>(outcome);
      const CircleReport rep = circle_verify(mu, *problem.beta, cfg.tol);
      res.doc["status"] = "solved";
      res.doc["measure"] = circle_measure_json(mu);
      res.doc["verification"] =
          verification_json(rep.ok(), rep.max_moment_residual, rep.detail);
      res.circle = mu;
      res.exit_code = rep.ok() ? 0 : 1;
    } else {
      res.doc["status"] = "infeasible";
      res.doc["infeasible"] = infeasible_json(std::get<InfeasibleReason>(outcome));
      res.exit_code = 2;
    }
  } else {
    const MomentSequence gamma = power_moments_of(problem);
    const ClosedSet k =
        problem.kind == ProblemKind::strong_hamburger ? ClosedSet::whole_line()
                                                      : problem.k;
    const PoleSet poles = problem.kind == ProblemKind::power_tmp
                              ? problem.lambda
                              : problem.spec.pole_set();
    const PositivityCertificate cert = positivity_certificate(gamma, k);
    res.doc["certificate"] = certificate_json(cert);

    SolveLog log;
    SolveResult outcome =
        cert.verdict == CertificateVerdict::strictly_positive
            ? solve_nonsingular(gamma, k, poles, cfg, problem.forced, &log)
            : solve_singular(gamma, k, poles, cfg, &log);

    if (std::holds_alternative<AtomicMeasure>(outcome)) {
      AtomicMeasure mu = std::get<AtomicMeasure>(outcome);
      bool ok = false;
      double max_resid = 0.0;
      std::string detail;
      if (problem.kind == ProblemKind::power_tmp) {
        const MeasureReport rep = verify_measure(mu, gamma, k, poles, cfg.tol);
        ok = rep.ok();
        max_resid = rep.max_moment_residual;
        detail = rep.detail;
      } else {
        mu = pushforward_q(mu, problem.spec, cfg.tol);
        const MeasureReport rep = verify_rtmp(mu, problem.data, problem.spec, cfg.tol);
        ok = rep.ok();
        max_resid = rep.max_moment_residual;
        detail = rep.detail;
      }
      res.doc["status"] = "solved";
      res.doc["measure"] = measure_json(mu);
      res.doc["report"] = report_json(log);
      res.doc["verification"] = verification_json(ok, max_resid, detail);
      res.measure = mu;
      // A measure that fails the independent verification is not a certified
      // answer; exit 0 is reserved for certified ones.
      res.exit_code = ok ? 0 : 1;
    } else {
      res.doc["status"] = "infeasible";
      res.doc["infeasible"] = infeasible_json(std::get<InfeasibleReason>(outcome));
      res.exit_code = 2;
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  res.doc["timings"] = {
      {"total_ms",
       std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0}};
  return res;
}

RunResult run_check(const ProblemFile& problem, const std::string& source,
                    const Flags& flags) {
  RunResult res;
  SolverConfig cfg = problem.config;
  apply_flags(cfg, flags);
  res.doc["kind"] = problem_kind_name(problem.kind);
  res.doc["source"] = source;

  if (problem.kind == ProblemKind::circle) {
    const auto bad = circle_relations_check(*problem.beta);
    res.doc["relations_ok"] = !bad.has_value();
    const PsdReport rep = bivariate_square_positive(*problem.beta);
    PositivityCertificate cert;
    cert.verdict = bad || rep.status == PsdStatus::indefinite
                       ? CertificateVerdict::violated
                       : (rep.status == PsdStatus::positive_definite
                              ? CertificateVerdict::strictly_positive
                              : CertificateVerdict::positive_singular);
    PiProduct one;
    one.f = Poly::one();
    cert.products.push_back(one);
    cert.reports.push_back(rep);
    res.doc["certificate"] = certificate_json(cert);
    res.doc["status"] =
        cert.verdict == CertificateVerdict::violated ? "infeasible" : "solved";
    res.exit_code = cert.verdict == CertificateVerdict::violated ? 2 : 0;
    return res;
  }

  const MomentSequence gamma = power_moments_of(problem);
  const ClosedSet k = problem.kind == ProblemKind::strong_hamburger
                          ? ClosedSet::whole_line()
                          : problem.k;
  const PositivityCertificate cert = positivity_certificate(gamma, k);
  res.doc["certificate"] = certificate_json(cert);
  res.doc["status"] =
      cert.verdict == CertificateVerdict::violated ? "infeasible" : "solved";
  res.exit_code = cert.verdict == CertificateVerdict::violated ? 2 : 0;
  return res;
}

RunResult run_convert(const ProblemFile& problem, const std::string& source) {
  RunResult res;
  res.doc["kind"] = problem_kind_name(problem.kind);
  res.doc["source"] = source;
  const MomentSequence gamma = power_moments_of(problem);
  ordered_json list = ordered_json::array();
  for (const Rat& g : gamma.values()) list.push_back(rat_str(g));
  res.doc["status"] = "solved";
  res.doc["converted"] = list;
  res.exit_code = 0;
  return res;
}

RunResult run_verify(const std::string& measure_path, const ProblemFile& problem,
                     const std::string& source, const Flags& flags) {
  RunResult res;
  SolverConfig cfg = problem.config;
  apply_flags(cfg, flags);
  res.doc["kind"] = problem_kind_name(problem.kind);
  res.doc["source"] = source;

  bool ok = false;
  double max_resid = 0.0;
  std::string detail;
  if (problem.kind == ProblemKind::circle) {
    const CircleMeasure mu = load_circle_measure_file(measure_path);
    const CircleReport rep = circle_verify(mu, *problem.beta, cfg.tol);
    ok = rep.ok();
    max_resid = rep.max_moment_residual;
    detail = rep.detail;
  } else if (problem.kind == ProblemKind::power_tmp) {
    const AtomicMeasure mu = load_measure_file(measure_path);
    const MeasureReport rep =
        verify_measure(mu, problem.moments, problem.k, problem.lambda, cfg.tol);
    ok = rep.ok();
    max_resid = rep.max_moment_residual;
    detail = rep.detail;
  } else {
    const AtomicMeasure mu = load_measure_file(measure_path);
    const MeasureReport rep = verify_rtmp(mu, problem.data, problem.spec, cfg.tol);
    ok = rep.ok();
    max_resid = rep.max_moment_residual;
    detail = rep.detail;
  }
  res.doc["status"] = ok ? "solved" : "infeasible";
  res.doc["verification"] = verification_json(ok, max_resid, detail);
  res.exit_code = ok ? 0 : 2;
  return res;
}

int worst(int a, int b) {
  if (a == 1 || b == 1) return 1;
  return std::max(a, b);
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : presets()) names.push_back(name);
  return names;
}

std::string preset_problem_text(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end())
    throw std::invalid_argument("unknown preset \"" + name + "\"");
  return it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"truncated rational moment problem solver"};
  app.name("rtmp");
  app.require_subcommand(1);

  Flags flags;
  double tol_val = 0;
  std::uint64_t seed_val = 0;
  int retries_val = 0;
  std::string output_val, csv_val;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol_val, "relative verification tolerance");
    cmd->add_option("--seed", seed_val, "sampling seed (RTMP_SEED overrides)");
    cmd->add_option("--max-retries", retries_val, "sampling retries per extension step");
    cmd->add_option("--output", output_val, "write the JSON result to this path");
    cmd->add_option("--format", flags.format, "stdout format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--emit-csv", csv_val, "write an atom/density table to this path");
  };

  std::vector<std::string> solve_paths;
  CLI::App* solve_cmd = app.add_subcommand("solve", "decide and construct a measure");
  solve_cmd->add_option("files", solve_paths, "problem files")->required();
  add_common(solve_cmd);

  std::string check_path;
  CLI::App* check_cmd = app.add_subcommand("check", "positivity certificate only");
  check_cmd->add_option("file", check_path, "problem file")->required();
  add_common(check_cmd);

  std::string verify_measure_path, verify_problem_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify a measure file against a problem file");
  verify_cmd->add_option("measure", verify_measure_path, "measure or result file")
      ->required();
  verify_cmd->add_option("problem", verify_problem_path, "problem file")->required();
  add_common(verify_cmd);

  std::string convert_path;
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "convert rational data to power moments");
  convert_cmd->add_option("file", convert_path, "problem file")->required();
  add_common(convert_cmd);

  std::string preset_name;
  CLI::App* preset_cmd = app.add_subcommand("preset", "run a bundled example");
  preset_cmd->add_option("name", preset_name, "preset name (omit to list)");
  add_common(preset_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  auto collect = [&](CLI::App* cmd) {
    if (cmd->count("--tol")) flags.tol = tol_val;
    if (cmd->count("--seed")) flags.seed = seed_val;
    if (cmd->count("--max-retries")) flags.max_retries = retries_val;
    if (cmd->count("--output")) flags.output = output_val;
    if (cmd->count("--emit-csv")) flags.emit_csv = csv_val;
  };

  try {
    if (solve_cmd->parsed()) {
      collect(solve_cmd);
      if (flags.output && solve_paths.size() > 1) {
        err << "rtmp: --output needs a single input file\n";
        return 1;
      }
      int code = 0;
      for (const std::string& path : solve_paths) {
        const ProblemFile problem = load_problem_file(path);
        const RunResult res = run_solve(problem, path, flags);
        emit(res, flags, out);
        code = worst(code, res.exit_code);
      }
      return code;
    }
    if (check_cmd->parsed()) {
      collect(check_cmd);
      const RunResult res = run_check(load_problem_file(check_path), check_path, flags);
      emit(res, flags, out);
      return res.exit_code;
    }
    if (verify_cmd->parsed()) {
      collect(verify_cmd);
      const RunResult res = run_verify(verify_measure_path,
                                       load_problem_file(verify_problem_path),
                                       verify_problem_path, flags);
      emit(res, flags, out);
      return res.exit_code;
    }
    if (convert_cmd->parsed()) {
      collect(convert_cmd);
      const RunResult res = run_convert(load_problem_file(convert_path), convert_path);
      emit(res, flags, out);
      return res.exit_code;
    }
    if (preset_cmd->parsed()) {
      collect(preset_cmd);
      if (preset_name.empty()) {
        for (const std::string& name : preset_names()) out << name << "\n";
        return 0;
      }
      const ProblemFile problem =
          parse_problem_text(preset_problem_text(preset_name), preset_name);
      const RunResult res = run_solve(problem, "preset:" + preset_name, flags);
      emit(res, flags, out);
      return res.exit_code;
    }
  } catch (const ParseError& e) {
    err << "rtmp: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "rtmp: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace rtmp::cli
