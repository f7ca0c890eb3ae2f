#include "rtmp/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace rtmp {

using nlohmann::json;

namespace {

[[noreturn]] void bail(const std::string& pointer, const std::string& message) {
  throw ParseError(pointer, message);
}

const json& member(const json& node, const std::string& pointer, const std::string& key) {
  if (!node.is_object()) bail(pointer, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) bail(pointer + "/" + key, "missing field");
  return *it;
}

// Exact scalars come in as "p/q" strings or JSON integers; floats are
// rejected so nothing silently loses exactness.
Rat rat_at(const json& node, const std::string& pointer) {
  if (node.is_string()) {
    auto r = rat_try_parse(node.get<std::string>());
    if (!r) bail(pointer, "malformed rational \"" + node.get<std::string>() + "\"");
    return *r;
  }
  if (node.is_number_integer()) return Rat(node.get<long long>());
  if (node.is_number_unsigned()) return Rat(node.get<unsigned long long>());
  bail(pointer, "expected a \"p/q\" string or integer");
}

std::vector<Rat> rat_list(const json& node, const std::string& pointer) {
  if (!node.is_array()) bail(pointer, "expected an array");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(rat_at(node[i], pointer + "/" + std::to_string(i)));
  return out;
}

int int_at(const json& node, const std::string& pointer) {
  if (!node.is_number_integer() && !node.is_number_unsigned())
    bail(pointer, "expected an integer");
  return node.get<int>();
}

ClosedSet parse_k(const json& node, const std::string& pointer) {
  if (!node.is_array()) bail(pointer, "expected an array of [lo, hi] pairs");
  if (node.empty()) bail(pointer, "K must contain at least one interval");
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    const json& pair = node[i];
    if (!pair.is_array() || pair.size() != 2) bail(p, "expected [lo, hi]");
    Interval iv;
    if (!(pair[0].is_string() && pair[0].get<std::string>() == "-inf"))
      iv.lo = rat_at(pair[0], p + "/0");
    if (!(pair[1].is_string() && pair[1].get<std::string>() == "inf"))
      iv.hi = rat_at(pair[1], p + "/1");
    intervals.push_back(std::move(iv));
  }
  try {
    return ClosedSet::from_intervals(std::move(intervals));
  } catch (const std::invalid_argument& e) {
    bail(pointer, e.what());
  }
}

PoleSpec parse_poles(const json& node, const std::string& pointer) {
  PoleSpec spec;
  spec.k0 = int_at(member(node, pointer, "k0"), pointer + "/k0");
  if (node.contains("real")) {
    const json& real = node["real"];
    if (!real.is_array()) bail(pointer + "/real", "expected an array");
    for (std::size_t i = 0; i < real.size(); ++i) {
      const std::string p = pointer + "/real/" + std::to_string(i);
      RealPole pole;
      pole.lambda = rat_at(member(real[i], p, "lambda"), p + "/lambda");
      pole.order = int_at(member(real[i], p, "k"), p + "/k");
      spec.real.push_back(std::move(pole));
    }
  }
  if (node.contains("complex")) {
    const json& cplx = node["complex"];
    if (!cplx.is_array()) bail(pointer + "/complex", "expected an array");
    for (std::size_t i = 0; i < cplx.size(); ++i) {
      const std::string p = pointer + "/complex/" + std::to_string(i);
      ComplexPolePair pole;
      pole.eta = rat_at(member(cplx[i], p, "eta"), p + "/eta");
      pole.order = int_at(member(cplx[i], p, "l"), p + "/l");
      spec.complex.push_back(std::move(pole));
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    bail(pointer, e.what());
  }
  return spec;
}

RationalMoments parse_rational_moments(const json& node, const PoleSpec& spec,
                                       const std::string& pointer) {
  RationalMoments data;
  data.gamma0 = rat_list(member(node, pointer, "gamma0"), pointer + "/gamma0");
  if (node.contains("real")) {
    const json& real = node["real"];
    if (!real.is_array()) bail(pointer + "/real", "expected an array of arrays");
    for (std::size_t i = 0; i < real.size(); ++i)
      data.real.push_back(rat_list(real[i], pointer + "/real/" + std::to_string(i)));
  }
  if (node.contains("complex")) {
    const json& cplx = node["complex"];
    if (!cplx.is_array()) bail(pointer + "/complex", "expected an array");
    for (std::size_t i = 0; i < cplx.size(); ++i) {
      const std::string p = pointer + "/complex/" + std::to_string(i);
      ComplexMomentPair pair;
      pair.s0 = rat_list(member(cplx[i], p, "s0"), p + "/s0");
      pair.s1 = rat_list(member(cplx[i], p, "s1"), p + "/s1");
      data.complex.push_back(std::move(pair));
    }
  }
  try {
    data.validate(spec);
  } catch (const std::invalid_argument& e) {
    bail(pointer, e.what());
  }
  return data;
}

BivariateSequence parse_beta(const json& root, const std::string& pointer) {
  const int k = int_at(member(root, pointer, "k"), pointer + "/k");
  const json& rows = member(root, pointer, "beta");
  if (!rows.is_array()) bail(pointer + "/beta", "expected an array of [i, j, value]");
  std::map<std::pair<int, int>, Rat> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = pointer + "/beta/" + std::to_string(r);
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 3) bail(p, "expected [i, j, value]");
    const int i = int_at(row[0], p + "/0");
    const int j = int_at(row[1], p + "/1");
    if (values.count({i, j})) bail(p, "duplicate beta index");
    values[{i, j}] = rat_at(row[2], p + "/2");
  }
  try {
    return BivariateSequence(k, std::move(values));
  } catch (const std::exception& e) {
    bail(pointer + "/beta", e.what());
  }
}

void parse_config(const json& node, SolverConfig& cfg, const std::string& pointer) {
  if (!node.is_object()) bail(pointer, "expected an object");
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string p = pointer + "/" + it.key();
    if (it.key() == "tol") {
      if (!it->is_number()) bail(p, "expected a number");
      cfg.tol = it->get<double>();
    } else if (it.key() == "density_floor") {
      if (!it->is_number()) bail(p, "expected a number");
      cfg.density_floor = it->get<double>();
    } else if (it.key() == "max_retries") {
      cfg.max_retries = int_at(*it, p);
    } else if (it.key() == "max_extension_steps") {
      cfg.max_extension_steps = int_at(*it, p);
    } else if (it.key() == "seed") {
      if (!it->is_number_integer() && !it->is_number_unsigned())
        bail(p, "expected an integer");
      cfg.rng_seed = it->get<std::uint64_t>();
    } else {
      bail(p, "unknown config field");
    }
  }
}

}  // namespace

std::string problem_kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::power_tmp: return "power_tmp";
    case ProblemKind::rtmp: return "rtmp";
    case ProblemKind::strong_hamburger: return "strong_hamburger";
    case ProblemKind::circle: return "circle";
  }
  return "unknown";
}

ProblemFile parse_problem_text(const std::string& text, const std::string& source_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    bail("", source_name + ": " + e.what());
  }
  if (!root.is_object()) bail("", "expected a JSON object");

  ProblemFile out;
  const std::string kind = [&] {
    const json& node = member(root, "", "kind");
    if (!node.is_string()) bail("/kind", "expected a string");
    return node.get<std::string>();
  }();
  if (kind == "power_tmp") out.kind = ProblemKind::power_tmp;
  else if (kind == "rtmp") out.kind = ProblemKind::rtmp;
  else if (kind == "strong_hamburger") out.kind = ProblemKind::strong_hamburger;
  else if (kind == "circle") out.kind = ProblemKind::circle;
  else bail("/kind", "unknown problem kind \"" + kind + "\"");

  if (root.contains("K")) out.k = parse_k(root["K"], "/K");

  switch (out.kind) {
    case ProblemKind::power_tmp: {
      out.moments = MomentSequence(rat_list(member(root, "", "moments"), "/moments"));
      if (root.contains("lambda"))
        out.lambda.points = rat_list(root["lambda"], "/lambda");
      break;
    }
    case ProblemKind::rtmp:
    case ProblemKind::strong_hamburger: {
      out.spec = parse_poles(member(root, "", "poles"), "/poles");
      out.data = parse_rational_moments(member(root, "", "moments"), out.spec, "/moments");
      if (out.kind == ProblemKind::strong_hamburger) {
        if (out.spec.real.size() != 1 || out.spec.real[0].lambda != 0 ||
            !out.spec.complex.empty())
          bail("/poles", "strong_hamburger needs exactly one real pole at 0");
        if (root.contains("K")) bail("/K", "strong_hamburger is always on the whole line");
      }
      break;
    }
    case ProblemKind::circle: {
      out.beta = parse_beta(root, "");
      if (root.contains("K")) bail("/K", "circle problems do not take K");
      break;
    }
  }

  if (root.contains("config")) parse_config(root["config"], out.config, "/config");
  if (root.contains("forced")) {
    const json& forced = root["forced"];
    if (!forced.is_array()) bail("/forced", "expected an array of [x, y] pairs");
    for (std::size_t i = 0; i < forced.size(); ++i) {
      const std::string p = "/forced/" + std::to_string(i);
      if (!forced[i].is_array() || forced[i].size() != 2) bail(p, "expected [x, y]");
      out.forced.emplace_back(rat_at(forced[i][0], p + "/0"),
                              rat_at(forced[i][1], p + "/1"));
    }
  }
  return out;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path);
}

namespace {

// Measure scalars are decimal strings (solver output), "p/q" strings, or
// numbers.
double scalar_at(const json& node, const std::string& pointer) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) {
    const std::string s = node.get<std::string>();
    if (auto r = rat_try_parse(s)) return to_double(*r);
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') bail(pointer, "malformed number \"" + s + "\"");
    return x;
  }
  bail(pointer, "expected a number or numeric string");
}

std::vector<double> scalar_list(const json& node, const std::string& pointer) {
  if (!node.is_array()) bail(pointer, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(scalar_at(node[i], pointer + "/" + std::to_string(i)));
  return out;
}

const json* measure_node(const json& root) {
  if (root.is_object() && root.contains("measure")) return &root["measure"];
  return &root;
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bail("", e.what());
  }
}

}  // namespace

AtomicMeasure parse_measure_text(const std::string& text) {
  const json root = parse_root(text);
  const json& m = *measure_node(root);
  AtomicMeasure mu;
  mu.atoms = scalar_list(member(m, "/measure", "atoms"), "/measure/atoms");
  mu.densities = scalar_list(member(m, "/measure", "densities"), "/measure/densities");
  if (mu.atoms.size() != mu.densities.size())
    bail("/measure", "atoms and densities differ in length");
  return mu;
}

CircleMeasure parse_circle_measure_text(const std::string& text) {
  const json root = parse_root(text);
  const json& m = *measure_node(root);
  CircleMeasure mu;
  const json& atoms = member(m, "/measure", "atoms");
  if (!atoms.is_array()) bail("/measure/atoms", "expected an array of [x, y]");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = "/measure/atoms/" + std::to_string(i);
    if (!atoms[i].is_array() || atoms[i].size() != 2) bail(p, "expected [x, y]");
    mu.atoms.push_back(
        {scalar_at(atoms[i][0], p + "/0"), scalar_at(atoms[i][1], p + "/1")});
  }
  mu.densities = scalar_list(member(m, "/measure", "densities"), "/measure/densities");
  if (mu.atoms.size() != mu.densities.size())
    bail("/measure", "atoms and densities differ in length");
  return mu;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AtomicMeasure load_measure_file(const std::string& path) {
  return parse_measure_text(slurp(path));
}

CircleMeasure load_circle_measure_file(const std::string& path) {
  return parse_circle_measure_text(slurp(path));
}

std::string format_sig17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace rtmp
