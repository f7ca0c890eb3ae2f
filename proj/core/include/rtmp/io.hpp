#pragma once

#include "rtmp/special.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace rtmp {

// Parse/validation failure with the JSON pointer of the offending node.
struct ParseError : std::runtime_error {
  ParseError(const std::string& pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer(pointer) {}
  std::string pointer;
};

enum class ProblemKind { power_tmp, rtmp, strong_hamburger, circle };

std::string problem_kind_name(ProblemKind kind);

// One problem instance as read from disk. Exact rationals are "p/q" strings
// in the file; K is a list of [lo, hi] pairs with "-inf" / "inf" sentinels.
struct ProblemFile {
  ProblemKind kind = ProblemKind::power_tmp;
  ClosedSet k = ClosedSet::whole_line();

  // power_tmp
  MomentSequence moments;
  PoleSet lambda;

  // rtmp / strong_hamburger
  PoleSpec spec;
  RationalMoments data;

  // circle
  std::optional<BivariateSequence> beta;

  SolverConfig config;
  // Pinned extension pairs (gamma_{2k+1}, gamma_{2k+2}) for the nonsingular
  // solver, consumed in order.
  std::vector<std::pair<Rat, Rat>> forced;
};

ProblemFile parse_problem_text(const std::string& text, const std::string& source_name);
ProblemFile load_problem_file(const std::string& path);

// Measure files: {"atoms": [...], "densities": [...]} with decimal strings,
// or a full result file whose "measure" field is read. Circle measures use
// [x, y] atom pairs.
AtomicMeasure parse_measure_text(const std::string& text);
CircleMeasure parse_circle_measure_text(const std::string& text);
AtomicMeasure load_measure_file(const std::string& path);
CircleMeasure load_circle_measure_file(const std::string& path);

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_sig17(double x);

}  // namespace rtmp
