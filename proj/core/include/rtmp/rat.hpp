#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rtmp {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values reduced with a positive
// denominator, so the representation is canonical by construction.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline long double to_long_double(const Rat& r) {
  return r.template convert_to<long double>();
}

// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double(double x);

inline int sign(const Rat& r) { return r.sign(); }

// Parses "p/q", "p", or "-p/q". Rejects zero denominators and malformed text.
Rat rat_parse(const std::string& text);

std::optional<Rat> rat_try_parse(const std::string& text);

// Canonical "p/q" form ("p" when the denominator is 1).
std::string rat_str(const Rat& r);

Rat rat_abs(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exp);

// Largest integer <= r.
Int rat_floor(const Rat& r);

// The rational with the smallest denominator (ties: smallest magnitude) in
// the closed interval [lo, hi], by continued-fraction descent. Requires
// lo <= hi.
Rat rat_simplest_in(const Rat& lo, const Rat& hi);

Int binomial(unsigned n, unsigned k);

}  // namespace rtmp
