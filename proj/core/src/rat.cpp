#include "rtmp/rat.hpp"

#include <cctype>
#include <cmath>

namespace rtmp {

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
  return Rat(x);
}

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::optional<Rat> rat_try_parse(const std::string& text) {
  const std::string t = strip(text);
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_text(t)) return std::nullopt;
    return Rat(Int(t));
  }
  const std::string num = strip(t.substr(0, slash));
  const std::string den = strip(t.substr(slash + 1));
  if (!valid_integer_text(num) || !valid_integer_text(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  return Rat(Int(num), d);
}

Rat rat_parse(const std::string& text) {
  auto r = rat_try_parse(text);
  if (!r) throw std::invalid_argument("not a rational: '" + text + "'");
  return *r;
}

std::string rat_str(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat out = 1, b = base;
  while (exp != 0) {
    if (exp & 1u) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

Int rat_floor(const Rat& r) {
  Int q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rat(q) != r) --q;
  return q;
}

namespace {

Rat simplest_positive(const Rat& lo, const Rat& hi) {  // 0 < lo <= hi
  const Int fl = rat_floor(lo);
  if (Rat(fl) == lo) return lo;
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  // Both endpoints share the integer part; recurse on the fractional tails.
  const Rat tail = simplest_positive(1 / (hi - Rat(fl)), 1 / (lo - Rat(fl)));
  return Rat(fl) + 1 / tail;
}

}  // namespace

Rat rat_simplest_in(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw std::invalid_argument("rat_simplest_in: empty interval");
  if (lo <= 0 && 0 <= hi) return 0;
  if (lo > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace rtmp
