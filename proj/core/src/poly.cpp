#include "rtmp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rtmp {

Poly::Poly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

Poly::Poly(std::initializer_list<Rat> ascending_coeffs) : coeffs_(ascending_coeffs) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::one() { return Poly{Rat(1)}; }

Poly Poly::x() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::constant(const Rat& c) { return Poly{c}; }

Poly Poly::linear_root(const Rat& r) { return Poly{-r, Rat(1)}; }

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  Poly p = Poly::one();
  for (const Rat& r : roots) p = p * linear_root(r);
  return p;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rat Poly::leading() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::operator()(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

long double Poly::eval_long(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_long_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rat(i) * coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) throw std::invalid_argument("monic: zero polynomial");
  const Rat lead = coeffs_.back();
  std::vector<Rat> out = coeffs_;
  for (Rat& c : out) c /= lead;
  return Poly(std::move(out));
}

Poly Poly::shifted(int n) const {
  if (n < 0) throw std::invalid_argument("shifted: negative power");
  if (coeffs_.empty()) return Poly();
  std::vector<Rat> out(coeffs_.size() + n);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + n);
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& p) {
  std::vector<Rat> out = p.coeffs_;
  for (Rat& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& p) {
  std::vector<Rat> out = p.coeffs_;
  for (Rat& v : out) v *= c;
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::one();
  Poly b = *this;
  while (e != 0) {
    if (e & 1u) out = out * b;
    b = b * b;
    e >>= 1;
  }
  return out;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat c = coeffs_[i];
    if (c == 0) continue;
    const Rat mag = rat_abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) {
      os << rat_str(mag);
      if (i > 0) os << " ";
    }
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace rtmp
