#pragma once

#include "rtmp/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace rtmp {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree order with no trailing zeros. The zero polynomial is the
// empty coefficient list and reports degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending_coeffs);
  Poly(std::initializer_list<Rat> ascending_coeffs);

  static Poly zero() { return Poly(); }
  static Poly one();
  static Poly x();
  static Poly constant(const Rat& c);
  // x - r for r in the coefficient field.
  static Poly linear_root(const Rat& r);
  static Poly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero outside the stored range.
  Rat coeff(int i) const;
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  double operator()(double x) const;
  long double eval_long(long double x) const;

  Poly derivative() const;
  Poly monic() const;
  // Multiplies by x^n.
  Poly shifted(int n) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned e) const;

  // Deterministic human-readable form, e.g. "x^2 - 1/2 x + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace rtmp
