#pragma once

#include "rtmp/poly.hpp"

#include <vector>

namespace rtmp {

// Exact truncated moment sequence gamma_0..gamma_d.
class MomentSequence {
 public:
  MomentSequence() = default;
  explicit MomentSequence(std::vector<Rat> values);

  int degree() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](int i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  // Truncation to gamma_0..gamma_d.
  MomentSequence truncated(int d) const;
  // Appends one more moment.
  MomentSequence extended(const Rat& next) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  std::vector<Rat> values_;
};

// L_gamma(f) = sum_i f_i * gamma_i. Throws when deg f exceeds the data.
Rat riesz(const MomentSequence& gamma, const Poly& f);

// Localized sequence (f * gamma)_i = L_gamma(f * x^i) for
// i = 0..degree - deg f. Throws when deg f exceeds the data.
MomentSequence localize(const MomentSequence& gamma, const Poly& f);

}  // namespace rtmp
