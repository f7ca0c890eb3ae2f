#include "rtmp/moments.hpp"

#include <stdexcept>

namespace rtmp {

MomentSequence::MomentSequence(std::vector<Rat> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("MomentSequence: needs gamma_0");
}

MomentSequence MomentSequence::truncated(int d) const {
  if (d < 0 || d > degree()) throw std::invalid_argument("truncated: bad degree");
  return MomentSequence(std::vector<Rat>(values_.begin(), values_.begin() + d + 1));
}

MomentSequence MomentSequence::extended(const Rat& next) const {
  std::vector<Rat> out = values_;
  out.push_back(next);
  return MomentSequence(std::move(out));
}

Rat riesz(const MomentSequence& gamma, const Poly& f) {
  if (f.degree() > gamma.degree())
    throw std::invalid_argument("riesz: polynomial degree exceeds moment data");
  Rat acc = 0;
  for (int i = 0; i <= f.degree(); ++i) acc += f.coeff(i) * gamma[i];
  return acc;
}

MomentSequence localize(const MomentSequence& gamma, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("localize: zero polynomial");
  if (f.degree() > gamma.degree())
    throw std::invalid_argument("localize: polynomial degree exceeds moment data");
  const int len = gamma.degree() - f.degree() + 1;
  std::vector<Rat> out(len);
  for (int i = 0; i < len; ++i) {
    Rat acc = 0;
    for (int j = 0; j <= f.degree(); ++j) acc += f.coeff(j) * gamma[i + j];
    out[i] = acc;
  }
  return MomentSequence(std::move(out));
}

}  // namespace rtmp
