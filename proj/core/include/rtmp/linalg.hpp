#pragma once

#include "rtmp/rat.hpp"

#include <vector>

namespace rtmp {

// Dense rational matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Exact Gaussian elimination with partial (first nonzero) pivoting.
// Throws on singular systems.
std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> b);

Rat determinant(RatMatrix a);

// A * x for a square or rectangular A.
std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace rtmp
