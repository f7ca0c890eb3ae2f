#include "rtmp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rtmp {

std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::runtime_error("solve_linear: singular system");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat m = a(r, col) / a(col, col);
      a(r, col) = 0;
      for (int j = col + 1; j < n; ++j) a(r, j) -= m * a(col, j);
      b[r] -= m * b[col];
    }
  }

  std::vector<Rat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

Rat determinant(RatMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: not square");
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat m = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= m * a(col, j);
    }
  }
  return det;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<Rat> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Rat acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace rtmp
