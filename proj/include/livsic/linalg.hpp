#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "livsic/error.hpp"

namespace livsic {

/// Dense row-major square matrix of doubles.
class Matrix {
 public:
  explicit Matrix(std::size_t n = 0) : n_(n), data_(n * n, 0.0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] std::vector<double> apply(std::span<const double> v) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct PerronData {
  double eigenvalue = 0.0;
  std::vector<double> vector;  ///< positive, entries sum to 1
  std::size_t iterations = 0;
};

/// Leading eigenpair of a non-negative primitive matrix by power iteration
/// from the all-ones vector. Converged when the sup-norm change of the
/// normalized iterate drops below `tol` relative to its largest entry.
inline PerronData perron_vector(const Matrix& m, double tol = 1e-14, std::size_t max_steps = 100000) {
  const std::size_t n = m.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  for (std::size_t step = 1; step <= max_steps; ++step) {
    auto w = m.apply(v);
    double sum = 0.0;
    for (double x : w) sum += x;
    if (!(sum > 0.0) || !std::isfinite(sum)) break;
    double change = 0.0;
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= sum;
      change = std::max(change, std::abs(w[i] - v[i]));
      largest = std::max(largest, w[i]);
    }
    v = std::move(w);
    if (change <= tol * largest) {
      // One more product gives the eigenvalue at the converged vector.
      const auto mv = m.apply(v);
      double total = 0.0;
      for (double x : mv) total += x;
      return PerronData{total, v, step};
    }
  }
  throw Error(Errc::non_convergent_eigensolve,
              "power iteration did not reach " + std::to_string(tol) + " in " + std::to_string(max_steps) + " steps");
}

inline double spectral_radius(const Matrix& m) { return perron_vector(m).eigenvalue; }

}  // namespace livsic
