// Shared helpers for the unit tests. Oracles here avoid the library's
// spectral code wherever the property under test depends on it.

#pragma once

#include "qsuff/linalg.hpp"
#include "qsuff/quantum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace qsuff::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  EXPECT_EQ(a.rows(), b.rows());
  EXPECT_EQ(a.cols(), b.cols());
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

inline Matrix random_hermitian(std::size_t d, Rng& rng) {
  const Matrix g = gaussian(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()),
                          static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

inline Matrix ket_bra(std::size_t d, std::size_t i, std::size_t j) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_z() { return diag({1.0, -1.0}); }

inline Matrix plus_state() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

/// 1/2 (|00><00| + |11><11|)_AB (x) |0><0|_C.
inline Matrix correlated_ab_state() {
  Matrix ab = diag({0.5, 0.0, 0.0, 0.5});
  return kron(ab, diag({1.0, 0.0}));
}

}  // namespace qsuff::testing
