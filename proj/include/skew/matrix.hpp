#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skew/monomial.hpp"

namespace skew {

// Dense row-major matrix over a division ring. The unit is stored because
// some scalar types cannot produce it from nothing.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, S one)
      : rows_(rows), cols_(cols), one_(std::move(one)), data_(rows * cols, S{}) {}

  static Matrix identity(std::size_t n, const S& one) {
    Matrix m(n, n, one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& one() const { return one_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, one_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  S one_{};
  std::vector<S> data_;
};

template <class S>
struct LinearSolution {
  std::optional<std::vector<S>> solution;
  // Basis of the solutions of the homogeneous system.
  std::vector<std::vector<S>> nullspace;
  std::size_t rank = 0;
};

namespace detail {

// Gauss-Jordan on the rows of M, one equation per row, with the unknowns
// multiplying the coefficients on the right (coeff_left = true: sum_c M_rc z_c)
// or on the left (coeff_left = false: sum_c z_c M_rc). Rows are scaled on the
// matching side so that every step is an equivalence. The last `rhs` columns
// are right-hand sides and never chosen as pivots. Returns pivot columns.
template <class S>
std::vector<std::size_t> gauss_jordan(Matrix<S>& m, std::size_t rhs, bool coeff_left) {
  auto scale = [coeff_left](const S& lambda, const S& x) { return coeff_left ? lambda * x : x * lambda; };
  const std::size_t vars = m.cols() - rhs;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < vars && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    const S inv = m(row, c).inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) = scale(inv, m(row, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const S f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (!m(row, k).is_zero()) m(r, k) -= scale(f, m(row, k));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class S>
LinearSolution<S> solve_equations(const Matrix<S>& coeffs, const std::vector<S>& b, bool coeff_left) {
  if (b.size() != coeffs.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t vars = coeffs.cols();
  Matrix<S> m(coeffs.rows(), vars + 1, coeffs.one());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    for (std::size_t c = 0; c < vars; ++c) m(r, c) = coeffs(r, c);
    m(r, vars) = b[r];
  }
  const auto pivots = gauss_jordan(m, 1, coeff_left);
  LinearSolution<S> out;
  out.rank = pivots.size();

  std::vector<bool> is_pivot(vars, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < vars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(vars, S{});
    v[f] = coeffs.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    out.nullspace.push_back(std::move(v));
  }

  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (!m(r, vars).is_zero()) return out;
  }
  std::vector<S> z(vars, S{});
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = m(r, vars);
  out.solution = std::move(z);
  return out;
}

}  // namespace detail

// Solves A z = b for a column z (unknowns to the right of the entries).
template <class S>
LinearSolution<S> solve_col_system(const Matrix<S>& a, const std::vector<S>& b) {
  return detail::solve_equations(a, b, true);
}

// Solves z A = b for a row z (unknowns to the left of the entries).
template <class S>
LinearSolution<S> solve_row_system(const Matrix<S>& a, const std::vector<S>& b) {
  return detail::solve_equations(a.transpose(), b, false);
}

// Dimension of the span of the rows of A, with scalars acting on the left
// (Side::left) or on the right (Side::right).
template <class S>
std::size_t rank(const Matrix<S>& a, Side side) {
  Matrix<S> m = a;
  return detail::gauss_jordan(m, 0, side == Side::left).size();
}

template <class S>
std::vector<S> mul_col(const Matrix<S>& a, const std::vector<S>& z) {
  std::vector<S> out(a.rows(), S{});
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * z[c];
  }
  return out;
}

template <class S>
std::vector<S> mul_row(const std::vector<S>& z, const Matrix<S>& a) {
  std::vector<S> out(a.cols(), S{});
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out[c] += z[r] * a(r, c);
  }
  return out;
}

}  // namespace skew
