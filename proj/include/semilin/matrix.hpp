#ifndef SEMILIN_MATRIX_HPP
#define SEMILIN_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilin/semiring.hpp"

namespace semilin {

// Dense row-major matrix over an arbitrary semiring carrier.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("matrix dimensions must be positive");
  }

  static Matrix zeros(const Semiring<T>& s, std::size_t rows,
                      std::size_t cols) {
    return Matrix(rows, cols, s.zero);
  }

  static Matrix identity(const Semiring<T>& s, std::size_t n) {
    Matrix e(n, n, s.zero);
    for (std::size_t i = 0; i < n; ++i) e.at(i, i) = s.one;
    return e;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<T>& data() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t m,
               std::size_t n) const {
    Matrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
  }

  void paste(std::size_t r0, std::size_t c0, const Matrix& src) {
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j)
        at(r0 + i, c0 + j) = src.at(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline std::string shape_str(std::size_t m, std::size_t n) {
  return std::to_string(m) + "x" + std::to_string(n);
}

template <class T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                shape_str(a.rows(), a.cols()) + " vs " +
                                shape_str(b.rows(), b.cols()));
}

}  // namespace detail

template <class T>
Matrix<T> mat_add(const Semiring<T>& s, const Matrix<T>& a,
                  const Matrix<T>& b) {
  detail::require_same_shape(a, b, "mat_add");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = s.add(a.at(i, j), b.at(i, j));
  return out;
}

// Fixed k-ascending reduction order keeps rplus runs reproducible.
template <class T>
Matrix<T> mat_mul(const Semiring<T>& s, const Matrix<T>& a,
                  const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: shape mismatch " +
                                detail::shape_str(a.rows(), a.cols()) +
                                " vs " + detail::shape_str(b.rows(), b.cols()));
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = s.zero;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = s.add(acc, s.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

template <class T>
bool mat_leq(const Semiring<T>& s, const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "mat_leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!s.leq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

template <class T>
bool mat_eq(const Semiring<T>& s, const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!s.eq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

template <class T>
bool mat_leq_or_eq(const Semiring<T>& s, const Matrix<T>& a,
                   const Matrix<T>& b) {
  detail::require_same_shape(a, b, "mat_leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a.at(i, j);
      const T& y = b.at(i, j);
      if (!s.leq(x, y) && !s.eq(x, y)) return false;
    }
  return true;
}

}  // namespace semilin

#endif  // SEMILIN_MATRIX_HPP
