#ifndef SEMILIN_INTERVAL_MATRIX_HPP
#define SEMILIN_INTERVAL_MATRIX_HPP

#include "semilin/interval.hpp"
#include "semilin/matrix.hpp"

namespace semilin {

// An interval of matrices [lo, hi]: the image of a matrix over intervals
// under the isomorphism Mat_nn(I(S)) -> I(Mat_nn(S)).
template <class T>
struct MatrixInterval {
  Matrix<T> lo;
  Matrix<T> hi;
};

// Splits an interval-entry matrix into its lower and upper matrices.
template <class T>
MatrixInterval<T> to_matrix_interval(const Semiring<T>&,
                                     const Matrix<Interval<T>>& a) {
  Matrix<T> lo(a.rows(), a.cols());
  Matrix<T> hi(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      lo.at(i, j) = a.at(i, j).lo;
      hi.at(i, j) = a.at(i, j).hi;
    }
  return {std::move(lo), std::move(hi)};
}

template <class T>
Matrix<Interval<T>> from_matrix_interval(const Semiring<T>& s,
                                         const MatrixInterval<T>& m) {
  detail::require_same_shape(m.lo, m.hi, "from_matrix_interval");
  if (!mat_leq(s, m.lo, m.hi))
    throw std::invalid_argument(
        "from_matrix_interval: lower matrix does not precede upper");
  Matrix<Interval<T>> out(m.lo.rows(), m.lo.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = Interval<T>{m.lo.at(i, j), m.hi.at(i, j)};
  return out;
}

}  // namespace semilin

#endif  // SEMILIN_INTERVAL_MATRIX_HPP
