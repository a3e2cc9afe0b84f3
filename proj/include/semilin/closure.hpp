#ifndef SEMILIN_CLOSURE_HPP
#define SEMILIN_CLOSURE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "semilin/matrix.hpp"
#include "semilin/semiring.hpp"

namespace semilin {

enum class Split {
  scalar_pivot,  // k = 1 at every level, a Gauss-Jordan-style sweep
  balanced,      // k = floor(n/2) at every level
};

// Position (1-based, in the coordinates of the original matrix) of a scalar
// whose star is undefined.
struct UndefinedAt {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

template <class T>
struct ClosureOutcome {
  std::optional<Matrix<T>> value;
  std::optional<UndefinedAt> undefined;
  bool ok() const { return value.has_value(); }
};

namespace detail {

// Escalator recursion. `base` is the diagonal offset of this block in the
// original matrix; pivots encountered here sit on original diagonal
// positions base+i, which is what UndefinedAt reports.
template <class T>
ClosureOutcome<T> star_block(const Semiring<T>& s, const Matrix<T>& a,
                             Split split, std::size_t base) {
  const std::size_t n = a.rows();
  if (n == 1) {
    auto st = s.star(a.at(0, 0));
    if (!st) return {std::nullopt, UndefinedAt{base + 1, base + 1}};
    Matrix<T> out(1, 1);
    out.at(0, 0) = *st;
    return {std::move(out), std::nullopt};
  }

  const std::size_t k = split == Split::scalar_pivot ? 1 : n / 2;
  const std::size_t r = n - k;
  const Matrix<T> a11 = a.block(0, 0, k, k);
  const Matrix<T> a12 = a.block(0, k, k, r);
  const Matrix<T> a21 = a.block(k, 0, r, k);
  const Matrix<T> a22 = a.block(k, k, r, r);

  auto s11 = star_block(s, a11, split, base);
  if (!s11.ok()) return s11;

  const Matrix<T> t12 = mat_mul(s, *s11.value, a12);  // A11* A12
  const Matrix<T> t21 = mat_mul(s, a21, *s11.value);  // A21 A11*
  const Matrix<T> d = mat_add(s, a22, mat_mul(s, a21, t12));

  auto ds = star_block(s, d, split, base + k);
  if (!ds.ok()) return ds;

  const Matrix<T> b12 = mat_mul(s, t12, *ds.value);  // A11* A12 D*
  const Matrix<T> b21 = mat_mul(s, *ds.value, t21);  // D* A21 A11*
  const Matrix<T> b11 = mat_add(s, *s11.value, mat_mul(s, b12, t21));

  Matrix<T> out(n, n);
  out.paste(0, 0, b11);
  out.paste(0, k, b12);
  out.paste(k, 0, b21);
  out.paste(k, k, *ds.value);
  return {std::move(out), std::nullopt};
}

}  // namespace detail

// Matrix closure A* via the block escalator recursion. O(n^3) scalar
// operations for either split. No partial matrix is returned on failure.
template <class T>
ClosureOutcome<T> mat_star(const Semiring<T>& s, const Matrix<T>& a,
                           Split split = Split::scalar_pivot) {
  if (!a.square())
    throw std::invalid_argument("mat_star: matrix must be square, got " +
                                detail::shape_str(a.rows(), a.cols()));
  return detail::star_block(s, a, split, 0);
}

// Square-matrix semiring Mat_nn(S); star drops undefined coordinates.
template <class T>
Semiring<Matrix<T>> matrix_semiring(const Semiring<T>& base, std::size_t n) {
  using M = Matrix<T>;
  Semiring<M> s;
  s.name = "mat" + std::to_string(n) + "(" + base.name + ")";
  s.kind = "matrix";
  s.zero = M::zeros(base, n, n);
  s.one = M::identity(base, n);
  s.add = [base](const M& a, const M& b) { return mat_add(base, a, b); };
  s.mul = [base](const M& a, const M& b) { return mat_mul(base, a, b); };
  s.leq = [base](const M& a, const M& b) { return mat_leq(base, a, b); };
  s.star = [base](const M& a) -> std::optional<M> {
    auto out = mat_star(base, a);
    if (!out.ok()) return std::nullopt;
    return std::move(*out.value);
  };
  s.eq = [base](const M& a, const M& b) { return mat_eq(base, a, b); };
  s.contains = [base](const M& a) {
    for (const T& v : a.data())
      if (!base.contains(v)) return false;
    return true;
  };
  s.format = [](const M& a) {
    return "matrix(" + detail::shape_str(a.rows(), a.cols()) + ")";
  };
  s.idempotent = base.idempotent;
  s.eq_tolerance = base.eq_tolerance;
  return s;
}

// Scalar-operation instrumentation, used to observe the O(n^3) growth of
// the closure.
struct OpCount {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t stars = 0;
  std::uint64_t total() const { return adds + muls + stars; }
};

template <class T>
Semiring<T> with_counter(const Semiring<T>& base,
                         std::shared_ptr<OpCount> count) {
  Semiring<T> s = base;
  auto add = base.add;
  auto mul = base.mul;
  auto star = base.star;
  s.add = [add, count](const T& x, const T& y) {
    ++count->adds;
    return add(x, y);
  };
  s.mul = [mul, count](const T& x, const T& y) {
    ++count->muls;
    return mul(x, y);
  };
  s.star = [star, count](const T& x) {
    ++count->stars;
    return star(x);
  };
  return s;
}

}  // namespace semilin

#endif  // SEMILIN_CLOSURE_HPP
