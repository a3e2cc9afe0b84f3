#ifndef SEMILIN_ORACLE_HPP
#define SEMILIN_ORACLE_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "semilin/bellman.hpp"
#include "semilin/closure.hpp"
#include "semilin/matrix.hpp"
#include "semilin/semiring.hpp"

// Independent, deliberately slow reference computations. These share no
// kernels with the escalator closure, so agreement is evidence, not
// tautology.

namespace semilin {

struct OracleReport {
  std::string subject;
  std::size_t checked = 0;
  double max_disc = 0.0;  // 0 means exact agreement so far
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
  std::string line() const {
    char disc[32];
    if (max_disc == 0.0)
      std::snprintf(disc, sizeof(disc), "exact");
    else
      std::snprintf(disc, sizeof(disc), "%.3g", max_disc);
    return "subject=" + subject + " checked=" + std::to_string(checked) +
           " max_disc=" + disc + " failures=" + std::to_string(failures);
  }
};

// Partial sum E ⊕ A ⊕ ... ⊕ A^k of the closure series.
template <class T>
Matrix<T> truncated_series(const Semiring<T>& s, const Matrix<T>& a,
                           std::size_t k) {
  if (!a.square())
    throw std::invalid_argument("truncated_series: matrix must be square");
  Matrix<T> sum = Matrix<T>::identity(s, a.rows());
  Matrix<T> power = Matrix<T>::identity(s, a.rows());
  for (std::size_t i = 1; i <= k; ++i) {
    power = mat_mul(s, power, a);
    sum = mat_add(s, sum, power);
  }
  return sum;
}

struct GaussOutcome {
  std::optional<Matrix<double>> value;
  bool divergent = false;
  bool ok() const { return value.has_value(); }
};

// Classical (I - A)^-1 by Gauss-Jordan elimination with partial pivoting
// over ordinary reals; the independent oracle for the rplus closure.
// Divergent when a pivot collapses or a result entry goes negative, both
// signs of spectral radius >= 1.
inline GaussOutcome gauss_closure(const Matrix<double>& a) {
  if (!a.square())
    throw std::invalid_argument("gauss_closure: matrix must be square");
  const std::size_t n = a.rows();
  Matrix<double> m(n, n);
  Matrix<double> inv(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = (i == j ? 1.0 : 0.0) - a.at(i, j);
    inv.at(i, i) = 1.0;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m.at(r, col)) > std::fabs(m.at(piv, col))) piv = r;
    if (std::fabs(m.at(piv, col)) < 1e-12) return {std::nullopt, true};
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const double d = m.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m.at(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (inv.at(i, j) < -1e-9) return {std::nullopt, true};
  return {std::move(inv), false};
}

// In-place algebraic-path closure (Floyd-Warshall sweep with pivot stars),
// for idempotent carriers whose pivots have defined stars.
template <class T>
ClosureOutcome<T> fw_closure(const Semiring<T>& s, const Matrix<T>& a) {
  if (!a.square())
    throw std::invalid_argument("fw_closure: matrix must be square");
  const std::size_t n = a.rows();
  Matrix<T> w = a;
  for (std::size_t k = 0; k < n; ++k) {
    auto pivot = s.star(w.at(k, k));
    if (!pivot) return {std::nullopt, UndefinedAt{k + 1, k + 1}};
    const T c = *pivot;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        w.at(i, j) =
            s.add(w.at(i, j), s.mul(s.mul(w.at(i, k), c), w.at(k, j)));
  }
  return {mat_add(s, Matrix<T>::identity(s, n), w), std::nullopt};
}

// All exact solutions of X = AX ⊕ B over a finite carrier.
template <class T>
std::vector<Matrix<T>> enumerate_solutions(const Semiring<T>& s,
                                           const BellmanProblem<T>& p,
                                           std::size_t max_candidates =
                                               1000000) {
  if (!s.carrier)
    throw std::invalid_argument("enumerate_solutions requires a finite carrier");
  const std::vector<T>& carrier = *s.carrier;
  const std::size_t cells = p.b.rows() * p.b.cols();
  double space = 1.0;
  for (std::size_t i = 0; i < cells; ++i) space *= carrier.size();
  if (space > static_cast<double>(max_candidates))
    throw std::invalid_argument("enumerate_solutions: candidate space too large");

  std::vector<Matrix<T>> out;
  std::vector<std::size_t> odo(cells, 0);
  Matrix<T> x(p.b.rows(), p.b.cols(), carrier[0]);
  bool done = false;
  while (!done) {
    for (std::size_t i = 0; i < cells; ++i)
      x.at(i / p.b.cols(), i % p.b.cols()) = carrier[odo[i]];
    if (mat_eq(s, x, mat_add(s, mat_mul(s, p.a, x), p.b))) out.push_back(x);
    done = true;
    for (std::size_t i = 0; i < cells; ++i) {
      if (++odo[i] < carrier.size()) {
        done = false;
        break;
      }
      odo[i] = 0;
    }
  }
  return out;
}

// Entrywise discrepancy helper for oracle comparisons over real carriers.
inline double max_rel_discrepancy(const Matrix<double>& a,
                                  const Matrix<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double x = a.at(i, j), y = b.at(i, j);
      if (x == y) continue;
      const double scale = std::max({std::fabs(x), std::fabs(y), 1.0});
      worst = std::max(worst, std::fabs(x - y) / scale);
    }
  return worst;
}

}  // namespace semilin

#endif  // SEMILIN_ORACLE_HPP
