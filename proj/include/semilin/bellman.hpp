#ifndef SEMILIN_BELLMAN_HPP
#define SEMILIN_BELLMAN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semilin/closure.hpp"
#include "semilin/interval.hpp"
#include "semilin/interval_matrix.hpp"
#include "semilin/matrix.hpp"
#include "semilin/semiring.hpp"

namespace semilin {

// The discrete stationary Bellman equation X = AX ⊕ B.
template <class T>
struct BellmanProblem {
  Matrix<T> a;  // n x n
  Matrix<T> b;  // n x s

  BellmanProblem(Matrix<T> a_, Matrix<T> b_)
      : a(std::move(a_)), b(std::move(b_)) {
    if (!a.square())
      throw std::invalid_argument("bellman: A must be square, got " +
                                  detail::shape_str(a.rows(), a.cols()));
    if (a.rows() != b.rows())
      throw std::invalid_argument("bellman: row mismatch, A is " +
                                  detail::shape_str(a.rows(), a.cols()) +
                                  ", B is " +
                                  detail::shape_str(b.rows(), b.cols()));
  }
};

template <class T>
struct BellmanSolution {
  Matrix<T> x;             // A* B
  bool residual_ok = false;  // X = AX ⊕ B verified within tolerance
  Matrix<T> closure;       // A*, retained for audits
};

template <class T>
struct SolveOutcome {
  std::optional<BellmanSolution<T>> solution;
  std::optional<UndefinedAt> undefined;
  bool ok() const { return solution.has_value(); }
};

template <class T>
SolveOutcome<T> solve_point(const Semiring<T>& s, const BellmanProblem<T>& p,
                            Split split = Split::scalar_pivot) {
  auto closure = mat_star(s, p.a, split);
  if (!closure.ok()) return {std::nullopt, closure.undefined};
  BellmanSolution<T> sol;
  sol.x = mat_mul(s, *closure.value, p.b);
  sol.residual_ok = mat_eq(s, sol.x, mat_add(s, mat_mul(s, p.a, sol.x), p.b));
  sol.closure = std::move(*closure.value);
  return {std::move(sol), std::nullopt};
}

enum class IntervalEndpoint { lower, upper };

struct IntervalSolveError {
  IntervalEndpoint endpoint;
  UndefinedAt at;
  std::string to_string() const {
    return std::string(endpoint == IntervalEndpoint::lower ? "lower" : "upper") +
           " endpoint closure undefined at " + at.to_string();
  }
};

template <class T>
struct IntervalSolveOutcome {
  std::optional<BellmanSolution<Interval<T>>> solution;
  std::optional<IntervalSolveError> error;
  bool ok() const { return solution.has_value(); }
};

// Interval solve via the two point equations X = L(A)X ⊕ L(B) and
// X = U(A)X ⊕ U(B); equals the direct interval-arithmetic closure entrywise.
template <class T>
IntervalSolveOutcome<T> solve_interval(const Semiring<T>& base,
                                       const BellmanProblem<Interval<T>>& p,
                                       Split split = Split::scalar_pivot) {
  const MatrixInterval<T> a = to_matrix_interval(base, p.a);
  const MatrixInterval<T> b = to_matrix_interval(base, p.b);

  auto lo = solve_point(base, BellmanProblem<T>(a.lo, b.lo), split);
  if (!lo.ok())
    return {std::nullopt,
            IntervalSolveError{IntervalEndpoint::lower, *lo.undefined}};
  auto hi = solve_point(base, BellmanProblem<T>(a.hi, b.hi), split);
  if (!hi.ok())
    return {std::nullopt,
            IntervalSolveError{IntervalEndpoint::upper, *hi.undefined}};

  const Semiring<Interval<T>> ivs = interval_extension(base);
  BellmanSolution<Interval<T>> sol;
  sol.x = from_matrix_interval(
      base, MatrixInterval<T>{lo.solution->x, hi.solution->x});
  sol.closure = from_matrix_interval(
      base, MatrixInterval<T>{lo.solution->closure, hi.solution->closure});
  sol.residual_ok =
      mat_eq(ivs, sol.x, mat_add(ivs, mat_mul(ivs, p.a, sol.x), p.b));
  return {std::move(sol), std::nullopt};
}

struct SampleReport {
  std::size_t trials = 0;
  std::size_t contained = 0;
  std::size_t skipped = 0;
  bool lo_attained = false;
  bool hi_attained = false;
  // Observational only: whether the hull of sampled solutions filled [L, U].
  bool hull_equals_bounds = false;

  bool all_contained() const { return contained + skipped == trials; }
  std::string line() const {
    return "contained=" + std::to_string(contained) + "/" +
           std::to_string(trials) + " skipped=" + std::to_string(skipped) +
           " lo_attained=" + (lo_attained ? "true" : "false") +
           " hi_attained=" + (hi_attained ? "true" : "false");
  }
};

// Monte Carlo probe of the unified solution set Σ(A,B) = {A*B | A ∈ 𝐀, B ∈ 𝐁}.
// Each draw picks matrix entries independently and uniformly inside their
// intervals; draws whose sampled A has undefined closure are skipped, never
// counted as containment failures. Deterministic given rng_seed.
template <class T>
SampleReport sample_unified(const Semiring<T>& base,
                            const BellmanProblem<Interval<T>>& p,
                            std::size_t trials, std::uint64_t rng_seed) {
  if (!base.sample)
    throw std::invalid_argument("sample_unified: semiring has no sampler");
  auto algebraic = solve_interval(base, p);
  if (!algebraic.ok())
    throw std::invalid_argument("sample_unified: " +
                                algebraic.error->to_string());
  const MatrixInterval<T> bounds =
      to_matrix_interval(base, algebraic.solution->x);

  SampleReport rep;
  rep.trials = trials;

  std::optional<Matrix<T>> hull_lo, hull_hi;
  auto absorb = [&](const Matrix<T>& x) {
    if (!hull_lo) {
      hull_lo = x;
      hull_hi = x;
      return;
    }
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        if (base.leq(x.at(i, j), hull_lo->at(i, j)))
          hull_lo->at(i, j) = x.at(i, j);
        if (base.leq(hull_hi->at(i, j), x.at(i, j)))
          hull_hi->at(i, j) = x.at(i, j);
      }
  };

  auto draw = [&](const Matrix<Interval<T>>& iv, std::mt19937_64& rng) {
    Matrix<T> out(iv.rows(), iv.cols());
    for (std::size_t i = 0; i < iv.rows(); ++i)
      for (std::size_t j = 0; j < iv.cols(); ++j)
        out.at(i, j) = base.sample(iv.at(i, j).lo, iv.at(i, j).hi, rng);
    return out;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    // Per-draw generator keyed by trial index: the report does not depend
    // on evaluation order.
    std::mt19937_64 rng(rng_seed * 0x9E3779B97F4A7C15ull + t);
    const Matrix<T> a = draw(p.a, rng);
    const Matrix<T> b = draw(p.b, rng);
    auto point = solve_point(base, BellmanProblem<T>(a, b));
    if (!point.ok()) {
      ++rep.skipped;
      continue;
    }
    const Matrix<T>& x = point.solution->x;
    if (mat_leq_or_eq(base, bounds.lo, x) && mat_leq_or_eq(base, x, bounds.hi))
      ++rep.contained;
    absorb(x);
  }

  // Bound attainment: the endpoint draws L(A),L(B) and U(A),U(B) must land
  // exactly on the interval bounds.
  const MatrixInterval<T> a = to_matrix_interval(base, p.a);
  const MatrixInterval<T> b = to_matrix_interval(base, p.b);
  auto at_lo = solve_point(base, BellmanProblem<T>(a.lo, b.lo));
  auto at_hi = solve_point(base, BellmanProblem<T>(a.hi, b.hi));
  rep.lo_attained = at_lo.ok() && mat_eq(base, at_lo.solution->x, bounds.lo);
  rep.hi_attained = at_hi.ok() && mat_eq(base, at_hi.solution->x, bounds.hi);
  rep.hull_equals_bounds = hull_lo && mat_eq(base, *hull_lo, bounds.lo) &&
                           mat_eq(base, *hull_hi, bounds.hi);
  return rep;
}

struct LeastCheckReport {
  std::size_t candidates = 0;
  std::size_t solutions = 0;
  bool algebraic_in_set = false;
  bool algebraic_is_least = false;
  bool ok() const {
    return solutions > 0 && algebraic_in_set && algebraic_is_least;
  }
};

// Exhaustively verifies on a finite carrier that A*B solves X = AX ⊕ B and
// precedes every other solution.
template <class T>
LeastCheckReport least_check(const Semiring<T>& s, const BellmanProblem<T>& p,
                             std::size_t max_candidates = 1000000) {
  if (!s.carrier)
    throw std::invalid_argument("least_check requires a finite carrier");
  const std::vector<T>& carrier = *s.carrier;
  const std::size_t cells = p.b.rows() * p.b.cols();
  double space = 1.0;
  for (std::size_t i = 0; i < cells; ++i) space *= carrier.size();
  if (space > static_cast<double>(max_candidates))
    throw std::invalid_argument("least_check: candidate space too large");

  auto point = solve_point(s, p);
  if (!point.ok())
    throw std::invalid_argument("least_check: closure undefined at " +
                                point.undefined->to_string());
  const Matrix<T>& least = point.solution->x;

  LeastCheckReport rep;
  rep.algebraic_is_least = true;
  std::vector<std::size_t> odo(cells, 0);
  Matrix<T> x(p.b.rows(), p.b.cols(), carrier[0]);
  bool done = false;
  while (!done) {
    for (std::size_t i = 0; i < cells; ++i)
      x.at(i / p.b.cols(), i % p.b.cols()) = carrier[odo[i]];
    ++rep.candidates;
    if (mat_eq(s, x, mat_add(s, mat_mul(s, p.a, x), p.b))) {
      ++rep.solutions;
      if (mat_eq(s, x, least)) rep.algebraic_in_set = true;
      if (!mat_leq(s, least, x)) rep.algebraic_is_least = false;
    }
    done = true;
    for (std::size_t i = 0; i < cells; ++i) {
      if (++odo[i] < carrier.size()) {
        done = false;
        break;
      }
      odo[i] = 0;
    }
  }
  return rep;
}

}  // namespace semilin

#endif  // SEMILIN_BELLMAN_HPP
