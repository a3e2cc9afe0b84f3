#ifndef SEMILIN_AXIOMS_HPP
#define SEMILIN_AXIOMS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semilin/semiring.hpp"

namespace semilin {

struct AxiomViolation {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::size_t checks = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct AxiomCheckOptions {
  // Triples are exhausted when |samples|^3 fits the budget, otherwise a
  // seeded uniform draw of this many index triples is used.
  std::size_t max_triples = 200000;
  std::size_t max_pairs = 1u << 20;
  std::size_t max_violations = 64;
  std::uint64_t seed = 0x5eed;
};

// Validates the positive-semiring axioms plus the closure identities on
// star's domain over the given sample set. Violations are data, not errors.
template <class T>
AxiomReport check_axioms(const Semiring<T>& s, const std::vector<T>& samples,
                         AxiomCheckOptions opts = {}) {
  AxiomReport rep;
  if (samples.empty())
    throw std::invalid_argument("check_axioms: empty sample set");

  auto show = [&](const T& v) {
    return s.format ? s.format(v) : std::string("<value>");
  };
  auto fail = [&](const char* axiom, std::string detail) {
    if (rep.violations.size() < opts.max_violations)
      rep.violations.push_back({axiom, std::move(detail)});
  };
  auto expect_eq = [&](const char* axiom, const T& got, const T& want,
                       std::string detail) {
    ++rep.checks;
    if (!s.eq(got, want))
      fail(axiom, detail + ": got " + show(got) + ", want " + show(want));
  };
  auto expect = [&](const char* axiom, bool cond, std::string detail) {
    ++rep.checks;
    if (!cond) fail(axiom, std::move(detail));
  };

  expect("zero_one_distinct", !s.eq(s.zero, s.one), "0 = 1");
  if (auto z = s.star(s.zero))
    expect_eq("star_of_zero", *z, s.one, "0*");
  else
    expect("star_of_zero", false, "0* undefined");

  // Unary axioms.
  for (const T& x : samples) {
    expect_eq("add_neutral", s.add(s.zero, x), x, "0 + " + show(x));
    expect_eq("mul_left_neutral", s.mul(s.one, x), x, "1 * " + show(x));
    expect_eq("mul_right_neutral", s.mul(x, s.one), x, show(x) + " * 1");
    expect_eq("annihilation", s.mul(s.zero, x), s.zero, "0 * " + show(x));
    expect_eq("annihilation", s.mul(x, s.zero), s.zero, show(x) + " * 0");
    expect("zero_least", s.leq(s.zero, x), "not 0 <= " + show(x));
    if (s.idempotent)
      expect_eq("add_idempotent", s.add(x, x), x, show(x) + " + " + show(x));
    if (auto st = s.star(x)) {
      expect_eq("star_identity", s.add(s.one, s.mul(*st, x)), *st,
                "1 + " + show(x) + "* . " + show(x));
      expect_eq("star_identity", s.add(s.one, s.mul(x, *st)), *st,
                "1 + " + show(x) + " . " + show(x) + "*");
    }
  }

  std::mt19937_64 rng(opts.seed);
  const std::size_t n = samples.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  // Binary axioms.
  auto check_pair = [&](const T& x, const T& y) {
    expect_eq("add_commutative", s.add(x, y), s.add(y, x),
              show(x) + " + " + show(y));
    if (s.idempotent) {
      const T sup = s.add(x, y);
      expect("add_is_upper_bound",
             s.leq(x, sup) && s.leq(y, sup),
             "sup{" + show(x) + "," + show(y) + "}");
    }
    auto sx = s.star(x);
    auto sy = s.star(y);
    if (sx && sy && s.leq(x, y))
      expect("star_monotone", s.leq_or_eq(*sx, *sy),
             show(x) + "* vs " + show(y) + "*");
  };
  if (n * n <= opts.max_pairs) {
    for (const T& x : samples)
      for (const T& y : samples) check_pair(x, y);
  } else {
    for (std::size_t t = 0; t < opts.max_pairs; ++t)
      check_pair(samples[pick(rng)], samples[pick(rng)]);
  }

  // Ternary axioms.
  auto check_triple = [&](const T& x, const T& y, const T& z) {
    expect_eq("add_associative", s.add(s.add(x, y), z), s.add(x, s.add(y, z)),
              show(x) + "," + show(y) + "," + show(z));
    expect_eq("mul_associative", s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z)),
              show(x) + "," + show(y) + "," + show(z));
    expect_eq("left_distributive", s.mul(x, s.add(y, z)),
              s.add(s.mul(x, y), s.mul(x, z)),
              show(x) + "(" + show(y) + "+" + show(z) + ")");
    expect_eq("right_distributive", s.mul(s.add(y, z), x),
              s.add(s.mul(y, x), s.mul(z, x)),
              "(" + show(y) + "+" + show(z) + ")" + show(x));
    if (s.leq(x, y)) {
      expect("order_add_monotone", s.leq_or_eq(s.add(x, z), s.add(y, z)),
             show(x) + "+" + show(z) + " vs " + show(y) + "+" + show(z));
      expect("order_mul_monotone", s.leq_or_eq(s.mul(x, z), s.mul(y, z)),
             show(x) + "." + show(z) + " vs " + show(y) + "." + show(z));
      expect("order_mul_monotone", s.leq_or_eq(s.mul(z, x), s.mul(z, y)),
             show(z) + "." + show(x) + " vs " + show(z) + "." + show(y));
    }
    if (s.idempotent && s.leq(x, z) && s.leq(y, z))
      expect("add_is_least_upper_bound", s.leq_or_eq(s.add(x, y), z),
             show(x) + "+" + show(y) + " vs " + show(z));
  };
  if (n * n * n <= opts.max_triples) {
    for (const T& x : samples)
      for (const T& y : samples)
        for (const T& z : samples) check_triple(x, y, z);
  } else {
    for (std::size_t t = 0; t < opts.max_triples; ++t)
      check_triple(samples[pick(rng)], samples[pick(rng)],
                   samples[pick(rng)]);
  }

  return rep;
}

}  // namespace semilin

#endif  // SEMILIN_AXIOMS_HPP
