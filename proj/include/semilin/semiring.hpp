#ifndef SEMILIN_SEMIRING_HPP
#define SEMILIN_SEMIRING_HPP

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace semilin {

// A positive partially ordered semiring with a partial closure operation.
// All operations are pure; descriptors are immutable after construction and
// safe to share across threads.
template <class T>
struct Semiring {
  std::string name;   // full instance string, e.g. "maxmin:0:10"
  std::string kind;   // base kind token, e.g. "maxmin"
  T zero{};
  T one{};
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  std::function<bool(const T&, const T&)> leq;
  // Partial closure: nullopt means x lies outside the domain of *.
  std::function<std::optional<T>(const T&)> star;
  std::function<bool(const T&, const T&)> eq;
  std::function<bool(const T&)> contains;
  std::function<std::string(const T&)> format;
  bool idempotent = false;
  double eq_tolerance = 0.0;  // relative; 0 for exact instances
  std::optional<std::vector<T>> carrier;  // set only for finite instances
  // Uniform draw from the order interval [lo, hi]; set for scalar instances.
  std::function<T(const T&, const T&, std::mt19937_64&)> sample;

  bool leq_or_eq(const T& a, const T& b) const { return leq(a, b) || eq(a, b); }
};

using ScalarSemiring = Semiring<double>;

inline std::string format_scalar(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool approx_eq(double x, double y, double rel, double abs) {
  if (x == y) return true;
  if (std::isinf(x) || std::isinf(y)) return false;
  const double diff = std::fabs(x - y);
  const double scale = std::max(std::fabs(x), std::fabs(y));
  return diff <= std::max(abs, rel * scale);
}

inline ScalarSemiring finite_chain_instance(std::string name, std::string kind,
                                            std::vector<double> members) {
  ScalarSemiring s;
  s.name = std::move(name);
  s.kind = std::move(kind);
  s.zero = members.front();
  s.one = members.back();
  s.add = [](const double& x, const double& y) { return std::max(x, y); };
  s.mul = [](const double& x, const double& y) { return std::min(x, y); };
  s.leq = [](const double& x, const double& y) { return x <= y; };
  const double one = members.back();
  s.star = [one](const double& x) -> std::optional<double> {
    return std::max(one, x);  // 1 ⊕ x, which collapses the whole series
  };
  s.eq = [](const double& x, const double& y) { return x == y; };
  s.contains = [members](const double& x) {
    for (double m : members)
      if (m == x) return true;
    return false;
  };
  s.format = format_scalar;
  s.idempotent = true;
  s.carrier = members;
  s.sample = [members](const double& lo, const double& hi,
                       std::mt19937_64& rng) {
    std::vector<double> hits;
    for (double m : members)
      if (lo <= m && m <= hi) hits.push_back(m);
    if (hits.empty()) throw std::invalid_argument("empty sampling interval");
    std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
    return hits[pick(rng)];
  };
  return s;
}

// Uniform over the order interval. Both total orders used by the real
// instances coincide with a numeric interval, so sample on [min, max].
inline double sample_real(double lo, double hi, std::mt19937_64& rng) {
  if (lo == hi) return lo;
  const double a = std::min(lo, hi), b = std::max(lo, hi);
  if (std::isinf(a) || std::isinf(b)) {
    // Unbounded order interval: fall back to drawing one of the endpoints.
    std::bernoulli_distribution coin(0.5);
    return coin(rng) ? lo : hi;
  }
  std::uniform_real_distribution<double> u(a, b);
  return u(rng);
}

inline double parse_extended(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return kInf;
  if (tok == "-inf") return -kInf;
  std::size_t pos = 0;
  double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("bad number: " + tok);
  return v;
}

}  // namespace detail

// Builds one of the shipped semiring instances:
//   rplus | maxplus | maxplus_completed | minplus | boolean
//   maxmin:a:b   (extended reals allowed, a < b)
//   chain:k      (k >= 2)
// tolerance_override replaces the relative comparison tolerance of rplus.
inline ScalarSemiring make_instance(
    const std::string& spec,
    std::optional<double> tolerance_override = std::nullopt) {
  using detail::kInf;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const std::string& kind = parts[0];

  ScalarSemiring s;
  s.name = spec;
  s.kind = kind;
  s.format = format_scalar;

  if (kind == "rplus") {
    if (parts.size() != 1) throw std::invalid_argument("rplus takes no parameters");
    const double rel = tolerance_override.value_or(1e-9);
    const double abs = 1e-12;
    s.zero = 0.0;
    s.one = 1.0;
    s.add = [](const double& x, const double& y) { return x + y; };
    s.mul = [](const double& x, const double& y) { return x * y; };
    s.leq = [](const double& x, const double& y) { return x <= y; };
    // Strict domain test: values just below 1 legitimately yield huge
    // closures; no tolerance band and no clamping.
    s.star = [](const double& x) -> std::optional<double> {
      if (x < 1.0) return 1.0 / (1.0 - x);
      return std::nullopt;
    };
    s.eq = [rel, abs](const double& x, const double& y) {
      return detail::approx_eq(x, y, rel, abs);
    };
    s.contains = [](const double& x) { return std::isfinite(x) && x >= 0.0; };
    s.idempotent = false;
    s.eq_tolerance = rel;
    s.sample = [](const double& lo, const double& hi, std::mt19937_64& rng) {
      return detail::sample_real(lo, hi, rng);
    };
    return s;
  }

  if (kind == "maxplus" || kind == "maxplus_completed") {
    if (parts.size() != 1) throw std::invalid_argument(kind + " takes no parameters");
    const bool completed = kind == "maxplus_completed";
    s.zero = -kInf;
    s.one = 0.0;
    s.add = [](const double& x, const double& y) { return std::max(x, y); };
    // 0 ⊙ x = 0 must win over the native -inf + inf result.
    s.mul = [](const double& x, const double& y) {
      if (std::isinf(x) && x < 0) return -kInf;
      if (std::isinf(y) && y < 0) return -kInf;
      return x + y;
    };
    s.leq = [](const double& x, const double& y) { return x <= y; };
    if (completed) {
      s.star = [](const double& x) -> std::optional<double> {
        return x <= 0.0 ? 0.0 : kInf;
      };
      s.contains = [](const double& x) { return !std::isnan(x); };
    } else {
      s.star = [](const double& x) -> std::optional<double> {
        if (x <= 0.0) return 0.0;
        return std::nullopt;
      };
      s.contains = [](const double& x) {
        return std::isfinite(x) || (std::isinf(x) && x < 0);
      };
    }
    s.eq = [](const double& x, const double& y) { return x == y; };
    s.idempotent = true;
    s.sample = [](const double& lo, const double& hi, std::mt19937_64& rng) {
      return detail::sample_real(lo, hi, rng);
    };
    return s;
  }

  if (kind == "minplus") {
    if (parts.size() != 1) throw std::invalid_argument("minplus takes no parameters");
    s.zero = kInf;
    s.one = 0.0;
    s.add = [](const double& x, const double& y) { return std::min(x, y); };
    s.mul = [](const double& x, const double& y) {
      if (std::isinf(x) && x > 0) return kInf;
      if (std::isinf(y) && y > 0) return kInf;
      return x + y;
    };
    // Canonical order: x ≼ y iff min(x, y) = y, i.e. numerically y <= x.
    s.leq = [](const double& x, const double& y) { return y <= x; };
    s.star = [](const double& x) -> std::optional<double> {
      if (x >= 0.0) return 0.0;
      return std::nullopt;
    };
    s.eq = [](const double& x, const double& y) { return x == y; };
    s.contains = [](const double& x) {
      return std::isfinite(x) || (std::isinf(x) && x > 0);
    };
    s.idempotent = true;
    s.sample = [](const double& lo, const double& hi, std::mt19937_64& rng) {
      return detail::sample_real(lo, hi, rng);
    };
    return s;
  }

  if (kind == "maxmin") {
    if (parts.size() != 3) throw std::invalid_argument("expected maxmin:a:b");
    const double a = detail::parse_extended(parts[1]);
    const double b = detail::parse_extended(parts[2]);
    if (!(a < b)) throw std::invalid_argument("maxmin requires a < b");
    s.zero = a;
    s.one = b;
    s.add = [](const double& x, const double& y) { return std::max(x, y); };
    s.mul = [](const double& x, const double& y) { return std::min(x, y); };
    s.leq = [](const double& x, const double& y) { return x <= y; };
    s.star = [b](const double&) -> std::optional<double> { return b; };
    s.eq = [](const double& x, const double& y) { return x == y; };
    s.contains = [a, b](const double& x) {
      return !std::isnan(x) && a <= x && x <= b;
    };
    s.idempotent = true;
    s.sample = [](const double& lo, const double& hi, std::mt19937_64& rng) {
      return detail::sample_real(lo, hi, rng);
    };
    return s;
  }

  if (kind == "boolean") {
    if (parts.size() != 1) throw std::invalid_argument("boolean takes no parameters");
    return detail::finite_chain_instance(spec, kind, {0.0, 1.0});
  }

  if (kind == "chain") {
    if (parts.size() != 2) throw std::invalid_argument("expected chain:k");
    int k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoi(parts[1], &pos);
      if (pos != parts[1].size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad chain size: " + parts[1]);
    }
    if (k < 2) throw std::invalid_argument("chain requires k >= 2");
    std::vector<double> members;
    for (int i = 0; i < k; ++i) members.push_back(static_cast<double>(i));
    return detail::finite_chain_instance(spec, kind, std::move(members));
  }

  throw std::invalid_argument("unknown semiring kind: " + kind);
}

// Built-in sample sets used by axiom checks and the CLI `axioms` command.
inline std::vector<double> default_samples(const ScalarSemiring& s) {
  using detail::kInf;
  if (s.carrier) return *s.carrier;
  if (s.kind == "rplus") {
    std::vector<double> v;
    for (int i = 0; i <= 19; ++i) v.push_back(0.05 * i);
    v.push_back(1.5);
    v.push_back(2.0);
    v.push_back(3.0);
    return v;
  }
  if (s.kind == "maxplus")
    return {-kInf, -3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  if (s.kind == "maxplus_completed")
    return {-kInf, -3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, kInf};
  if (s.kind == "minplus") return {kInf, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
  if (s.kind == "maxmin") {
    std::vector<double> v;
    const double a = std::isinf(s.zero) ? -5.0 : s.zero;
    const double b = std::isinf(s.one) ? 5.0 : s.one;
    for (int i = 0; i <= 8; ++i) v.push_back(a + (b - a) * i / 8.0);
    v.front() = s.zero;
    v.back() = s.one;
    return v;
  }
  throw std::invalid_argument("no default samples for " + s.name);
}

}  // namespace semilin

#endif  // SEMILIN_SEMIRING_HPP
