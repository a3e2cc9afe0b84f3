#ifndef SEMILIN_INTERVAL_HPP
#define SEMILIN_INTERVAL_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "semilin/semiring.hpp"

namespace semilin {

// Closed interval [lo, hi] in a partially ordered semiring, with lo ≼ hi.
// Denotes the set {x | lo ≼ x ≼ hi}.
template <class T>
struct Interval {
  T lo{};
  T hi{};
};

using ScalarInterval = Interval<double>;

template <class T>
Interval<T> make_interval(const Semiring<T>& s, T lo, T hi) {
  if (!s.leq(lo, hi)) {
    std::string msg = "invalid interval: lower bound does not precede upper";
    if (s.format)
      msg += " ([" + s.format(lo) + "," + s.format(hi) + "] in " + s.name + ")";
    throw std::invalid_argument(msg);
  }
  return Interval<T>{std::move(lo), std::move(hi)};
}

template <class T>
Interval<T> iv_add(const Semiring<T>& s, const Interval<T>& x,
                   const Interval<T>& y) {
  return {s.add(x.lo, y.lo), s.add(x.hi, y.hi)};
}

template <class T>
Interval<T> iv_mul(const Semiring<T>& s, const Interval<T>& x,
                   const Interval<T>& y) {
  return {s.mul(x.lo, y.lo), s.mul(x.hi, y.hi)};
}

// All-or-nothing: no partial result when one endpoint's star is undefined.
template <class T>
std::optional<Interval<T>> iv_star(const Semiring<T>& s, const Interval<T>& x) {
  auto lo = s.star(x.lo);
  auto hi = s.star(x.hi);
  if (!lo || !hi) return std::nullopt;
  return Interval<T>{*lo, *hi};
}

template <class T>
bool iv_leq(const Semiring<T>& s, const Interval<T>& x, const Interval<T>& y) {
  return s.leq(x.lo, y.lo) && s.leq(x.hi, y.hi);
}

template <class T>
bool iv_contains(const Semiring<T>& s, const Interval<T>& x, const T& p) {
  return s.leq(x.lo, p) && s.leq(p, x.hi);
}

// The weak interval extension I(S): intervals with endpoint-wise operations
// form a positive semiring with zero [0,0] and unit [1,1].
template <class T>
Semiring<Interval<T>> interval_extension(const Semiring<T>& base) {
  using IV = Interval<T>;
  Semiring<IV> s;
  s.name = "interval(" + base.name + ")";
  s.kind = "interval";
  s.zero = IV{base.zero, base.zero};
  s.one = IV{base.one, base.one};
  s.add = [base](const IV& x, const IV& y) { return iv_add(base, x, y); };
  s.mul = [base](const IV& x, const IV& y) { return iv_mul(base, x, y); };
  s.leq = [base](const IV& x, const IV& y) { return iv_leq(base, x, y); };
  s.star = [base](const IV& x) { return iv_star(base, x); };
  s.eq = [base](const IV& x, const IV& y) {
    return base.eq(x.lo, y.lo) && base.eq(x.hi, y.hi);
  };
  s.contains = [base](const IV& x) {
    return base.contains(x.lo) && base.contains(x.hi) && base.leq(x.lo, x.hi);
  };
  if (base.format) {
    auto f = base.format;
    s.format = [f](const IV& x) {
      return "[" + f(x.lo) + "," + f(x.hi) + "]";
    };
  }
  s.idempotent = base.idempotent;
  s.eq_tolerance = base.eq_tolerance;
  if (base.carrier) {
    std::vector<IV> ivs;
    for (const T& lo : *base.carrier)
      for (const T& hi : *base.carrier)
        if (base.leq(lo, hi)) ivs.push_back(IV{lo, hi});
    s.carrier = std::move(ivs);
  }
  return s;
}

}  // namespace semilin

#endif  // SEMILIN_INTERVAL_HPP
