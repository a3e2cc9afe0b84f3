#include <limits>
#include <queue>
#include <random>

#include <doctest.h>

#include "semilin/closure.hpp"
#include "semilin/oracle.hpp"

using namespace semilin;

namespace {

const double inf = std::numeric_limits<double>::infinity();

Matrix<double> from_rows(std::vector<std::vector<double>> rows) {
  Matrix<double> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Independent per-source Dijkstra on a dense nonnegative-weight graph.
std::vector<double> dijkstra(const Matrix<double>& w, std::size_t src) {
  const std::size_t n = w.rows();
  std::vector<double> dist(n, inf);
  std::vector<bool> done(n, false);
  dist[src] = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (best == n || dist[v] < dist[best])) best = v;
    if (best == n || dist[best] == inf) break;
    done[best] = true;
    for (std::size_t v = 0; v < n; ++v)
      dist[v] = std::min(dist[v], dist[best] + w.at(best, v));
  }
  return dist;
}

}  // namespace

TEST_CASE("truncated_series base cases") {
  auto mp = make_instance("maxplus");
  auto a = from_rows({{-1, -2}, {-3, -1}});
  CHECK(mat_eq(mp, truncated_series(mp, a, 0),
               Matrix<double>::identity(mp, 2)));
  CHECK(mat_eq(mp, truncated_series(mp, a, 1),
               from_rows({{0, -2}, {-3, 0}})));
  auto rp = make_instance("rplus");
  auto half = truncated_series(rp, from_rows({{0.5}}), 10);
  CHECK(half.at(0, 0) == doctest::Approx(1.9990234375).epsilon(1e-15));
}

TEST_CASE("gauss_closure scalar cases") {
  auto two = gauss_closure(from_rows({{0.5}}));
  REQUIRE(two.ok());
  CHECK(two.value->at(0, 0) == doctest::Approx(2.0));
  auto m = gauss_closure(from_rows({{0.2, 0.3}, {0.1, 0.4}}));
  REQUIRE(m.ok());
  CHECK(m.value->at(0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(m.value->at(1, 1) == doctest::Approx(16.0 / 9.0).epsilon(1e-12));
  auto bad = gauss_closure(from_rows({{1.0}}));
  CHECK(bad.divergent);
  // Spectral radius > 1 shows up as negative inverse entries.
  CHECK(gauss_closure(from_rows({{2.0}})).divergent);
}

TEST_CASE("gauss_closure agrees with mat_star over rplus") {
  auto rp = make_instance("rplus");
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 50;
    Matrix<double> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < n; ++j) row += a.at(i, j) = u(rng);
      for (std::size_t j = 0; j < n; ++j)
        a.at(i, j) *= 0.9 * u(rng) / std::max(row, 1e-9);
    }
    auto star = mat_star(rp, a);
    auto inv = gauss_closure(a);
    REQUIRE(star.ok());
    REQUIRE(inv.ok());
    CHECK(max_rel_discrepancy(*star.value, *inv.value) < 1e-9);
  }
}

TEST_CASE("fw_closure matches mat_star on idempotent instances") {
  std::mt19937_64 rng(79);
  SUBCASE("zero matrix") {
    auto mp = make_instance("maxplus");
    auto out = fw_closure(mp, Matrix<double>::zeros(mp, 3, 3));
    REQUIRE(out.ok());
    CHECK(mat_eq(mp, *out.value, Matrix<double>::identity(mp, 3)));
  }
  SUBCASE("maxplus example") {
    auto mp = make_instance("maxplus");
    auto out = fw_closure(mp, from_rows({{-1, -2}, {-3, -1}}));
    REQUIRE(out.ok());
    CHECK(mat_eq(mp, *out.value, from_rows({{0, -2}, {-3, 0}})));
  }
  SUBCASE("random matrices across carriers") {
    std::uniform_real_distribution<double> neg(-10.0, 0.0);
    std::uniform_real_distribution<double> pos(0.0, 10.0);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 20;
      {
        auto mp = make_instance("maxplus");
        Matrix<double> a(n, n);
        // Dyadic grid keeps ⊙ = + exact, so the two closure routes agree
        // bit for bit.
        for (auto i = 0u; i < n; ++i)
          for (auto j = 0u; j < n; ++j)
            a.at(i, j) = std::round(neg(rng) * 1024.0) / 1024.0;
        auto x = mat_star(mp, a);
        auto y = fw_closure(mp, a);
        REQUIRE(x.ok());
        REQUIRE(y.ok());
        CHECK(mat_eq(mp, *x.value, *y.value));
      }
      {
        auto mn = make_instance("minplus");
        Matrix<double> a(n, n);
        for (auto i = 0u; i < n; ++i)
          for (auto j = 0u; j < n; ++j)
            a.at(i, j) = std::round(pos(rng) * 1024.0) / 1024.0;
        auto x = mat_star(mn, a);
        auto y = fw_closure(mn, a);
        REQUIRE(x.ok());
        REQUIRE(y.ok());
        CHECK(mat_eq(mn, *x.value, *y.value));
      }
      {
        auto mm = make_instance("maxmin:0:10");
        Matrix<double> a(n, n);
        for (auto i = 0u; i < n; ++i)
          for (auto j = 0u; j < n; ++j) a.at(i, j) = pos(rng);
        auto x = mat_star(mm, a);
        auto y = fw_closure(mm, a);
        REQUIRE(x.ok());
        REQUIRE(y.ok());
        CHECK(mat_eq(mm, *x.value, *y.value));
      }
      {
        auto bl = make_instance("boolean");
        Matrix<double> a(n, n);
        for (auto i = 0u; i < n; ++i)
          for (auto j = 0u; j < n; ++j) a.at(i, j) = rng() % 2;
        auto x = mat_star(bl, a);
        auto y = fw_closure(bl, a);
        REQUIRE(x.ok());
        REQUIRE(y.ok());
        CHECK(mat_eq(bl, *x.value, *y.value));
      }
    }
  }
  SUBCASE("undefined pivot is reported") {
    auto mn = make_instance("minplus");
    auto out = fw_closure(mn, from_rows({{-1.0}}));
    REQUIRE_FALSE(out.ok());
    CHECK(out.undefined->row == 1);
  }
}

TEST_CASE("minplus closure solves all-pairs shortest paths") {
  auto mn = make_instance("minplus");
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> w(0.1, 10.0);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng() % 6;
    Matrix<double> a(n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j)
        a.at(i, j) = (rng() % 3 == 0) ? inf : w(rng);
    auto closure = fw_closure(mn, a);
    REQUIRE(closure.ok());
    for (std::size_t src = 0; src < n; ++src) {
      auto dist = dijkstra(a, src);
      dist[src] = 0.0;  // the closure includes the identity
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] == inf)
          CHECK(closure.value->at(src, v) == inf);
        else
          CHECK(closure.value->at(src, v) ==
                doctest::Approx(dist[v]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("enumerate_solutions on 1x1 boolean systems") {
  auto bl = make_instance("boolean");
  auto sols = enumerate_solutions(
      bl, BellmanProblem<double>(from_rows({{0}}), from_rows({{1}})));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].at(0, 0) == 1.0);

  sols = enumerate_solutions(
      bl, BellmanProblem<double>(from_rows({{1}}), from_rows({{0}})));
  REQUIRE(sols.size() == 2);
  auto least = solve_point(
      bl, BellmanProblem<double>(from_rows({{1}}), from_rows({{0}})));
  REQUIRE(least.ok());
  CHECK(least.solution->x.at(0, 0) == 0.0);  // 1* . 0 = 0
  for (const auto& x : sols) CHECK(mat_leq(bl, least.solution->x, x));

  sols = enumerate_solutions(
      bl, BellmanProblem<double>(from_rows({{1}}), from_rows({{1}})));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].at(0, 0) == 1.0);
}

TEST_CASE("enumerate_solutions always contains the algebraic least solution") {
  auto ch = make_instance("chain:3");
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int t = 0; t < 50; ++t) {
    Matrix<double> a(2, 2), b(2, 1);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) a.at(i, j) = pick(rng);
      b.at(i, 0) = pick(rng);
    }
    BellmanProblem<double> p(a, b);
    auto sols = enumerate_solutions(ch, p);
    auto least = solve_point(ch, p);
    REQUIRE(least.ok());
    bool found = false;
    for (const auto& x : sols) {
      CHECK(mat_leq(ch, least.solution->x, x));
      if (mat_eq(ch, x, least.solution->x)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("oracle report line format") {
  OracleReport rep;
  rep.subject = "gauss_closure";
  rep.checked = 3;
  CHECK(rep.line() == "subject=gauss_closure checked=3 max_disc=exact failures=0");
  rep.max_disc = 1.5e-11;
  rep.failures = 1;
  CHECK(rep.line() ==
        "subject=gauss_closure checked=3 max_disc=1.5e-11 failures=1");
}
