// Batch front end for semiring matrix closure, Bellman solving, interval
// verification, and axiom checks over matrix files.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semilin/axioms.hpp"
#include "semilin/bellman.hpp"
#include "semilin/closure.hpp"
#include "semilin/io.hpp"
#include "semilin/oracle.hpp"

namespace {

using namespace semilin;

constexpr int kExitOk = 0;
constexpr int kExitUndefined = 1;
constexpr int kExitUsage = 2;

Split parse_split(const std::string& name) {
  if (name == "scalar_pivot") return Split::scalar_pivot;
  if (name == "balanced") return Split::balanced;
  throw std::invalid_argument("unknown split: " + name);
}

// Carrier membership and interval validity for every entry; violations are
// input errors.
void validate_entries(const ScalarSemiring& s, const ParsedMatrix& m,
                      const std::string& label) {
  for (std::size_t i = 0; i < m.entries.rows(); ++i)
    for (std::size_t j = 0; j < m.entries.cols(); ++j) {
      const ScalarInterval& e = m.entries.at(i, j);
      if (!s.contains(e.lo) || !s.contains(e.hi))
        throw std::invalid_argument(
            label + " entry (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") is outside the " + s.name + " carrier");
      if (!s.leq(e.lo, e.hi))
        throw std::invalid_argument(
            label + " entry (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + "): lower bound does not precede upper");
    }
}

int run_closure(const ScalarSemiring& s, const std::string& path,
                Split split) {
  const ParsedMatrix a = load_matrix_file(path);
  validate_entries(s, a, "A");
  if (a.has_intervals) {
    const MatrixInterval<double> m = to_matrix_interval(s, a.entries);
    auto lo = mat_star(s, m.lo, split);
    if (!lo.ok()) {
      std::cerr << "closure undefined at " << lo.undefined->to_string()
                << " (lower endpoint)\n";
      return kExitUndefined;
    }
    auto hi = mat_star(s, m.hi, split);
    if (!hi.ok()) {
      std::cerr << "closure undefined at " << hi.undefined->to_string()
                << " (upper endpoint)\n";
      return kExitUndefined;
    }
    std::cout << format_matrix(from_matrix_interval(
        s, MatrixInterval<double>{*lo.value, *hi.value}));
    return kExitOk;
  }
  auto out = mat_star(s, a.scalar(), split);
  if (!out.ok()) {
    std::cerr << "closure undefined at " << out.undefined->to_string() << "\n";
    return kExitUndefined;
  }
  std::cout << format_matrix(*out.value);
  return kExitOk;
}

int run_solve(const ScalarSemiring& s, const std::string& a_path,
              const std::string& b_path, Split split) {
  const ParsedMatrix a = load_matrix_file(a_path);
  const ParsedMatrix b = load_matrix_file(b_path);
  validate_entries(s, a, "A");
  validate_entries(s, b, "B");
  if (a.has_intervals || b.has_intervals) {
    BellmanProblem<ScalarInterval> p(a.entries, b.entries);
    auto out = solve_interval(s, p, split);
    if (!out.ok()) {
      std::cerr << out.error->to_string() << "\n";
      return kExitUndefined;
    }
    std::cout << format_matrix(out.solution->x);
    return kExitOk;
  }
  BellmanProblem<double> p(a.scalar(), b.scalar());
  auto out = solve_point(s, p, split);
  if (!out.ok()) {
    std::cerr << "closure undefined at " << out.undefined->to_string() << "\n";
    return kExitUndefined;
  }
  std::cout << format_matrix(out.solution->x);
  return kExitOk;
}

// Oracle cross-checks on the endpoint matrices of an interval system.
int run_oracles(const ScalarSemiring& s, const MatrixInterval<double>& a) {
  int failures = 0;

  if (s.kind == "rplus") {
    OracleReport rep;
    rep.subject = "gauss_closure";
    for (const Matrix<double>* m : {&a.lo, &a.hi}) {
      auto star = mat_star(s, *m);
      auto inv = gauss_closure(*m);
      ++rep.checked;
      if (!star.ok() || !inv.ok()) {
        if (star.ok() != inv.ok()) ++rep.failures;
        continue;
      }
      const double disc = max_rel_discrepancy(*star.value, *inv.value);
      rep.max_disc = std::max(rep.max_disc, disc);
      if (disc > 1e-9) ++rep.failures;
    }
    std::cout << rep.line() << "\n";
    failures += static_cast<int>(rep.failures);
  } else if (s.idempotent) {
    OracleReport rep;
    rep.subject = "fw_closure";
    for (const Matrix<double>* m : {&a.lo, &a.hi}) {
      auto star = mat_star(s, *m);
      auto fw = fw_closure(s, *m);
      ++rep.checked;
      if (!star.ok() || !fw.ok()) {
        if (star.ok() != fw.ok()) ++rep.failures;
        continue;
      }
      if (!mat_eq(s, *star.value, *fw.value)) ++rep.failures;
    }
    std::cout << rep.line() << "\n";
    failures += static_cast<int>(rep.failures);
  }

  OracleReport series;
  series.subject = "series_domination";
  for (const Matrix<double>* m : {&a.lo, &a.hi}) {
    auto star = mat_star(s, *m);
    if (!star.ok()) continue;
    ++series.checked;
    const Matrix<double> partial = truncated_series(s, *m, 2 * m->rows());
    if (!mat_leq_or_eq(s, partial, *star.value)) ++series.failures;
    if (s.kind == "maxplus" &&
        !mat_eq(s, truncated_series(s, *m, m->rows() - 1), *star.value))
      ++series.failures;
  }
  std::cout << series.line() << "\n";
  failures += static_cast<int>(series.failures);
  return failures;
}

int run_verify(const ScalarSemiring& s, const std::string& a_path,
               const std::string& b_path, std::size_t trials,
               std::uint64_t seed) {
  const ParsedMatrix a = load_matrix_file(a_path);
  const ParsedMatrix b = load_matrix_file(b_path);
  validate_entries(s, a, "A");
  validate_entries(s, b, "B");
  BellmanProblem<ScalarInterval> p(a.entries, b.entries);

  auto algebraic = solve_interval(s, p);
  if (!algebraic.ok()) {
    std::cerr << algebraic.error->to_string() << "\n";
    return kExitUndefined;
  }
  const SampleReport rep = sample_unified(s, p, trials, seed);
  std::cout << rep.line() << "\n";
  std::cout << "hull_equals_bounds="
            << (rep.hull_equals_bounds ? "true" : "false")
            << " (observational)\n";

  int failures = run_oracles(s, to_matrix_interval(s, p.a));
  if (!rep.all_contained() || !rep.lo_attained || !rep.hi_attained)
    ++failures;
  return failures == 0 ? kExitOk : kExitUndefined;
}

int run_axioms(const ScalarSemiring& s) {
  const AxiomReport rep = check_axioms(s, default_samples(s));
  std::cout << "semiring=" << s.name << " checks=" << rep.checks
            << " violations=" << rep.violations.size() << "\n";
  for (const AxiomViolation& v : rep.violations)
    std::cout << "violated " << v.axiom << ": " << v.detail << "\n";
  return rep.ok() ? kExitOk : kExitUndefined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear algebra over positive semirings with closure"};
  app.require_subcommand(1);

  std::string semiring = "maxplus";
  std::string split_name = "scalar_pivot";
  std::string a_path, b_path;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--semiring", semiring, "semiring instance string")
        ->required();
    cmd->add_option("--tolerance", tolerance,
                    "relative comparison tolerance override (rplus)");
  };

  CLI::App* closure = app.add_subcommand("closure", "matrix closure A*");
  add_common(closure);
  closure->add_option("--split", split_name,
                      "recursion split: scalar_pivot or balanced");
  closure->add_option("matrix", a_path, "matrix file")->required();

  CLI::App* solve = app.add_subcommand("solve", "solve X = AX + B");
  add_common(solve);
  solve->add_option("--split", split_name,
                    "recursion split: scalar_pivot or balanced");
  solve->add_option("A", a_path, "A matrix file")->required();
  solve->add_option("B", b_path, "B matrix file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "sample the unified solution set and run oracles");
  add_common(verify);
  verify->add_option("A", a_path, "A matrix file")->required();
  verify->add_option("B", b_path, "B matrix file")->required();
  verify->add_option("--trials", trials, "number of random draws");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* axioms =
      app.add_subcommand("axioms", "check semiring axioms on built-in samples");
  add_common(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ScalarSemiring s = semilin::make_instance(semiring, tolerance);
    if (closure->parsed())
      return run_closure(s, a_path, parse_split(split_name));
    if (solve->parsed())
      return run_solve(s, a_path, b_path, parse_split(split_name));
    if (verify->parsed()) return run_verify(s, a_path, b_path, trials, seed);
    if (axioms->parsed()) return run_axioms(s);
  } catch (const semilin::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
