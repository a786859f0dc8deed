#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ots/lp.hpp"
#include "ots/rng.hpp"

using namespace ots;

namespace {

LinearProgram tiny_ge() {
  LinearProgram lp;
  int x = lp.add_column("x", std::nullopt, std::nullopt, Rational(1));
  lp.add_row("r", {{x, Rational(1)}}, LinearProgram::Cmp::ge, Rational(3));
  return lp;
}

}  // namespace

TEST_CASE("min x subject to x >= 3") {
  auto lp = tiny_ge();
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(3.0));
  CHECK(sol.x[0] == doctest::Approx(3.0));
  CHECK(sol.duals[0] == doctest::Approx(1.0));

  auto ex = solve_lp_exact(lp);
  REQUIRE(ex.status == LpStatus::optimal);
  CHECK(ex.objective == Rational(3));
  CHECK(ex.duals[0] == Rational(1));
}

TEST_CASE("infeasible pair yields verified farkas ray") {
  LinearProgram lp;
  int x = lp.add_column("x", std::nullopt, std::nullopt, Rational(0));
  lp.add_row("lo", {{x, Rational(1)}}, LinearProgram::Cmp::le, Rational(0));
  lp.add_row("hi", {{x, Rational(1)}}, LinearProgram::Cmp::ge, Rational(1));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::infeasible);
  CHECK(sol.farkas_verified);

  auto ex = solve_lp_exact(lp);
  REQUIRE(ex.status == LpStatus::infeasible);
  CHECK(ex.farkas_verified);
}

TEST_CASE("unbounded below is detected") {
  LinearProgram lp;
  lp.add_column("x", std::nullopt, Rational(5), Rational(1));
  auto sol = solve_lp(lp);
  CHECK(sol.status == LpStatus::unbounded);
}

TEST_CASE("maximization and bound flips") {
  LinearProgram lp;
  lp.goal = LinearProgram::Goal::maximize;
  int x = lp.add_column("x", Rational(0), Rational(2), Rational(3));
  int y = lp.add_column("y", Rational(0), Rational(2), Rational(2));
  lp.add_row("cap", {{x, Rational(1)}, {y, Rational(1)}}, LinearProgram::Cmp::le, Rational(3));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(8.0));  // x=2, y=1
  auto ex = solve_lp_exact(lp);
  CHECK(ex.objective == Rational(8));
}

TEST_CASE("equality rows and free variables") {
  LinearProgram lp;
  int x = lp.add_column("x", std::nullopt, std::nullopt, Rational(1));
  int y = lp.add_column("y", Rational(0), std::nullopt, Rational(2));
  lp.add_row("eq", {{x, Rational(1)}, {y, Rational(1)}}, LinearProgram::Cmp::eq, Rational(4));
  lp.add_row("ge", {{x, Rational(1)}, {y, Rational(-1)}}, LinearProgram::Cmp::ge, Rational(-2));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  // substituting x = 4 - y gives objective 4 + y, minimized at y = 0
  CHECK(sol.objective == doctest::Approx(4.0));
  CHECK(sol.x[x] == doctest::Approx(4.0));
  CHECK(sol.x[y] == doctest::Approx(0.0));
}

TEST_CASE("random bounded LPs satisfy strong duality") {
  Rng rng(42);
  int infeasible = 0, optimal = 0;
  for (int t = 0; t < 500; ++t) {
    Rng local = rng.fork(t);
    int n = static_cast<int>(local.range(1, 8));
    int m = static_cast<int>(local.range(1, 8));
    LinearProgram lp;
    for (int j = 0; j < n; ++j) {
      Rational lo = local.grid(-40, 0, 4);
      Rational hi = lo + local.grid(0, 40, 4);
      lp.add_column("x" + std::to_string(j), lo, hi, local.grid(-20, 20, 4));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rational>> coef;
      for (int j = 0; j < n; ++j)
        if (local.chance(0.7)) coef.emplace_back(j, local.grid(-12, 12, 3));
      auto cmp = static_cast<LinearProgram::Cmp>(local.range(0, 2));
      lp.add_row("r" + std::to_string(i), coef, cmp, local.grid(-30, 30, 2));
    }
    auto sol = solve_lp(lp);
    if (sol.status == LpStatus::infeasible) {
      ++infeasible;
      CHECK(sol.farkas_verified);
      continue;
    }
    REQUIRE(sol.status == LpStatus::optimal);  // bounded box => never unbounded
    ++optimal;
    // duality: c^T x == y^T b + sum_j d_j x_j
    double dual_obj = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      dual_obj += sol.duals[i] * lp.rows[i].rhs.to_double();
    for (std::size_t j = 0; j < lp.cols.size(); ++j)
      dual_obj += sol.reduced_costs[j] * sol.x[j];
    CHECK(std::fabs(sol.objective - dual_obj) / (1.0 + std::fabs(sol.objective)) <= 1e-7);
    // primal feasibility
    for (const auto& row : lp.rows) {
      double lhs = 0;
      for (auto& [j, v] : row.coef) lhs += v.to_double() * sol.x[j];
      double rhs = row.rhs.to_double();
      if (row.cmp == LinearProgram::Cmp::le) CHECK(lhs <= rhs + 1e-6);
      if (row.cmp == LinearProgram::Cmp::ge) CHECK(lhs >= rhs - 1e-6);
      if (row.cmp == LinearProgram::Cmp::eq) CHECK(std::fabs(lhs - rhs) <= 1e-6);
    }
  }
  CHECK(optimal > 100);
  CHECK(infeasible > 10);
}

TEST_CASE("exact and float modes agree on random LPs") {
  Rng rng(99);
  for (int t = 0; t < 120; ++t) {
    Rng local = rng.fork(t);
    int n = static_cast<int>(local.range(1, 6));
    int m = static_cast<int>(local.range(1, 5));
    LinearProgram lp;
    for (int j = 0; j < n; ++j) {
      Rational lo = local.grid(-20, 0, 2);
      Rational hi = lo + local.grid(1, 30, 2);
      lp.add_column("x" + std::to_string(j), lo, hi, local.grid(-10, 10, 2));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rational>> coef;
      for (int j = 0; j < n; ++j)
        if (local.chance(0.8)) coef.emplace_back(j, local.grid(-6, 6, 2));
      auto cmp = static_cast<LinearProgram::Cmp>(local.range(0, 2));
      lp.add_row("r" + std::to_string(i), coef, cmp, local.grid(-15, 15, 2));
    }
    auto fs = solve_lp(lp);
    auto es = solve_lp_exact(lp);
    REQUIRE(fs.status == es.status);
    if (fs.status == LpStatus::optimal) {
      double e = es.objective.to_double();
      CHECK(std::fabs(fs.objective - e) / (1.0 + std::fabs(e)) <= 1e-6);
    }
  }
}

TEST_CASE("determinism: identical inputs give identical bases") {
  Rng rng(5);
  LinearProgram lp;
  for (int j = 0; j < 6; ++j)
    lp.add_column("x" + std::to_string(j), Rational(0), Rational(10), rng.grid(-9, 9, 2));
  for (int i = 0; i < 5; ++i) {
    std::vector<std::pair<int, Rational>> coef;
    for (int j = 0; j < 6; ++j) coef.emplace_back(j, rng.grid(-5, 5, 2));
    lp.add_row("r" + std::to_string(i), coef, LinearProgram::Cmp::le, Rational(12));
  }
  auto a = solve_lp(lp);
  auto b = solve_lp(lp);
  REQUIRE(a.status == b.status);
  CHECK(a.basis.state == b.basis.state);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("iteration limit reported") {
  LinearProgram lp;
  int x = lp.add_column("x", Rational(0), Rational(1), Rational(-1));
  lp.add_row("r", {{x, Rational(1)}}, LinearProgram::Cmp::le, Rational(1));
  LpSolveOptions opt;
  opt.max_iterations = 1;
  auto sol = solve_lp(lp, opt);
  CHECK((sol.status == LpStatus::optimal || sol.status == LpStatus::iteration_limit));
}

TEST_CASE("exact column cap enforced") {
  LinearProgram lp;
  for (int j = 0; j < 61; ++j) lp.add_column("x" + std::to_string(j), Rational(0), Rational(1));
  CHECK_THROWS_AS(solve_lp_exact(lp), LpCapError);
}

TEST_CASE("warm start reuses parent basis") {
  LinearProgram lp;
  int x = lp.add_column("x", Rational(0), Rational(4), Rational(-1));
  int y = lp.add_column("y", Rational(0), Rational(4), Rational(-2));
  lp.add_row("r1", {{x, Rational(1)}, {y, Rational(1)}}, LinearProgram::Cmp::le, Rational(5));
  lp.add_row("r2", {{x, Rational(2)}, {y, Rational(1)}}, LinearProgram::Cmp::le, Rational(8));
  auto first = solve_lp(lp);
  REQUIRE(first.status == LpStatus::optimal);
  LpSolveOptions opt;
  opt.warm = &first.basis;
  auto second = solve_lp(lp, opt);
  REQUIRE(second.status == LpStatus::optimal);
  CHECK(second.objective == doctest::Approx(first.objective));
  CHECK(second.iterations <= first.iterations);
  // tighten a bound and re-solve from the old basis
  lp.cols[y].upper = Rational(2);
  auto third = solve_lp(lp, opt);
  REQUIRE(third.status == LpStatus::optimal);
  CHECK(third.objective == doctest::Approx(-7.0));
}
