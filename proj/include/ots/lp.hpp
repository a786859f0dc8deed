#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ots/rational.hpp"

namespace ots {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

std::string to_string(LpStatus s);

struct LpNumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LpCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic LP with named rows and columns. All data is exact; the float
// solver converts on entry. Bounds are nullopt for infinite.
struct LinearProgram {
  enum class Goal { minimize, maximize };
  enum class Cmp { le, eq, ge };

  struct Column {
    std::string name;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    Rational objective{};
  };
  struct Row {
    std::string name;
    std::vector<std::pair<int, Rational>> coef;  // column index -> coefficient
    Cmp cmp = Cmp::le;
    Rational rhs{};
  };

  Goal goal = Goal::minimize;
  Rational objective_offset{};
  std::vector<Column> cols;
  std::vector<Row> rows;

  int add_column(const std::string& name, std::optional<Rational> lower,
                 std::optional<Rational> upper, Rational objective = {});
  int add_row(const std::string& name, std::vector<std::pair<int, Rational>> coef,
              Cmp cmp, Rational rhs);

  int column_index(const std::string& name) const;
  int row_index(const std::string& name) const;

  std::size_t num_cols() const { return cols.size(); }
  std::size_t num_rows() const { return rows.size(); }

 private:
  std::map<std::string, int> col_names_;
  std::map<std::string, int> row_names_;
};

// Basis snapshot for warm starts: one state per structural column followed by
// one per row slack. States: 0 at-lower, 1 at-upper, 2 basic, 3 free-at-zero.
struct LpBasis {
  std::vector<std::uint8_t> state;
  bool empty() const { return state.empty(); }
};

struct LpSolveOptions {
  int max_iterations = 0;  // 0: 50 * (rows + cols)
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  int refactor_every = 64;
  const LpBasis* warm = nullptr;
  int max_exact_columns = 60;  // structural-column cap for the exact mode
};

template <class S>
struct LpSolutionT {
  LpStatus status = LpStatus::iteration_limit;
  S objective{};
  std::vector<S> x;              // per column
  std::vector<S> duals;          // per row (optimal)
  std::vector<S> reduced_costs;  // per column (optimal)
  std::vector<S> farkas;         // per row (infeasible)
  bool farkas_verified = false;
  int iterations = 0;
  LpBasis basis;
};

using LpSolution = LpSolutionT<double>;
using LpSolutionExact = LpSolutionT<Rational>;

// Bounded-variable primal simplex with a phase-1 start; Dantzig pricing with
// a Bland fallback once degeneracy is detected. Deterministic: identical
// inputs produce identical bases.
LpSolution solve_lp(const LinearProgram& lp, const LpSolveOptions& options = {});

// Exact rational pivoting (Bland throughout). Guarded by the structural
// column cap in the options.
LpSolutionExact solve_lp_exact(const LinearProgram& lp, const LpSolveOptions& options = {});

}  // namespace ots
