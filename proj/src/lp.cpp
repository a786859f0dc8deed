#include "ots/lp.hpp"

#include <stdexcept>

#include "simplex_core.hpp"

namespace ots {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::iteration_limit: return "iteration-limit";
  }
  return "?";
}

int LinearProgram::add_column(const std::string& name, std::optional<Rational> lower,
                              std::optional<Rational> upper, Rational objective) {
  if (col_names_.count(name)) throw std::invalid_argument("duplicate column name: " + name);
  int idx = static_cast<int>(cols.size());
  cols.push_back(Column{name, std::move(lower), std::move(upper), std::move(objective)});
  col_names_.emplace(name, idx);
  return idx;
}

int LinearProgram::add_row(const std::string& name, std::vector<std::pair<int, Rational>> coef,
                           Cmp cmp, Rational rhs) {
  if (row_names_.count(name)) throw std::invalid_argument("duplicate row name: " + name);
  for (const auto& [j, v] : coef) {
    (void)v;
    if (j < 0 || j >= static_cast<int>(cols.size()))
      throw std::invalid_argument("row " + name + " references unknown column");
  }
  int idx = static_cast<int>(rows.size());
  rows.push_back(Row{name, std::move(coef), cmp, std::move(rhs)});
  row_names_.emplace(name, idx);
  return idx;
}

int LinearProgram::column_index(const std::string& name) const {
  auto it = col_names_.find(name);
  return it == col_names_.end() ? -1 : it->second;
}

int LinearProgram::row_index(const std::string& name) const {
  auto it = row_names_.find(name);
  return it == row_names_.end() ? -1 : it->second;
}

namespace {

template <class S>
detail::StdProblem<S> convert(const LinearProgram& lp, bool negate_costs) {
  using detail::Num;
  detail::StdProblem<S> p;
  p.m = static_cast<int>(lp.rows.size());
  p.n_struct = static_cast<int>(lp.cols.size());
  p.n_real = p.n_struct + p.m;
  p.acol.assign(static_cast<std::size_t>(p.m) * p.n_real, Num<S>::zero());
  p.b.resize(p.m);
  p.cost.assign(p.n_real, Num<S>::zero());
  p.lo.assign(p.n_real, Num<S>::zero());
  p.up.assign(p.n_real, Num<S>::zero());
  p.lo_fin.assign(p.n_real, 0);
  p.up_fin.assign(p.n_real, 0);

  for (int j = 0; j < p.n_struct; ++j) {
    const auto& c = lp.cols[j];
    if (c.lower && c.upper && *c.upper < *c.lower)
      throw std::invalid_argument("column " + c.name + " has lower > upper");
    if (c.lower) {
      p.lo[j] = Num<S>::of(*c.lower);
      p.lo_fin[j] = 1;
    }
    if (c.upper) {
      p.up[j] = Num<S>::of(*c.upper);
      p.up_fin[j] = 1;
    }
    S cost = Num<S>::of(c.objective);
    p.cost[j] = negate_costs ? -cost : cost;
  }
  for (int i = 0; i < p.m; ++i) {
    const auto& r = lp.rows[i];
    p.b[i] = Num<S>::of(r.rhs);
    for (const auto& [j, v] : r.coef)
      p.acol[static_cast<std::size_t>(j) * p.m + i] += Num<S>::of(v);
    int sj = p.n_struct + i;
    p.acol[static_cast<std::size_t>(sj) * p.m + i] = S(1);
    switch (r.cmp) {
      case LinearProgram::Cmp::le:
        p.lo[sj] = Num<S>::zero();
        p.lo_fin[sj] = 1;
        break;
      case LinearProgram::Cmp::eq:
        p.lo_fin[sj] = 1;
        p.up_fin[sj] = 1;
        break;
      case LinearProgram::Cmp::ge:
        p.up[sj] = Num<S>::zero();
        p.up_fin[sj] = 1;
        break;
    }
  }
  return p;
}

// Certificate: for every column, y^T A_j must point away from the usable
// bound; the residual y^T b - sup{y^T A z : l <= z <= u} must be positive.
template <class S>
bool verify_farkas(const detail::StdProblem<S>& p, const std::vector<S>& y, double tol) {
  using detail::Num;
  S total = Num<S>::zero();
  for (int i = 0; i < p.m; ++i) total += y[i] * p.b[i];
  for (int j = 0; j < p.n_real; ++j) {
    const S* a = p.acol.data() + static_cast<std::size_t>(j) * p.m;
    S t = Num<S>::zero();
    for (int i = 0; i < p.m; ++i) {
      if (!Num<S>::is_zero(a[i], 0.0)) t += y[i] * a[i];
    }
    if (Num<S>::is_zero(t, tol)) continue;
    if (Num<S>::sign(t) > 0) {
      if (!p.up_fin[j]) return false;
      total -= t * p.up[j];
    } else {
      if (!p.lo_fin[j]) return false;
      total -= t * p.lo[j];
    }
  }
  return Num<S>::sign(total) > 0 && !Num<S>::is_zero(total, tol);
}

template <class S>
LpSolutionT<S> run(const LinearProgram& lp, const LpSolveOptions& options) {
  bool maximize = lp.goal == LinearProgram::Goal::maximize;
  detail::StdProblem<S> p = convert<S>(lp, maximize);
  detail::SimplexEngine<S> engine(p, options);
  detail::EngineResult<S> er = engine.run();

  LpSolutionT<S> sol;
  sol.status = er.status;
  sol.iterations = er.iterations;
  sol.x.assign(er.z.begin(), er.z.begin() + p.n_struct);
  sol.basis.state = er.state;
  if (er.status == LpStatus::optimal) {
    S obj = er.objective;
    if (maximize) obj = -obj;
    sol.objective = obj + detail::Num<S>::of(lp.objective_offset);
    sol.duals = er.duals;
    sol.reduced_costs.assign(er.dj.begin(), er.dj.begin() + p.n_struct);
    if (maximize) {
      for (auto& v : sol.duals) v = -v;
      for (auto& v : sol.reduced_costs) v = -v;
    }
  } else if (er.status == LpStatus::infeasible) {
    sol.farkas = er.farkas;
    double tol = detail::Num<S>::exact ? 0.0 : 1e-9;
    sol.farkas_verified = !sol.farkas.empty() && verify_farkas(p, sol.farkas, tol);
  }
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpSolveOptions& options) {
  return run<double>(lp, options);
}

LpSolutionExact solve_lp_exact(const LinearProgram& lp, const LpSolveOptions& options) {
  if (static_cast<int>(lp.cols.size()) > options.max_exact_columns)
    throw LpCapError("exact mode limited to " + std::to_string(options.max_exact_columns) +
                     " columns, got " + std::to_string(lp.cols.size()));
  return run<Rational>(lp, options);
}

}  // namespace ots
