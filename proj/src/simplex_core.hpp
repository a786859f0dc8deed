#pragma once

// Internal simplex engine shared by the float and exact rational solvers.
// Column order: structurals, then one slack per row, then one implicit
// artificial per row (artificial columns are sigma*e_i and never stored).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ots/lp.hpp"
#include "ots/rational.hpp"

namespace ots::detail {

template <class S>
struct Num;

template <>
struct Num<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double abs(double v) { return std::fabs(v); }
  static int sign(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }
  static double to_double(double v) { return v; }
  static double of(const Rational& r) { return r.to_double(); }
};

template <>
struct Num<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational abs(const Rational& v) { return v.abs(); }
  static int sign(const Rational& v) { return v.sign(); }
  static bool is_zero(const Rational& v, double) { return v.is_zero(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational of(const Rational& r) { return r; }
};

enum VarState : std::uint8_t { kAtLower = 0, kAtUpper = 1, kBasic = 2, kFreeZero = 3 };

template <class S>
struct StdProblem {
  int m = 0;       // rows
  int n_real = 0;  // structurals + slacks
  int n_struct = 0;
  std::vector<S> acol;  // column-major m x n_real
  std::vector<S> b;
  std::vector<S> cost;  // per real column
  std::vector<S> lo, up;
  std::vector<std::uint8_t> lo_fin, up_fin;

  const S* col(int j) const { return acol.data() + static_cast<std::size_t>(j) * m; }
};

template <class S>
struct EngineResult {
  LpStatus status = LpStatus::iteration_limit;
  std::vector<S> z;      // values of real columns
  std::vector<S> duals;  // y per row (optimal)
  std::vector<S> dj;     // reduced costs (optimal)
  std::vector<S> farkas;
  S objective{};
  int iterations = 0;
  std::vector<std::uint8_t> state;
};

template <class S>
class SimplexEngine {
 public:
  SimplexEngine(const StdProblem<S>& p, const LpSolveOptions& opt) : p_(p), opt_(opt) {
    max_iter_ = opt.max_iterations > 0 ? opt.max_iterations : 50 * (p.m + p.n_real);
    bland_ = Num<S>::exact;
  }

  EngineResult<S> run() {
    EngineResult<S> res;
    init_start();
    if (need_phase1_) {
      LpStatus s1 = iterate(/*phase1=*/true);
      if (s1 == LpStatus::unbounded)
        throw LpNumericalError("phase-1 objective reported unbounded");
      if (s1 == LpStatus::iteration_limit) {
        res.status = s1;
        res.iterations = iters_;
        return res;
      }
      S infeas = phase1_objective();
      if (!Num<S>::is_zero(infeas, phase1_tol())) {
        res.status = LpStatus::infeasible;
        res.iterations = iters_;
        res.farkas = compute_duals(/*phase1=*/true);
        finish_common(res);
        return res;
      }
      art_locked_ = true;
    }
    LpStatus s2 = iterate(/*phase1=*/false);
    res.status = s2;
    res.iterations = iters_;
    finish_common(res);
    if (s2 == LpStatus::optimal) {
      res.duals = compute_duals(/*phase1=*/false);
      res.dj.resize(p_.n_real);
      for (int j = 0; j < p_.n_real; ++j) res.dj[j] = p_.cost[j] - dot_col(res.duals, j);
      S obj = Num<S>::zero();
      for (int j = 0; j < p_.n_real; ++j) obj += p_.cost[j] * z_[j];
      res.objective = obj;
    }
    return res;
  }

 private:
  void finish_common(EngineResult<S>& res) const {
    res.z.assign(z_.begin(), z_.begin() + p_.n_real);
    res.state.assign(state_.begin(), state_.begin() + p_.n_real);
  }

  int total_cols() const { return p_.n_real + p_.m; }
  bool is_artificial(int j) const { return j >= p_.n_real; }
  int art_row(int j) const { return j - p_.n_real; }

  S cost_of(int j, bool phase1) const {
    if (phase1) return is_artificial(j) ? S(1) : Num<S>::zero();
    return is_artificial(j) ? Num<S>::zero() : p_.cost[j];
  }

  bool lower_finite(int j) const { return is_artificial(j) ? true : p_.lo_fin[j] != 0; }
  bool upper_finite(int j) const { return is_artificial(j) ? art_locked_ : p_.up_fin[j] != 0; }
  S lower_of(int j) const { return is_artificial(j) ? Num<S>::zero() : p_.lo[j]; }
  S upper_of(int j) const { return is_artificial(j) ? Num<S>::zero() : p_.up[j]; }

  double phase1_tol() const { return Num<S>::exact ? 0.0 : std::max(opt_.feas_tol, 1e-8); }
  double pivot_tol() const { return Num<S>::exact ? 0.0 : 1e-10; }

  S dot_col(const std::vector<S>& y, int j) const {
    if (is_artificial(j)) {
      int r = art_row(j);
      return art_sign_[r] > 0 ? y[r] : -y[r];
    }
    const S* a = p_.col(j);
    S acc = Num<S>::zero();
    for (int i = 0; i < p_.m; ++i) {
      if (!Num<S>::is_zero(a[i], 0.0)) acc += y[i] * a[i];
    }
    return acc;
  }

  void ftran(int j, std::vector<S>& w) const {
    const int m = p_.m;
    if (is_artificial(j)) {
      int r = art_row(j);
      for (int i = 0; i < m; ++i) {
        const S& v = binv_[static_cast<std::size_t>(i) * m + r];
        w[i] = art_sign_[r] > 0 ? v : -v;
      }
      return;
    }
    const S* a = p_.col(j);
    for (int i = 0; i < m; ++i) {
      S acc = Num<S>::zero();
      const S* row = binv_.data() + static_cast<std::size_t>(i) * m;
      for (int k = 0; k < m; ++k) {
        if (!Num<S>::is_zero(a[k], 0.0)) acc += row[k] * a[k];
      }
      w[i] = acc;
    }
  }

  std::vector<S> compute_duals(bool phase1) const {
    const int m = p_.m;
    std::vector<S> y(m, Num<S>::zero());
    for (int r = 0; r < m; ++r) {
      S c = cost_of(basic_[r], phase1);
      if (Num<S>::is_zero(c, 0.0)) continue;
      const S* row = binv_.data() + static_cast<std::size_t>(r) * m;
      for (int i = 0; i < m; ++i) y[i] += c * row[i];
    }
    return y;
  }

  S phase1_objective() const {
    S obj = Num<S>::zero();
    for (int r = 0; r < p_.m; ++r)
      if (is_artificial(basic_[r])) obj += xb_[r];
    return obj;
  }

  void default_state(int j) {
    state_[j] = lower_finite(j) ? kAtLower : (upper_finite(j) ? kAtUpper : kFreeZero);
  }

  void set_nonbasic_value(int j) {
    switch (state_[j]) {
      case kAtLower: z_[j] = lower_of(j); break;
      case kAtUpper: z_[j] = upper_of(j); break;
      case kFreeZero: z_[j] = Num<S>::zero(); break;
      default: break;
    }
  }

  bool basics_feasible() const {
    for (int r = 0; r < p_.m; ++r) {
      int j = basic_[r];
      double scale = 1.0 + std::fabs(Num<S>::to_double(xb_[r]));
      double tol = Num<S>::exact ? 0.0 : opt_.feas_tol * scale;
      if (lower_finite(j)) {
        S gap = lower_of(j) - xb_[r];
        if (Num<S>::sign(gap) > 0 && !Num<S>::is_zero(gap, tol)) return false;
      }
      if (upper_finite(j)) {
        S gap = xb_[r] - upper_of(j);
        if (Num<S>::sign(gap) > 0 && !Num<S>::is_zero(gap, tol)) return false;
      }
    }
    return true;
  }

  void init_start() {
    const int m = p_.m;
    state_.assign(total_cols(), kAtLower);
    z_.assign(total_cols(), Num<S>::zero());
    basic_.assign(m, -1);
    art_sign_.assign(m, 1);
    xb_.assign(m, Num<S>::zero());
    art_locked_ = false;
    need_phase1_ = false;

    const LpBasis* warm = opt_.warm;
    bool warm_ok = warm != nullptr &&
                   warm->state.size() == static_cast<std::size_t>(p_.n_real);
    if (warm_ok) {
      int nb = 0;
      for (int j = 0; j < p_.n_real; ++j)
        if (warm->state[j] == kBasic) ++nb;
      warm_ok = (nb == m);
    }
    if (warm_ok) {
      int r = 0;
      for (int j = 0; j < p_.n_real; ++j) {
        std::uint8_t st = warm->state[j];
        if (st == kAtLower && !lower_finite(j)) st = upper_finite(j) ? kAtUpper : kFreeZero;
        else if (st == kAtUpper && !upper_finite(j)) st = lower_finite(j) ? kAtLower : kFreeZero;
        else if (st == kFreeZero && (lower_finite(j) || upper_finite(j)))
          st = lower_finite(j) ? kAtLower : kAtUpper;
        state_[j] = st;
        if (st == kBasic) basic_[r++] = j;
        else set_nonbasic_value(j);
      }
      if (try_factorize()) {
        recompute_basics();
        if (basics_feasible()) return;  // clean warm start, straight to phase 2
      }
      // Keep nonbasic statuses as crash hints; rebuild the basis below.
    }

    // Crash start: structurals nonbasic (warm hints when available), each row
    // carried by its slack when the residual fits the slack bounds, otherwise
    // by an artificial.
    for (int j = 0; j < p_.n_struct; ++j) {
      if (warm_ok && state_[j] != kBasic &&
          (state_[j] != kAtLower || lower_finite(j)) &&
          (state_[j] != kAtUpper || upper_finite(j))) {
        // keep hinted state
      } else {
        default_state(j);
      }
      set_nonbasic_value(j);
    }
    std::vector<S> resid = p_.b;
    for (int j = 0; j < p_.n_struct; ++j) {
      if (Num<S>::is_zero(z_[j], 0.0)) continue;
      const S* a = p_.col(j);
      for (int i = 0; i < m; ++i) {
        if (!Num<S>::is_zero(a[i], 0.0)) resid[i] -= a[i] * z_[j];
      }
    }
    binv_.assign(static_cast<std::size_t>(m) * m, Num<S>::zero());
    for (int i = 0; i < m; ++i) {
      int sj = p_.n_struct + i;
      const S& r = resid[i];
      bool lo_ok = !p_.lo_fin[sj] || !(r < p_.lo[sj]);
      bool up_ok = !p_.up_fin[sj] || !(p_.up[sj] < r);
      if (lo_ok && up_ok) {
        basic_[i] = sj;
        state_[sj] = kBasic;
        z_[sj] = r;
        xb_[i] = r;
        binv_[static_cast<std::size_t>(i) * m + i] = S(1);
      } else {
        S sv = lo_ok ? p_.up[sj] : p_.lo[sj];
        state_[sj] = lo_ok ? kAtUpper : kAtLower;
        z_[sj] = sv;
        S residual = r - sv;
        int aj = p_.n_real + i;
        art_sign_[i] = Num<S>::sign(residual) >= 0 ? 1 : -1;
        basic_[i] = aj;
        state_[aj] = kBasic;
        z_[aj] = art_sign_[i] > 0 ? residual : -residual;
        xb_[i] = z_[aj];
        binv_[static_cast<std::size_t>(i) * m + i] = S(art_sign_[i]);
        need_phase1_ = true;
      }
    }
  }

  bool try_factorize() {
    const int m = p_.m;
    std::vector<S> mat(static_cast<std::size_t>(m) * 2 * m, Num<S>::zero());
    auto at = [&](int i, int j) -> S& { return mat[static_cast<std::size_t>(i) * 2 * m + j]; };
    for (int r = 0; r < m; ++r) {
      int j = basic_[r];
      if (is_artificial(j)) {
        at(art_row(j), r) = S(art_sign_[art_row(j)]);
      } else {
        const S* a = p_.col(j);
        for (int i = 0; i < m; ++i) at(i, r) = a[i];
      }
      at(r, m + r) = S(1);
    }
    for (int c = 0; c < m; ++c) {
      int piv = -1;
      if constexpr (Num<S>::exact) {
        for (int i = c; i < m; ++i) {
          if (!at(i, c).is_zero()) {
            piv = i;
            break;
          }
        }
      } else {
        double best = 1e-12;
        for (int i = c; i < m; ++i) {
          double v = std::fabs(Num<S>::to_double(at(i, c)));
          if (v > best) {
            best = v;
            piv = i;
          }
        }
      }
      if (piv < 0) return false;
      if (piv != c)
        for (int j2 = 0; j2 < 2 * m; ++j2) std::swap(at(piv, j2), at(c, j2));
      S pv = at(c, c);
      for (int j2 = 0; j2 < 2 * m; ++j2) at(c, j2) /= pv;
      for (int i = 0; i < m; ++i) {
        if (i == c) continue;
        S f = at(i, c);
        if (Num<S>::is_zero(f, 0.0)) continue;
        for (int j2 = 0; j2 < 2 * m; ++j2) at(i, j2) -= f * at(c, j2);
      }
    }
    binv_.assign(static_cast<std::size_t>(m) * m, Num<S>::zero());
    for (int i = 0; i < m; ++i)
      for (int j2 = 0; j2 < m; ++j2)
        binv_[static_cast<std::size_t>(i) * m + j2] = at(i, m + j2);
    return true;
  }

  void recompute_basics() {
    const int m = p_.m;
    std::vector<S> rhs = p_.b;
    for (int j = 0; j < total_cols(); ++j) {
      if (state_[j] == kBasic || Num<S>::is_zero(z_[j], 0.0)) continue;
      if (is_artificial(j)) {
        rhs[art_row(j)] -= S(art_sign_[art_row(j)]) * z_[j];
      } else {
        const S* a = p_.col(j);
        for (int i = 0; i < m; ++i) {
          if (!Num<S>::is_zero(a[i], 0.0)) rhs[i] -= a[i] * z_[j];
        }
      }
    }
    for (int r = 0; r < m; ++r) {
      S acc = Num<S>::zero();
      const S* row = binv_.data() + static_cast<std::size_t>(r) * m;
      for (int i = 0; i < m; ++i) acc += row[i] * rhs[i];
      xb_[r] = acc;
      z_[basic_[r]] = acc;
    }
  }

  void factorize_or_throw() {
    if (!try_factorize()) throw LpNumericalError("singular basis during refactorization");
    recompute_basics();
  }

  bool eligible(int j) const {
    if (state_[j] == kBasic) return false;
    if (is_artificial(j)) return false;  // start basic, never re-enter
    if (lower_finite(j) && upper_finite(j) && !(lower_of(j) < upper_of(j))) return false;
    return true;
  }

  int entering_direction(int j, const S& dj) const {
    double tol = Num<S>::exact ? 0.0 : opt_.opt_tol;
    switch (state_[j]) {
      case kAtLower:
        return (Num<S>::sign(dj) < 0 && !Num<S>::is_zero(dj, tol)) ? 1 : 0;
      case kAtUpper:
        return (Num<S>::sign(dj) > 0 && !Num<S>::is_zero(dj, tol)) ? -1 : 0;
      case kFreeZero:
        if (Num<S>::is_zero(dj, tol)) return 0;
        return Num<S>::sign(dj) < 0 ? 1 : -1;
      default:
        return 0;
    }
  }

  LpStatus iterate(bool phase1) {
    const int m = p_.m;
    std::vector<S> w(m);
    int since_refactor = 0;
    int degen_streak = 0;
    while (true) {
      if (iters_ >= max_iter_) return LpStatus::iteration_limit;
      std::vector<S> y = compute_duals(phase1);

      int q = -1, dir = 1;
      if (bland_) {
        for (int j = 0; j < p_.n_real; ++j) {
          if (!eligible(j)) continue;
          S dj = cost_of(j, phase1) - dot_col(y, j);
          int d = entering_direction(j, dj);
          if (d != 0) {
            q = j;
            dir = d;
            break;
          }
        }
      } else {
        double best = 0;
        for (int j = 0; j < p_.n_real; ++j) {
          if (!eligible(j)) continue;
          S dj = cost_of(j, phase1) - dot_col(y, j);
          int d = entering_direction(j, dj);
          if (d == 0) continue;
          double score = std::fabs(Num<S>::to_double(dj));
          if (score > best) {
            best = score;
            q = j;
            dir = d;
          }
        }
      }
      if (q < 0) return LpStatus::optimal;

      ftran(q, w);

      // Ratio test; the entering column's own bound span competes too.
      bool have_limit = false;
      bool flip = false;
      int leave_row = -1;
      int leave_to_upper = 0;
      S step = Num<S>::zero();
      if (lower_finite(q) && upper_finite(q)) {
        step = upper_of(q) - lower_of(q);
        have_limit = true;
        flip = true;
      }
      for (int r = 0; r < m; ++r) {
        if (Num<S>::is_zero(w[r], pivot_tol())) continue;
        S rate = (dir > 0) ? w[r] : -w[r];  // basic r decreases by rate per unit
        int jb = basic_[r];
        S room;
        int to_upper;
        if (Num<S>::sign(rate) > 0) {
          if (!lower_finite(jb)) continue;
          room = xb_[r] - lower_of(jb);
          to_upper = 0;
        } else {
          if (!upper_finite(jb)) continue;
          room = upper_of(jb) - xb_[r];
          to_upper = 1;
        }
        if (Num<S>::sign(room) < 0) room = Num<S>::zero();
        S ratio = room / Num<S>::abs(rate);
        if (!have_limit || ratio < step) {
          step = ratio;
          leave_row = r;
          leave_to_upper = to_upper;
          have_limit = true;
          flip = false;
        } else if (!flip && leave_row >= 0 && ratio == step && tie_prefers(r, leave_row, w)) {
          leave_row = r;
          leave_to_upper = to_upper;
        }
      }
      if (!have_limit) return LpStatus::unbounded;

      ++iters_;
      ++since_refactor;
      if (Num<S>::is_zero(step, Num<S>::exact ? 0.0 : opt_.feas_tol)) {
        if (++degen_streak > 40) bland_ = true;
      } else {
        degen_streak = 0;
      }

      if (Num<S>::sign(step) != 0) {
        for (int r = 0; r < m; ++r) {
          if (Num<S>::is_zero(w[r], 0.0)) continue;
          S delta = (dir > 0 ? w[r] : -w[r]) * step;
          xb_[r] -= delta;
          z_[basic_[r]] = xb_[r];
        }
        z_[q] += (dir > 0 ? step : -step);
      }

      if (flip) {
        state_[q] = (state_[q] == kAtLower) ? kAtUpper : kAtLower;
        set_nonbasic_value(q);
        continue;
      }

      int jout = basic_[leave_row];
      state_[jout] = leave_to_upper ? kAtUpper : kAtLower;
      z_[jout] = leave_to_upper ? upper_of(jout) : lower_of(jout);
      const S piv = w[leave_row];
      if (Num<S>::is_zero(piv, pivot_tol()))
        throw LpNumericalError("degenerate pivot element in basis update");
      S* prow = binv_.data() + static_cast<std::size_t>(leave_row) * m;
      for (int k = 0; k < m; ++k) prow[k] /= piv;
      for (int i = 0; i < m; ++i) {
        if (i == leave_row) continue;
        if (Num<S>::is_zero(w[i], 0.0)) continue;
        const S f = w[i];
        S* irow = binv_.data() + static_cast<std::size_t>(i) * m;
        for (int k = 0; k < m; ++k) irow[k] -= f * prow[k];
      }
      basic_[leave_row] = q;
      state_[q] = kBasic;
      xb_[leave_row] = z_[q];

      if (!Num<S>::exact && since_refactor >= opt_.refactor_every) {
        factorize_or_throw();
        since_refactor = 0;
      }
    }
  }

  bool tie_prefers(int r, int current, const std::vector<S>& w) const {
    if (bland_) return basic_[r] < basic_[current];
    double a = std::fabs(Num<S>::to_double(w[r]));
    double b = std::fabs(Num<S>::to_double(w[current]));
    if (a != b) return a > b;
    return basic_[r] < basic_[current];
  }

  const StdProblem<S>& p_;
  const LpSolveOptions& opt_;
  std::vector<std::uint8_t> state_;
  std::vector<S> z_;
  std::vector<S> xb_;
  std::vector<S> binv_;
  std::vector<int> basic_;
  std::vector<int> art_sign_;
  bool need_phase1_ = false;
  bool art_locked_ = false;
  bool bland_ = false;
  int iters_ = 0;
  int max_iter_ = 0;
};

}  // namespace ots::detail
