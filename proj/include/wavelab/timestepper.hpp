#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "wavelab/errors.hpp"
#include "wavelab/field.hpp"
#include "wavelab/models.hpp"

namespace wavelab {

struct TimeGrid {
  double dt = 1e-2;
  double t_end = 1.0;
  std::size_t capture_stride = 1;

  /// InvalidArgument unless dt > 0, dt <= t_end and stride >= 1.
  void validate() const;

  /// Number of steps: t_end/dt rounded to the nearest integer when it is
  /// within a relative 1e-9 of one, rounded up otherwise (the last step then
  /// overshoots t_end by less than dt).
  std::size_t steps() const;
};

template <class F>
struct Trajectory {
  std::vector<double> times;
  std::vector<F> states;
  std::vector<std::string> warnings;
};

enum class Scheme {
  Rk4,                    // classical explicit RK4 on the full rhs
  IntegratingFactorRk4,   // RK4 on the nonlinear part, linear flow exact
};

/// Everything the stepper needs to advance one model.
template <class F>
struct Problem {
  std::function<F(const F&)> rhs;            // full time derivative
  std::function<F(const F&)> nonlinear_rhs;  // integrating-factor scheme only
  std::function<std::function<F(const F&)>(double tau)> linear_flow;  // exp(tau L)
  std::function<F(const F&)> project;        // applied after every step; may be empty
  double max_stable_dt = std::numeric_limits<double>::infinity();
};

Problem<Field1D> bbm_problem(const BbmParams& p, const Grid1D& grid);
Problem<Field2D> bbmkp_problem(const BbmKpParams& p, const Grid2D& grid);

/// Stability limit for classical RK4: 1 for BBM, 0.5 / max_grid |omega2| for
/// BBM-KP. Exceeding it is reported as a warning, never an error.
double stability_limit(const Grid2D& grid, const BbmKpParams& p);

namespace detail {

template <class F>
F checked(const std::function<F(const F&)>& fn, const F& arg, std::size_t step, double t) {
  try {
    return fn(arg);
  } catch (const NonFiniteValue&) {
    throw Blowup(step, t);
  }
}

template <class F>
F combine(const F& a, double s, const F& b, std::size_t step, double t) {
  try {
    return axpy(a, s, b);
  } catch (const NonFiniteValue&) {
    throw Blowup(step, t);
  }
}

template <class F>
F rk4_step(const Problem<F>& pr, const F& u, double h, std::size_t step, double t) {
  const F k1 = checked(pr.rhs, u, step, t);
  const F k2 = checked(pr.rhs, combine(u, 0.5 * h, k1, step, t), step, t);
  const F k3 = checked(pr.rhs, combine(u, 0.5 * h, k2, step, t), step, t);
  const F k4 = checked(pr.rhs, combine(u, h, k3, step, t), step, t);
  const F acc = combine(combine(k1, 2.0, k2, step, t), 2.0, k3, step, t);
  return combine(u, h / 6.0, combine(acc, 1.0, k4, step, t), step, t);
}

// Lawson RK4 in the variables v = exp(-tL) u, written with the half-step
// flow E only:
//   a = E v, b = E N(v), k2 = N(a + h/2 b), k3 = N(a + h/2 k2),
//   k4 = N(E(a + h k3)), v+ = E(a + h/6 (b + 2 k2 + 2 k3)) + h/6 k4.
template <class F>
F if_rk4_step(const Problem<F>& pr, const std::function<F(const F&)>& half, const F& u, double h,
              std::size_t step, double t) {
  const F a = checked(half, u, step, t);
  const F b = checked(half, checked(pr.nonlinear_rhs, u, step, t), step, t);
  const F k2 = checked(pr.nonlinear_rhs, combine(a, 0.5 * h, b, step, t), step, t);
  const F k3 = checked(pr.nonlinear_rhs, combine(a, 0.5 * h, k2, step, t), step, t);
  const F k4 = checked(pr.nonlinear_rhs, checked(half, combine(a, h, k3, step, t), step, t), step, t);
  const F sum = combine(b, 2.0, combine(k2, 1.0, k3, step, t), step, t);
  return combine(checked(half, combine(a, h / 6.0, sum, step, t), step, t), h / 6.0, k4, step, t);
}

}  // namespace detail

/// Fixed-step integration from t = 0. Snapshots at t = 0, every
/// capture_stride steps and at the final step; times are step * dt.
/// Throws Blowup (with the step index) when a stage produces NaN/Inf.
template <class F>
Trajectory<F> integrate(const Problem<F>& pr, const F& u0, const TimeGrid& tg, Scheme scheme = Scheme::Rk4) {
  tg.validate();
  Trajectory<F> out;
  const std::size_t n = tg.steps();
  const double h = tg.dt;
  if (static_cast<double>(n) * h > tg.t_end * (1.0 + 1e-9)) {
    out.warnings.push_back("t_end is not a multiple of dt; the run ends at " + std::to_string(n * h));
  }
  std::function<F(const F&)> half;
  if (scheme == Scheme::Rk4) {
    if (h > pr.max_stable_dt) {
      out.warnings.push_back("StabilityWarning: dt = " + std::to_string(h) + " exceeds the RK4 heuristic " +
                             std::to_string(pr.max_stable_dt));
    }
  } else {
    if (!pr.nonlinear_rhs || !pr.linear_flow) {
      throw InvalidArgument("integrating-factor scheme needs a nonlinear rhs and a linear flow");
    }
    half = pr.linear_flow(0.5 * h);
  }

  F u = pr.project ? pr.project(u0) : u0;
  out.times.push_back(0.0);
  out.states.push_back(u);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = static_cast<double>(i - 1) * h;
    F next = scheme == Scheme::Rk4 ? detail::rk4_step(pr, u, h, i, t) : detail::if_rk4_step(pr, half, u, h, i, t);
    if (pr.project) next = pr.project(next);
    if (!all_finite(next.values())) throw Blowup(i, static_cast<double>(i) * h);
    u = std::move(next);
    if (i % tg.capture_stride == 0 || i == n) {
      out.times.push_back(static_cast<double>(i) * h);
      out.states.push_back(u);
    }
  }
  return out;
}

}  // namespace wavelab
