#include "wavelab/timestepper.hpp"

#include <cmath>

namespace wavelab {

void TimeGrid::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time grid: dt must be positive");
  if (!(t_end >= dt) || !std::isfinite(t_end)) throw InvalidArgument("time grid: need dt <= t_end");
  if (capture_stride < 1) throw InvalidArgument("time grid: capture_stride must be >= 1");
}

std::size_t TimeGrid::steps() const {
  const double ratio = t_end / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * nearest) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(ratio));
}

Problem<Field1D> bbm_problem(const BbmParams& p, const Grid1D& grid) {
  validate(p);
  Problem<Field1D> pr;
  pr.rhs = [p](const Field1D& u) { return bbm_rhs(u, p); };
  pr.nonlinear_rhs = [p](const Field1D& u) { return bbm_nonlinear_rhs(u, p); };
  pr.linear_flow = [p, grid](double tau) -> std::function<Field1D(const Field1D&)> {
    return LinearPropagator1D(grid, DispersionSymbol::bbm(p.alpha), tau);
  };
  pr.max_stable_dt = 1.0;
  return pr;
}

double stability_limit(const Grid2D& grid, const BbmKpParams& p) {
  const double w = max_grid_frequency(grid, DispersionSymbol::bbmkp(p.gamma, p.alpha));
  return w > 0.0 ? 0.5 / w : std::numeric_limits<double>::infinity();
}

Problem<Field2D> bbmkp_problem(const BbmKpParams& p, const Grid2D& grid) {
  validate(p);
  Problem<Field2D> pr;
  pr.rhs = [p](const Field2D& eta) { return bbmkp_rhs(eta, p); };
  pr.nonlinear_rhs = [p](const Field2D& eta) { return bbmkp_nonlinear_rhs(eta, p); };
  pr.linear_flow = [p, grid](double tau) -> std::function<Field2D(const Field2D&)> {
    return LinearPropagator2D(grid, DispersionSymbol::bbmkp(p.gamma, p.alpha), tau, p.mean_tol);
  };
  pr.project = [](const Field2D& eta) { return remove_x_mean(eta); };
  pr.max_stable_dt = stability_limit(grid, p);
  return pr;
}

}  // namespace wavelab
