// Acceptance criteria AC1-AC10. The reference transverse-limit run (the
// default configuration) is integrated once and shared by AC3-AC6.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "verify_internal.hpp"
#include "wavelab/config.hpp"
#include "wavelab/experiment.hpp"
#include "wavelab/harness.hpp"
#include "wavelab/models.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/spectral.hpp"
#include "wavelab/timestepper.hpp"

namespace wavelab::verify {

using detail::num;
using detail::Outcome;
using detail::sci;
using detail::timed;

namespace {

struct ReferenceRun {
  harness::RunSpec spec;
  harness::Trajectories tr;
  harness::ConvergenceReport k1;
  harness::ConvergenceReport k2;
};

ReferenceRun reference_run() {
  const ExperimentConfig c;
  const auto spec = run_spec(c);
  auto tr = harness::run_models(spec);
  auto k1 = harness::convergence_report(tr, 1, c.s, c.time.dt);
  auto k2 = harness::convergence_report(tr, 2, c.s, c.time.dt);
  return ReferenceRun{spec, std::move(tr), std::move(k1), std::move(k2)};
}

double max_residual(const harness::Trajectories& tr, double t_max) {
  double worst = 0.0;
  for (std::size_t n = 0; n < tr.eta.times.size(); ++n) {
    if (tr.eta.times[n] > t_max + 1e-12) break;
    const auto r = harness::slice_l2_norms(harness::w_residual(tr, n));
    worst = std::max(worst, *std::max_element(r.begin(), r.end()));
  }
  return worst;
}

void ac1_linear_order(Outcome& o) {
  const Grid1D grid(2.0 * std::numbers::pi, 64);
  const Field1D u0 = Field1D::sample(grid, [](double x) { return std::exp(std::sin(x)); });
  const Field1D exact = linear_propagator(u0, 1.0, DispersionSymbol::bbm());
  auto error = [&](double dt) {
    const auto tr = integrate(bbm_problem(BbmParams{1.0, false}, grid), u0, TimeGrid{dt, 1.0, 100000});
    return max_abs_difference(tr.states.back().values(), exact.values());
  };
  const double e_coarse = error(1e-2), e_mid = error(5e-3);
  const double e1 = error(1e-3), e2 = error(5e-4);
  const double ratio = e1 / e2;
  o.expect(e1 < 1e-8, "error at dt = 1e-3 is " + sci(e1));
  o.expect(ratio >= 14.0 && ratio <= 18.0, "error ratio dt 1e-3 -> 5e-4 is " + sci(ratio) +
                                                " (errors " + sci(e1) + ", " + sci(e2) + ")");
  o.note("error at dt = 1e-3 " + sci(e1) + "; ratio dt 1e-2 -> 5e-3 " + sci(e_coarse / e_mid));
}

void ac2_solitary(Outcome& o) {
  const Grid1D grid(128.0, 1024);
  const SolitaryWave wave{1.5, 1.0, 0.0};
  const Field1D u0 = wave.sample(grid, 0.0);
  const auto tr = integrate(bbm_problem(BbmParams{}, grid), u0, TimeGrid{1e-2, 10.0, 100}, Scheme::Rk4);
  const Field1D& u = tr.states.back();
  const double shape = max_abs_difference(u.values(), wave.sample(grid, 10.0).values());
  double mean_drift = 0.0, energy_drift = 0.0;
  const double m0 = x_integral(u0) / grid.length();
  const double e0 = std::pow(norms::hk_x_norm(u0, 1.0), 2);
  for (const auto& s : tr.states) {
    mean_drift = std::max(mean_drift, std::abs(x_integral(s) / grid.length() - m0));
    energy_drift = std::max(energy_drift, std::abs(std::pow(norms::hk_x_norm(s, 1.0), 2) - e0) / e0);
  }
  o.expect(shape < 1e-4, "profile error " + sci(shape));
  o.expect(mean_drift < 1e-12, "mean drift " + sci(mean_drift));
  o.expect(energy_drift < 1e-8, "relative H1 energy drift " + sci(energy_drift));
  o.note("profile error " + sci(shape) + ", mean drift " + sci(mean_drift) + ", H1 drift " + sci(energy_drift));
}

void ac3_residual(Outcome& o, const ReferenceRun& ref) {
  const double coarse = max_residual(ref.tr, 0.5);
  o.expect(coarse < 1e-6, "residual " + sci(coarse));
  harness::RunSpec fine = ref.spec;
  fine.time = TimeGrid{0.5 * ref.spec.time.dt, 0.5, 2 * ref.spec.time.capture_stride};
  const double refined = max_residual(harness::run_models(fine), 0.5);
  const double ratio = coarse / refined;
  o.expect(ratio >= 16.0, "residual drop under dt halving " + sci(ratio) + " (" + sci(coarse) + " -> " +
                              sci(refined) + ")");
  o.note("max residual on [0, 0.5] " + sci(coarse) + " at dt " + num(ref.spec.time.dt));
}

void ac4_localization(Outcome& o, const ReferenceRun& ref) {
  for (const auto* rep : {&ref.k1, &ref.k2}) {
    const std::string tag = "k = " + std::to_string(rep->k);
    const auto& ys = rep->y_slices;
    const Grid1D& gy = rep->grid.y;
    const std::size_t j0 = gy.nearest_index(0.0);
    const std::size_t jfar = gy.nearest_index(-16.0);
    double worst_ratio = 0.0;
    for (double t : {0.25, 0.5, 1.0}) {
      const std::size_t n = harness::time_index(rep->times, t);
      const auto& row = rep->rows[n];
      int breaks = 0;
      for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
        // Moving away from y = 0 on each side, norms must not grow.
        if (ys[j + 1] <= -2.0 && row[j].norm_k > row[j + 1].norm_k) ++breaks;
        if (ys[j] >= 2.0 && row[j + 1].norm_k > row[j].norm_k) ++breaks;
      }
      o.expect(breaks == 0, tag + ", t = " + num(t) + ": " + std::to_string(breaks) + " monotonicity breaks");
      const double ratio = row[jfar].norm_k / row[j0].norm_k;
      o.expect(ratio < 1e-3, tag + ", t = " + num(t) + ": far/centre ratio " + sci(ratio));
      worst_ratio = std::max(worst_ratio, ratio);
    }
    o.note(tag + " max far/centre ratio " + sci(worst_ratio));
  }
}

void ac5_gronwall(Outcome& o, const ReferenceRun& ref) {
  int violations = 0;
  double worst = 0.0;
  for (const auto& row_set : ref.k1.rows) {
    for (const auto& r : row_set) {
      if (!(r.w_norm <= r.bound + 1e-6 + 1e-3 * r.bound)) ++violations;
      if (r.bound > 0.0) worst = std::max(worst, r.w_norm / r.bound);
    }
  }
  o.expect(violations == 0, std::to_string(violations) + " rows with |w| above the bound");
  o.note(std::to_string(ref.k1.rows.size() * ref.k1.y_slices.size()) + " rows, max |w|/bound " + sci(worst));
}

void ac6_constants(Outcome& o, const ReferenceRun& ref) {
  const auto& tr = ref.tr;
  const Grid1D& gy = ref.spec.grid.y;
  const std::size_t j0 = gy.nearest_index(0.0);
  const std::size_t jfar = gy.nearest_index(-16.0);
  const auto initial = harness::gronwall_constants_all(tr.eta.states[0], tr.u_plus.states[0], tr.u_minus.states[0], 1);
  double shape = 0.0;
  for (const auto& g : initial) {
    const double th = std::tanh(g.y);
    shape = std::max(shape, std::abs(g.C_k / initial[j0].C_k - (1.0 - th * th)));
  }
  o.expect(shape <= 1e-12, "C_k(y)/C_k(0) deviates from sech^2 by " + sci(shape));
  double worst = 0.0;
  for (std::size_t n = 0; n < tr.eta.times.size(); ++n) {
    const auto far = harness::gronwall_constants(tr.eta.states[n], tr.u_plus.states[n], tr.u_minus.states[n], jfar, 1,
                                                 tr.eta.times[n]);
    const auto centre = harness::gronwall_constants(tr.eta.states[n], tr.u_plus.states[n], tr.u_minus.states[n], j0,
                                                    1, tr.eta.times[n]);
    worst = std::max(worst, far.C_star / centre.C_star);
  }
  o.expect(worst < 1e-2, "C*(-16)/C*(0) reaches " + sci(worst));
  o.note("sech^2 profile within " + sci(shape) + ", max C* ratio " + sci(worst));
}

void ac10_determinism(Outcome& o, const VerifyOptions& opt, std::chrono::steady_clock::time_point start) {
  VerifyOptions quiet = opt;
  quiet.progress = nullptr;
  auto timed_run = [&] {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run_fast_suite(quiet);
    return std::pair{summary_text(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
  };
  const auto [first, s1] = timed_run();
  const auto [second, s2] = timed_run();
  o.expect(first == second, "fast-suite summaries differ between runs");
  o.expect(s1 < 60.0 && s2 < 60.0, "fast suite took " + sci(std::max(s1, s2)) + " s");
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(total < 900.0, "full run took " + sci(total) + " s");
  o.note("two fast-suite runs byte-identical, each under 60 s; full run under 900 s");
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt,
                                        std::optional<std::chrono::steady_clock::time_point> full_start) {
  const auto start = full_start.value_or(std::chrono::steady_clock::now());
  std::vector<CheckResult> out;
  out.push_back(timed("AC1", "linear RK4 order", opt, ac1_linear_order));
  out.push_back(timed("AC2", "solitary wave", opt, ac2_solitary));

  std::optional<ReferenceRun> ref;
  auto with_ref = [&](auto body) {
    return [&ref, body](Outcome& o) {
      if (!ref) ref.emplace(reference_run());
      body(o, *ref);
    };
  };
  out.push_back(timed("AC3", "w-equation residual", opt, with_ref(ac3_residual)));
  out.push_back(timed("AC4", "transverse localization", opt, with_ref(ac4_localization)));
  out.push_back(timed("AC5", "gronwall bound", opt, with_ref(ac5_gronwall)));
  out.push_back(timed("AC6", "constant profiles", opt, with_ref(ac6_constants)));
  out.push_back(timed("AC7", "P <= Q", opt, [&](Outcome& o) { detail::pq_inequality(o, opt.seed); }));
  out.push_back(timed("AC8", "kp correction", opt, detail::kp_correction_scan));
  out.push_back(timed("AC9", "norm oracles", opt, detail::norm_oracles));
  out.push_back(timed("AC10", "determinism and budget", opt, [&](Outcome& o) { ac10_determinism(o, opt, start); }));
  return out;
}

}  // namespace wavelab::verify
