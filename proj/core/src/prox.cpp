#include "proxflow/prox.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "proxflow/netrep.hpp"

namespace proxflow {

double conjugate_r(double p) {
  if (std::isinf(p)) return 1.0;
  if (!(p > 1.0)) throw input_error("p must lie in (1, inf]");
  return p / (p - 1.0);
}

namespace {

int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

ParametricSetup build_parametric(const ProxProblem& problem) {
  int d = problem.penalty.dim();
  if (static_cast<int>(problem.z.size()) != d)
    throw input_error("prox: z length does not match the penalty ground set");
  if (!(problem.lambda > 0.0)) throw input_error("prox: lambda must be positive");

  ParametricSetup setup;
  setup.r = conjugate_r(problem.p);
  if (is_nondecreasing(problem.penalty)) {
    setup.para.network = represent(problem.penalty);
    setup.para.caps =
        std::make_shared<PNormCaps>(problem.z, problem.lambda, setup.r);
    SetFunction f = problem.penalty;
    setup.para.f_value = [f](const IndexSet& A) { return f(A); };
  } else {
    auto [shifted_f, shift] = make_nondecreasing(problem.penalty);
    IndexSet full(static_cast<std::size_t>(d));
    std::iota(full.begin(), full.end(), 0);
    setup.para.network = represent(shifted_f);
    setup.para.caps = std::make_shared<QuadCaps>(problem.z, problem.lambda,
                                                 shift.beta, shifted_f(full));
    SetFunction f = shifted_f;
    setup.para.f_value = [f](const IndexSet& A) { return f(A); };
    setup.beta = shift.beta;
    setup.b = shift.b;
    setup.shifted = true;
  }
  return setup;
}

ProxResult prox(const ProxProblem& problem, FlowOptions opt) {
  auto t0 = std::chrono::steady_clock::now();
  int d = problem.penalty.dim();
  ParametricSetup setup = build_parametric(problem);
  double r = setup.r;

  ProxResult result;
  if (!setup.shifted) {
    ParaResult sol = solve_parametric(setup.para, opt);

    result.tau = sol.tau;
    result.w.resize(problem.z.size());
    for (int i = 0; i < d; ++i) {
      auto ii = static_cast<std::size_t>(i);
      double t = std::max(sol.tau[ii], 0.0);
      double mag = std::abs(problem.z[ii]) - problem.lambda * std::pow(t, 1.0 / r);
      result.w[ii] = sign(problem.z[ii]) * std::max(mag, 0.0) + 0.0;
    }
    result.chain = std::move(sol.chain);
    result.report.counters = sol.counters;
    result.report.alpha0 = sol.alpha0;
  } else {
    ParaResult sol = solve_parametric(setup.para, opt);

    result.tau.resize(problem.z.size());
    result.w.resize(problem.z.size());
    for (int i = 0; i < d; ++i) {
      auto ii = static_cast<std::size_t>(i);
      double s = sol.tau[ii] - setup.beta * setup.b[ii];
      result.tau[ii] = s;
      result.w[ii] = problem.z[ii] - problem.lambda * s;
    }
    result.chain = std::move(sol.chain);
    result.report.counters = sol.counters;
    result.report.alpha0 = sol.alpha0;
    result.report.beta = setup.beta;
    result.report.shifted = true;
  }
  result.report.breakpoint_count = static_cast<int>(result.chain.breakpoints.size());
  result.report.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

double penalty_value_linf(const std::vector<double>& w, const SetFunction& F) {
  if (static_cast<int>(w.size()) != F.dim())
    throw input_error("penalty value: dimension mismatch");
  if (const auto* gc = std::get_if<GraphCut>(&F.variant())) {
    double v = 0.0;
    for (const auto& e : gc->edges)
      v += e.weight * std::abs(w[static_cast<std::size_t>(e.i)] -
                               w[static_cast<std::size_t>(e.j)]);
    return v;
  }
  if (const auto* hc = std::get_if<HypergraphCut>(&F.variant())) {
    double v = 0.0;
    for (const auto& e : hc->hyperedges) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (int i : e.members) {
        lo = std::min(lo, w[static_cast<std::size_t>(i)]);
        hi = std::max(hi, w[static_cast<std::size_t>(i)]);
      }
      v += e.weight * (hi - lo);
    }
    return v;
  }
  if (is_nondecreasing(F)) {
    std::vector<double> a(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) a[i] = std::abs(w[i]);
    return lovasz(F, a);
  }
  return lovasz(F, w);
}

}  // namespace proxflow
