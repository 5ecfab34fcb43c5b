#pragma once

#include <vector>

#include "proxflow/paraflow.hpp"

namespace proxflow {

/// prox_{λΩ}(z) for a structured penalty Ω built from a submodular function.
/// p ∈ (1, ∞]; p = ∞ (r = 1) gives the Lovász-extension penalty.
struct ProxProblem {
  std::vector<double> z;
  double lambda = 1.0;
  double p = 2.0;  // std::numeric_limits<double>::infinity() allowed
  SetFunction penalty;
};

struct ProxReport {
  int breakpoint_count = 0;
  FlowCounters counters;
  double wall_time_sec = 0.0;
  double alpha0 = 0.0;
  double beta = 0.0;     // monotonizing shift, 0 when the penalty is nondecreasing
  bool shifted = false;  // solved as a signed problem over the shifted base polytope
};

struct ProxResult {
  std::vector<double> w;
  std::vector<double> tau;  // dual certificate (un-shifted when beta > 0)
  CutChain chain;
  ProxReport report;
};

double conjugate_r(double p);

/// The parametric flow formulation behind prox(): representation network,
/// capacities, exact set-function values, plus the recovery constants.
/// Nondecreasing penalties solve directly; others solve the signed problem
/// over the base polytope of the beta-shifted function.
struct ParametricSetup {
  ParametricProblem para;
  double r = 1.0;
  double beta = 0.0;
  std::vector<double> b;  // shift direction, empty when not shifted
  bool shifted = false;
};

ParametricSetup build_parametric(const ProxProblem& problem);

ProxResult prox(const ProxProblem& problem, FlowOptions opt = {});

/// Penalty value for objective reporting with p = ∞: the Lovász extension at
/// |w| for nondecreasing F, and at w itself otherwise (so cut functions give
/// their total-variation forms).
double penalty_value_linf(const std::vector<double>& w, const SetFunction& F);

}  // namespace proxflow
