#pragma once

#include <vector>

#include "proxflow/prox.hpp"

namespace proxflow {

/// min_w 0.5 * ||X w - y||^2 + lambda * Omega(w). lambda = 0 turns the
/// penalty off entirely (plain least squares).
struct LeastSquaresTask {
  std::vector<std::vector<double>> X;  // n rows of length d
  std::vector<double> y;               // length n
  double lambda = 1.0;
  double p = 2.0;
  SetFunction penalty;
  int max_iters = 500;
  double tolerance = 1e-8;  // relative objective change
};

struct FistaResult {
  std::vector<double> w;
  std::vector<double> objective;  // one value per iteration, nonincreasing
  double lipschitz = 0.0;
  int iterations = 0;
  int restarts = 0;
  double fixed_point_residual = 0.0;  // ||w - prox(w - grad/L)||_inf
  /// True when the reported objective omits the penalty term (p finite and
  /// not representable in closed form).
  bool smooth_only = false;
};

/// FISTA with power-iteration Lipschitz estimate and momentum restart
/// whenever the objective increases.
FistaResult fista(const LeastSquaresTask& task, FlowOptions opt = {});

}  // namespace proxflow
