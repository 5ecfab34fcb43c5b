#pragma once

#include <functional>
#include <vector>

#include "proxflow/maxflow.hpp"
#include "proxflow/prox.hpp"

namespace proxflow {

/// Size guard so the exponential-time references cannot run on production
/// instances by accident.
struct OracleBudget {
  int max_d = 12;
  int max_nodes = 20;  // enumeration cap for cuts / representation checks
};

struct BruteSfmResult {
  double value = 0.0;
  IndexSet minimal;
  IndexSet maximal;
};

/// Exhaustive minimization of an arbitrary set function over 2^d subsets;
/// minimal and maximal minimizers by inclusion among ties (tolerance 1e-10).
BruteSfmResult brute_sfm(const std::function<double(const IndexSet&)>& G, int d,
                         OracleBudget budget = {});

/// Groenevelt-style recursive prox: balance, exhaustive minimization, split
/// into restriction and contraction. Returns the dual point tau (on the
/// shifted function when the penalty is not nondecreasing).
std::vector<double> decomposition_prox(const ProxProblem& problem,
                                       OracleBudget budget = {});

/// decomposition_prox followed by the same primal recovery as the main path.
std::vector<double> decomposition_prox_w(const ProxProblem& problem,
                                         OracleBudget budget = {});

/// Exhaustive check of F(A) = min_Y cut({s} ∪ A ∪ Y) + offset over all A and Y.
bool verify_representation(const FlowNetwork& net, const SetFunction& F,
                           double tol = 1e-9, OracleBudget budget = {});

struct BruteMincut {
  double value = 0.0;
  /// Every optimal source side, as sorted node-id sets containing the source.
  std::vector<std::vector<int>> optimal_sides;
};

/// Enumerates all 2^(n-2) cuts; parametric arcs use phi[data] (0 if omitted).
BruteMincut brute_mincut(const FlowNetwork& net, const std::vector<double>& phi = {},
                         OracleBudget budget = {});

/// Exact weighted 1-D total-variation prox (chain fused penalty):
/// argmin ½Σ(w_i - z_i)² + Σ a_i |w_{i+1} - w_i|, by the forward
/// derivative-clipping dynamic program. Independent of all flow code.
std::vector<double> fused_1d_oracle(const std::vector<double>& z,
                                    const std::vector<double>& a);

}  // namespace proxflow
