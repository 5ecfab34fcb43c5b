#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "proxflow/maxflow.hpp"
#include "proxflow/separable.hpp"

namespace proxflow {

/// Nested minimizer chain A_0 ⊆ A_1 ⊆ ... ⊆ A_{k+1} with the parameter value
/// at which each consecutive pair separates.
struct CutChain {
  std::vector<IndexSet> sets;       // data indices, nested
  std::vector<double> breakpoints;  // size sets.size()-1, strictly increasing
  std::vector<double> f_values;     // F(A_j) per set
};

/// Per-data-node parametric source capacities phi_i(alpha), nondecreasing in
/// alpha, plus the balance solver and interval endpoints the search needs.
class ParamCaps {
 public:
  virtual ~ParamCaps() = default;

  virtual int dim() const = 0;
  virtual double phi_at(int i, double alpha) const = 0;

  /// alpha solving sum_{i in S} phi_i(alpha) = c.
  virtual BalanceResult balance(const IndexSet& S, double c) const = 0;

  /// Starting guess for the lowest alpha; `net` provides per-node margins.
  virtual double alpha_lower_guess(const FlowNetwork& net) const = 0;
  /// True when the guess is provably low enough (no verification loop).
  virtual bool exact_lower() const = 0;
  /// Whether the maximal minimizer at a candidate lowest alpha is acceptable
  /// as the bottom of the chain.
  virtual bool accept_start(const IndexSet& A0, double f_value) const = 0;

  virtual double alpha_upper() const = 0;

  /// True when phi is clamped at zero, so a zero-value chain gap means its
  /// nodes carry tau = 0 and share the previous level instead of owning a
  /// breakpoint of their own.
  virtual bool clamped_at_zero() const { return false; }

  /// tau for nodes above the last chain set; throws when such nodes are not
  /// allowed to exist (signed problems must end the chain at V).
  virtual double tail_tau(int i) const = 0;
};

/// Capacities phi_i = inverse of psi_i' clamped to [0, T_i]; the chain bottom
/// must be an F-zero set and nodes beyond the top rest at their thresholds.
class PNormCaps : public ParamCaps {
 public:
  PNormCaps(std::vector<double> z, double lambda, double r);

  int dim() const override { return static_cast<int>(pieces_.size()); }
  double phi_at(int i, double alpha) const override;
  BalanceResult balance(const IndexSet& S, double c) const override;
  double alpha_lower_guess(const FlowNetwork& net) const override;
  bool exact_lower() const override { return false; }
  bool accept_start(const IndexSet& A0, double f_value) const override;
  double alpha_upper() const override { return 0.0; }
  bool clamped_at_zero() const override { return true; }
  double tail_tau(int i) const override;

  const SeparablePiece& piece(int i) const { return pieces_.at(static_cast<std::size_t>(i)); }

 private:
  std::vector<SeparablePiece> pieces_;
};

/// Unclamped affine capacities phi_i = alpha/lambda^2 + z_i/lambda + beta for
/// the signed problem over the shifted base polytope; the chain must start at
/// the empty set and end at V.
class QuadCaps : public ParamCaps {
 public:
  QuadCaps(std::vector<double> z, double lambda, double beta, double f_full);

  int dim() const override { return static_cast<int>(pieces_.size()); }
  double phi_at(int i, double alpha) const override;
  BalanceResult balance(const IndexSet& S, double c) const override;
  double alpha_lower_guess(const FlowNetwork& net) const override;
  bool exact_lower() const override { return true; }
  bool accept_start(const IndexSet& A0, double f_value) const override;
  double alpha_upper() const override;
  double tail_tau(int i) const override;

 private:
  std::vector<QuadPiece> pieces_;
  double f_full_ = 0.0;
};

struct ParametricProblem {
  /// Representation network of the (already nondecreasing) set function,
  /// without parametric source arcs; solve_parametric attaches them.
  FlowNetwork network;
  std::shared_ptr<const ParamCaps> caps;
  /// Exact set-function values F(A); used for interval gaps and the chain.
  std::function<double(const IndexSet&)> f_value;
};

struct ParaResult {
  CutChain chain;
  std::vector<double> tau;  // length d
  FlowCounters counters;    // summed over every flow solve of the run
  double alpha0 = 0.0;
};

/// (alpha_0 guess, alpha_{k+1}).
std::pair<double, double> alpha_bounds(const ParametricProblem& problem);

/// Divide-and-conquer parametric max-flow: builds the minimizer chain by
/// recursive interval bisection at balance points, then recovers tau.
ParaResult solve_parametric(const ParametricProblem& problem, FlowOptions opt = {});

/// problem.network with parametric source arcs attached at fixed `alpha`,
/// plus nonnegativity offsets mirrored on the sink arcs (every cut shifts by
/// the same constant, so minimizers are unchanged).
FlowNetwork parametric_network(const ParametricProblem& problem, double alpha);

/// One cold max-flow of the network at fixed `alpha`; reference work unit for
/// comparing against the total work of a full parametric run.
FlowCounters cold_baseline(const ParametricProblem& problem, double alpha,
                           FlowOptions opt = {});

/// Exact per-gap balances: writes chain.breakpoints (merging levels whose
/// balance values coincide within 1e-10) and returns tau.
std::vector<double> recover_tau(CutChain& chain, const ParamCaps& caps);

}  // namespace proxflow
