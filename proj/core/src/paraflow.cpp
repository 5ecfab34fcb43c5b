#include "proxflow/paraflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace proxflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// PNormCaps

PNormCaps::PNormCaps(std::vector<double> z, double lambda, double r) {
  if (!(lambda > 0.0)) throw input_error("lambda must be positive");
  if (!(r >= 1.0)) throw input_error("r must be at least 1");
  pieces_.reserve(z.size());
  for (double zi : z) pieces_.push_back({zi, lambda, r});
}

double PNormCaps::phi_at(int i, double alpha) const {
  return phi(std::min(alpha, 0.0), pieces_.at(static_cast<std::size_t>(i)));
}

BalanceResult PNormCaps::balance(const IndexSet& S, double c) const {
  std::vector<SeparablePiece> sub;
  sub.reserve(S.size());
  for (int i : S) sub.push_back(pieces_.at(static_cast<std::size_t>(i)));
  return balanced_alpha(sub, c);
}

double PNormCaps::alpha_lower_guess(const FlowNetwork& net) const {
  double guess = kInf;
  for (auto [node, data] : net.data_nodes()) {
    double sink = 0.0, inflow = 0.0;
    bool unbounded = false;
    for (const auto& a : net.arcs) {
      if (a.cap.kind == Capacity::Param) continue;
      if (a.tail == node && a.head == net.sink()) {
        if (a.cap.kind == Capacity::Infinite) unbounded = true;
        sink += a.cap.kind == Capacity::Finite ? a.cap.value : 0.0;
      }
      if (a.head == node) {
        if (a.cap.kind == Capacity::Infinite) {
          unbounded = true;
          break;
        }
        inflow += a.cap.value;
      }
    }
    if (unbounded) continue;
    double v = psi_prime_extended(sink - inflow,
                                  pieces_.at(static_cast<std::size_t>(data)));
    if (std::isfinite(v)) guess = std::min(guess, v - 1.0);
  }
  if (!std::isfinite(guess)) {
    double zmax = 0.0, lambda = pieces_.empty() ? 1.0 : pieces_.front().lambda;
    for (const auto& p : pieces_) zmax = std::max(zmax, std::abs(p.z));
    guess = -1.0 - lambda * lambda - lambda * zmax;
  }
  return std::min(guess, 0.0);
}

bool PNormCaps::accept_start(const IndexSet&, double f_value) const {
  return f_value <= 1e-9;
}

double PNormCaps::tail_tau(int i) const {
  return pieces_.at(static_cast<std::size_t>(i)).threshold();
}

// ---------------------------------------------------------------------------
// QuadCaps

QuadCaps::QuadCaps(std::vector<double> z, double lambda, double beta, double f_full)
    : f_full_(f_full) {
  if (!(lambda > 0.0)) throw input_error("lambda must be positive");
  pieces_.reserve(z.size());
  for (double zi : z) pieces_.push_back({zi / lambda + beta, lambda});
}

double QuadCaps::phi_at(int i, double alpha) const {
  return quad_phi(alpha, pieces_.at(static_cast<std::size_t>(i)));
}

BalanceResult QuadCaps::balance(const IndexSet& S, double c) const {
  std::vector<QuadPiece> sub;
  sub.reserve(S.size());
  for (int i : S) sub.push_back(pieces_.at(static_cast<std::size_t>(i)));
  return {balanced_alpha_quad(sub, c), false};
}

double QuadCaps::alpha_lower_guess(const FlowNetwork&) const {
  double cmax = -kInf, lambda = pieces_.front().lambda;
  for (const auto& p : pieces_) cmax = std::max(cmax, p.center);
  return -lambda * lambda * cmax - 1.0;
}

bool QuadCaps::accept_start(const IndexSet& A0, double) const { return A0.empty(); }

double QuadCaps::alpha_upper() const {
  double cmin = kInf, lambda = pieces_.front().lambda;
  for (const auto& p : pieces_) cmin = std::min(cmin, p.center);
  return lambda * lambda * (f_full_ - cmin) + 1.0;
}

double QuadCaps::tail_tau(int) const {
  throw numerical_error("signed parametric chain did not reach the full ground set");
}

// ---------------------------------------------------------------------------
// Divide and conquer

namespace {

struct Engine {
  const ParametricProblem& prob;
  FlowOptions opt;
  FlowCounters counters;
  std::vector<IndexSet> sets;
  int depth_limit = 0;

  std::vector<double> phis(double alpha) const {
    int d = prob.caps->dim();
    std::vector<double> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      v[static_cast<std::size_t>(i)] = prob.caps->phi_at(i, alpha);
    return v;
  }

  void slice(const FlowNetwork& net, const std::vector<NetFlowEntry>& f_l,
             double a_l, double a_u, const IndexSet& A_l, const IndexSet& A_u,
             int depth) {
    if (depth > depth_limit)
      throw numerical_error("parametric recursion exceeded its depth bound");
    IndexSet U = set_difference(A_u, A_l);
    if (U.empty()) return;
    double gap = prob.f_value(A_u) - prob.f_value(A_l);
    if (gap < -1e-9) throw numerical_error("parametric recursion met a negative gap");
    auto [alpha, degenerate] = prob.caps->balance(U, std::max(gap, 0.0));
    if (degenerate)
      throw numerical_error("gap " + std::to_string(gap) +
                            " is unattainable by the parametric capacities");
    if (!(alpha > -kInf)) return;  // zero gap, all tau in it vanish
    alpha = std::clamp(alpha, a_l, a_u);

    Preflow pf(net, opt);
    pf.set_param(phis(alpha));
    pf.load_flow(f_l);
    pf.solve();
    Cut cmin = pf.min_cut(CutSide::Minimal);
    Cut cmax = pf.min_cut(CutSide::Maximal);
    counters += pf.counters();
    if (!is_subset(cmin.data, cmax.data))
      throw numerical_error("minimal cut escapes the maximal cut");
    if (cmin.data.empty() && cmax.data == U) return;  // single breakpoint here

    if (!cmin.data.empty()) sets.push_back(set_union(A_l, cmin.data));
    if (cmax.data.size() < U.size()) sets.push_back(set_union(A_l, cmax.data));

    if (!cmin.data.empty() && cmin.data.size() < U.size()) {
      std::vector<char> keep(static_cast<std::size_t>(net.node_count()), 0);
      for (int v : cmin.source_side) keep[static_cast<std::size_t>(v)] = 1;
      std::vector<int> shrink;
      for (int v = 0; v < net.node_count(); ++v)
        if (!keep[static_cast<std::size_t>(v)]) shrink.push_back(v);
      Contraction c = contract(net, shrink);
      slice(c.net, map_flow(c, f_l), a_l, alpha, A_l, set_union(A_l, cmin.data),
            depth + 1);
    }
    if (!cmax.data.empty() && cmax.data.size() < U.size()) {
      Contraction c = contract(net, cmax.source_side);
      slice(c.net, map_flow(c, pf.net_flows()), alpha, a_u,
            set_union(A_l, cmax.data), A_u, depth + 1);
    }
  }
};

}  // namespace

std::pair<double, double> alpha_bounds(const ParametricProblem& problem) {
  return {problem.caps->alpha_lower_guess(problem.network),
          problem.caps->alpha_upper()};
}

FlowNetwork parametric_network(const ParametricProblem& problem, double alpha) {
  const ParamCaps& caps = *problem.caps;
  int d = caps.dim();
  FlowNetwork net = problem.network;
  std::vector<double> offsets(static_cast<std::size_t>(d), 0.0);
  bool any_offset = false;
  for (int i = 0; i < d; ++i) {
    offsets[static_cast<std::size_t>(i)] = std::max(0.0, -caps.phi_at(i, alpha));
    any_offset |= offsets[static_cast<std::size_t>(i)] > 0.0;
  }
  // Per-node constants on both the source and sink arc shift every cut by
  // the same total, keeping minimizers intact while capacities stay >= 0.
  for (auto [node, data] : net.data_nodes())
    net.arcs.push_back({net.source(), node,
                        Capacity::param(data, offsets[static_cast<std::size_t>(data)])});
  if (any_offset) net.add_modular_sink(offsets);
  net.merge_parallel_arcs();
  return net;
}

FlowCounters cold_baseline(const ParametricProblem& problem, double alpha,
                           FlowOptions opt) {
  const ParamCaps& caps = *problem.caps;
  int d = caps.dim();
  Preflow pf(parametric_network(problem, alpha), opt);
  std::vector<double> phis(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    phis[static_cast<std::size_t>(i)] = caps.phi_at(i, alpha);
  pf.set_param(phis);
  pf.solve();
  return pf.counters();
}

ParaResult solve_parametric(const ParametricProblem& problem, FlowOptions opt) {
  const ParamCaps& caps = *problem.caps;
  int d = caps.dim();
  if (d != problem.network.d)
    throw input_error("capacity dimension does not match the network");

  Engine eng{problem, opt, {}, {}, 0};
  eng.depth_limit = problem.network.node_count() + 2;

  auto [a0, a_up] = alpha_bounds(problem);
  a0 = std::min(a0, a_up);

  // Chain bottom: lower a0 until its maximal minimizer qualifies.
  std::optional<Preflow> pf0;
  FlowNetwork net;
  Cut cmax0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 60)
      throw numerical_error("failed to verify the bottom of the parameter range");
    net = parametric_network(problem, a0);
    pf0.emplace(net, opt);
    pf0->set_param(eng.phis(a0));
    pf0->solve();
    eng.counters += pf0->counters();
    cmax0 = pf0->min_cut(CutSide::Maximal);
    if (caps.accept_start(cmax0.data, problem.f_value(cmax0.data))) break;
    if (caps.exact_lower())
      throw numerical_error("exact lower parameter bound rejected its own start");
    a0 = 2.0 * a0 - 1.0;
  }
  const IndexSet A0 = cmax0.data;
  std::vector<NetFlowEntry> f0 = pf0->net_flows();

  // Chain top at a_up, warm from the bottom flow on the bottom-contracted net.
  Contraction c1 = contract(net, cmax0.source_side);
  Preflow pf1(c1.net, opt);
  pf1.set_param(eng.phis(a_up));
  std::vector<NetFlowEntry> f0m = map_flow(c1, f0);
  pf1.load_flow(f0m);
  pf1.solve();
  eng.counters += pf1.counters();
  Cut cmax_top = pf1.min_cut(CutSide::Maximal);
  Cut cmin_top = pf1.min_cut(CutSide::Minimal);
  IndexSet A_top = set_union(A0, cmax_top.data);
  IndexSet A_mid = set_union(A0, cmin_top.data);

  eng.sets.push_back(A0);
  eng.sets.push_back(A_mid);
  eng.sets.push_back(A_top);
  if (!cmin_top.data.empty()) {
    std::vector<char> keep(static_cast<std::size_t>(c1.net.node_count()), 0);
    for (int v : cmin_top.source_side) keep[static_cast<std::size_t>(v)] = 1;
    std::vector<int> shrink;
    for (int v = 0; v < c1.net.node_count(); ++v)
      if (!keep[static_cast<std::size_t>(v)]) shrink.push_back(v);
    Contraction c2 = contract(c1.net, shrink);
    eng.slice(c2.net, map_flow(c2, f0m), a0, a_up, A0, A_mid, 0);
  }

  // Assemble the nested chain.
  std::sort(eng.sets.begin(), eng.sets.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  eng.sets.erase(std::unique(eng.sets.begin(), eng.sets.end()), eng.sets.end());
  for (std::size_t j = 1; j < eng.sets.size(); ++j)
    if (!is_subset(eng.sets[j - 1], eng.sets[j]))
      throw numerical_error("parametric recursion produced a non-nested family");

  ParaResult result;
  result.alpha0 = a0;
  result.counters = eng.counters;
  result.chain.sets = std::move(eng.sets);
  result.chain.f_values.reserve(result.chain.sets.size());
  for (const auto& A : result.chain.sets)
    result.chain.f_values.push_back(problem.f_value(A));
  result.tau = recover_tau(result.chain, caps);
  return result;
}

std::vector<double> recover_tau(CutChain& chain, const ParamCaps& caps) {
  int d = caps.dim();
  if (chain.sets.empty()) throw input_error("recover_tau: empty chain");
  std::vector<double> tau(static_cast<std::size_t>(d), 0.0);
  std::vector<double> bps;
  IndexSet prev;
  double f_prev = 0.0;
  for (std::size_t j = 0; j < chain.sets.size(); ++j) {
    IndexSet S = set_difference(chain.sets[j], prev);
    double c = chain.f_values[j] - f_prev;
    if (j > 0 && c <= 1e-9 && caps.clamped_at_zero()) {
      // Zero gap: these nodes ride along for free, tau = 0, and the set
      // below them is not a real level. Mark the breakpoint for removal.
      bps.push_back(-std::numeric_limits<double>::infinity());
      for (int i : S) tau[static_cast<std::size_t>(i)] = 0.0;
    } else if (!S.empty() || j > 0) {
      auto [alpha, degenerate] = caps.balance(S, std::max(c, 0.0));
      if (degenerate)
        throw numerical_error("chain gap " + std::to_string(c) +
                              " admits no balancing parameter");
      if (j > 0) bps.push_back(alpha);
      for (int i : S) tau[static_cast<std::size_t>(i)] = caps.phi_at(i, alpha);
    }
    prev = chain.sets[j];
    f_prev = chain.f_values[j];
  }
  for (int i = 0; i < d; ++i)
    if (!contains(prev, i)) tau[static_cast<std::size_t>(i)] = caps.tail_tau(i);

  // Drop the separating sets under zero gaps.
  for (std::size_t j = 0; j < bps.size();) {
    if (std::isinf(bps[j])) {
      bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(j));
      chain.sets.erase(chain.sets.begin() + static_cast<std::ptrdiff_t>(j));
      chain.f_values.erase(chain.f_values.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      ++j;
    }
  }

  // Merge levels whose breakpoints coincide.
  for (std::size_t j = 1; j < bps.size();) {
    if (bps[j] <= bps[j - 1] + 1e-10) {
      if (bps[j] < bps[j - 1] - 1e-6)
        throw numerical_error("chain breakpoints are out of order");
      bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(j));
      chain.sets.erase(chain.sets.begin() + static_cast<std::ptrdiff_t>(j));
      chain.f_values.erase(chain.f_values.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      ++j;
    }
  }
  chain.breakpoints = std::move(bps);
  return tau;
}

}  // namespace proxflow
