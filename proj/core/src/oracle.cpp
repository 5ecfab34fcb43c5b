#include "proxflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "proxflow/netrep.hpp"
#include "proxflow/separable.hpp"

namespace proxflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// Exhaustive submodular minimization

BruteSfmResult brute_sfm(const std::function<double(const IndexSet&)>& G, int d,
                         OracleBudget budget) {
  if (d < 0 || d > budget.max_d)
    throw capacity_error("brute_sfm: dimension exceeds the oracle budget");
  std::uint32_t full = d == 32 ? ~0u : ((1u << d) - 1u);
  std::vector<double> value(static_cast<std::size_t>(full) + 1);
  double best = kInf;
  for (std::uint32_t m = 0; m <= full; ++m) {
    value[m] = G(mask_to_set(m, d));
    best = std::min(best, value[m]);
  }
  std::uint32_t inter = full, uni = 0;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (value[m] <= best + 1e-10) {
      inter &= m;
      uni |= m;
    }
  }
  BruteSfmResult out;
  out.value = best;
  // For submodular inputs the optimal family is a lattice, so the
  // intersection and union are themselves optimal; fall back to extremal
  // cardinality among ties otherwise.
  if (value[inter] <= best + 1e-10) {
    out.minimal = mask_to_set(inter, d);
  } else {
    std::uint32_t pick = full;
    for (std::uint32_t m = 0; m <= full; ++m)
      if (value[m] <= best + 1e-10 &&
          mask_to_set(m, d).size() < mask_to_set(pick, d).size())
        pick = m;
    out.minimal = mask_to_set(pick, d);
  }
  if (value[uni] <= best + 1e-10) {
    out.maximal = mask_to_set(uni, d);
  } else {
    std::uint32_t pick = 0;
    for (std::uint32_t m = 0; m <= full; ++m)
      if (value[m] <= best + 1e-10 &&
          mask_to_set(m, d).size() > mask_to_set(pick, d).size())
        pick = m;
    out.maximal = mask_to_set(pick, d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition-algorithm prox

namespace {

struct DecompCtx {
  const ParamCaps& caps;
  OracleBudget budget;
  std::vector<double>& tau;

  // Minimize G(B) - sum_{i in B} phi_i(alpha) over B subseteq S, then split.
  void recurse(const IndexSet& S, const std::function<double(const IndexSet&)>& G) {
    if (S.empty()) return;
    double c = G(S);
    auto [alpha, degenerate] = caps.balance(S, std::max(c, 0.0));
    auto localG = [&](const IndexSet& local) {
      IndexSet B;
      for (int k : local) B.push_back(S[static_cast<std::size_t>(k)]);
      double v = G(B);
      for (int i : B) v -= caps.phi_at(i, alpha);
      return v;
    };
    BruteSfmResult r = brute_sfm(localG, static_cast<int>(S.size()), budget);
    IndexSet A;
    for (int k : r.maximal) A.push_back(S[static_cast<std::size_t>(k)]);

    if (A.size() == S.size()) {
      for (int i : S) tau[static_cast<std::size_t>(i)] = caps.phi_at(i, alpha);
      return;
    }
    if (A.empty()) {
      if (!degenerate)
        throw numerical_error("decomposition recursion stalled off-balance");
      // Demand exceeds every capacity: all coordinates rest at their caps.
      for (int i : S) tau[static_cast<std::size_t>(i)] = caps.tail_tau(i);
      return;
    }
    recurse(A, G);
    IndexSet rest = set_difference(S, A);
    double base = G(A);
    IndexSet Acopy = A;
    recurse(rest, [G, Acopy, base](const IndexSet& B) {
      return G(set_union(B, Acopy)) - base;
    });
  }
};

}  // namespace

std::vector<double> decomposition_prox(const ProxProblem& problem, OracleBudget budget) {
  int d = problem.penalty.dim();
  if (d > budget.max_d)
    throw capacity_error("decomposition_prox: dimension exceeds the oracle budget");
  if (static_cast<int>(problem.z.size()) != d)
    throw input_error("decomposition_prox: dimension mismatch");
  double r = conjugate_r(problem.p);
  IndexSet full(static_cast<std::size_t>(d));
  std::iota(full.begin(), full.end(), 0);

  std::vector<double> tau(static_cast<std::size_t>(d), 0.0);
  if (is_nondecreasing(problem.penalty)) {
    PNormCaps caps(problem.z, problem.lambda, r);
    SetFunction f = problem.penalty;
    DecompCtx ctx{caps, budget, tau};
    ctx.recurse(full, [f](const IndexSet& A) { return f(A); });
  } else {
    auto [shifted_f, shift] = make_nondecreasing(problem.penalty);
    QuadCaps caps(problem.z, problem.lambda, shift.beta, shifted_f(full));
    SetFunction f = shifted_f;
    DecompCtx ctx{caps, budget, tau};
    ctx.recurse(full, [f](const IndexSet& A) { return f(A); });
  }
  return tau;
}

std::vector<double> decomposition_prox_w(const ProxProblem& problem, OracleBudget budget) {
  std::vector<double> tau = decomposition_prox(problem, budget);
  double r = conjugate_r(problem.p);
  std::vector<double> w(tau.size());
  if (is_nondecreasing(problem.penalty)) {
    for (std::size_t i = 0; i < tau.size(); ++i) {
      double t = std::max(tau[i], 0.0);
      double mag = std::abs(problem.z[i]) - problem.lambda * std::pow(t, 1.0 / r);
      double s = (problem.z[i] > 0.0) - (problem.z[i] < 0.0);
      w[i] = s * std::max(mag, 0.0) + 0.0;
    }
  } else {
    auto [shifted_f, shift] = make_nondecreasing(problem.penalty);
    (void)shifted_f;
    for (std::size_t i = 0; i < tau.size(); ++i)
      w[i] = problem.z[i] - problem.lambda * (tau[i] - shift.beta * shift.b[i]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Representation and cut enumeration

namespace {

double cut_value(const FlowNetwork& net, const std::vector<char>& in_side,
                 const std::vector<double>& phi) {
  double v = 0.0;
  for (const auto& a : net.arcs) {
    if (!in_side[static_cast<std::size_t>(a.tail)] ||
        in_side[static_cast<std::size_t>(a.head)])
      continue;
    switch (a.cap.kind) {
      case Capacity::Finite: v += a.cap.value; break;
      case Capacity::Infinite: return kInf;
      case Capacity::Param:
        v += a.cap.value;
        if (a.cap.data >= 0 && a.cap.data < static_cast<int>(phi.size()))
          v += phi[static_cast<std::size_t>(a.cap.data)];
        break;
    }
  }
  return v;
}

}  // namespace

bool verify_representation(const FlowNetwork& net, const SetFunction& F, double tol,
                           OracleBudget budget) {
  if (net.d != F.dim()) throw input_error("verify_representation: dimension mismatch");
  std::vector<int> aux;
  for (int v = 0; v < net.node_count(); ++v)
    if (net.nodes[static_cast<std::size_t>(v)].kind == NodeKind::Aux) aux.push_back(v);
  int d = net.d, w = static_cast<int>(aux.size());
  if (d + w > budget.max_nodes)
    throw capacity_error("verify_representation: network exceeds the oracle budget");

  std::vector<double> no_phi;
  for (std::uint32_t am = 0; am < (1u << d); ++am) {
    IndexSet A = mask_to_set(am, d);
    double best = kInf;
    for (std::uint32_t ym = 0; ym < (1u << w); ++ym) {
      std::vector<char> side(static_cast<std::size_t>(net.node_count()), 0);
      side[static_cast<std::size_t>(net.source())] = 1;
      for (int i : A) side[static_cast<std::size_t>(net.find_data_node(i))] = 1;
      for (int k = 0; k < w; ++k)
        if (ym & (1u << k)) side[static_cast<std::size_t>(aux[static_cast<std::size_t>(k)])] = 1;
      best = std::min(best, cut_value(net, side, no_phi));
    }
    if (std::abs(best + net.offset - F(A)) > tol) return false;
  }
  return true;
}

BruteMincut brute_mincut(const FlowNetwork& net, const std::vector<double>& phi,
                         OracleBudget budget) {
  int n = net.node_count();
  int inner = n - 2;
  if (inner > budget.max_nodes)
    throw capacity_error("brute_mincut: network exceeds the oracle budget");
  std::vector<int> inner_ids;
  for (int v = 0; v < n; ++v)
    if (v != net.source() && v != net.sink()) inner_ids.push_back(v);

  BruteMincut out;
  out.value = kInf;
  for (std::uint32_t m = 0; m < (1u << inner); ++m) {
    std::vector<char> side(static_cast<std::size_t>(n), 0);
    side[static_cast<std::size_t>(net.source())] = 1;
    for (int k = 0; k < inner; ++k)
      if (m & (1u << k)) side[static_cast<std::size_t>(inner_ids[static_cast<std::size_t>(k)])] = 1;
    double v = cut_value(net, side, phi);
    if (v < out.value - 1e-9) {
      out.value = v;
      out.optimal_sides.clear();
    }
    if (v <= out.value + 1e-9) {
      std::vector<int> ids;
      for (int u = 0; u < n; ++u)
        if (side[static_cast<std::size_t>(u)]) ids.push_back(u);
      out.optimal_sides.push_back(std::move(ids));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weighted 1-D total variation

std::vector<double> fused_1d_oracle(const std::vector<double>& z,
                                    const std::vector<double>& a) {
  std::size_t d = z.size();
  if (d == 0) return {};
  if (a.size() + 1 != d)
    throw input_error("fused_1d_oracle: need one weight per consecutive pair");
  for (double ai : a)
    if (!(ai >= 0.0)) throw input_error("fused_1d_oracle: negative weight");
  if (d == 1) return z;

  // Derivative of the forward message: nondecreasing piecewise-linear f,
  // stored as knots (x, f(x)) with end slopes.
  struct Knot {
    double x, y;
  };
  std::vector<Knot> knots{{z[0], 0.0}};
  double slope_l = 1.0, slope_r = 1.0;
  std::vector<double> b_lo(d - 1), b_hi(d - 1);

  auto cross_left = [&](double level) {
    if (knots.front().y >= level)
      return knots.front().x - (knots.front().y - level) / slope_l;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      if (knots[k + 1].y >= level) {
        double dx = knots[k + 1].x - knots[k].x;
        double dy = knots[k + 1].y - knots[k].y;
        if (dy <= 0.0) return knots[k + 1].x;
        return knots[k].x + (level - knots[k].y) * dx / dy;
      }
    }
    return knots.back().x + (level - knots.back().y) / slope_r;
  };
  auto cross_right = [&](double level) {
    if (knots.back().y <= level)
      return knots.back().x + (level - knots.back().y) / slope_r;
    for (std::size_t k = knots.size() - 1; k > 0; --k) {
      if (knots[k - 1].y <= level) {
        double dx = knots[k].x - knots[k - 1].x;
        double dy = knots[k].y - knots[k - 1].y;
        if (dy <= 0.0) return knots[k - 1].x;
        return knots[k - 1].x + (level - knots[k - 1].y) * dx / dy;
      }
    }
    return knots.front().x - (knots.front().y - level) / slope_l;
  };

  for (std::size_t i = 0; i + 1 < d; ++i) {
    double lo = cross_left(-a[i]);
    double hi = cross_right(a[i]);
    b_lo[i] = lo;
    b_hi[i] = hi;
    std::vector<Knot> next{{lo, -a[i]}};
    for (const Knot& k : knots)
      if (k.x > lo && k.x < hi) next.push_back(k);
    next.push_back({hi, a[i]});
    knots = std::move(next);
    slope_l = slope_r = 0.0;
    for (Knot& k : knots) k.y += k.x - z[i + 1];
    slope_l += 1.0;
    slope_r += 1.0;
  }

  std::vector<double> w(d);
  w[d - 1] = cross_left(0.0);
  for (std::size_t i = d - 1; i > 0; --i)
    w[i - 1] = std::clamp(w[i], b_lo[i - 1], b_hi[i - 1]);
  return w;
}

}  // namespace proxflow
