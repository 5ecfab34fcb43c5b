#include "proxflow/setfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace proxflow {

namespace {

void check_index(int i, int d) {
  if (i < 0 || i >= d) {
    throw input_error("index " + std::to_string(i) + " out of range for d=" +
                      std::to_string(d));
  }
}

void check_nonneg(double w, const char* what) {
  if (!(w >= 0.0)) throw input_error(std::string(what) + " must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------------------
// MobiusTable

int MobiusTable::order() const {
  std::size_t k = 0;
  for (const auto& [set, v] : coeffs_)
    if (v != 0.0) k = std::max(k, set.size());
  return static_cast<int>(k);
}

void MobiusTable::add(const IndexSet& subset, double value) {
  if (value == 0.0) return;
  auto [it, inserted] = coeffs_.emplace(subset, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

double MobiusTable::coefficient(const IndexSet& subset) const {
  auto it = coeffs_.find(subset);
  return it == coeffs_.end() ? 0.0 : it->second;
}

double MobiusTable::reconstruct(const IndexSet& A) const {
  double total = 0.0;
  for (const auto& [set, v] : coeffs_)
    if (is_subset(set, A)) total += v;
  return total;
}

MobiusTable& MobiusTable::operator+=(const MobiusTable& other) {
  for (const auto& [set, v] : other.coeffs_) add(set, v);
  return *this;
}

// ---------------------------------------------------------------------------
// Construction

SetFunction::SetFunction(int d, Variant v)
    : d_(d), v_(std::make_shared<const Variant>(std::move(v))) {
  if (d < 0) throw input_error("ground set size must be nonnegative");
}

SetFunction SetFunction::group_cover(int d, std::vector<Group> groups) {
  std::vector<Group> kept;
  for (auto& g : groups) {
    check_nonneg(g.weight, "group weight");
    g.members = make_index_set(std::move(g.members));
    for (int i : g.members) check_index(i, d);
    if (g.weight > 0.0 && !g.members.empty()) kept.push_back(std::move(g));
  }
  return SetFunction(d, GroupCover{std::move(kept)});
}

SetFunction SetFunction::graph_cut(int d, std::vector<GraphCutEdge> edges) {
  for (auto& e : edges) {
    check_index(e.i, d);
    check_index(e.j, d);
    if (e.i == e.j) throw input_error("graph cut edge must join distinct nodes");
    check_nonneg(e.weight, "edge weight");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  return SetFunction(d, GraphCut{std::move(edges)});
}

SetFunction SetFunction::hypergraph_cut(int d, std::vector<Hyperedge> hyperedges) {
  for (auto& e : hyperedges) {
    check_nonneg(e.weight, "hyperedge weight");
    e.members = make_index_set(std::move(e.members));
    for (int i : e.members) check_index(i, d);
    if (e.members.size() < 2) throw input_error("hyperedge needs >= 2 members");
  }
  return SetFunction(d, HypergraphCut{std::move(hyperedges)});
}

SetFunction SetFunction::cubic_mobius(int d, CubicMobius coeffs) {
  for (const auto& [i, v] : coeffs.c1) check_index(i, d);
  for (const auto& [p, v] : coeffs.c2) {
    check_index(p.first, d);
    check_index(p.second, d);
    if (!(p.first < p.second)) throw input_error("pair keys must be sorted and distinct");
  }
  for (const auto& [t, v] : coeffs.c3) {
    for (int i : t) check_index(i, d);
    if (!(t[0] < t[1] && t[1] < t[2]))
      throw input_error("triple keys must be sorted and distinct");
  }
  return SetFunction(d, std::move(coeffs));
}

SetFunction SetFunction::weighted_truncation(std::vector<double> w, double y) {
  if (w.empty()) throw input_error("truncation needs d >= 1 weights");
  for (double wi : w) check_nonneg(wi, "truncation weight");
  check_nonneg(y, "truncation level");
  int d = static_cast<int>(w.size());
  return SetFunction(d, WeightedTruncation{std::move(w), y});
}

SetFunction SetFunction::sum(int d, std::vector<SetFunction> terms) {
  for (const auto& t : terms)
    if (t.dim() != d) throw input_error("sum terms must share the ground set");
  return SetFunction(d, SumOf{std::move(terms)});
}

SetFunction SetFunction::shifted(SetFunction base, double beta, std::vector<double> b) {
  if (static_cast<int>(b.size()) != base.dim())
    throw input_error("shift vector length must equal d");
  for (double bi : b) check_nonneg(bi, "shift direction entry");
  check_nonneg(beta, "shift magnitude");
  int d = base.dim();
  auto base_ptr = std::make_shared<const SetFunction>(std::move(base));
  return SetFunction(d, ShiftedBy{std::move(base_ptr), beta, std::move(b)});
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct EvalVisitor {
  const IndexSet& A;
  int d;

  double operator()(const GroupCover& f) const {
    double total = 0.0;
    for (const auto& g : f.groups) {
      bool hit = std::any_of(g.members.begin(), g.members.end(),
                             [&](int i) { return contains(A, i); });
      if (hit) total += g.weight;
    }
    return total;
  }

  double operator()(const GraphCut& f) const {
    double total = 0.0;
    for (const auto& e : f.edges)
      if (contains(A, e.i) != contains(A, e.j)) total += e.weight;
    return total;
  }

  double operator()(const HypergraphCut& f) const {
    double total = 0.0;
    for (const auto& e : f.hyperedges) {
      std::size_t inside = std::count_if(e.members.begin(), e.members.end(),
                                         [&](int i) { return contains(A, i); });
      if (inside > 0 && inside < e.members.size()) total += e.weight;
    }
    return total;
  }

  double operator()(const CubicMobius& f) const {
    double total = 0.0;
    for (const auto& [i, v] : f.c1)
      if (contains(A, i)) total += v;
    for (const auto& [p, v] : f.c2)
      if (contains(A, p.first) && contains(A, p.second)) total += v;
    for (const auto& [t, v] : f.c3)
      if (contains(A, t[0]) && contains(A, t[1]) && contains(A, t[2])) total += v;
    return total;
  }

  double operator()(const WeightedTruncation& f) const {
    double wa = 0.0;
    for (int i : A) wa += f.w[i];
    return std::min(wa, f.y);
  }

  double operator()(const SumOf& f) const {
    double total = 0.0;
    for (const auto& t : f.terms) total += t(A);
    return total;
  }

  double operator()(const ShiftedBy& f) const {
    double ba = 0.0;
    for (int i : A) ba += f.b[i];
    return (*f.base)(A) + f.beta * ba;
  }
};

}  // namespace

double SetFunction::operator()(const IndexSet& A) const {
  for (int i : A) check_index(i, d_);
  return std::visit(EvalVisitor{A, d_}, *v_);
}

double eval(const SetFunction& f, const IndexSet& A) { return f(A); }

// ---------------------------------------------------------------------------
// Möbius inversion

namespace {

constexpr int kGenericMobiusLimit = 20;

MobiusTable mobius_generic(const SetFunction& f) {
  int d = f.dim();
  if (d > kGenericMobiusLimit)
    throw capacity_error("generic Möbius inversion limited to d <= 20");
  std::uint32_t n = 1u << d;
  std::vector<double> coef(n);
  for (std::uint32_t m = 0; m < n; ++m) coef[m] = f(mask_to_set(m, d));
  // In-place subset Möbius transform.
  for (int i = 0; i < d; ++i)
    for (std::uint32_t m = 0; m < n; ++m)
      if (m & (1u << i)) coef[m] -= coef[m ^ (1u << i)];
  MobiusTable table(d);
  for (std::uint32_t m = 1; m < n; ++m)
    if (std::abs(coef[m]) > 0.0) table.add(mask_to_set(m, d), coef[m]);
  return table;
}

// min{|B ∩ e|, 1} on ground e has coefficient (-1)^{|Y|+1} at every nonempty
// Y ⊆ e; the "fully inside" indicator [e ⊆ B] has a single coefficient at e.
void add_hyperedge_coeffs(MobiusTable& table, const Hyperedge& e) {
  const auto& mem = e.members;
  int k = static_cast<int>(mem.size());
  if (k > 25) throw capacity_error("hyperedge too large for Möbius expansion");
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    IndexSet sub;
    for (int i = 0; i < k; ++i)
      if (m & (1u << i)) sub.push_back(mem[i]);
    int bits = static_cast<int>(sub.size());
    double c = e.weight * ((bits % 2 == 1) ? 1.0 : -1.0);
    if (bits == k) c -= e.weight;  // subtract the fully-contained indicator
    table.add(sub, c);
  }
}

struct MobiusVisitor {
  const SetFunction& f;

  MobiusTable operator()(const GraphCut& g) const {
    MobiusTable table(f.dim());
    for (const auto& e : g.edges) {
      table.add({e.i}, e.weight);
      table.add({e.j}, e.weight);
      table.add({e.i, e.j}, -2.0 * e.weight);
    }
    return table;
  }

  MobiusTable operator()(const HypergraphCut& h) const {
    MobiusTable table(f.dim());
    for (const auto& e : h.hyperedges) add_hyperedge_coeffs(table, e);
    return table;
  }

  MobiusTable operator()(const CubicMobius& c) const {
    MobiusTable table(f.dim());
    for (const auto& [i, v] : c.c1) table.add({i}, v);
    for (const auto& [p, v] : c.c2) table.add({p.first, p.second}, v);
    for (const auto& [t, v] : c.c3) table.add({t[0], t[1], t[2]}, v);
    return table;
  }

  MobiusTable operator()(const SumOf& s) const {
    MobiusTable table(f.dim());
    for (const auto& t : s.terms) table += mobius(t);
    return table;
  }

  MobiusTable operator()(const ShiftedBy& s) const {
    MobiusTable table = mobius(*s.base);
    for (int i = 0; i < f.dim(); ++i) table.add({i}, s.beta * s.b[i]);
    return table;
  }

  template <typename Other>
  MobiusTable operator()(const Other&) const {
    return mobius_generic(f);
  }
};

}  // namespace

MobiusTable mobius(const SetFunction& f) {
  return std::visit(MobiusVisitor{f}, f.variant());
}

// ---------------------------------------------------------------------------
// Lovász extension

double lovasz(const SetFunction& f, const std::vector<double>& w) {
  int d = f.dim();
  if (static_cast<int>(w.size()) != d)
    throw input_error("lovasz: vector length must equal d");
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  });
  double total = 0.0;
  double prev = 0.0;
  IndexSet prefix;
  for (int i : order) {
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), i), i);
    double cur = f(prefix);
    total += w[i] * (cur - prev);
    prev = cur;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Structural checks

bool is_submodular(const SetFunction& f, double tol) {
  int d = f.dim();
  if (d > 12) throw capacity_error("is_submodular limited to d <= 12");
  std::uint32_t n = 1u << d;
  std::vector<double> val(n);
  for (std::uint32_t m = 0; m < n; ++m) val[m] = f(mask_to_set(m, d));
  // Local exchange condition: F(A+i)+F(A+j) >= F(A+i+j)+F(A) for i,j not in A.
  for (std::uint32_t m = 0; m < n; ++m) {
    for (int i = 0; i < d; ++i) {
      if (m & (1u << i)) continue;
      for (int j = i + 1; j < d; ++j) {
        if (m & (1u << j)) continue;
        double lhs = val[m | (1u << i)] + val[m | (1u << j)];
        double rhs = val[m | (1u << i) | (1u << j)] + val[m];
        if (lhs < rhs - tol) return false;
      }
    }
  }
  return true;
}

bool is_nondecreasing(const SetFunction& f, double tol) {
  int d = f.dim();
  IndexSet full(d);
  std::iota(full.begin(), full.end(), 0);
  double fv = f(full);
  for (int i = 0; i < d; ++i) {
    IndexSet rest = set_difference(full, {i});
    if (f(rest) > fv + tol) return false;
  }
  return true;
}

}  // namespace proxflow
