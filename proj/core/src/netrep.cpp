#include "proxflow/netrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace proxflow {

namespace {

constexpr double kCapTol = 1e-9;

Capacity merge_caps(const Capacity& a, const Capacity& b) {
  if (a.kind == Capacity::Infinite || b.kind == Capacity::Infinite)
    return Capacity::infinite();
  if (a.kind == Capacity::Param && b.kind == Capacity::Param)
    throw input_error("two parametric arcs between the same node pair");
  if (a.kind == Capacity::Param) return Capacity::param(a.data, a.value + b.value);
  if (b.kind == Capacity::Param) return Capacity::param(b.data, b.value + a.value);
  return Capacity::finite(a.value + b.value);
}

}  // namespace

// ---------------------------------------------------------------------------
// FlowNetwork

FlowNetwork FlowNetwork::empty(int d) {
  if (d < 1) throw input_error("network needs d >= 1");
  FlowNetwork net;
  net.d = d;
  net.nodes.push_back({NodeKind::Source, -1});
  net.nodes.push_back({NodeKind::Sink, -1});
  for (int i = 0; i < d; ++i) net.nodes.push_back({NodeKind::Data, i});
  return net;
}

int FlowNetwork::aux_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeId& n) {
    return n.kind == NodeKind::Aux;
  }));
}

int FlowNetwork::find_data_node(int data_index) const {
  for (int u = 0; u < node_count(); ++u)
    if (nodes[u].kind == NodeKind::Data && nodes[u].index == data_index) return u;
  return -1;
}

std::vector<std::pair<int, int>> FlowNetwork::data_nodes() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < node_count(); ++u)
    if (nodes[u].kind == NodeKind::Data) out.emplace_back(u, nodes[u].index);
  return out;
}

int FlowNetwork::add_aux_node() {
  int ordinal = aux_count();
  nodes.push_back({NodeKind::Aux, ordinal});
  return node_count() - 1;
}

void FlowNetwork::add_arc(int tail, int head, Capacity cap) {
  if (tail < 0 || tail >= node_count() || head < 0 || head >= node_count() ||
      tail == head)
    throw input_error("arc endpoints out of range");
  if (cap.kind == Capacity::Finite && !(cap.value >= 0.0))
    throw input_error("negative arc capacity");
  if (cap.kind == Capacity::Finite && cap.value == 0.0) return;
  arcs.push_back({tail, head, cap});
}

void FlowNetwork::merge_parallel_arcs() {
  std::map<std::pair<int, int>, Capacity> merged;
  for (const auto& a : arcs) {
    auto key = std::make_pair(a.tail, a.head);
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, a.cap);
    else
      it->second = merge_caps(it->second, a.cap);
  }
  arcs.clear();
  for (const auto& [key, cap] : merged) arcs.push_back({key.first, key.second, cap});
}

void FlowNetwork::add_parametric_source_arcs() {
  for (auto [node, data] : data_nodes()) arcs.push_back({source(), node, Capacity::param(data)});
  merge_parallel_arcs();
}

void FlowNetwork::add_modular_sink(const std::vector<double>& m) {
  if (static_cast<int>(m.size()) != d)
    throw input_error("modular term length must equal d");
  for (auto [node, data] : data_nodes()) {
    if (m[data] < 0.0) throw input_error("modular sink addition must be nonnegative");
    if (m[data] > 0.0) arcs.push_back({node, sink(), Capacity::finite(m[data])});
  }
  merge_parallel_arcs();
}

// ---------------------------------------------------------------------------
// Network constructions

FlowNetwork represent_truncation(const std::vector<double>& w, double y) {
  for (double wi : w)
    if (!(wi >= 0.0)) throw input_error("truncation weights must be nonnegative");
  if (!(y >= 0.0)) throw input_error("truncation level must be nonnegative");
  FlowNetwork net = FlowNetwork::empty(static_cast<int>(w.size()));
  int u = net.add_aux_node();
  for (int i = 0; i < net.d; ++i)
    net.add_arc(net.find_data_node(i), u, Capacity::finite(w[i]));
  net.add_arc(u, net.sink(), Capacity::finite(y));
  net.offset = 0.0;  // no source arcs
  return net;
}

namespace {

struct Order3Coeffs {
  std::vector<double> c1;
  std::map<std::pair<int, int>, double> c2;
  std::map<IndexSet, double> c3;
};

Order3Coeffs split_order3(const MobiusTable& table) {
  Order3Coeffs out;
  out.c1.assign(table.dim(), 0.0);
  for (const auto& [set, v] : table.coefficients()) {
    switch (set.size()) {
      case 1:
        out.c1[set[0]] += v;
        break;
      case 2:
        out.c2[{set[0], set[1]}] += v;
        break;
      case 3:
        out.c3[set] += v;
        break;
      default:
        throw input_error("order-3 construction given a coefficient of order " +
                          std::to_string(set.size()));
    }
  }
  return out;
}

}  // namespace

FlowNetwork represent_order3(const MobiusTable& coeffs, double tol) {
  Order3Coeffs c = split_order3(coeffs);
  FlowNetwork net = FlowNetwork::empty(coeffs.dim());

  // H(A) = sum of positive third-order coefficients over triples containing A.
  std::vector<double> h1(net.d, 0.0);
  std::map<std::pair<int, int>, double> h2;
  for (const auto& [t, v] : c.c3) {
    if (v <= 0.0) continue;
    for (int i : t) h1[i] += v;
    h2[{t[0], t[1]}] += v;
    h2[{t[0], t[2]}] += v;
    h2[{t[1], t[2]}] += v;
  }

  double source_total = 0.0;
  for (int i = 0; i < net.d; ++i) {
    double lin = c.c1[i] - h1[i];
    int v = net.find_data_node(i);
    if (lin > 0.0) net.add_arc(v, net.sink(), Capacity::finite(lin));
    if (lin < 0.0) {
      net.add_arc(net.source(), v, Capacity::finite(-lin));
      source_total += -lin;
    }
  }

  auto pair_weight = [&](const std::pair<int, int>& p) {
    double w = 0.0;
    if (auto it = c.c2.find(p); it != c.c2.end()) w -= it->second;
    if (auto it = h2.find(p); it != h2.end()) w -= it->second;
    return w;
  };
  // Every pair touched by a second-order coefficient or a positive triple.
  std::map<std::pair<int, int>, bool> touched;
  for (const auto& [p, v] : c.c2) touched[p] = true;
  for (const auto& [p, v] : h2) touched[p] = true;
  for (const auto& [p, dummy] : touched) {
    double w = pair_weight(p);
    if (w < -tol)
      throw input_error("order-3 construction: negative pair capacity, function "
                        "is not submodular");
    if (w <= 0.0) continue;
    int node = net.add_aux_node();
    net.add_arc(net.source(), node, Capacity::finite(w));
    source_total += w;
    net.add_arc(node, net.find_data_node(p.first), Capacity::infinite());
    net.add_arc(node, net.find_data_node(p.second), Capacity::infinite());
  }

  for (const auto& [t, v] : c.c3) {
    if (v == 0.0) continue;
    int node = net.add_aux_node();
    if (v > 0.0) {
      net.add_arc(node, net.sink(), Capacity::finite(v));
      for (int i : t) net.add_arc(net.find_data_node(i), node, Capacity::infinite());
    } else {
      net.add_arc(net.source(), node, Capacity::finite(-v));
      source_total += -v;
      for (int i : t) net.add_arc(node, net.find_data_node(i), Capacity::infinite());
    }
  }

  net.offset = -source_total;
  net.merge_parallel_arcs();
  return net;
}

FlowNetwork represent_negative_terms(const MobiusTable& coeffs) {
  FlowNetwork net = FlowNetwork::empty(coeffs.dim());
  double source_total = 0.0;
  for (const auto& [set, v] : coeffs.coefficients()) {
    if (set.size() == 1) {
      int node = net.find_data_node(set[0]);
      if (v > 0.0) net.add_arc(node, net.sink(), Capacity::finite(v));
      if (v < 0.0) {
        net.add_arc(net.source(), node, Capacity::finite(-v));
        source_total += -v;
      }
      continue;
    }
    if (v > 0.0)
      throw input_error("negative-terms construction given a positive coefficient "
                        "of order " + std::to_string(set.size()));
    if (v == 0.0) continue;
    int node = net.add_aux_node();
    net.add_arc(net.source(), node, Capacity::finite(-v));
    source_total += -v;
    for (int i : set) net.add_arc(node, net.find_data_node(i), Capacity::infinite());
  }
  net.offset = -source_total;
  net.merge_parallel_arcs();
  return net;
}

FlowNetwork combine(const std::vector<FlowNetwork>& fragments) {
  if (fragments.empty()) throw input_error("combine needs at least one fragment");
  int d = fragments.front().d;
  FlowNetwork net = FlowNetwork::empty(d);
  for (const auto& frag : fragments) {
    if (frag.d != d) throw input_error("combine: fragments disagree on d");
    // Fragments keep their full data-node set, so ids map directly; aux nodes
    // stay distinct across fragments.
    std::vector<int> remap(frag.node_count(), -1);
    for (int u = 0; u < frag.node_count(); ++u) {
      const NodeId& n = frag.nodes[u];
      switch (n.kind) {
        case NodeKind::Source: remap[u] = net.source(); break;
        case NodeKind::Sink: remap[u] = net.sink(); break;
        case NodeKind::Data: {
          int v = net.find_data_node(n.index);
          if (v < 0) throw input_error("combine: fragment lost a data node");
          remap[u] = v;
          break;
        }
        case NodeKind::Aux: remap[u] = net.add_aux_node(); break;
      }
    }
    for (const auto& a : frag.arcs) net.arcs.push_back({remap[a.tail], remap[a.head], a.cap});
    net.offset += frag.offset;
  }
  net.merge_parallel_arcs();
  return net;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

struct RepresentVisitor {
  const SetFunction& f;

  FlowNetwork operator()(const GroupCover& g) const {
    if (g.groups.empty()) return FlowNetwork::empty(f.dim());
    std::vector<FlowNetwork> frags;
    frags.reserve(g.groups.size());
    for (const auto& grp : g.groups) {
      std::vector<double> w(f.dim(), 0.0);
      for (int i : grp.members) w[i] = grp.weight;
      frags.push_back(represent_truncation(w, grp.weight));
    }
    return combine(frags);
  }

  FlowNetwork operator()(const GraphCut&) const { return represent_order3(mobius(f)); }

  FlowNetwork operator()(const HypergraphCut& h) const {
    if (h.hyperedges.empty()) return FlowNetwork::empty(f.dim());
    std::vector<FlowNetwork> frags;
    for (const auto& e : h.hyperedges) {
      // F_e = a_e min{|A ∩ e|, 1} - a_e [e ⊆ A]: a truncation plus one
      // negative term of order |e|.
      std::vector<double> w(f.dim(), 0.0);
      for (int i : e.members) w[i] = e.weight;
      frags.push_back(represent_truncation(w, e.weight));
      MobiusTable neg(f.dim());
      neg.add(e.members, -e.weight);
      frags.push_back(represent_negative_terms(neg));
    }
    return combine(frags);
  }

  FlowNetwork operator()(const CubicMobius&) const {
    if (f.dim() <= 12 && !is_submodular(f))
      throw input_error("cubic function is not submodular; the order-3 "
                        "construction does not apply");
    return represent_order3(mobius(f));
  }

  FlowNetwork operator()(const WeightedTruncation& t) const {
    return represent_truncation(t.w, t.y);
  }

  FlowNetwork operator()(const SumOf& s) const {
    if (s.terms.empty()) return FlowNetwork::empty(f.dim());
    std::vector<FlowNetwork> frags;
    frags.reserve(s.terms.size());
    for (const auto& t : s.terms) frags.push_back(represent(t));
    return combine(frags);
  }

  FlowNetwork operator()(const ShiftedBy& s) const {
    FlowNetwork net = represent(*s.base);
    std::vector<double> m(f.dim());
    for (int i = 0; i < f.dim(); ++i) m[i] = s.beta * s.b[i];
    net.add_modular_sink(m);
    return net;
  }
};

}  // namespace

FlowNetwork represent(const SetFunction& f) {
  return std::visit(RepresentVisitor{f}, f.variant());
}

std::pair<SetFunction, NondecreasingShift> make_nondecreasing(const SetFunction& f,
                                                              std::vector<double> b) {
  int d = f.dim();
  if (b.empty()) b.assign(d, 1.0);
  if (static_cast<int>(b.size()) != d)
    throw input_error("make_nondecreasing: direction length must equal d");
  IndexSet full(d);
  std::iota(full.begin(), full.end(), 0);
  double fv = f(full);
  double beta = 0.0;
  for (int i = 0; i < d; ++i) {
    double gap = f(set_difference(full, {i})) - fv;
    if (gap <= 0.0) continue;
    if (!(b[i] > 0.0))
      throw input_error("make_nondecreasing: b_i must be positive where the "
                        "function decreases");
    beta = std::max(beta, gap / b[i]);
  }
  if (beta <= kCapTol) return {f, NondecreasingShift{0.0, std::move(b)}};
  SetFunction shifted = SetFunction::shifted(f, beta, b);
  return {shifted, NondecreasingShift{beta, std::move(b)}};
}

}  // namespace proxflow
