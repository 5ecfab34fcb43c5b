#include "proxflow/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

namespace proxflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kUnreached = std::numeric_limits<int>::max();

long long pair_key(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return static_cast<long long>(a) * n + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Preflow::Preflow(const FlowNetwork& net, FlowOptions opt) : net_(net), opt_(opt) {
  if (net_.node_count() < 2) throw input_error("network needs source and sink");
  net_.merge_parallel_arcs();
  nodes_ = static_cast<std::size_t>(net_.node_count());
  phi_.assign(static_cast<std::size_t>(net_.d), 0.0);
  excess_.assign(nodes_, 0.0);
  label_.assign(nodes_, 0);
  cursor_.assign(nodes_, 0);
  adj_.assign(nodes_, {});

  std::unordered_map<long long, int> index;
  for (const auto& a : net_.arcs) {
    long long key = pair_key(a.tail, a.head, net_.node_count());
    auto it = index.find(key);
    if (it == index.end()) {
      Edge e;
      e.u = std::min(a.tail, a.head);
      e.v = std::max(a.tail, a.head);
      index.emplace(key, static_cast<int>(edges_.size()));
      edges_.push_back(e);
      adj_[e.u].push_back(static_cast<int>(edges_.size()) - 1);
      adj_[e.v].push_back(static_cast<int>(edges_.size()) - 1);
      it = index.find(key);
    }
    Edge& e = edges_[static_cast<std::size_t>(it->second)];
    bool fwd = (a.tail == e.u);
    double c = a.cap.kind == Capacity::Infinite ? kInf : a.cap.value;
    if (fwd) {
      e.cap_uv += c;
      if (a.cap.kind == Capacity::Param) e.param_uv = a.cap.data;
    } else {
      e.cap_vu += c;
      if (a.cap.kind == Capacity::Param) e.param_vu = a.cap.data;
    }
    if (a.tail == net_.source() && a.cap.kind == Capacity::Infinite)
      throw capacity_error("source arcs must have finite capacity");
  }
}

double Preflow::cap_from(const Edge& e, int from) const {
  double c = (from == e.u) ? e.cap_uv : e.cap_vu;
  int p = (from == e.u) ? e.param_uv : e.param_vu;
  if (p >= 0) c += phi_[static_cast<std::size_t>(p)];
  return c;
}

double Preflow::residual(const Edge& e, int from) const {
  double f = (from == e.u) ? e.flow : -e.flow;
  return cap_from(e, from) - f;
}

void Preflow::push_on(std::size_t ei, int from, double delta) {
  Edge& e = edges_[ei];
  int to = (from == e.u) ? e.v : e.u;
  e.flow += (from == e.u) ? delta : -delta;
  excess_[static_cast<std::size_t>(from)] -= delta;
  excess_[static_cast<std::size_t>(to)] += delta;
  ++counters_.pushes;
}

// ---------------------------------------------------------------------------
// Capacity updates

void Preflow::set_param(const std::vector<double>& phi) {
  for (auto [node, data] : net_.data_nodes()) {
    auto i = static_cast<std::size_t>(data);
    if (i >= phi.size()) throw input_error("set_param: phi too short");
    if (solved_ && phi[i] < phi_[i] - opt_.tol)
      throw input_error("set_param: parametric source capacities may only grow");
    phi_[i] = phi[i];
  }
  solved_ = false;
}

double Preflow::param(int data_index) const {
  return phi_.at(static_cast<std::size_t>(data_index));
}

void Preflow::set_arc_capacity(int tail, int head, double cap) {
  if (!(cap >= 0.0)) throw input_error("negative arc capacity");
  bool from_source = tail == net_.source();
  bool to_sink = head == net_.sink();
  if (!from_source && !to_sink)
    throw input_error("only source or sink arc capacities may change");

  int ei = -1;
  for (int k : adj_[static_cast<std::size_t>(tail)]) {
    const Edge& e = edges_[static_cast<std::size_t>(k)];
    if ((e.u == tail && e.v == head) || (e.v == tail && e.u == head)) {
      ei = k;
      break;
    }
  }
  if (ei < 0) {
    if (!from_source && cap > 0.0)
      throw input_error("sink arc capacities may only shrink");
    Edge e;
    e.u = std::min(tail, head);
    e.v = std::max(tail, head);
    edges_.push_back(e);
    ei = static_cast<int>(edges_.size()) - 1;
    adj_[static_cast<std::size_t>(e.u)].push_back(ei);
    adj_[static_cast<std::size_t>(e.v)].push_back(ei);
  }
  Edge& e = edges_[static_cast<std::size_t>(ei)];
  double& slot = (tail == e.u) ? e.cap_uv : e.cap_vu;
  int p = (tail == e.u) ? e.param_uv : e.param_vu;
  if (p >= 0) throw input_error("use set_param for parametric arcs");
  if (solved_) {
    if (from_source && cap < slot - opt_.tol)
      throw input_error("source arc capacities may only grow");
    if (to_sink && cap > slot + opt_.tol)
      throw input_error("sink arc capacities may only shrink");
  }
  slot = cap;
  // A shrunk sink arc may now be over-full; pull the surplus back as excess.
  double f = (tail == e.u) ? e.flow : -e.flow;
  if (to_sink && f > cap) push_on(static_cast<std::size_t>(ei), head, f - cap);
  solved_ = false;
}

void Preflow::load_flow(const std::vector<NetFlowEntry>& flows) {
  if (solved_) throw input_error("load_flow must precede the first solve");
  for (const auto& nf : flows) {
    if (nf.u < 0 || nf.v < 0 || nf.u >= net_.node_count() || nf.v >= net_.node_count())
      throw input_error("load_flow: node out of range");
    bool found = false;
    for (int k : adj_[static_cast<std::size_t>(nf.u)]) {
      Edge& e = edges_[static_cast<std::size_t>(k)];
      if ((e.u == nf.u && e.v == nf.v) || (e.v == nf.u && e.u == nf.v)) {
        e.flow += (e.u == nf.u) ? nf.flow : -nf.flow;
        if (e.flow > e.cap_uv + (e.param_uv >= 0 ? phi_[static_cast<std::size_t>(e.param_uv)] : 0.0) + 1e-9 ||
            -e.flow > e.cap_vu + (e.param_vu >= 0 ? phi_[static_cast<std::size_t>(e.param_vu)] : 0.0) + 1e-9)
          throw input_error("load_flow: flow exceeds capacity");
        found = true;
        break;
      }
    }
    if (!found && std::abs(nf.flow) > opt_.tol)
      throw input_error("load_flow: flow on a missing arc");
  }
  rebuild_excess();
}

void Preflow::rebuild_excess() {
  std::fill(excess_.begin(), excess_.end(), 0.0);
  for (const Edge& e : edges_) {
    excess_[static_cast<std::size_t>(e.u)] -= e.flow;
    excess_[static_cast<std::size_t>(e.v)] += e.flow;
  }
  for (std::size_t v = 2; v < nodes_; ++v)
    if (excess_[v] < -1e-9) throw input_error("loaded flow has negative excess");
}

// ---------------------------------------------------------------------------
// Solving

void Preflow::saturate_source_arcs() {
  int s = net_.source();
  for (int k : adj_[static_cast<std::size_t>(s)]) {
    Edge& e = edges_[static_cast<std::size_t>(k)];
    double cap = cap_from(e, s);
    if (!std::isfinite(cap)) throw capacity_error("source arcs must have finite capacity");
    double f = (e.u == s) ? e.flow : -e.flow;
    if (cap > f) push_on(static_cast<std::size_t>(k), s, cap - f);
  }
}

std::vector<int> Preflow::residual_bfs(int root, bool forward, double cut_tol) const {
  std::vector<int> dist(nodes_, kUnreached);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int k : adj_[static_cast<std::size_t>(u)]) {
      const Edge& e = edges_[static_cast<std::size_t>(k)];
      int o = (e.u == u) ? e.v : e.u;
      if (dist[static_cast<std::size_t>(o)] != kUnreached) continue;
      double r = forward ? residual(e, u) : residual(e, o);
      if (r > cut_tol) {
        dist[static_cast<std::size_t>(o)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(o);
      }
    }
  }
  return dist;
}

void Preflow::global_relabel() {
  // Same residual threshold as discharge, so the distances stay valid
  // labels for it and never decrease under repeated global relabeling.
  int n = static_cast<int>(nodes_);
  std::vector<int> to_t = residual_bfs(net_.sink(), /*forward=*/false, opt_.tol);
  std::vector<int> to_s = residual_bfs(net_.source(), /*forward=*/false, opt_.tol);
  for (std::size_t v = 0; v < nodes_; ++v) {
    if (static_cast<int>(v) == net_.source()) {
      label_[v] = n;
    } else if (static_cast<int>(v) == net_.sink()) {
      label_[v] = 0;
    } else {
      int fresh;
      if (to_t[v] != kUnreached) {
        fresh = to_t[v];
      } else if (to_s[v] != kUnreached) {
        fresh = to_s[v] + n - 2;
      } else {
        fresh = 2 * n;
      }
      // Both the fresh distances and the current labels are valid, and the
      // pointwise max of valid labelings stays valid; never lowering a label
      // keeps discharge terminating.
      label_[v] = std::max(label_[v], fresh);
    }
    cursor_[v] = 0;
  }
  ++counters_.global_relabels;
}

void Preflow::discharge_loop() {
  int n = static_cast<int>(nodes_);
  int s = net_.source(), t = net_.sink();
  std::deque<int> queue;
  std::vector<char> queued(nodes_, 0);
  auto enqueue = [&](int v) {
    if (v == s || v == t || queued[static_cast<std::size_t>(v)]) return;
    queued[static_cast<std::size_t>(v)] = 1;
    queue.push_back(v);
  };
  for (std::size_t v = 0; v < nodes_; ++v)
    if (excess_[v] > opt_.tol) enqueue(static_cast<int>(v));

  long long relabels_since_global = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(v)] = 0;
    auto vi = static_cast<std::size_t>(v);

    bool relabeled = false;
    while (excess_[vi] > opt_.tol && !relabeled) {
      if (cursor_[vi] < adj_[vi].size()) {
        int k = adj_[vi][cursor_[vi]];
        const Edge& e = edges_[static_cast<std::size_t>(k)];
        int o = (e.u == v) ? e.v : e.u;
        double r = residual(e, v);
        if (r > opt_.tol && label_[vi] == label_[static_cast<std::size_t>(o)] + 1) {
          push_on(static_cast<std::size_t>(k), v, std::min(excess_[vi], r));
          enqueue(o);
        } else {
          ++cursor_[vi];
        }
      } else {
        int best = 2 * n;
        for (int k : adj_[vi]) {
          const Edge& e = edges_[static_cast<std::size_t>(k)];
          int o = (e.u == v) ? e.v : e.u;
          if (residual(e, v) > opt_.tol)
            best = std::min(best, label_[static_cast<std::size_t>(o)] + 1);
        }
        label_[vi] = best;
        cursor_[vi] = 0;
        ++counters_.relabels;
        ++relabels_since_global;
        relabeled = true;
        if (label_[vi] >= 2 * n) break;  // nothing can absorb this excess
      }
    }
    if (excess_[vi] > opt_.tol && label_[vi] < 2 * n) enqueue(v);

    if (opt_.global_relabel && relabels_since_global >= n) {
      global_relabel();
      relabels_since_global = 0;
      queue.clear();
      std::fill(queued.begin(), queued.end(), 0);
      for (std::size_t u = 2; u < nodes_; ++u)
        if (excess_[u] > opt_.tol && label_[u] < 2 * n) enqueue(static_cast<int>(u));
    }
  }
}

double Preflow::solve() {
  saturate_source_arcs();
  global_relabel();
  discharge_loop();
  solved_ = true;
  return value();
}

double Preflow::value() const {
  if (!solved_) throw input_error("value requested before solve");
  return excess_[static_cast<std::size_t>(net_.sink())];
}

std::vector<NetFlowEntry> Preflow::net_flows() const {
  std::vector<NetFlowEntry> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_)
    if (e.flow != 0.0) out.push_back({e.u, e.v, e.flow});
  return out;
}

Cut Preflow::min_cut(CutSide side) const {
  if (!solved_) throw input_error("min_cut requested before solve");
  std::vector<char> in_side(nodes_, 0);
  double cut_tol = opt_.tol * 10.0;
  if (side == CutSide::Minimal) {
    std::vector<int> from_s = residual_bfs(net_.source(), /*forward=*/true, cut_tol);
    if (from_s[static_cast<std::size_t>(net_.sink())] != kUnreached)
      throw input_error("min_cut requested on a non-maximum flow");
    for (std::size_t v = 0; v < nodes_; ++v) in_side[v] = from_s[v] != kUnreached;
  } else {
    std::vector<int> to_t = residual_bfs(net_.sink(), /*forward=*/false, cut_tol);
    if (to_t[static_cast<std::size_t>(net_.source())] != kUnreached)
      throw input_error("min_cut requested on a non-maximum flow");
    for (std::size_t v = 0; v < nodes_; ++v) in_side[v] = to_t[v] == kUnreached;
  }

  Cut cut;
  for (std::size_t v = 0; v < nodes_; ++v) {
    if (!in_side[v]) continue;
    cut.source_side.push_back(static_cast<int>(v));
    const NodeId& id = net_.nodes[v];
    if (id.kind == NodeKind::Data) cut.data.push_back(id.index);
  }
  std::sort(cut.data.begin(), cut.data.end());
  for (const Edge& e : edges_) {
    bool iu = in_side[static_cast<std::size_t>(e.u)];
    bool iv = in_side[static_cast<std::size_t>(e.v)];
    if (iu == iv) continue;
    cut.capacity += cap_from(e, iu ? e.u : e.v);
  }
  return cut;
}

// ---------------------------------------------------------------------------
// Contraction

Contraction contract(const FlowNetwork& parent, const std::vector<int>& shrink_nodes) {
  std::vector<char> shrink(static_cast<std::size_t>(parent.node_count()), 0);
  for (int v : shrink_nodes) {
    if (v < 0 || v >= parent.node_count()) throw input_error("contract: node out of range");
    shrink[static_cast<std::size_t>(v)] = 1;
  }
  bool has_s = shrink[static_cast<std::size_t>(parent.source())];
  bool has_t = shrink[static_cast<std::size_t>(parent.sink())];
  if (has_s == has_t)
    throw input_error("contract: shrink set must contain exactly one terminal");
  int terminal = has_s ? 0 : 1;

  Contraction out;
  out.net.d = parent.d;
  out.net.offset = parent.offset;
  out.net.nodes.push_back({NodeKind::Source, -1});
  out.net.nodes.push_back({NodeKind::Sink, -1});
  out.node_map.assign(static_cast<std::size_t>(parent.node_count()), -1);
  for (int v = 0; v < parent.node_count(); ++v) {
    if (shrink[static_cast<std::size_t>(v)]) {
      out.node_map[static_cast<std::size_t>(v)] = terminal;
    } else if (v == parent.source() || v == parent.sink()) {
      out.node_map[static_cast<std::size_t>(v)] = v;
    } else {
      out.node_map[static_cast<std::size_t>(v)] =
          static_cast<int>(out.net.nodes.size());
      NodeId id = parent.nodes[static_cast<std::size_t>(v)];
      if (id.kind == NodeKind::Aux) id.index = out.net.aux_count();
      out.net.nodes.push_back(id);
    }
  }
  for (const auto& a : parent.arcs) {
    int mu = out.node_map[static_cast<std::size_t>(a.tail)];
    int mv = out.node_map[static_cast<std::size_t>(a.head)];
    if (mu == mv) continue;
    if (a.cap.kind == Capacity::Param && (mv == 0 || mv == 1)) continue;
    out.net.arcs.push_back({mu, mv, a.cap});
  }
  out.net.merge_parallel_arcs();
  return out;
}

std::vector<NetFlowEntry> map_flow(const Contraction& c,
                                   const std::vector<NetFlowEntry>& flows) {
  int n = c.net.node_count();
  std::unordered_map<long long, double> acc;
  for (const auto& nf : flows) {
    int mu = c.node_map.at(static_cast<std::size_t>(nf.u));
    int mv = c.node_map.at(static_cast<std::size_t>(nf.v));
    if (mu == mv) continue;
    if ((mu == 0 && mv == 1) || (mu == 1 && mv == 0)) continue;
    double f = (mu < mv) ? nf.flow : -nf.flow;
    acc[pair_key(mu, mv, n)] += f;
  }
  std::vector<NetFlowEntry> out;
  out.reserve(acc.size());
  for (const auto& [key, f] : acc)
    out.push_back({static_cast<int>(key / n), static_cast<int>(key % n), f});
  return out;
}

double represented_value(const FlowNetwork& net, const IndexSet& A, FlowOptions opt) {
  std::vector<char> in_A(static_cast<std::size_t>(net.d), 0);
  for (int i : A) {
    if (i < 0 || i >= net.d) throw input_error("represented_value: index out of range");
    in_A[static_cast<std::size_t>(i)] = 1;
  }

  // Source-side seed: s plus the data nodes of A, closed under infinite arcs
  // (an infinite arc out of the source side would otherwise make the flow
  // solver reject the contracted network).
  std::vector<char> side(static_cast<std::size_t>(net.node_count()), 0);
  side[static_cast<std::size_t>(net.source())] = 1;
  for (auto [node, data] : net.data_nodes())
    if (in_A[static_cast<std::size_t>(data)]) side[static_cast<std::size_t>(node)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : net.arcs) {
      if (a.cap.kind != Capacity::Infinite) continue;
      if (side[static_cast<std::size_t>(a.tail)] && !side[static_cast<std::size_t>(a.head)]) {
        side[static_cast<std::size_t>(a.head)] = 1;
        grew = true;
      }
    }
  }
  if (side[static_cast<std::size_t>(net.sink())])
    throw capacity_error("represented_value: the set forces an infinite cut");
  for (auto [node, data] : net.data_nodes())
    if (side[static_cast<std::size_t>(node)] && !in_A[static_cast<std::size_t>(data)])
      throw capacity_error("represented_value: the set forces an infinite cut");

  std::vector<int> shrink_s;
  for (int v = 0; v < net.node_count(); ++v)
    if (side[static_cast<std::size_t>(v)]) shrink_s.push_back(v);
  Contraction cs = contract(net, shrink_s);

  std::vector<int> shrink_t{cs.net.sink()};
  for (auto [node, data] : cs.net.data_nodes())
    if (!in_A[static_cast<std::size_t>(data)]) shrink_t.push_back(node);
  Contraction ct = contract(cs.net, shrink_t);

  Preflow pf(ct.net, opt);
  pf.solve();
  return pf.value() + net.offset;
}

}  // namespace proxflow
