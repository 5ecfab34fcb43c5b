#pragma once

#include <cstdint>
#include <vector>

#include "proxflow/netrep.hpp"

namespace proxflow {

struct FlowOptions {
  bool global_relabel = true;
  double tol = 1e-12;  // excess / residual comparisons
};

struct FlowCounters {
  long long pushes = 0;
  long long relabels = 0;
  long long global_relabels = 0;

  FlowCounters& operator+=(const FlowCounters& o) {
    pushes += o.pushes;
    relabels += o.relabels;
    global_relabels += o.global_relabels;
    return *this;
  }
  long long total() const { return pushes + relabels; }
};

enum class CutSide { Minimal, Maximal };

struct Cut {
  std::vector<int> source_side;  // node ids, always contains the source
  IndexSet data;                 // data indices on the source side
  double capacity = 0.0;
};

/// Net flow between a node pair; antisymmetric, so one entry per pair.
struct NetFlowEntry {
  int u = 0, v = 0;
  double flow = 0.0;  // net u -> v
};

/// FIFO preflow-push solver over a FlowNetwork. Parametric source arcs carry
/// capacity base + phi_i; phi may only grow between solves (the monotone
/// update), so a re-solve warm-starts from the previous flow by saturating
/// source arcs and rebuilding labels from residual BFS distances.
class Preflow {
 public:
  explicit Preflow(const FlowNetwork& net, FlowOptions opt = {});

  const FlowNetwork& network() const { return net_; }
  int node_count() const { return static_cast<int>(nodes_); }

  /// phi indexed by data index; entries for absent data nodes are ignored.
  /// After a solve, each surviving entry must be >= its previous value.
  void set_param(const std::vector<double>& phi);
  double param(int data_index) const;

  /// Monotone single-arc update: source arcs may only grow, sink arcs may
  /// only shrink. Anything else throws input_error.
  void set_arc_capacity(int tail, int head, double cap);

  /// Seed a feasible flow (e.g. mapped across a contraction) before the first
  /// solve. Entries touching both terminals at once are ignored; negative
  /// excess at an internal node throws input_error.
  void load_flow(const std::vector<NetFlowEntry>& flows);

  /// Run push/relabel to completion and return the max-flow value.
  double solve();

  bool solved() const { return solved_; }
  double value() const;
  std::vector<NetFlowEntry> net_flows() const;
  Cut min_cut(CutSide side) const;

  const FlowCounters& counters() const { return counters_; }

 private:
  struct Edge {
    int u, v;
    double cap_uv = 0.0, cap_vu = 0.0;  // constant part; +inf when Infinite
    int param_uv = -1, param_vu = -1;   // data index of a parametric part
    double flow = 0.0;                  // net u -> v
  };

  double cap_from(const Edge& e, int from) const;
  double residual(const Edge& e, int from) const;
  void push_on(std::size_t ei, int from, double delta);
  void saturate_source_arcs();
  void rebuild_excess();
  void global_relabel();
  void discharge_loop();
  std::vector<int> residual_bfs(int root, bool forward, double cut_tol) const;

  FlowNetwork net_;
  FlowOptions opt_;
  std::size_t nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;   // edge indices per node
  std::vector<double> phi_;             // by data index
  std::vector<double> excess_;
  std::vector<int> label_;
  std::vector<std::size_t> cursor_;
  FlowCounters counters_;
  bool solved_ = false;
};

/// Contracted network plus the parent-to-child node map (merged nodes map to
/// the terminal they joined).
struct Contraction {
  FlowNetwork net;
  std::vector<int> node_map;
};

/// Shrink `shrink_nodes` (which must contain exactly one terminal) into that
/// terminal: loops removed, parallel arcs merged, parametric arcs kept only
/// for surviving data nodes.
Contraction contract(const FlowNetwork& parent, const std::vector<int>& shrink_nodes);

/// Push a parent flow through a contraction: flows merge per surviving node
/// pair; loops and direct source-sink transfers are dropped.
std::vector<NetFlowEntry> map_flow(const Contraction& c,
                                   const std::vector<NetFlowEntry>& flows);

/// Value of the represented set function at A: contracts A into the source
/// and the remaining data nodes into the sink, solves one max-flow, and adds
/// the network offset. Parametric arcs contribute their constant part only.
double represented_value(const FlowNetwork& net, const IndexSet& A,
                         FlowOptions opt = {});

}  // namespace proxflow
