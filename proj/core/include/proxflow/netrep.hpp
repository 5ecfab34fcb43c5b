#pragma once

#include <limits>
#include <vector>

#include "proxflow/setfn.hpp"

namespace proxflow {

enum class NodeKind { Source, Sink, Data, Aux };

struct NodeId {
  NodeKind kind = NodeKind::Aux;
  int index = -1;  // original data index for Data nodes, ordinal for Aux
};

/// Arc capacity: a nonnegative constant, symbolically infinite, or the
/// parametric source capacity phi_i(alpha) of a data node (plus a constant).
struct Capacity {
  enum Kind { Finite, Infinite, Param } kind = Finite;
  double value = 0.0;  // constant part (Finite and Param)
  int data = -1;       // data index a Param capacity tracks

  static Capacity finite(double v) { return {Finite, v, -1}; }
  static Capacity infinite() { return {Infinite, 0.0, -1}; }
  static Capacity param(int data_index, double base = 0.0) {
    return {Param, base, data_index};
  }
};

struct Arc {
  int tail = 0, head = 0;
  Capacity cap;
};

/// Directed network over {source, sink} ∪ V ∪ W representing a set function as
/// F(A) = min_{Y ⊆ W} cut({s} ∪ A ∪ Y) + offset. Node 0 is the source and
/// node 1 the sink; data and aux nodes follow in `nodes`.
struct FlowNetwork {
  int d = 0;  // ground-set size of the represented function
  std::vector<NodeId> nodes;
  std::vector<Arc> arcs;
  double offset = 0.0;  // C_F

  static FlowNetwork empty(int d);

  int source() const { return 0; }
  int sink() const { return 1; }
  int node_count() const { return static_cast<int>(nodes.size()); }
  int aux_count() const;

  /// Node id of data index i, or -1 if it was contracted away.
  int find_data_node(int data_index) const;
  /// (node id, data index) for every surviving data node.
  std::vector<std::pair<int, int>> data_nodes() const;

  int add_aux_node();
  void add_arc(int tail, int head, Capacity cap);

  /// Merge parallel arcs (same tail and head) by adding capacities; an
  /// Infinite arc absorbs constants.
  void merge_parallel_arcs();

  /// Attach one parametric source arc per listed data index.
  void add_parametric_source_arcs();

  /// Add m_i >= 0 to the sink-arc capacity of each data node (modular term).
  void add_modular_sink(const std::vector<double>& m);
};

/// Network for the truncation F(A) = min{w(A), y}: one aux node u, arcs (v,u)
/// with capacity w_v and (u,t) with capacity y.
FlowNetwork represent_truncation(const std::vector<double>& w, double y);

/// Network for a submodular function whose Möbius coefficients vanish beyond
/// order three: one aux node per active pair and per nonzero triple, with pair
/// capacities adjusted by the positive triple mass covering them.
FlowNetwork represent_order3(const MobiusTable& coeffs, double tol = 1e-9);

/// Network for a function whose coefficients of order >= 2 are all
/// nonpositive: one aux node per negative term.
FlowNetwork represent_negative_terms(const MobiusTable& coeffs);

/// Union network of several fragments over the same ground set: shared
/// terminals and data nodes, disjoint aux sets, parallel arcs merged,
/// offsets summed.
FlowNetwork combine(const std::vector<FlowNetwork>& fragments);

/// Dispatch on the set-function variant and build its representation.
/// Throws input_error when the function does not satisfy the conditions of
/// any of the constructions above.
FlowNetwork represent(const SetFunction& f);

struct NondecreasingShift {
  double beta = 0.0;
  std::vector<double> b;
};

/// F + beta*b with the smallest beta >= 0 making the sum nondecreasing
/// (beta = max_i max{0, F(V \ {i}) - F(V)} / b_i). b defaults to all ones.
std::pair<SetFunction, NondecreasingShift> make_nondecreasing(
    const SetFunction& f, std::vector<double> b = {});

}  // namespace proxflow
