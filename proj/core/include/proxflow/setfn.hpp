#pragma once

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "proxflow/common.hpp"

namespace proxflow {

/// Ground set V = {0, ..., d-1}.
struct GroundSet {
  int d = 0;
};

struct Group {
  double weight = 0.0;
  IndexSet members;
};

/// F(A) = sum_g w_g * min{|A ∩ g|, 1}. Nondecreasing; groups may overlap.
struct GroupCover {
  std::vector<Group> groups;
};

struct GraphCutEdge {
  int i = 0, j = 0;
  double weight = 0.0;
};

/// Undirected cut function F(A) = sum_{(i,j): exactly one endpoint in A} a_ij.
struct GraphCut {
  std::vector<GraphCutEdge> edges;
};

struct Hyperedge {
  double weight = 0.0;
  IndexSet members;
};

/// F(A) = sum_{e: e ∩ A != ∅ and e \ A != ∅} a_e.
struct HypergraphCut {
  std::vector<Hyperedge> hyperedges;
};

/// Explicit multilinear coefficients up to order three, F(∅) normalized to 0.
struct CubicMobius {
  std::map<int, double> c1;                      // singleton -> coefficient
  std::map<std::pair<int, int>, double> c2;      // sorted pair -> coefficient
  std::map<std::array<int, 3>, double> c3;       // sorted triple -> coefficient
};

/// F(A) = min{w(A), y}.
struct WeightedTruncation {
  std::vector<double> w;
  double y = 0.0;
};

class SetFunction;

struct SumOf {
  std::vector<SetFunction> terms;
};

/// F(A) + beta * b(A).
struct ShiftedBy {
  std::shared_ptr<const SetFunction> base;
  double beta = 0.0;
  std::vector<double> b;
};

/// Per-order Möbius coefficient tables of a set function.
class MobiusTable {
 public:
  explicit MobiusTable(int d) : d_(d) {}

  int dim() const { return d_; }
  /// Highest k with a nonzero order-k coefficient (0 for the zero function).
  int order() const;

  void add(const IndexSet& subset, double value);
  double coefficient(const IndexSet& subset) const;
  const std::map<IndexSet, double>& coefficients() const { return coeffs_; }

  /// F(A) = sum over subsets Y of A of the coefficient of Y.
  double reconstruct(const IndexSet& A) const;

  MobiusTable& operator+=(const MobiusTable& other);

 private:
  int d_;
  std::map<IndexSet, double> coeffs_;  // nonzero terms only, keys sorted
};

/// Tagged representation of the set functions behind each penalty.
/// Immutable after construction; F(∅) = 0 by construction for every variant.
class SetFunction {
 public:
  using Variant = std::variant<GroupCover, GraphCut, HypergraphCut, CubicMobius,
                               WeightedTruncation, SumOf, ShiftedBy>;

  /// Zero function on an empty ground set.
  SetFunction() : SetFunction(0, GraphCut{}) {}

  static SetFunction group_cover(int d, std::vector<Group> groups);
  static SetFunction graph_cut(int d, std::vector<GraphCutEdge> edges);
  static SetFunction hypergraph_cut(int d, std::vector<Hyperedge> hyperedges);
  static SetFunction cubic_mobius(int d, CubicMobius coeffs);
  static SetFunction weighted_truncation(std::vector<double> w, double y);
  static SetFunction sum(int d, std::vector<SetFunction> terms);
  static SetFunction shifted(SetFunction base, double beta, std::vector<double> b);

  int dim() const { return d_; }
  const Variant& variant() const { return *v_; }

  double operator()(const IndexSet& A) const;

 private:
  SetFunction(int d, Variant v);

  int d_ = 0;
  std::shared_ptr<const Variant> v_;
};

/// F(A). Throws input_error on out-of-range indices.
double eval(const SetFunction& f, const IndexSet& A);

/// Möbius inversion table. Structured variants (cuts, hyperedges, cubic) use
/// closed-form coefficients; the generic path enumerates 2^d subsets (d <= 20).
MobiusTable mobius(const SetFunction& f);

/// Lovász extension at w; ties in the sort broken by ascending index.
double lovasz(const SetFunction& f, const std::vector<double>& w);

/// Exhaustive submodularity check, d <= 12.
bool is_submodular(const SetFunction& f, double tol = 1e-9);

/// Marginal-gain check F(A) <= F(A ∪ {i}); for submodular F it is enough to
/// look at the largest sets, so this is O(d) evaluations.
bool is_nondecreasing(const SetFunction& f, double tol = 1e-9);

}  // namespace proxflow
