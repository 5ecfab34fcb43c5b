#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace proxflow {

/// Malformed or out-of-contract input (bad indices, negative weights, ...).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive code path was asked to handle an instance beyond its budget.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to reach its tolerance (balance equations,
/// degenerate parametric intervals, ...).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free list of 0-based ground-set indices.
using IndexSet = std::vector<int>;

inline IndexSet make_index_set(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline bool contains(const IndexSet& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// IndexSet from the low `d` bits of a mask (brute-force enumeration helper).
inline IndexSet mask_to_set(std::uint32_t mask, int d) {
  IndexSet out;
  for (int i = 0; i < d; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

inline std::uint32_t set_to_mask(const IndexSet& a) {
  std::uint32_t m = 0;
  for (int i : a) m |= (1u << i);
  return m;
}

}  // namespace proxflow
