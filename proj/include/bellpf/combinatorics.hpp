#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bellpf/exact.hpp"
#include "bellpf/polynomial.hpp"

namespace bellpf {

// Triangle of Stirling numbers of the second kind, grown on demand via
// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
class StirlingTable {
 public:
  const Integer& operator()(unsigned n, unsigned k);
  const Integer& bell(unsigned n);

 private:
  void grow(unsigned n);
  std::vector<std::vector<Integer>> rows_;  // rows_[n][k], k = 0..n
  std::vector<Integer> bell_;
  static const Integer kZero;
};

Integer stirling2(unsigned n, unsigned k);
Integer bell(unsigned n);

// B_n(y) = sum_k S(n,k) y^k.
Polynomial bell_polynomial(unsigned n);

// Count of connected Bell graphs with n white dots: always 1, the single
// black dot joined to all n whites. Kept as a function so the exp/log
// generating-function checks have a named source for the connected series.
Integer connected_count(unsigned n);

struct SetPartition {
  // blocks[i] lists 1-based elements, each block ascending, blocks ordered by
  // smallest element.
  std::vector<std::vector<int>> blocks;
  std::vector<int> growth_string() const;  // RGS, 0-based block labels
};

// Streams all set partitions of {1..n} in restricted-growth-string order.
// Keeps only the current RGS; current() materializes blocks on demand.
class PartitionStream {
 public:
  static constexpr unsigned kMaxN = 14;

  explicit PartitionStream(unsigned n);
  bool done() const { return done_; }
  void advance();
  SetPartition current() const;
  unsigned block_count() const;
  const std::vector<int>& growth_string() const { return rgs_; }

 private:
  unsigned n_;
  bool done_;
  std::vector<int> rgs_;
  std::vector<int> max_;  // max_[i] = max(rgs_[0..i])
};

void for_each_partition(unsigned n, const std::function<void(const SetPartition&)>& fn);

// Bipartite multigraph with n white vertices (one per element) and one black
// vertex per block; white i joins the black vertex of its block.
struct BellGraph {
  unsigned white = 0;
  unsigned black = 0;
  std::vector<std::pair<int, int>> edges;  // (white 1-based, black 1-based)
};

BellGraph make_bell_graph(const SetPartition& p);
std::string graph_to_dot(const BellGraph& g);

}  // namespace bellpf
