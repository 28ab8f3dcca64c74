#include "bellpf/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bellpf {

const Integer StirlingTable::kZero = 0;

void StirlingTable::grow(unsigned n) {
  if (rows_.empty()) {
    rows_.push_back({Integer(1)});  // S(0,0) = 1
    bell_.push_back(Integer(1));
  }
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    unsigned m = rows_.size();  // building row m
    std::vector<Integer> row(m + 1);
    row[0] = 0;
    for (unsigned k = 1; k < m; ++k) {
      row[k] = k * prev[k] + prev[k - 1];
    }
    row[m] = 1;
    Integer b = 0;
    for (const auto& v : row) b += v;
    rows_.push_back(std::move(row));
    bell_.push_back(std::move(b));
  }
}

const Integer& StirlingTable::operator()(unsigned n, unsigned k) {
  if (k > n) return kZero;
  grow(n);
  return rows_[n][k];
}

const Integer& StirlingTable::bell(unsigned n) {
  grow(n);
  return bell_[n];
}

Integer stirling2(unsigned n, unsigned k) {
  StirlingTable t;
  return t(n, k);
}

Integer bell(unsigned n) {
  StirlingTable t;
  return t.bell(n);
}

Polynomial bell_polynomial(unsigned n) {
  StirlingTable t;
  Polynomial p;
  for (unsigned k = 0; k <= n; ++k) {
    p += Polynomial::monomial(static_cast<int>(k), Rational(t(n, k)));
  }
  return p;
}

Integer connected_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("connected_count: n must be >= 1");
  return 1;
}

std::vector<int> SetPartition::growth_string() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  std::vector<int> rgs(n, 0);
  for (size_t label = 0; label < blocks.size(); ++label) {
    for (int e : blocks[label]) rgs[e - 1] = static_cast<int>(label);
  }
  return rgs;
}

PartitionStream::PartitionStream(unsigned n) : n_(n), done_(n == 0) {
  if (n == 0 || n > kMaxN) {
    throw std::invalid_argument("PartitionStream: n must be in 1.." + std::to_string(kMaxN));
  }
  rgs_.assign(n, 0);
  max_.assign(n, 0);
}

void PartitionStream::advance() {
  if (done_) return;
  // Next restricted growth string: rightmost position that can be bumped.
  for (int i = static_cast<int>(n_) - 1; i >= 1; --i) {
    if (rgs_[i] <= max_[i - 1]) {
      ++rgs_[i];
      max_[i] = std::max(max_[i - 1], rgs_[i]);
      for (unsigned j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        max_[j] = max_[i];
      }
      return;
    }
  }
  done_ = true;
}

SetPartition PartitionStream::current() const {
  SetPartition p;
  p.blocks.resize(block_count());
  for (unsigned i = 0; i < n_; ++i) {
    p.blocks[rgs_[i]].push_back(static_cast<int>(i) + 1);
  }
  return p;
}

unsigned PartitionStream::block_count() const {
  return n_ == 0 ? 0 : static_cast<unsigned>(max_[n_ - 1]) + 1;
}

void for_each_partition(unsigned n, const std::function<void(const SetPartition&)>& fn) {
  for (PartitionStream s(n); !s.done(); s.advance()) {
    fn(s.current());
  }
}

BellGraph make_bell_graph(const SetPartition& p) {
  BellGraph g;
  g.black = static_cast<unsigned>(p.blocks.size());
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    for (int e : p.blocks[b]) {
      g.white = std::max(g.white, static_cast<unsigned>(e));
      g.edges.emplace_back(e, static_cast<int>(b) + 1);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string graph_to_dot(const BellGraph& g) {
  std::ostringstream out;
  out << "graph bell {\n";
  for (unsigned i = 1; i <= g.white; ++i) {
    out << "  w" << i << " [shape=circle];\n";
  }
  for (unsigned i = 1; i <= g.black; ++i) {
    out << "  b" << i << " [shape=point];\n";
  }
  for (const auto& [w, b] : g.edges) {
    out << "  w" << w << " -- b" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bellpf
