#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "bellpf/combinatorics.hpp"

using namespace bellpf;

namespace {

// Independent oracle: count partitions of {1..n} into exactly k blocks by
// assigning each element to a block recursively (no restricted-growth logic).
long count_partitions_brute(int n, int k) {
  std::vector<int> assign(n, -1);
  long count = 0;
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      assign[i] = b;
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

TEST_CASE("stirling2 against brute-force block assignment") {
  CHECK(stirling2(3, 2) == count_partitions_brute(3, 2));  // 3
  CHECK(stirling2(4, 2) == count_partitions_brute(4, 2));  // 7
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(stirling2(n, k) == count_partitions_brute(n, k));
    }
  }
}

TEST_CASE("stirling recurrence holds across the table") {
  StirlingTable t;
  for (unsigned n = 2; n <= 20; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(t(n, k) == k * t(n - 1, k) + t(n - 1, k - 1));
    }
  }
  CHECK(t(1, 1) == 1);
  CHECK(t(5, 0) == 0);
  CHECK(t(4, 7) == 0);
}

TEST_CASE("bell numbers match the reference list") {
  const long expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(bell(n) == expected[n]);
  }
  CHECK(bell(20) == Integer("51724158235372"));
}

TEST_CASE("bell polynomial sums stirling row and evaluates to bell at 1") {
  for (unsigned n = 0; n <= 14; ++n) {
    Polynomial b = bell_polynomial(n);
    CHECK(b.evaluate(Rational(1)) == Rational(bell(n)));
  }
  Polynomial b3 = bell_polynomial(3);  // y + 3y^2 + y^3
  CHECK(b3.coeff(1) == 1);
  CHECK(b3.coeff(2) == 3);
  CHECK(b3.coeff(3) == 1);
  CHECK(b3.coeff(0) == 0);
}

TEST_CASE("bell polynomial dominated by factorial bound") {
  for (unsigned n = 1; n <= 14; ++n) {
    CHECK(bell(n) <= factorial(n));
  }
}

TEST_CASE("connected graph count is one") {
  CHECK(connected_count(1) == 1);
  CHECK(connected_count(5) == 1);
  CHECK_THROWS_AS(connected_count(0), std::invalid_argument);
}

TEST_CASE("partition stream: counts match bell numbers") {
  for (unsigned n = 1; n <= 9; ++n) {
    Integer count = 0;
    for (PartitionStream s(n); !s.done(); s.advance()) ++count;
    CHECK(count == bell(n));
  }
}

TEST_CASE("partition stream: block-count tallies match stirling rows") {
  StirlingTable t;
  for (unsigned n = 1; n <= 9; ++n) {
    std::vector<Integer> tally(n + 1, Integer(0));
    for (PartitionStream s(n); !s.done(); s.advance()) {
      ++tally[s.block_count()];
    }
    for (unsigned k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(tally[k] == t(n, k));
    }
  }
}

TEST_CASE("partition stream yields distinct canonical partitions") {
  std::set<std::vector<int>> seen;
  for (PartitionStream s(5); !s.done(); s.advance()) {
    SetPartition p = s.current();
    // canonical: blocks sorted by least element, elements ascending
    int prev_min = 0;
    std::set<int> all;
    for (const auto& block : p.blocks) {
      REQUIRE(!block.empty());
      CHECK(std::is_sorted(block.begin(), block.end()));
      CHECK(block.front() > prev_min);
      prev_min = block.front();
      all.insert(block.begin(), block.end());
    }
    CHECK(all.size() == 5);
    CHECK(*all.begin() == 1);
    CHECK(*all.rbegin() == 5);
    CHECK(seen.insert(p.growth_string()).second);
  }
  CHECK(seen.size() == 52);
}

TEST_CASE("growth string round trip") {
  for (PartitionStream s(6); !s.done(); s.advance()) {
    CHECK(s.current().growth_string() == s.growth_string());
  }
}

TEST_CASE("partition stream rejects out-of-range n") {
  CHECK_THROWS_AS(PartitionStream(0), std::invalid_argument);
  CHECK_THROWS_AS(PartitionStream(15), std::invalid_argument);
}

TEST_CASE("for_each_partition visits bell(n) partitions") {
  int visits = 0;
  for_each_partition(4, [&](const SetPartition& p) {
    ++visits;
    CHECK(!p.blocks.empty());
  });
  CHECK(visits == 15);
}

TEST_CASE("bell graph structure follows the partition") {
  SetPartition p{{{1, 2}, {3}}};
  BellGraph g = make_bell_graph(p);
  CHECK(g.white == 3);
  CHECK(g.black == 2);
  REQUIRE(g.edges.size() == 3);
  CHECK(g.edges[0] == std::pair<int, int>{1, 1});
  CHECK(g.edges[1] == std::pair<int, int>{2, 1});
  CHECK(g.edges[2] == std::pair<int, int>{3, 2});

  SetPartition single{{{1}}};
  BellGraph g1 = make_bell_graph(single);
  CHECK(g1.white == 1);
  CHECK(g1.black == 1);
  CHECK(g1.edges.size() == 1);

  SetPartition one_block{{{1, 2, 3, 4}}};
  CHECK(make_bell_graph(one_block).black == 1);
}

TEST_CASE("dot export is deterministic and well formed") {
  SetPartition p{{{1, 2}, {3}}};
  std::string dot = graph_to_dot(make_bell_graph(p));
  CHECK(dot ==
        "graph bell {\n"
        "  w1 [shape=circle];\n"
        "  w2 [shape=circle];\n"
        "  w3 [shape=circle];\n"
        "  b1 [shape=point];\n"
        "  b2 [shape=point];\n"
        "  w1 -- b1;\n"
        "  w2 -- b1;\n"
        "  w3 -- b2;\n"
        "}\n");
  CHECK(dot == graph_to_dot(make_bell_graph(p)));
}
