#include <doctest.h>

#include <algorithm>
#include <set>

#include "cathei/partition.hpp"

using namespace cathei;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("partitions_of enumerates in reverse lexicographic order") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  auto p2 = partitions_of(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == P({2}));
  CHECK(p2[1] == P({1, 1}));
  CHECK(partitions_of(4).size() == 5);
  // frozen partition counts p(n), n = 0..12
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    CHECK(ps.size() == static_cast<std::size_t>(counts[n]));
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
  }
}

TEST_CASE("addable and removable contents") {
  CHECK(addable(Partition()) == std::vector<int>{0});
  CHECK(addable(P({3, 2})) == std::vector<int>{-2, 1, 3});
  CHECK(addable(P({1})) == std::vector<int>{-1, 1});
  CHECK(removable(Partition()).empty());
  CHECK(removable(P({3, 2})) == std::vector<int>{0, 2});
  CHECK(removable(P({1})) == std::vector<int>{0});
}

TEST_CASE("box addition and removal") {
  CHECK(add_box(P({3, 2}), 3) == P({4, 2}));
  CHECK(add_box(Partition(), 0) == P({1}));
  CHECK(!add_box(P({3, 2}), 0).has_value());
  CHECK(remove_box(P({3, 2}), 0) == P({3, 1}));
  CHECK(remove_box(P({1}), 0) == Partition());
  CHECK(!remove_box(P({3, 2}), 1).has_value());
}

TEST_CASE("hook dimensions and tableau oracle") {
  CHECK(dim_hook(Partition()) == 1);
  CHECK(dim_hook(P({3, 2})) == 5);
  CHECK(dim_hook(P({2, 1})) == 2);
  CHECK(dim_syt_oracle(P({1})) == 1);
  CHECK(dim_syt_oracle(P({2, 2})) == 2);
  CHECK(dim_syt_oracle(P({3, 2})) == 5);
  std::vector<std::vector<std::vector<int>>> listed;
  for_each_standard_tableau(P({2, 2}), [&](const auto& t) { listed.push_back(t); });
  REQUIRE(listed.size() == 2);
  CHECK(listed[0] == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(listed[1] == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("contents and containment") {
  CHECK(contents_multiset(Partition()).empty());
  auto c21 = contents_multiset(P({2, 1}));
  std::sort(c21.begin(), c21.end());
  CHECK(c21 == std::vector<int>{-1, 0, 1});
  auto c32 = contents_multiset(P({3, 2}));
  std::sort(c32.begin(), c32.end());
  CHECK(c32 == std::vector<int>{-1, 0, 0, 1, 2});
  CHECK(contains(Partition(), P({3, 1})));
  CHECK(contains(P({2, 1}), P({3, 1})));
  CHECK(!contains(P({2, 2}), P({3, 1})));
}

TEST_CASE("serialization") {
  CHECK(P({3, 2}).str() == "3,2");
  CHECK(Partition().str() == "0");
  CHECK(Partition::parse("3,2") == P({3, 2}));
  CHECK(Partition::parse("0") == Partition());
  CHECK_THROWS(Partition::parse("2,3"));
}

TEST_CASE("property: hook formula equals tableau count up to 10") {
  for (const auto& lam : partitions_up_to(10)) CHECK(dim_hook(lam) == dim_syt_oracle(lam));
}

TEST_CASE("property: add and remove are inverse, addable/removable structure") {
  for (const auto& lam : partitions_up_to(9)) {
    auto plus = addable(lam);
    auto minus = removable(lam);
    CHECK(plus.size() == minus.size() + 1);
    for (int i : plus) {
      CHECK(std::find(minus.begin(), minus.end(), i) == minus.end());
      CHECK(remove_box(*add_box(lam, i), i) == lam);
      CHECK(!is_addable(lam, i + 1));
      CHECK(!is_addable(lam, i - 1));
    }
    for (int j : minus) CHECK(add_box(*remove_box(lam, j), j) == lam);
  }
}

TEST_CASE("property: contents multiset is injective up to 12") {
  std::set<std::vector<int>> seen;
  std::size_t total = 0;
  for (const auto& lam : partitions_up_to(12)) {
    auto c = contents_multiset(lam);
    std::sort(c.begin(), c.end());
    seen.insert(c);
    ++total;
    for (int x : c) {
      CHECK(x <= lam.size() - 1);
      CHECK(x >= -lam.size() + 1);
    }
  }
  CHECK(seen.size() == total);
}
