#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hlwhit/partition.hpp"

using namespace hlwhit;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("construction and validation") {
  CHECK_NOTHROW(P({3, 1}));
  CHECK_THROWS(P({1, 3}));
  CHECK_THROWS(P({2, 0}));
  CHECK(Partition().empty());
  CHECK(Partition().size() == 0);
}

TEST_CASE("size") {
  CHECK(Partition().size() == 0);
  CHECK(P({3, 1}).size() == 4);
  CHECK(P({2, 2, 1}).size() == 5);
}

TEST_CASE("multiplicity") {
  CHECK(P({2, 2, 1}).multiplicity(2) == 2);
  CHECK(P({2, 2, 1}).multiplicity(3) == 0);
  CHECK(P({1, 1, 1, 1}).multiplicity(1) == 4);
  CHECK_THROWS(P({1}).multiplicity(0));
}

TEST_CASE("n_stat") {
  CHECK(Partition().n_stat() == 0);
  CHECK(P({7}).n_stat() == 0);
  CHECK(P({2, 2, 1}).n_stat() == 4);  // 0*2 + 1*2 + 2*1
}

TEST_CASE("enumerate_partitions order and counts") {
  auto all3 = enumerate_partitions(3);
  REQUIRE(all3.size() == 3);
  CHECK(all3[0] == P({3}));
  CHECK(all3[1] == P({2, 1}));
  CHECK(all3[2] == P({1, 1, 1}));

  auto bounded = enumerate_partitions(3, 2);
  REQUIRE(bounded.size() == 2);
  CHECK(bounded[0] == P({3}));
  CHECK(bounded[1] == P({2, 1}));

  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  // p(m) = 1, 1, 2, 3, 5, 7, 11 for m = 0..6
  int expected[] = {1, 1, 2, 3, 5, 7, 11};
  for (int m = 0; m <= 6; ++m)
    CHECK(enumerate_partitions(m).size() == static_cast<size_t>(expected[m]));

  // decreasing lexicographic throughout
  auto all6 = enumerate_partitions(6);
  for (size_t i = 1; i < all6.size(); ++i) CHECK(all6[i - 1] > all6[i]);
}

TEST_CASE("dominance") {
  CHECK(dominates(P({2}), P({1, 1})));
  CHECK(!dominates(P({1, 1}), P({2})));
  CHECK(!dominates(P({2, 2}), P({3, 1})));
  CHECK(dominates(P({3, 1}), P({2, 2})));
  CHECK(dominates(P({2, 1}), P({2, 1})));
  CHECK_THROWS(dominates(P({2}), P({1})));
}

TEST_CASE("conjugate") {
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(P({1, 1, 1}).conjugate() == P({3}));
  CHECK(Partition().conjugate().empty());
}

TEST_CASE("conjugate is an involution; dominance anti-isomorphism") {
  for (int m = 0; m <= 7; ++m) {
    auto parts = enumerate_partitions(m);
    for (const auto& lam : parts) {
      CHECK(lam.conjugate().conjugate() == lam);
      // n(lambda) = sum binomial(lambda'_j, 2)
      long viaconj = 0;
      Partition conj = lam.conjugate();
      for (int p : conj.parts()) viaconj += static_cast<long>(p) * (p - 1) / 2;
      CHECK(lam.n_stat() == viaconj);
    }
    for (const auto& a : parts)
      for (const auto& b : parts)
        CHECK(dominates(a, b) == dominates(b.conjugate(), a.conjugate()));
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(P({2, 1}).str() == "2,1");
  CHECK(Partition().str() == "-");
  CHECK(Partition::parse("2,1") == P({2, 1}));
  CHECK(Partition::parse("-").empty());
  CHECK(Partition::parse("0").empty());
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK_THROWS(Partition::parse("a"));
}

TEST_CASE("weakly decreasing tuples") {
  auto t = WeaklyDecreasingTuple::parse("1,0,-1");
  CHECK(t.last_negative());
  CHECK(t.str() == "1,0,-1");
  CHECK_THROWS(WeaklyDecreasingTuple::parse("0,1"));

  auto s = WeaklyDecreasingTuple::parse("2,1,0");
  CHECK(!s.last_negative());
  CHECK(s.to_partition() == P({2, 1}));
  CHECK(WeaklyDecreasingTuple::parse("0,0").to_partition().empty());
  CHECK_THROWS(t.to_partition());
}
