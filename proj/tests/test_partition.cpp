#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zmeasure/partition.hpp"

#include <map>
#include <set>

using namespace zm;

namespace {

// Independent oracle: count standard tableaux by peeling removable corners.
BigInt syt_count_recursive(const Partition& la,
                           std::map<Partition, BigInt>& memo) {
  if (la.n() == 0) return 1;
  auto it = memo.find(la);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (int i = 1; i <= la.rows(); ++i) {
    bool corner = (i == la.rows()) || (la.part(i + 1) < la.part(i));
    if (!corner) continue;
    std::vector<int> parts = la.parts();
    if (--parts[i - 1] == 0) parts.erase(parts.begin() + (i - 1));
    total += syt_count_recursive(Partition(parts), memo);
  }
  memo.emplace(la, total);
  return total;
}

}  // namespace

TEST_CASE("frobenius coordinates") {
  CHECK(frobenius(Partition{}).d() == 0);
  auto f1 = frobenius(Partition({1}));
  CHECK(f1.p == std::vector<int>{0});
  CHECK(f1.q == std::vector<int>{0});
  auto f32 = frobenius(Partition({3, 2}));
  CHECK(f32.p == std::vector<int>({2, 0}));
  CHECK(f32.q == std::vector<int>({1, 0}));
}

TEST_CASE("from_frobenius inverts and validates") {
  CHECK(from_frobenius({{}, {}}) == Partition{});
  CHECK(from_frobenius({{0}, {0}}) == Partition({1}));
  CHECK(from_frobenius({{2, 0}, {1, 0}}) == Partition({3, 2}));
  CHECK_THROWS(from_frobenius({{0, 1}, {1, 0}}));  // not strictly decreasing
  CHECK_THROWS(from_frobenius({{1}, {1, 0}}));     // length mismatch
}

TEST_CASE("frobenius roundtrip and size identity up to n = 12") {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& la : enumerate_partitions(n)) {
      FrobeniusCoords f = frobenius(la);
      CHECK(from_frobenius(f) == la);
      long long sum = 0;
      for (int i = 0; i < f.d(); ++i) sum += f.p[i] + f.q[i] + 1;
      CHECK(sum == la.n());
    }
  }
}

TEST_CASE("content and hook") {
  CHECK(content(Partition({1}), {1, 1}) == 0);
  CHECK(hook(Partition({1}), {1, 1}) == 1);
  CHECK(content(Partition({2, 1}), {1, 1}) == 0);
  CHECK(hook(Partition({2, 1}), {1, 1}) == 3);
  CHECK(content(Partition({3, 2}), {1, 2}) == 1);
  CHECK(hook(Partition({3, 2}), {1, 2}) == 3);
  CHECK_THROWS(content(Partition({2, 1}), {2, 2}));
  CHECK_THROWS(hook(Partition({2, 1}), {3, 1}));
}

TEST_CASE("dimension by hook formula") {
  CHECK(dim_exact(Partition({1})) == 1);
  CHECK(dim_exact(Partition({2, 1})) == 2);
  CHECK(dim_exact(Partition({3, 2})) == 5);
}

TEST_CASE("dimension matches the corner-peeling oracle up to n = 8") {
  std::map<Partition, BigInt> memo;
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : enumerate_partitions(n))
      CHECK(dim_exact(la) == syt_count_recursive(la, memo));
}

TEST_CASE("enumeration: counts, order, cap") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK(enumerate_partitions(10).size() == 42);
  auto all = enumerate_partitions(6);
  // reverse lexicographic: (6) first, (1^6) last, strictly decreasing order
  CHECK(all.front() == Partition({6}));
  CHECK(all.back() == Partition({1, 1, 1, 1, 1, 1}));
  for (size_t i = 1; i < all.size(); ++i)
    CHECK(all[i].parts() < all[i - 1].parts());
  CHECK_THROWS(enumerate_partitions(61));
  CHECK_THROWS(enumerate_partitions(-1));
}

TEST_CASE("enumeration count matches the pentagonal recurrence") {
  for (int n = 0; n <= 28; ++n) {
    BigInt counted = 0;
    for_each_partition(n, [&](const Partition&) { counted += 1; });
    CHECK(counted == partition_count(n));
  }
  CHECK(partition_count(60) == BigInt("966467"));
  CHECK(partition_count(100) == BigInt("190569292"));
}

TEST_CASE("first-part decomposition covers the enumeration") {
  for (int n = 1; n <= 14; ++n) {
    BigInt total = 0;
    for (int f = 1; f <= n; ++f)
      for_each_partition_first_part(n, f, [&](const Partition& la) {
        CHECK(la.part(1) == f);
        total += 1;
      });
    CHECK(total == partition_count(n));
  }
}

TEST_CASE("embedding into Z' configurations") {
  CHECK(embed_config(Partition{}).size() == 0);
  auto c1 = embed_config(Partition({1}));
  CHECK(c1.twice == std::vector<int>({1, -1}));  // {1/2, -1/2}
  auto c32 = embed_config(Partition({3, 2}));
  CHECK(c32.twice == std::vector<int>({5, 1, -1, -3}));
  SUBCASE("balanced and injective per level") {
    for (int n = 0; n <= 12; ++n) {
      std::set<std::vector<int>> seen;
      for (const Partition& la : enumerate_partitions(n)) {
        PointConfiguration cfg = embed_config(la);
        CHECK(cfg.balanced());
        CHECK(seen.insert(cfg.twice).second);
      }
    }
  }
}

TEST_CASE("thoma simplex embedding") {
  auto s1 = embed_simplex(Partition({1}), 1);
  REQUIRE(s1.alpha.size() == 1);
  CHECK(s1.alpha[0] == Rational(1, 2));
  CHECK(s1.beta[0] == Rational(1, 2));
  auto s32 = embed_simplex(Partition({3, 2}), 5);
  CHECK(s32.alpha == std::vector<Rational>({Rational(1, 2), Rational(1, 10)}));
  CHECK(s32.beta == std::vector<Rational>({Rational(3, 10), Rational(1, 10)}));
  CHECK_THROWS(embed_simplex(Partition{}, 0));   // n must be positive
  CHECK_THROWS(embed_simplex(Partition({2}), 3));  // size mismatch
  SUBCASE("coordinates stay inside the simplex") {
    for (const Partition& la : enumerate_partitions(9)) {
      auto s = embed_simplex(la, 9);
      Rational sum = 0;
      for (const auto& a : s.alpha) sum += a;
      for (const auto& b : s.beta) sum += b;
      CHECK(sum <= 1);
    }
  }
}

TEST_CASE("transpose") {
  CHECK(Partition{}.transpose() == Partition{});
  CHECK(Partition({3, 2}).transpose() == Partition({2, 2, 1}));
  CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
  for (const Partition& la : enumerate_partitions(10)) {
    CHECK(la.transpose().transpose() == la);
    FrobeniusCoords f = frobenius(la), ft = frobenius(la.transpose());
    CHECK(f.p == ft.q);
    CHECK(f.q == ft.p);
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS(Partition({2, 3}));
  CHECK_THROWS(Partition({1, 0}));
  CHECK_THROWS(Partition({-1}));
}
