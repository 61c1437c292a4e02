#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zmeasure/measures.hpp"
#include "zmeasure/rsk.hpp"

#include <functional>
#include <set>

using namespace zm;

namespace {

// Exhaustive LIS oracle over all subsequences (n <= ~20).
int lis_brute(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int prev = 0, len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      if (w[i] < prev) ok = false;
      prev = w[i];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Exhaustive SSYT count by backtracking over row-weak, column-strict
// fillings with entries in 1..k.
long long ssyt_brute(const Partition& la, int k) {
  std::vector<std::vector<int>> cells(la.rows());
  for (int i = 0; i < la.rows(); ++i) cells[i].assign(la.part(i + 1), 0);
  std::function<long long(int, int)> rec = [&](int i, int j) -> long long {
    if (i == la.rows()) return 1;
    int ni = i, nj = j + 1;
    if (nj >= la.part(i + 1)) {
      ni = i + 1;
      nj = 0;
    }
    long long total = 0;
    int lo = 1;
    if (j > 0) lo = std::max(lo, cells[i][j - 1]);
    if (i > 0 && j < la.part(i)) lo = std::max(lo, cells[i - 1][j] + 1);
    for (int v = lo; v <= k; ++v) {
      cells[i][j] = v;
      total += rec(ni, nj);
    }
    cells[i][j] = 0;
    return total;
  };
  if (la.n() == 0) return 1;
  return rec(0, 0);
}

void all_matrices(int k, int l, long long n,
                  const std::function<void(const NonNegMatrix&)>& fn) {
  NonNegMatrix m = NonNegMatrix::zero(k, l);
  std::function<void(int, long long)> rec = [&](int cell, long long left) {
    if (cell == k * l - 1) {
      m.entries[cell] = left;
      fn(m);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      m.entries[cell] = v;
      rec(cell + 1, left - v);
    }
  };
  rec(0, n);
}

void all_words(int k, int n, const std::function<void(const Word&)>& fn) {
  Word w(n, 1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      fn(w);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      w[pos] = c;
      rec(pos + 1);
    }
  };
  rec(0);
}

void all_permutations(int n, const std::function<void(const Permutation&)>& fn) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

TEST_CASE("matrix RSK examples") {
  {
    NonNegMatrix m = NonNegMatrix::zero(1, 1);
    m.at(0, 0) = 1;
    TableauPair pr = rsk_matrix(m);
    CHECK(pr.P.rows == std::vector<std::vector<int>>{{1}});
    CHECK(pr.Q.rows == std::vector<std::vector<int>>{{1}});
  }
  {
    NonNegMatrix m = NonNegMatrix::zero(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    TableauPair pr = rsk_matrix(m);
    CHECK(pr.P.shape() == Partition({2}));
    CHECK(pr.P.rows == std::vector<std::vector<int>>{{1, 2}});
    CHECK(pr.Q.rows == std::vector<std::vector<int>>{{1, 2}});
  }
  {
    NonNegMatrix m = NonNegMatrix::zero(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    TableauPair pr = rsk_matrix(m);
    CHECK(pr.P.shape() == Partition({1, 1}));
  }
}

TEST_CASE("matrix RSK is a bijection onto same-shape SSYT pairs (k=l=2, n<=5)") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>>
        images;
    long long count = 0;
    all_matrices(2, 2, n, [&](const NonNegMatrix& m) {
      ++count;
      TableauPair pr = rsk_matrix(m);
      CHECK(pr.P.shape() == pr.Q.shape());
      if (n > 0) {
        CHECK(pr.P.is_semistandard());
        CHECK(pr.Q.is_semistandard());
      }
      CHECK(pr.P.size() == n);
      CHECK(images.insert({pr.P.rows, pr.Q.rows}).second);  // injective
      NonNegMatrix back = rsk_matrix_inverse(pr, 2, 2);
      CHECK(back.entries == m.entries);
    });
    CHECK(BigInt(count) == matrix_count(2, 2, n));
    // surjectivity: every valid same-shape pair with entries <= 2 is hit
    long long pair_count = 0;
    for (const Partition& la : enumerate_partitions(n)) {
      long long c = ssyt_brute(la, 2);
      pair_count += c * c;
    }
    CHECK(static_cast<long long>(images.size()) == pair_count);
  }
}

TEST_CASE("word RSK examples and roundtrip") {
  {
    TableauPair pr = rsk_word({1}, 2);
    CHECK(pr.P.shape() == Partition({1}));
    CHECK(pr.Q.is_standard());
  }
  CHECK(rsk_word({2, 1}, 2).P.shape() == Partition({1, 1}));
  CHECK(rsk_word({1, 1}, 2).P.shape() == Partition({2}));
  for (int n = 1; n <= 5; ++n)
    all_words(3, n, [&](const Word& w) {
      TableauPair pr = rsk_word(w, 3);
      CHECK(pr.P.is_semistandard());
      CHECK(pr.Q.is_standard());
      CHECK(rsk_word_inverse(pr) == w);
    });
  CHECK_THROWS(rsk_word({3}, 2));  // letter out of range
}

TEST_CASE("permutation RSK examples and roundtrip") {
  CHECK(rsk_permutation({1}).P.shape() == Partition({1}));
  CHECK(rsk_permutation({2, 1}).P.shape() == Partition({1, 1}));
  CHECK(rsk_permutation({3, 1, 2}).P.shape() == Partition({2, 1}));
  for (int n = 1; n <= 6; ++n)
    all_permutations(n, [&](const Permutation& p) {
      TableauPair pr = rsk_permutation(p);
      CHECK(pr.P.is_standard());
      CHECK(pr.Q.is_standard());
      CHECK(rsk_permutation_inverse(pr) == p);
    });
  CHECK_THROWS(rsk_permutation({1, 1}));
}

TEST_CASE("lis: examples and brute-force oracle") {
  CHECK(lis(std::vector<int>{1, 2, 3, 4}) == 4);
  CHECK(lis(std::vector<int>{3, 1, 2}) == 2);
  CHECK(lis(std::vector<int>{2, 2, 1, 2}) == 3);  // weak increase allows repeats
  CHECK_THROWS(lis(std::vector<int>{}));
}

TEST_CASE("schensted: lis equals the first row of the RSK shape") {
  for (int n = 1; n <= 6; ++n)
    all_permutations(n, [&](const Permutation& p) {
      CHECK(lis(p) == rsk_permutation(p).P.shape().part(1));
      CHECK(lis(p) == lis_brute(p));
    });
  for (int n = 1; n <= 5; ++n)
    all_words(3, n, [&](const Word& w) {
      CHECK(lis(w) == rsk_word(w, 3).P.shape().part(1));
      CHECK(lis(w) == lis_brute(w));
    });
}

TEST_CASE("count_ssyt: examples and exhaustive oracle") {
  CHECK(count_ssyt(Partition({1}), 1) == 1);
  CHECK(count_ssyt(Partition({2, 1}), 2) == 2);
  CHECK(count_ssyt(Partition({1, 1, 1}), 2) == 0);
  for (int n = 0; n <= 6; ++n)
    for (const Partition& la : enumerate_partitions(n))
      for (int k = 1; k <= 3; ++k)
        CHECK(count_ssyt(la, k) == BigInt(ssyt_brute(la, k)));
}

TEST_CASE("matrix count adjudication: stars and bars") {
  // direct enumeration vs C(kl+n-1, n)
  for (int n = 0; n <= 5; ++n) {
    long long count = 0;
    all_matrices(2, 2, n, [&](const NonNegMatrix&) { ++count; });
    CHECK(BigInt(count) == matrix_count(2, 2, n));
  }
  // and the ssyt-pair total matches it
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int n = 0; n <= 8; ++n) {
        BigInt total = 0;
        for (const Partition& la : enumerate_partitions(n))
          total += count_ssyt(la, k) * count_ssyt(la, l);
        CHECK(total == matrix_count(k, l, n));
      }
}

TEST_CASE("pushforward shape distributions") {
  {
    auto d = pushforward_shape_distribution(RskKind::permutation, 0, 0, 2);
    CHECK(d[Partition({2})] == Rational(1, 2));
    CHECK(d[Partition({1, 1})] == Rational(1, 2));
  }
  {
    auto d = pushforward_shape_distribution(RskKind::matrix, 1, 1, 4);
    CHECK(d.size() == 1);
    CHECK(d[Partition({4})] == 1);
  }
  {
    auto d = pushforward_shape_distribution(RskKind::word, 2, 0, 2);
    CHECK(d[Partition({2})] == Rational(3, 4));
    CHECK(d[Partition({1, 1})] == Rational(1, 4));
  }
  SUBCASE("empirical check against direct enumeration") {
    for (int n = 1; n <= 4; ++n) {
      auto d = pushforward_shape_distribution(RskKind::matrix, 2, 3, n);
      std::map<Partition, long long> freq;
      long long count = 0;
      all_matrices(2, 3, n, [&](const NonNegMatrix& m) {
        ++count;
        freq[rsk_matrix(m).P.shape()]++;
      });
      for (auto& [shape, f] : freq) CHECK(d[shape] == Rational(f, count));
    }
  }
}

TEST_CASE("pushforward equals the z-measure at integer parameters") {
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int n = 1; n <= 6; ++n) {
        auto d = pushforward_shape_distribution(RskKind::matrix, k, l, n);
        ZParams zp = ZParams::degenerate(k, l);
        for (const Partition& la : enumerate_partitions(n)) {
          Rational expect = z_measure_exact(la, zp);
          auto it = d.find(la);
          Rational got = (it == d.end()) ? Rational(0) : it->second;
          CHECK(got == expect);
        }
      }
}

TEST_CASE("pushforward support cutoff") {
  // zero mass exactly when the shape is longer than min(k,l)
  for (int n = 1; n <= 6; ++n) {
    auto d = pushforward_shape_distribution(RskKind::matrix, 2, 3, n);
    for (const Partition& la : enumerate_partitions(n)) {
      bool should_vanish = la.rows() > 2;
      bool vanishes = d.find(la) == d.end();
      CHECK(should_vanish == vanishes);
    }
  }
}
