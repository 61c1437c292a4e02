// Robinson-Schensted-Knuth correspondences: matrices, words, permutations;
// semistandard tableau counting; longest weakly increasing subsequences;
// exact pushforward shape distributions.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "zmeasure/partition.hpp"
#include "zmeasure/rational.hpp"

namespace zm {

enum class TableauKind { semistandard, standard };

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  long long size() const;
  bool is_semistandard() const;  // weak rows, strict columns
  bool is_standard() const;      // strict both ways, entries exactly 1..n
  std::string to_string() const;
};

struct TableauPair {
  Tableau P, Q;
};

struct NonNegMatrix {
  int k = 0, l = 0;                // rows x cols
  std::vector<long long> entries;  // row-major, k*l nonnegative values

  long long& at(int i, int j) { return entries[static_cast<size_t>(i) * l + j]; }
  long long at(int i, int j) const { return entries[static_cast<size_t>(i) * l + j]; }
  long long total() const;
  static NonNegMatrix zero(int k, int l);
};

using Word = std::vector<int>;         // letters in 1..k
using Permutation = std::vector<int>;  // images of 1..n, a bijection

// Knuth RSK by row insertion on the lexicographically ordered two-line
// array.  P is semistandard over {1..l}, Q semistandard over {1..k}.
TableauPair rsk_matrix(const NonNegMatrix& a);
// Inverse bijection.  Dimensions cannot always be recovered from the pair
// (trailing zero rows/columns), so they are passed explicitly; -1 infers the
// smallest consistent value.
NonNegMatrix rsk_matrix_inverse(const TableauPair& pair, int k = -1, int l = -1);

// Word RSK: insert letters left to right; P semistandard over {1..k},
// Q standard.
TableauPair rsk_word(const Word& w, int k);
Word rsk_word_inverse(const TableauPair& pair);

// Permutation RSK: both tableaux standard.
TableauPair rsk_permutation(const Permutation& sigma);
Permutation rsk_permutation_inverse(const TableauPair& pair);

// Length of the longest weakly increasing subsequence (strictly increasing
// positions, weakly increasing values) by patience sorting, O(n log n).
// Throws on empty input.
int lis(std::span<const int> seq);

// Number of semistandard tableaux of shape lambda with entries in {1..k}:
// prod_b (c(b)+k)/h(b), exact; zero when lambda has more than k rows.
BigInt count_ssyt(const Partition& la, int k);

enum class RskKind { matrix, word, permutation };

// Exact pushforward of the uniform distribution on B^n_{k,l}, B^n_{k,inf}
// or S_n to Young-diagram shapes.  Probabilities sum to 1 exactly.
std::map<Partition, Rational> pushforward_shape_distribution(RskKind kind,
                                                             int k, int l,
                                                             int n,
                                                             int cap = 60);

// Number of k x l nonnegative integer matrices with entry sum n
// (stars and bars).
BigInt matrix_count(int k, int l, long long n);

}  // namespace zm
