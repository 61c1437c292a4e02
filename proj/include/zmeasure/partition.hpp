// Integer partitions / Young diagrams: Frobenius coordinates, hooks,
// contents, dimensions, enumeration and the two point embeddings.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zmeasure/rational.hpp"

namespace zm {

class Partition {
 public:
  Partition() = default;
  // Parts must be weakly decreasing and positive; throws otherwise.
  explicit Partition(std::vector<int> parts);

  long long n() const { return n_; }  // total box count |lambda|
  int rows() const { return static_cast<int>(parts_.size()); }
  // 1-based row length; zero beyond the last row.
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Column length lambda'_j, 1-based.
  int conj_part(int j) const;
  Partition transpose() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;  // "(3,2)" with "()" for the empty diagram

 private:
  std::vector<int> parts_;
  long long n_ = 0;
};

struct Box {
  int i, j;  // 1-based row and column
};

struct FrobeniusCoords {
  std::vector<int> p, q;  // strictly decreasing, nonnegative
  int d() const { return static_cast<int>(p.size()); }
};

FrobeniusCoords frobenius(const Partition& la);
// Inverse of frobenius(); rejects coordinates that are not strictly
// decreasing or of unequal lengths.
Partition from_frobenius(const FrobeniusCoords& f);

bool contains_box(const Partition& la, Box b);
int content(const Partition& la, Box b);  // j - i; throws if b outside
int hook(const Partition& la, Box b);     // arm + leg + 1; throws if b outside

// Number of standard Young tableaux of shape lambda (hook formula, exact).
BigInt dim_exact(const Partition& la);
// log dim, for floating evaluation at sizes where the exact value is overkill.
double log_dim(const Partition& la);

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
// Throws if n exceeds the cap.
std::vector<Partition> enumerate_partitions(int n, int cap = 60);
// Streaming variants; the visitation order matches enumerate_partitions.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
// Partitions of n whose first part is exactly `first`.
void for_each_partition_first_part(
    int n, int first, const std::function<void(const Partition&)>& fn);

// Partition numbers p(n) by the Euler pentagonal-number recurrence.
BigInt partition_count(int n);

// Finite point configuration on the half-integer lattice Z' = Z + 1/2.
// Coordinates are stored doubled (so 5/2 is stored as 5): every stored
// value is an odd integer.
struct PointConfiguration {
  std::vector<int> twice;  // strictly decreasing doubled half-integers

  static PointConfiguration from_halves(std::vector<int> doubled);
  bool contains(int doubled) const;
  bool balanced() const;  // |X ∩ Z'_+| == |X ∩ Z'_-|
  int size() const { return static_cast<int>(twice.size()); }
  std::vector<double> as_doubles() const;
  bool operator==(const PointConfiguration& o) const { return twice == o.twice; }
  std::string to_string() const;
};

// lambda -> {p_i + 1/2} ∪ {-q_i - 1/2}.
PointConfiguration embed_config(const Partition& la);

// Point of the Thoma simplex with exact rational coordinates.
struct SimplexPoint {
  std::vector<Rational> alpha, beta;
};

// alpha_i = (p_i + 1/2)/n, beta_i = (q_i + 1/2)/n; requires |lambda| = n > 0.
SimplexPoint embed_simplex(const Partition& la, long long n);

}  // namespace zm
