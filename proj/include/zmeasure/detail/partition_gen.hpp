// Header-only partition generator for hot enumeration loops.  The callback
// receives the raw weakly-decreasing parts vector; it must not retain the
// reference.  Visitation order is reverse lexicographic, matching
// enumerate_partitions().
#pragma once

#include <vector>

namespace zm::detail {

template <class Fn>
void visit_partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                          Fn&& fn) {
  if (remaining == 0) {
    fn(const_cast<const std::vector<int>&>(stack));
    return;
  }
  int hi = remaining < max_part ? remaining : max_part;
  for (int first = hi; first >= 1; --first) {
    stack.push_back(first);
    visit_partitions_rec(remaining - first, first, stack, fn);
    stack.pop_back();
  }
}

template <class Fn>
void visit_partitions(int n, Fn&& fn) {
  std::vector<int> stack;
  stack.reserve(n > 0 ? n : 1);
  visit_partitions_rec(n, n, stack, fn);
}

// Partitions of n with first part exactly `first`.
template <class Fn>
void visit_partitions_first_part(int n, int first, Fn&& fn) {
  if (first < 1 || first > n) {
    if (n == 0 && first == 0) {
      std::vector<int> empty;
      fn(const_cast<const std::vector<int>&>(empty));
    }
    return;
  }
  std::vector<int> stack;
  stack.reserve(n);
  stack.push_back(first);
  visit_partitions_rec(n - first, first, stack, fn);
}

}  // namespace zm::detail
