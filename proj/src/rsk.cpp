#include "zmeasure/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace zm {

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

long long Tableau::size() const {
  long long s = 0;
  for (const auto& r : rows) s += static_cast<long long>(r.size());
  return s;
}

bool Tableau::is_semistandard() const {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> seen;
  for (const auto& r : rows) {
    for (size_t c = 1; c < r.size(); ++c)
      if (r[c] <= r[c - 1]) return false;
    seen.insert(seen.end(), r.begin(), r.end());
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(r[c]);
    }
    s += '\n';
  }
  return s;
}

long long NonNegMatrix::total() const {
  long long s = 0;
  for (long long e : entries) {
    if (e < 0) throw std::invalid_argument("negative matrix entry");
    s += e;
  }
  return s;
}

NonNegMatrix NonNegMatrix::zero(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  NonNegMatrix m;
  m.k = k;
  m.l = l;
  m.entries.assign(static_cast<size_t>(k) * l, 0);
  return m;
}

namespace {

// Row-inserts v, returns the (row, col) of the box added to the shape.
std::pair<int, int> row_insert(Tableau& t, int v) {
  int cur = v;
  for (size_t r = 0;; ++r) {
    if (r == t.rows.size()) {
      t.rows.push_back({cur});
      return {static_cast<int>(r), 0};
    }
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(cur, *it);
  }
}

// Undoes an insertion that ended with the box (r, end of row r); returns the
// originally inserted value.
int reverse_insert(Tableau& t, int r) {
  auto& last_row = t.rows[r];
  int cur = last_row.back();
  last_row.pop_back();
  if (last_row.empty()) t.rows.erase(t.rows.begin() + r);
  for (int rr = r - 1; rr >= 0; --rr) {
    auto& row = t.rows[rr];
    auto it = std::lower_bound(row.begin(), row.end(), cur);
    if (it == row.begin())
      throw std::invalid_argument("malformed tableau pair");
    --it;  // rightmost entry strictly below cur
    std::swap(cur, *it);
  }
  return cur;
}

// Insert the lexicographically sorted two-line array (top, bottom): bottom
// goes through row insertion, top labels the recording tableau.
TableauPair rsk_two_line(const std::vector<int>& top,
                         const std::vector<int>& bottom) {
  TableauPair pair;
  for (size_t i = 0; i < top.size(); ++i) {
    auto [r, c] = row_insert(pair.P, bottom[i]);
    if (r == static_cast<int>(pair.Q.rows.size()))
      pair.Q.rows.emplace_back();
    if (c != static_cast<int>(pair.Q.rows[r].size()))
      throw std::logic_error("recording tableau out of sync");
    pair.Q.rows[r].push_back(top[i]);
  }
  return pair;
}

// Pops the cell of Q carrying the maximal label (rightmost column among
// ties), reverse-inserts from the matching corner of P.  Returns
// {label, original value}.
std::pair<int, int> reverse_step(TableauPair& pair) {
  int best_r = -1, best_c = -1, best_v = 0;
  for (size_t r = 0; r < pair.Q.rows.size(); ++r) {
    const auto& row = pair.Q.rows[r];
    int c = static_cast<int>(row.size()) - 1;
    // only row ends can be removable corners with the max label
    if (c < 0) continue;
    if (best_r < 0 || row[c] > best_v || (row[c] == best_v && c > best_c)) {
      best_r = static_cast<int>(r);
      best_c = c;
      best_v = row[c];
    }
  }
  if (best_r < 0) throw std::logic_error("reverse_step on empty pair");
  auto& qrow = pair.Q.rows[best_r];
  qrow.pop_back();
  if (qrow.empty()) pair.Q.rows.erase(pair.Q.rows.begin() + best_r);
  int value = reverse_insert(pair.P, best_r);
  return {best_v, value};
}

void check_pair(const TableauPair& pair, bool p_standard, bool q_standard) {
  if (!(pair.P.shape() == pair.Q.shape()))
    throw std::invalid_argument("tableau pair shapes differ");
  if (p_standard ? !pair.P.is_standard() : !pair.P.is_semistandard())
    throw std::invalid_argument("malformed P tableau");
  if (q_standard ? !pair.Q.is_standard() : !pair.Q.is_semistandard())
    throw std::invalid_argument("malformed Q tableau");
}

}  // namespace

TableauPair rsk_matrix(const NonNegMatrix& a) {
  std::vector<int> top, bottom;
  top.reserve(a.total());
  bottom.reserve(a.total());
  for (int i = 0; i < a.k; ++i)
    for (int j = 0; j < a.l; ++j)
      for (long long rep = 0; rep < a.at(i, j); ++rep) {
        top.push_back(i + 1);
        bottom.push_back(j + 1);
      }
  return rsk_two_line(top, bottom);
}

NonNegMatrix rsk_matrix_inverse(const TableauPair& pair, int k, int l) {
  check_pair(pair, false, false);
  TableauPair work = pair;
  int max_q = 0, max_p = 0;
  for (const auto& r : work.Q.rows)
    for (int v : r) max_q = std::max(max_q, v);
  for (const auto& r : work.P.rows)
    for (int v : r) max_p = std::max(max_p, v);
  if (k < 0) k = std::max(max_q, 1);
  if (l < 0) l = std::max(max_p, 1);
  if (max_q > k || max_p > l)
    throw std::invalid_argument("tableau entries exceed matrix dimensions");
  NonNegMatrix m = NonNegMatrix::zero(k, l);
  while (!work.P.rows.empty()) {
    auto [i, j] = reverse_step(work);
    ++m.at(i - 1, j - 1);
  }
  return m;
}

TableauPair rsk_word(const Word& w, int k) {
  for (int c : w)
    if (c < 1 || c > k) throw std::invalid_argument("word letter out of range");
  std::vector<int> top(w.size());
  for (size_t i = 0; i < w.size(); ++i) top[i] = static_cast<int>(i) + 1;
  return rsk_two_line(top, w);
}

Word rsk_word_inverse(const TableauPair& pair) {
  check_pair(pair, false, true);
  TableauPair work = pair;
  Word w(static_cast<size_t>(pair.P.size()));
  while (!work.P.rows.empty()) {
    auto [pos, letter] = reverse_step(work);
    w[pos - 1] = letter;
  }
  return w;
}

TableauPair rsk_permutation(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  std::vector<int> top(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) top[i] = static_cast<int>(i) + 1;
  return rsk_two_line(top, sigma);
}

Permutation rsk_permutation_inverse(const TableauPair& pair) {
  check_pair(pair, true, true);
  TableauPair work = pair;
  Permutation sigma(static_cast<size_t>(pair.P.size()));
  while (!work.P.rows.empty()) {
    auto [pos, v] = reverse_step(work);
    sigma[pos - 1] = v;
  }
  return sigma;
}

int lis(std::span<const int> seq) {
  if (seq.empty()) throw std::invalid_argument("lis of empty sequence");
  std::vector<int> tails;
  for (int x : seq) {
    auto it = std::upper_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

BigInt count_ssyt(const Partition& la, int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (la.rows() > k) return 0;
  Rational r = 1;
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j)
      r *= Rational(content(la, {i, j}) + k, hook(la, {i, j}));
  if (denominator(r) != 1)
    throw std::logic_error("ssyt count did not reduce to an integer");
  return numerator(r);
}

BigInt matrix_count(int k, int l, long long n) {
  return binomial(static_cast<long long>(k) * l + n - 1, n);
}

std::map<Partition, Rational> pushforward_shape_distribution(RskKind kind,
                                                             int k, int l,
                                                             int n, int cap) {
  if (n < 0 || n > cap)
    throw std::invalid_argument("pushforward size outside enumeration cap");
  std::map<Partition, Rational> out;
  Rational total = 0;
  for (const Partition& la : enumerate_partitions(n, cap)) {
    Rational p;
    switch (kind) {
      case RskKind::matrix:
        p = Rational(count_ssyt(la, k) * count_ssyt(la, l), matrix_count(k, l, n));
        break;
      case RskKind::word:
        p = Rational(count_ssyt(la, k) * dim_exact(la),
                     rational_pow(Rational(k), n).convert_to<BigInt>());
        break;
      case RskKind::permutation:
        p = Rational(dim_exact(la) * dim_exact(la), factorial(n));
        break;
    }
    if (p != 0) out.emplace(la, p);
    total += p;
  }
  if (total != 1)
    throw std::logic_error("pushforward distribution does not sum to 1");
  return out;
}

}  // namespace zm
