#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library's combinatorics, so agreement is a genuine check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;

/// Partitions of n in reverse-lex order, by filling parts greedily.
inline std::vector<Shape> partitions(int n) {
  std::vector<Shape> out;
  Shape cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Number of standard Young tableaux, by removing a corner box in all ways.
inline std::int64_t syt_count(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (s.empty()) return 1;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool corner = i + 1 == s.size() || s[i + 1] < s[i];
    if (!corner) continue;
    Shape t = s;
    --t[i];
    total += syt_count(t);
  }
  return total;
}

/// Semistandard tableaux of shape lambda and content mu.
inline std::int64_t kostka(const Shape& lambda, const Shape& mu) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> left = mu;
  std::int64_t count = 0;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n) {
      ++count;
      return;
    }
    int r = 0, c = cell;
    while (c >= lambda[static_cast<std::size_t>(r)]) c -= lambda[static_cast<std::size_t>(r++)];
    const auto ru = static_cast<std::size_t>(r), cu = static_cast<std::size_t>(c);
    for (std::size_t v = 0; v < left.size(); ++v) {
      if (left[v] == 0) continue;
      const int val = static_cast<int>(v) + 1;
      if (c > 0 && t[ru][cu - 1] > val) continue;
      if (r > 0 && t[ru - 1][cu] >= val) continue;
      t[ru][cu] = val;
      --left[v];
      fill(cell + 1);
      ++left[v];
      t[ru][cu] = 0;
    }
  };
  fill(0);
  return count;
}

/// Permutation character of the Young subgroup S_mu at cycle type rho: the
/// number of ways to distribute the cycles over the rows of mu.
inline std::int64_t permutation_character(const Shape& mu, const Shape& rho) {
  std::vector<int> room = mu;
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
    if (i == rho.size()) return 1;
    std::int64_t s = 0;
    for (auto& r : room)
      if (r >= rho[i]) {
        r -= rho[i];
        s += rec(i + 1);
        r += rho[i];
      }
    return s;
  };
  return rec(0);
}

/// Character table from Young's rule: pi_mu = sum_lambda K(lambda, mu) chi_lambda,
/// unwound in reverse-lex order where K is unitriangular.
/// Entry [lambda][rho], both indexed by oracle::partitions(n).
inline std::vector<std::vector<std::int64_t>> character_table(int n) {
  const auto parts = partitions(n);
  const std::size_t m = parts.size();
  std::vector<std::vector<std::int64_t>> chi(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      std::int64_t v = permutation_character(parts[a], parts[c]);
      for (std::size_t b = 0; b < a; ++b) v -= kostka(parts[b], parts[a]) * chi[b][c];
      chi[a][c] = v;
    }
  }
  return chi;
}

/// All permutations of {0..n-1} as image vectors.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline int cycles(const std::vector<int>& s) {
  std::vector<bool> seen(s.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(s[j])) seen[j] = true;
  }
  return c;
}

/// Supertrace of the signed permutation of tensor factors of (p|q)^n, by
/// enumerating basis tensors. A tensor is fixed when its labels are constant
/// on cycles; the Koszul sign counts crossings of odd factors, and the
/// supertrace weight is (-1)^(number of odd factors).
inline std::int64_t permutation_supertrace(const std::vector<int>& s, int p, int q) {
  const int n = static_cast<int>(s.size()), d = p + q;
  std::int64_t total = 0;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= d;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t r = idx;
    for (int i = 0; i < n; ++i) {
      label[static_cast<std::size_t>(i)] = static_cast<int>(r % d);
      r /= d;
    }
    bool fixed = true;
    for (int i = 0; i < n; ++i) fixed = fixed && label[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] == label[static_cast<std::size_t>(i)];
    if (!fixed) continue;
    int crossings = 0, odd = 0;
    for (int i = 0; i < n; ++i) {
      const bool oi = label[static_cast<std::size_t>(i)] >= p;
      odd += oi;
      for (int j = i + 1; j < n; ++j)
        if (oi && label[static_cast<std::size_t>(j)] >= p && s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)]) ++crossings;
    }
    total += ((crossings + odd) % 2 == 0) ? 1 : -1;
  }
  return total;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k == 0) return 1;
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
