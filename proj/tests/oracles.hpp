#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hecke_lab/permutation.hpp"

namespace oracle {

using hecke_lab::Permutation;

inline int inversions(const Permutation& w) {
  int k = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++k;
  return k;
}

inline std::vector<int> one_line(const Permutation& w) {
  std::vector<int> v;
  for (int i = 1; i <= w.size(); ++i) v.push_back(w(i));
  return v;
}

// Bubble-sort reduced word: w = s_{a_1} ... s_{a_k} with w s_i swapping positions.
inline std::vector<int> bubble_word(const Permutation& w) {
  std::vector<int> v = one_line(w), word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Permutation from_word(int n, const std::vector<int>& word) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  for (int a : word) std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(a)]);
  return Permutation(std::span<const int>(v));
}

// Everything obtained from subwords of one reduced word of w.
inline std::set<std::vector<int>> subword_products(const Permutation& w) {
  const auto word = bubble_word(w);
  std::set<std::vector<int>> out;
  const std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) sub.push_back(word[b]);
    out.insert(one_line(from_word(w.size(), sub)));
  }
  return out;
}

inline bool contains_pattern(const std::vector<int>& w, const std::vector<int>& p) {
  const std::size_t n = w.size(), k = p.size();
  std::vector<std::size_t> idx(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if ((p[a] < p[b]) != (w[idx[a]] < w[idx[b]])) return false;
      return true;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      if (rec(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline std::vector<int> cycle_type(const Permutation& w) {
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  for (int i = 1; i <= w.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Classical S_n character by the Murnaghan-Nakayama rule on beta-sets.
inline long murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return 1;
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const std::size_t len = lambda.size();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  long total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int nb = beta[i] - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int sign = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++sign;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nl;
    for (std::size_t j = 0; j < len; ++j) {
      const int part = nbeta[j] - static_cast<int>(len - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    total += (sign % 2 ? -1 : 1) * murnaghan_nakayama(nl, rest);
  }
  return total;
}

// Coefficient of the monomial x^exponents in the product of the given
// polynomials, each a map from exponent vectors to coefficients.
using Poly = std::map<std::vector<int>, long>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// h_k in `vars` variables.
inline Poly complete_homogeneous(int k, int vars) {
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out[e] += 1;
      return;
    }
    for (int c = 0; c <= left; ++c) {
      e[static_cast<std::size_t>(pos)] = c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, k);
  return out;
}

inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace oracle
