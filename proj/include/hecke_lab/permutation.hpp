#pragma once

// Permutations of [n] in one-line notation, Bruhat order, pattern
// containment, coessential sets and the Hessenberg / codominant dictionary.
//
// Product convention: (u * v)(i) = u(v(i)). Consequently right
// multiplication by a simple transposition s_i swaps the entries in
// positions i and i+1 of the one-line word, while left multiplication swaps
// the values i and i+1:
//
//     w * s_i  -> positions i, i+1 exchanged
//     s_i * w  -> values    i, i+1 exchanged
//
// All indices exposed by this header are 1-based, as in the mathematics.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke_lab/error.hpp"

namespace hecke_lab {

class Permutation {
 public:
  static constexpr int kMaxRank = 16;

  Permutation() = default;
  /// Validates that `word` is a bijection on [n].
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::span<const int>(word.begin(), word.size())) {}

  static Permutation identity(int n);
  /// s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int n, int i);
  /// The transposition exchanging i and j.
  static Permutation transposition(int n, int i, int j);
  static Permutation longest(int n);
  /// Accepts "62754381" (n <= 9) and "6,2,7,5,4,3,8,1" forms.
  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  /// w(i), 1-based.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> word() const;

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;

  Permutation operator*(const Permutation& v) const;
  /// w * s_i
  Permutation times_simple(int i) const;
  /// s_i * w
  Permutation simple_times(int i) const;
  /// w * (i j), exchanging positions i and j.
  Permutation times_transposition(int i, int j) const;

  /// w s_i < w, i.e. w(i) > w(i+1).
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  /// s_i w < w, i.e. i+1 appears before i.
  bool has_left_descent(int i) const;

  enum class WordChoice { FirstDescent, LastDescent };
  /// A reduced expression w = s_{a_1} ... s_{a_k}; the returned vector holds
  /// the indices a_1..a_k.
  std::vector<int> reduced_word(WordChoice choice = WordChoice::FirstDescent) const;

  /// Digit string for n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> w_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const { return w.hash(); }
};

/// Index of w among all of S_n listed lexicographically (the Lehmer rank).
std::size_t lehmer_rank(const Permutation& w);
/// All of S_n in lexicographic order; entry k has lehmer_rank k.
std::vector<Permutation> all_permutations(int n);

int length(const Permutation& w);
/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
/// r_{i,j}(w) = #{k <= i : w(k) <= j}.
int rank(const Permutation& w, int i, int j);
/// Bruhat order via the rank-matrix criterion r_{i,j}(z) >= r_{i,j}(w).
bool bruhat_leq(const Permutation& z, const Permutation& w);
/// All z = w t (t a transposition) with l(z) = l(w) - 1, sorted.
std::vector<Permutation> lower_covers(const Permutation& w);
bool contains_pattern(const Permutation& w, const Permutation& pattern);

struct Classification {
  bool smooth = false;
  bool codominant = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};
Classification classify(const Permutation& w);
bool is_smooth(const Permutation& w);
bool is_codominant(const Permutation& w);

/// Set of positions (i, j), sorted lexicographically.
struct CoessentialSet {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const CoessentialSet&, const CoessentialSet&) = default;
};

/// Pairs with w(i) <= j < w(i+1) and w^{-1}(j) <= i < w^{-1}(j+1), using the
/// boundary convention w(n+1) = w^{-1}(n+1) = n+1.
CoessentialSet coessential_set(const Permutation& w);

/// Non-decreasing m: [n] -> [n] with m(i) >= i (hence m(n) = n).
class HessenbergFunction {
 public:
  HessenbergFunction() = default;
  explicit HessenbergFunction(std::vector<int> values);
  HessenbergFunction(std::initializer_list<int> values)
      : HessenbergFunction(std::vector<int>(values)) {}
  /// "2,4,5,5,6,6"
  static HessenbergFunction parse(std::string_view text);
  static bool is_valid(std::span<const int> values);

  int size() const { return static_cast<int>(m_.size()); }
  int operator()(int i) const { return m_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return m_; }
  /// sum_i (m(i) - i): the number of edges of the indifference graph and the
  /// length of the codominant permutation.
  int edge_count() const;
  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
  friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

 private:
  std::vector<int> m_;
};

/// m_w of a smooth permutation, read off the coessential set.
HessenbergFunction hessenberg_of_smooth(const Permutation& w);
/// The lexicographically greatest permutation with w(i) <= m(i).
Permutation codominant_of_hessenberg(const HessenbergFunction& m);
/// All transpositions (i, j), i < j, below w in Bruhat order (brute force).
std::vector<std::pair<int, int>> transpositions_below(const Permutation& w);
/// All Hessenberg functions on [n], lexicographic; there are Catalan(n).
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

}  // namespace hecke_lab

template <>
struct std::hash<hecke_lab::Permutation> {
  std::size_t operator()(const hecke_lab::Permutation& w) const { return w.hash(); }
};
