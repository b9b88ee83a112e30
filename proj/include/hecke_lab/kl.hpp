#pragma once

// Kazhdan-Lusztig polynomials and the C' basis.
//
// A KLTable covers the lower Bruhat interval [e, top]: for every y in the
// interval it stores the full row P_{x,y}, x <= y. Rows are built in order of
// increasing length by the recursion that realises C'_y as C'_{ys} C'_s minus
// mu-corrections. Values are kept in a deduplicated pool of DensePoly, since
// most rows repeat a handful of polynomials.
//
// C' elements are carried scaled, q^{l(w)/2} C'_w = sum_z P_{z,w} T_z, so all
// internal arithmetic stays in integer powers of q.

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hecke_lab/hecke.hpp"
#include "hecke_lab/serialize.hpp"

namespace hecke_lab {

class KLTable {
 public:
  static constexpr const char* kFormat = "hecke-lab/kl-table";
  static constexpr int kFormatVersion = 1;

  /// Runs the recursion over all of [e, top].
  static KLTable build(const Permutation& top);

  const Permutation& top() const { return interval_.at(top_); }
  int rank() const { return n_; }
  /// Elements of the interval, sorted by (length, lexicographic).
  const std::vector<Permutation>& interval() const { return interval_; }
  /// True when the full row of y is available.
  bool has_row(const Permutation& y) const;

  /// P_{z,y}; zero unless z <= y. Throws OutOfRange when the row of y is
  /// not part of this table.
  LaurentQ poly(const Permutation& z, const Permutation& y) const;
  const DensePoly& dense_poly(const Permutation& z, const Permutation& y) const;
  /// Coefficient of q^{(l(y)-l(z)-1)/2} in P_{z,y}; zero for incomparable
  /// pairs and even length differences.
  std::int64_t mu(const Permutation& z, const Permutation& y) const;
  /// All (x, P_{x,y}) with x <= y, sorted like interval().
  std::vector<std::pair<Permutation, const DensePoly*>> row(const Permutation& y) const;

  std::size_t entry_count() const;
  std::size_t distinct_polynomials() const { return pool_.size(); }

  /// {format, version, n, top, entries: [[z, w, poly]]}. Entry order:
  /// w by (length, lex), then z by (length, lex). With top_row_only set only
  /// the entries (z, top) are written.
  Json to_json(bool top_row_only = false) const;
  /// A document holding just the row of y, with y as its top.
  Json row_to_json(const Permutation& y) const;
  /// Rebuilds a table from its JSON form; rows not present in the file are
  /// unavailable. Throws ParseError on a malformed or stale document.
  static KLTable from_json(const Json& j);

 private:
  struct Entry {
    std::uint32_t x;
    std::uint32_t poly;
  };
  using Row = std::vector<Entry>;  // sorted by x

  std::uint32_t intern(const DensePoly& p);
  const DensePoly* lookup(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t local_id(const Permutation& w) const;

  int n_ = 0;
  std::uint32_t top_ = 0;
  std::vector<Permutation> interval_;
  std::vector<int> lengths_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<Row> rows_;
  std::vector<bool> row_present_;
  std::vector<DensePoly> pool_;
  std::unordered_map<DensePoly, std::uint32_t, DensePolyHash> pool_index_;
};

/// The table for [e, w]; equivalent to KLTable::build(w).
KLTable kl_table(const Permutation& w);

/// A process-wide memo of tables. Returns a table whose rows include w,
/// building one when needed (for n <= 7 the whole group is tabulated at
/// once). Safe to call from several threads.
std::shared_ptr<const KLTable> kl_table_cached(const Permutation& w);
/// Registers an externally loaded table (e.g. from the disk cache).
void kl_table_register(std::shared_ptr<const KLTable> table);

/// P_{z,w} as a Laurent polynomial (integer exponents).
LaurentQ kl_polynomial(const Permutation& z, const Permutation& w);
/// mu(z, w); zero for incomparable pairs.
std::int64_t mu(const Permutation& z, const Permutation& w);

/// q^{l(w)/2} C'_w = sum_{z <= w} P_{z,w} T_z.
HeckeElement cprime(const Permutation& w);
/// The normalised C'_w, i.e. cprime(w) times q^{-l(w)/2}.
HeckeElement cprime_normalized(const Permutation& w);

/// Coordinates in the (normalised) C' basis.
using CPrimeExpansion = std::map<Permutation, LaurentQ>;

/// C'_w C'_{s_i} in C' coordinates. For ws > w this is
///   C'_{ws} + sum_{z < w, zs < z} mu(z, w) C'_z;
/// for ws < w it is (q^{-1/2} + q^{1/2}) C'_w.
CPrimeExpansion cprime_times_cs(const Permutation& w, int i);
/// Expands a C'-coordinate vector back to the T basis.
HeckeElement to_hecke_element(const CPrimeExpansion& c, int n);

}  // namespace hecke_lab
