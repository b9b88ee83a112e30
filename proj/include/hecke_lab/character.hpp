#pragma once

// Irreducible characters of the Hecke algebra H_n and the Frobenius
// characteristic ch(a) = sum_lambda chi^lambda(a) s_lambda.
//
// chi^lambda(T_w) is computed from a q-analogue of Young's seminormal form.
// Rather than carrying rational functions of q, the generator matrices are
// evaluated at integer points q = 2, 3, ..., the trace of the product along
// a reduced word is computed in exact rationals, and the polynomial is
// recovered by interpolation. The result is required to be an integer
// polynomial of degree <= l(w); anything else is an InternalContradiction.

#include <memory>
#include <vector>

#include "hecke_lab/hecke.hpp"
#include "hecke_lab/symfunc.hpp"

namespace hecke_lab {

/// Standard Young tableaux of one shape together with the data the
/// seminormal action needs.
class SeminormalRep {
 public:
  explicit SeminormalRep(const Partition& lambda);

  const Partition& shape() const { return lambda_; }
  int dimension() const { return static_cast<int>(rows_.size()); }

  /// Dense matrix of rho(T_{s_i}) at the given value of q (row-major,
  /// column k is the image of the k-th tableau).
  std::vector<std::vector<Rational>> generator_matrix(int i, const Rational& q) const;
  /// Checks (T - q)(T + 1) = 0 and the braid relations at q.
  bool satisfies_relations(const Rational& q) const;

  /// trace rho(T_{s_{a_1}}) ... rho(T_{s_{a_k}}) at q.
  Rational trace_along_word(const std::vector<int>& word, const Rational& q) const;

 private:
  // Sparse action of T_{s_i} on one basis vector: (target, coefficient).
  struct Image {
    int self;
    int partner;  // -1 when i, i+1 share a row or a column
    int axial;    // c(i+1) - c(i)
    bool lower;   // the coefficient on the partner is 1 (else the complement)
  };
  // Per generator, per tableau: (diagonal entry, entry on the partner).
  using Coefficients = std::vector<std::vector<std::pair<Rational, Rational>>>;
  Coefficients coefficients(const Rational& q) const;
  void apply(int i, const Coefficients& coeffs, std::vector<Rational>& v) const;

  Partition lambda_;
  int n_ = 0;
  // rows_[t][k] = row of entry k+1 in tableau t; cols_ likewise.
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
  std::vector<std::vector<Image>> images_;  // images_[i-1][t]
};

/// chi^lambda(T_w), via the shortest-first reduced word of w.
LaurentQ chi(const Partition& lambda, const Permutation& w);
/// chi^lambda(T_{s_{a_1}} ... T_{s_{a_k}}) for an arbitrary (not necessarily
/// reduced) word; used to check reduced-word independence.
LaurentQ chi_along_word(const Partition& lambda, const std::vector<int>& word, int n);
/// Linear extension of chi over the T-basis.
LaurentQ chi_element(const Partition& lambda, const HeckeElement& a);

/// The full table chi^lambda(T_w) for all w in S_n, as int64 polynomials.
///
/// Built by increasing length. When some simple s has l(sws) = l(w) - 2,
///   chi(T_w) = q chi(T_{sws}) + (q - 1) chi(T_{sw});
/// otherwise w is linked by length-preserving conjugations to such an element
/// or to an element of minimal length in its class, whose value only depends
/// on the cycle type and is computed once from the seminormal form.
class CharacterTable {
 public:
  static constexpr const char* kFormat = "hecke-lab/character-table";
  static constexpr int kFormatVersion = 1;
  static constexpr int kMaxRank = 8;

  explicit CharacterTable(int n);

  int rank() const { return n_; }
  const DensePoly& value(const Partition& lambda, const Permutation& w) const;
  const DensePoly& value(std::size_t lambda_index, std::size_t lehmer) const {
    return values_[lambda_index][lehmer];
  }

  /// {format, version, n, rows: [partitions], cols: [permutations], values}
  Json to_json() const;
  static CharacterTable from_json(const Json& j);

 private:
  CharacterTable() = default;
  int n_ = 0;
  std::vector<std::vector<DensePoly>> values_;  // [lambda][lehmer rank]
};

/// Process-wide memo of character tables (n <= CharacterTable::kMaxRank).
std::shared_ptr<const CharacterTable> character_table(int n);
void character_table_register(std::shared_ptr<const CharacterTable> table);

/// ch(a) in the Schur basis.
SymmetricFunction frobenius_ch(const HeckeElement& a);
/// ch(q^{l(w)/2} C'_w) = sum_z P_{z,w} ch(T_z), in the Schur basis.
SymmetricFunction ch_cprime(const Permutation& w);

}  // namespace hecke_lab
