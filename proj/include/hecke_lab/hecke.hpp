#pragma once

// Elements of the Iwahori-Hecke algebra H_n in the standard basis {T_w},
// with T_s^2 = (q-1) T_s + q.

#include <map>

#include "hecke_lab/permutation.hpp"
#include "hecke_lab/qring.hpp"

namespace hecke_lab {

class HeckeElement {
 public:
  using Terms = std::map<Permutation, LaurentQ>;

  explicit HeckeElement(int n = 0) : n_(n) {}
  /// T_w
  static HeckeElement basis(const Permutation& w, const LaurentQ& coeff = LaurentQ(1));

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coeff(const Permutation& w) const;

  void add_term(const Permutation& w, const LaurentQ& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const LaurentQ& c) const;

  /// a * T_{s_i}
  HeckeElement times_generator(int i) const;
  /// T_{s_i} * a
  HeckeElement generator_times(int i) const;
  /// a * T_{s_i}^{-1}, with T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e.
  HeckeElement times_generator_inverse(int i) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_rank(const HeckeElement& o) const;
  int n_;
  Terms terms_;
};

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// The ring involution q^{1/2} -> q^{-1/2}, T_w -> T_{w^{-1}}^{-1}.
HeckeElement iota(const HeckeElement& a);

/// Coefficients at q = 1: the image in the group algebra Z[S_n].
std::map<Permutation, BigInt> specialize_at_one(const HeckeElement& a);

}  // namespace hecke_lab
