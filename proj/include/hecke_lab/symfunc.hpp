#pragma once

// Homogeneous symmetric functions of a fixed degree n in the bases
// m (monomial), e (elementary), h (complete homogeneous), p (power sum) and
// s (Schur).
//
// Coordinates are dense vectors indexed by partitions(n). All conversions go
// through the monomial basis: for each basis b the integer matrix expressing
// b_lambda in monomials is built once per degree, and its exact rational
// inverse gives the way back. Coefficients are RationalLaurent because the
// power-sum coordinates of an integral function need denominators.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke_lab/qring.hpp"
#include "hecke_lab/serialize.hpp"

namespace hecke_lab {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// "2,1,1", "211" or "" / "0" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// lambda_i, 1-based; zero past the end.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
const std::vector<Partition>& partitions(int n);
/// Position of lambda in partitions(|lambda|).
std::size_t partition_index(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt standard_tableaux_count(const Partition& lambda);
/// prod_i [lambda_i]!_q
LaurentQ q_factorial(const Partition& lambda);

enum class Basis { m, e, h, p, s };
std::string basis_name(Basis b);
/// Accepts "m", "e", "h", "p", "s".
Basis parse_basis(std::string_view text);

class SymmetricFunction {
 public:
  SymmetricFunction() = default;
  /// The zero function of degree n, written in basis b.
  SymmetricFunction(int degree, Basis b);
  /// The single basis element b_lambda.
  static SymmetricFunction basis_element(Basis b, const Partition& lambda,
                                         const RationalLaurent& coeff = RationalLaurent(1));

  int degree() const { return n_; }
  Basis basis() const { return basis_; }
  const std::vector<RationalLaurent>& coefficients() const { return c_; }
  const RationalLaurent& coeff(const Partition& lambda) const;
  void set_coeff(const Partition& lambda, RationalLaurent c);
  void add_to_coeff(const Partition& lambda, const RationalLaurent& c);
  bool is_zero() const;

  /// Same function in another basis (exact).
  SymmetricFunction to(Basis target) const;

  SymmetricFunction& operator+=(const SymmetricFunction& o);
  SymmetricFunction& operator-=(const SymmetricFunction& o);
  friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) { return a += b; }
  friend SymmetricFunction operator-(SymmetricFunction a, const SymmetricFunction& b) { return a -= b; }
  SymmetricFunction scaled(const RationalLaurent& c) const;

  /// Equality as functions; the bases may differ.
  friend bool operator==(const SymmetricFunction& a, const SymmetricFunction& b);

  /// Substitutes q = 1 in every coordinate.
  SymmetricFunction at_q_one() const;

  /// "(1 + q)*h[2] + s[1,1]"
  std::string to_string() const;
  /// "(1 + q)h_{2} + s_{11}"
  std::string to_latex() const;

 private:
  int n_ = 0;
  Basis basis_ = Basis::m;
  std::vector<RationalLaurent> c_;
};

/// convert_basis(f, b) == f.to(b)
SymmetricFunction convert_basis(const SymmetricFunction& f, Basis target);

/// omega(h_lambda) = e_lambda, omega(s_lambda) = s_{lambda'}. The result is
/// written in the basis of the input.
SymmetricFunction omega(const SymmetricFunction& f);

struct PositivityResult {
  bool positive = true;
  std::optional<Partition> witness;
  RationalLaurent witness_coeff;
};

/// True iff every coordinate in `basis` lies in N[q^{1/2}]. On failure the
/// first offending partition (in partitions() order) is returned.
PositivityResult positivity(const SymmetricFunction& f, Basis basis);

/// The integer matrix M with b_lambda = sum_mu M[mu][lambda] m_mu.
const std::vector<std::vector<BigInt>>& to_monomial_matrix(Basis b, int n);

/// {basis, degree, terms: [{partition: [..], coeff: {...}}]}; zero terms are
/// omitted.
Json to_json(const SymmetricFunction& f);
SymmetricFunction symmetric_function_from_json(const Json& j);

}  // namespace hecke_lab
