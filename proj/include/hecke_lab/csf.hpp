#pragma once

// Indifference graphs of Hessenberg functions and their chromatic
// quasisymmetric functions
//
//   csf_q(G) = sum over proper colourings k of q^{asc(k)} x_k,
//   asc(k)   = #{edges {i < j} : k(i) < k(j)}.
//
// For indifference graphs this is symmetric, so it is stored through its
// monomial coordinates: the coefficient of m_mu is the sum of q^{asc} over
// colourings whose colour classes, listed by increasing colour, have sizes
// mu_1, mu_2, ... The engine builds those classes one colour at a time with a
// subset DP over the vertices already coloured.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke_lab/permutation.hpp"
#include "hecke_lab/symfunc.hpp"

namespace hecke_lab {

struct IndifferenceGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j), i < j, sorted
  int edge_count() const { return static_cast<int>(edges.size()); }
};

IndifferenceGraph indifference_graph(const HessenbergFunction& m);

/// csf_q(G_m) as integer polynomials in q, one per partition of n
/// (partitions() order), in the monomial basis.
std::vector<DensePoly> csf_monomial_coefficients(const HessenbergFunction& m);
/// csf_q(G_m) in the monomial basis.
SymmetricFunction csf(const HessenbergFunction& m);
/// Brute force over all n^n colourings; n <= 6.
SymmetricFunction csf_oracle(const HessenbergFunction& m);

/// Triples (m0, m1, m2) with m0(i) = m1(i) - 1, m2(i) = m1(i) + 1 at a single
/// position i, agreeing elsewhere, all three valid, and
/// m1(m1(i) + 1) = m1(m1(i)). For these (1 + q) csf(m1) = csf(m2) + q csf(m0).
struct ModularTriple {
  HessenbergFunction m0, m1, m2;
  int position = 0;
};
std::vector<ModularTriple> modular_triples(int n);

/// All csf's of one degree with a reverse index on the coefficient data.
class CsfBatch {
 public:
  static constexpr const char* kFormat = "hecke-lab/csf-batch";
  static constexpr int kFormatVersion = 1;

  /// Computes csf for every Hessenberg function on [n], using `threads`
  /// worker threads.
  static CsfBatch compute(int n, int threads = 1);

  int degree() const { return n_; }
  const std::vector<HessenbergFunction>& functions() const { return functions_; }
  const std::vector<DensePoly>& coefficients(std::size_t k) const { return coeffs_[k]; }
  std::optional<std::size_t> index_of(const HessenbergFunction& m) const;
  /// Indices of functions whose csf equals the given coefficient vector.
  std::vector<std::size_t> lookup(const std::vector<DensePoly>& coeffs) const;

  /// {format, version, n, entries: [{m, csf}]}, csf as symmetric-function JSON.
  Json to_json() const;
  static CsfBatch from_json(const Json& j);

 private:
  void build_index();

  int n_ = 0;
  std::vector<HessenbergFunction> functions_;
  std::vector<std::vector<DensePoly>> coeffs_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

/// Hash of a coefficient vector, as used by the reverse index.
std::size_t csf_hash(const std::vector<DensePoly>& coeffs);

}  // namespace hecke_lab
