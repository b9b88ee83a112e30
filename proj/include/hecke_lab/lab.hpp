#pragma once

// Drivers that tie the pieces together: reduction of smooth permutations to
// codominant ones, moment graphs, the C'_w C'_s relation for smooth w, the
// search for a modular-law decomposition of a Hessenberg function, the
// codominant decomposition of ch(C'_w), and the exhaustive checks.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke_lab/csf.hpp"
#include "hecke_lab/hecke.hpp"
#include "hecke_lab/serialize.hpp"

namespace hecke_lab {

/// w' = w_{m_w}; throws NotSmooth.
Permutation smooth_reduce(const Permutation& w);

struct MomentGraph {
  int n = 0;
  /// Transpositions (i, j), i < j, below w; sorted.
  std::vector<std::pair<int, int>> transpositions;
  friend bool operator==(const MomentGraph&, const MomentGraph&) = default;
};

/// For smooth w the transpositions are read off m_w; otherwise each one is
/// tested against w in Bruhat order.
MomentGraph moment_graph(const Permutation& w);

enum class ModularCase { Smooth, Singular };

struct ModularRelation {
  ModularCase kind = ModularCase::Smooth;
  Permutation w;
  int s = 0;
  Permutation ws;
  std::optional<Permutation> z;
  /// True when the character identity was checked by computation.
  bool verified = false;
  /// Human readable form of the identity.
  std::string identity() const;
};

/// For smooth w and s with sw < w < ws:
///   ws smooth:   (q^{-1/2} + q^{1/2}) ch(C'_w) = ch(C'_{ws}) + ch(C'_z),
///                z the unique lower cover of w with zs < z;
///   ws singular: (q^{-1/2} + q^{1/2}) ch(C'_w) = ch(C'_{ws}).
/// The identity is computed and compared when n <= verify_up_to.
ModularRelation modular_relation(const Permutation& w, int s, int verify_up_to = 6);

struct CounterexampleSolution {
  HessenbergFunction m0;
  HessenbergFunction m2;
  int a = 1;  // exponent in (1 + q) csf(m1) = csf(m2) + q^a csf(m0)
};

struct CounterexampleResult {
  std::vector<CounterexampleSolution> solutions;
  std::size_t candidates = 0;  // m0's examined
  bool found() const { return !solutions.empty(); }
};

/// All (m0, m2) with (1 + q) csf(m1) = csf(m2) + q csf(m0), E(m0) = E(m1) - 1
/// and E(m2) = E(m1) + 1. With `general` the exponent of q runs over
/// 0..E(m1) and the edge filter is dropped; the trivial m0 = m1 = m2 (a = 1)
/// is excluded.
CounterexampleResult counterexample_search(const HessenbergFunction& m1, const CsfBatch& batch,
                                           bool general = false);
CounterexampleResult counterexample_search(const HessenbergFunction& m1, bool general = false);

struct DecompositionTerm {
  Permutation w;
  LaurentQ coeff;
};

struct Decomposition {
  bool found = false;  // false means Unknown, not a counterexample
  std::vector<DecompositionTerm> terms;
  std::size_t nodes = 0;
};

/// Looks for ch(q^{l(w)/2} C'_w) = sum_i c_i(q) ch(q^{l(w_i)/2} C'_{w_i}) with
/// w_i codominant and c_i in N[q]. Tries single terms first, then a bounded
/// depth-first search one power of q at a time. For n >= 7 the codominant
/// characters come from omega(csf); chosen terms are recomputed directly.
Decomposition decompose_codominant(const Permutation& w, int max_n = 8, std::size_t node_budget = 200000);

struct CheckReport {
  std::string check;
  int n = 0;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Json> witnesses;

  Json to_json() const;
  std::string to_text() const;
};

/// codominant-ch, h-positivity, e-positivity, modular-dichotomy,
/// modular-identity, smooth-reduction, moment-graph, kl-duality, unimodality,
/// csf-oracle, modular-law.
const std::vector<std::string>& check_names();
/// Largest n each check accepts.
int check_max_n(std::string_view name);
CheckReport run_check(std::string_view name, int n);

}  // namespace hecke_lab
