#include "hecke_lab/lab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke_lab/character.hpp"
#include "hecke_lab/kl.hpp"

namespace hecke_lab {

Permutation smooth_reduce(const Permutation& w) { return codominant_of_hessenberg(hessenberg_of_smooth(w)); }

MomentGraph moment_graph(const Permutation& w) {
  MomentGraph g;
  g.n = w.size();
  if (is_smooth(w)) {
    const HessenbergFunction m = hessenberg_of_smooth(w);
    for (int i = 1; i <= g.n; ++i)
      for (int j = i + 1; j <= m(i); ++j) g.transpositions.emplace_back(i, j);
  } else {
    g.transpositions = transpositions_below(w);
  }
  return g;
}

std::string ModularRelation::identity() const {
  std::string out = "(q^(-1/2) + q^(1/2)) ch(C'_" + w.to_string() + ") = ch(C'_" + ws.to_string() + ")";
  if (z) out += " + ch(C'_" + z->to_string() + ")";
  return out;
}

namespace {

SymmetricFunction one_plus_q_times(const SymmetricFunction& f) {
  return f.scaled(RationalLaurent(1) + RationalLaurent::q());
}

}  // namespace

ModularRelation modular_relation(const Permutation& w, int s, int verify_up_to) {
  const int n = w.size();
  if (s < 1 || s >= n) throw PreconditionViolated("simple transposition index out of range");
  if (!is_smooth(w)) throw PreconditionViolated(w.to_string() + " is not smooth");
  if (!w.has_left_descent(s) || w.has_right_descent(s))
    throw PreconditionViolated("need s w < w < w s for w = " + w.to_string() + ", s = " + std::to_string(s));
  ModularRelation r;
  r.w = w;
  r.s = s;
  r.ws = w.times_simple(s);
  std::vector<Permutation> zs;
  for (const auto& z : lower_covers(w))
    if (z.has_right_descent(s)) zs.push_back(z);
  if (is_smooth(r.ws)) {
    if (zs.size() != 1 || !is_smooth(zs.front()))
      throw InternalContradiction("smooth w s without a unique smooth cover for " + w.to_string());
    r.kind = ModularCase::Smooth;
    r.z = zs.front();
  } else {
    if (!zs.empty()) throw InternalContradiction("singular w s with a cover z s < z for " + w.to_string());
    r.kind = ModularCase::Singular;
  }
  if (n <= verify_up_to) {
    // Scaled by q^{(l(w)+1)/2}: (1 + q) ch(q^{l/2} C'_w) = ch(q^{(l+1)/2} C'_{ws}) + q ch(q^{(l-1)/2} C'_z).
    const SymmetricFunction lhs = one_plus_q_times(ch_cprime(w));
    SymmetricFunction rhs = ch_cprime(r.ws);
    if (r.z) rhs += ch_cprime(*r.z).scaled(RationalLaurent::q());
    if (!(lhs == rhs)) throw InternalContradiction("character identity fails: " + r.identity());
    r.verified = true;
  }
  return r;
}

namespace {

using Coeffs = std::vector<DensePoly>;

Coeffs one_plus_q(const Coeffs& c) {
  Coeffs out = c;
  for (std::size_t k = 0; k < c.size(); ++k) out[k].add_scaled(c[k], 1, 1);
  return out;
}

}  // namespace

CounterexampleResult counterexample_search(const HessenbergFunction& m1, const CsfBatch& batch, bool general) {
  const int n = m1.size();
  if (batch.degree() != n) throw SizeMismatch("csf batch of a different degree");
  const auto i1 = batch.index_of(m1);
  if (!i1) throw InternalContradiction("Hessenberg function missing from its batch");
  const Coeffs target = one_plus_q(batch.coefficients(*i1));
  const int e1 = m1.edge_count();
  CounterexampleResult result;
  std::set<std::tuple<int, std::size_t, std::size_t>> seen;
  auto scan = [&](int a, bool filtered) {
    for (std::size_t k = 0; k < batch.functions().size(); ++k) {
      const HessenbergFunction& m0 = batch.functions()[k];
      if (filtered && m0.edge_count() != e1 - 1) continue;
      ++result.candidates;
      Coeffs rest = target;
      for (std::size_t l = 0; l < rest.size(); ++l) rest[l].add_scaled(batch.coefficients(k)[l], -1, a);
      for (std::size_t k2 : batch.lookup(rest)) {
        const HessenbergFunction& m2 = batch.functions()[k2];
        if (filtered && m2.edge_count() != e1 + 1) continue;
        if (a == 1 && m0 == m1 && m2 == m1) continue;
        if (seen.emplace(a, k, k2).second) result.solutions.push_back({m0, m2, a});
      }
    }
  };
  scan(1, true);
  if (general)
    for (int a = 0; a <= e1; ++a) scan(a, false);
  return result;
}

CounterexampleResult counterexample_search(const HessenbergFunction& m1, bool general) {
  return counterexample_search(m1, CsfBatch::compute(m1.size()), general);
}

namespace {

Coeffs integral_coeffs(const SymmetricFunction& f) {
  Coeffs out;
  const SymmetricFunction g = f.to(Basis::s);
  for (const auto& c : g.coefficients()) {
    auto integral = to_integral(c);
    if (!integral || !integral->is_polynomial() || !integral->has_integer_exponents())
      throw InternalContradiction("expected a polynomial in q with integer coefficients");
    out.push_back(DensePoly::from_laurent(*integral));
  }
  return out;
}

int lowest_degree(const Coeffs& c) {
  int low = -1;
  for (const auto& p : c)
    for (int d = 0; d <= p.degree(); ++d)
      if (p[d] != 0) {
        if (low < 0 || d < low) low = d;
        break;
      }
  return low;
}

bool nonnegative(const Coeffs& c) {
  for (const auto& p : c)
    for (std::int64_t x : p.coefficients())
      if (x < 0) return false;
  return true;
}

bool all_zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const DensePoly& p) { return p.is_zero(); });
}

// Depth-first search for sum_k c_k(q) v_k = target with c_k in N[q], one
// power of q at a time. All vectors are Schur coordinates, which are
// nonnegative, so a residual with a negative coefficient is a dead end.
class DecompositionSearch {
 public:
  DecompositionSearch(const std::vector<Coeffs>& cands, std::size_t budget) : cands_(cands), budget_(budget) {
    for (const auto& v : cands_) {
      const int low = lowest_degree(v);
      low_.push_back(low);
      std::vector<std::int64_t> vec;
      for (const auto& p : v) vec.push_back(low < 0 ? 0 : p[low]);
      lowvec_.push_back(std::move(vec));
    }
    chosen_.resize(cands_.size());
  }

  std::optional<std::vector<std::map<int, std::int64_t>>> run(const Coeffs& target) {
    if (solve(target)) return chosen_;
    return std::nullopt;
  }
  bool exhausted() const { return nodes_ > budget_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool solve(const Coeffs& R) {
    if (all_zero(R)) return true;
    const int d0 = lowest_degree(R);
    std::vector<std::int64_t> r;
    for (const auto& p : R) r.push_back(p[d0]);
    return choose(0, d0, r, R);
  }

  bool choose(std::size_t k, int d0, std::vector<std::int64_t>& r, const Coeffs& R) {
    if (++nodes_ > budget_) return false;
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) return solve(R);
    // Every positive entry must still be reachable.
    for (std::size_t l = 0; l < r.size(); ++l) {
      if (r[l] == 0) continue;
      bool reachable = false;
      for (std::size_t j = k; j < cands_.size() && !reachable; ++j)
        reachable = low_[j] >= 0 && low_[j] <= d0 && lowvec_[j][l] > 0;
      if (!reachable) return false;
    }
    if (k == cands_.size()) return false;
    if (low_[k] < 0 || low_[k] > d0) return choose(k + 1, d0, r, R);
    std::int64_t most = -1;
    for (std::size_t l = 0; l < r.size(); ++l)
      if (lowvec_[k][l] > 0) {
        const std::int64_t bound = r[l] / lowvec_[k][l];
        most = most < 0 ? bound : std::min(most, bound);
      }
    const int shift = d0 - low_[k];
    for (std::int64_t c = std::max<std::int64_t>(most, 0); c >= 1; --c) {
      Coeffs next = R;
      for (std::size_t l = 0; l < next.size(); ++l) next[l].add_scaled(cands_[k][l], -c, shift);
      if (!nonnegative(next)) continue;
      for (std::size_t l = 0; l < r.size(); ++l) r[l] -= c * lowvec_[k][l];
      chosen_[k][shift] += c;
      if (choose(k + 1, d0, r, next)) return true;
      chosen_[k][shift] -= c;
      if (chosen_[k][shift] == 0) chosen_[k].erase(shift);
      for (std::size_t l = 0; l < r.size(); ++l) r[l] += c * lowvec_[k][l];
      if (nodes_ > budget_) return false;
    }
    return choose(k + 1, d0, r, R);
  }

  const std::vector<Coeffs>& cands_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<int> low_;
  std::vector<std::vector<std::int64_t>> lowvec_;
  std::vector<std::map<int, std::int64_t>> chosen_;
};

// c with c * v = target, if it exists in N[q].
std::optional<DensePoly> exact_quotient(const Coeffs& target, const Coeffs& v) {
  std::size_t l = 0;
  while (l < v.size() && v[l].is_zero()) ++l;
  if (l == v.size()) return std::nullopt;
  const DensePoly& den = v[l];
  DensePoly rem = target[l];
  const int dd = den.degree();
  if (rem.degree() < dd) return std::nullopt;
  std::vector<std::int64_t> quo(static_cast<std::size_t>(rem.degree() - dd + 1), 0);
  for (int k = rem.degree() - dd; k >= 0; --k) {
    const std::int64_t lead = rem[k + dd];
    if (lead % den[dd] != 0) return std::nullopt;
    const std::int64_t c = lead / den[dd];
    quo[static_cast<std::size_t>(k)] = c;
    rem.add_scaled(den, -c, k);
  }
  if (!rem.is_zero()) return std::nullopt;
  DensePoly c(std::move(quo));
  for (std::int64_t x : c.coefficients())
    if (x < 0) return std::nullopt;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!(c * v[k] == target[k])) return std::nullopt;
  return c;
}

}  // namespace

Decomposition decompose_codominant(const Permutation& w, int max_n, std::size_t node_budget) {
  const int n = w.size();
  if (n > max_n) throw PreconditionViolated("decompose_codominant is limited to n <= " + std::to_string(max_n));
  const Coeffs target = integral_coeffs(ch_cprime(w));
  const auto functions = enumerate_hessenberg(n);
  std::vector<Permutation> perms;
  std::vector<Coeffs> cands;
  for (const auto& m : functions) {
    perms.push_back(codominant_of_hessenberg(m));
    cands.push_back(n <= 6 ? integral_coeffs(ch_cprime(perms.back())) : integral_coeffs(omega(csf(m).to(Basis::s))));
  }
  Decomposition out;
  auto confirm = [&](const std::vector<std::size_t>& used) {
    if (n <= 6) return;
    for (std::size_t k : used)
      if (!(integral_coeffs(ch_cprime(perms[k])) == cands[k]))
        throw InternalContradiction("codominant character of " + perms[k].to_string() + " differs from omega(csf)");
  };
  for (std::size_t k = 0; k < cands.size(); ++k) {
    ++out.nodes;
    if (auto c = exact_quotient(target, cands[k])) {
      confirm({k});
      out.found = true;
      out.terms.push_back({perms[k], c->to_laurent()});
      return out;
    }
  }
  DecompositionSearch search(cands, node_budget);
  auto solution = search.run(target);
  out.nodes += search.nodes();
  if (!solution) return out;
  std::vector<std::size_t> used;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if ((*solution)[k].empty()) continue;
    used.push_back(k);
    std::vector<std::int64_t> c;
    for (const auto& [d, x] : (*solution)[k]) {
      if (c.size() <= static_cast<std::size_t>(d)) c.resize(static_cast<std::size_t>(d) + 1, 0);
      c[static_cast<std::size_t>(d)] += x;
    }
    out.terms.push_back({perms[k], DensePoly(c).to_laurent()});
  }
  confirm(used);
  out.found = true;
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive checks

Json CheckReport::to_json() const {
  return Json{{"check", check},
              {"n", n},
              {"status", passed ? "pass" : "fail"},
              {"cases", cases},
              {"witnesses", witnesses}};
}

std::string CheckReport::to_text() const {
  std::string out = check + " n=" + std::to_string(n) + ": " + (passed ? "PASS" : "FAIL") + " (" +
                    std::to_string(cases) + " cases)";
  for (const auto& w : witnesses) out += "\n  witness: " + w.dump();
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "codominant-ch", "h-positivity", "e-positivity", "modular-dichotomy", "modular-identity", "smooth-reduction",
      "moment-graph",  "kl-duality",   "unimodality",  "csf-oracle",        "modular-law"};
  return names;
}

int check_max_n(std::string_view name) {
  static const std::map<std::string, int, std::less<>> bounds{
      {"codominant-ch", 8}, {"h-positivity", 7}, {"e-positivity", 8}, {"modular-dichotomy", 8},
      {"modular-identity", 6}, {"smooth-reduction", 7}, {"moment-graph", 7}, {"kl-duality", 6},
      {"unimodality", 7}, {"csf-oracle", 6}, {"modular-law", 8}};
  auto it = bounds.find(name);
  if (it == bounds.end()) throw ParseError("unknown check '" + std::string(name) + "'");
  return it->second;
}

namespace {

constexpr std::size_t kMaxWitnesses = 20;

void fail(CheckReport& r, Json witness) {
  r.passed = false;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(witness));
}

std::vector<Permutation> smooth_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (is_smooth(w)) out.push_back(w);
  return out;
}

}  // namespace

CheckReport run_check(std::string_view name, int n) {
  const int bound = check_max_n(name);
  if (n < 1 || n > bound)
    throw OutOfRange("check '" + std::string(name) + "' runs for 1 <= n <= " + std::to_string(bound));
  CheckReport r;
  r.check = std::string(name);
  r.n = n;

  if (name == "codominant-ch") {
    for (const auto& m : enumerate_hessenberg(n)) {
      ++r.cases;
      const Permutation w = codominant_of_hessenberg(m);
      if (!(ch_cprime(w) == omega(csf(m).to(Basis::s)))) fail(r, {{"m", m.to_string()}, {"w", w.to_string()}});
    }
  } else if (name == "h-positivity" || name == "e-positivity") {
    const bool h = name == "h-positivity";
    auto examine = [&](const std::string& label, const std::string& key, const SymmetricFunction& f) {
      ++r.cases;
      const PositivityResult p = positivity(f, h ? Basis::h : Basis::e);
      if (!p.positive)
        fail(r, {{key, label}, {"partition", p.witness->to_string()}, {"coeff", p.witness_coeff.to_pretty_string()}});
    };
    if (h) {
      for (const auto& w : all_permutations(n)) examine(w.to_string(), "w", ch_cprime(w));
    } else {
      for (const auto& m : enumerate_hessenberg(n)) examine(m.to_string(), "m", csf(m));
    }
  } else if (name == "modular-dichotomy" || name == "modular-identity") {
    const int verify = name == "modular-identity" ? n : 0;
    for (const auto& w : smooth_permutations(n))
      for (int s = 1; s < n; ++s) {
        if (!w.has_left_descent(s) || w.has_right_descent(s)) continue;
        ++r.cases;
        try {
          modular_relation(w, s, verify);
        } catch (const InternalContradiction& e) {
          fail(r, {{"w", w.to_string()}, {"s", s}, {"error", e.what()}});
        }
      }
  } else if (name == "smooth-reduction") {
    for (const auto& w : smooth_permutations(n)) {
      ++r.cases;
      const Permutation v = smooth_reduce(w);
      if (!(ch_cprime(w) == ch_cprime(v))) fail(r, {{"w", w.to_string()}, {"reduced", v.to_string()}});
    }
  } else if (name == "moment-graph") {
    for (const auto& w : smooth_permutations(n)) {
      ++r.cases;
      const auto brute = transpositions_below(w);
      const MomentGraph g = moment_graph(w);
      const bool ok = g.transpositions == brute && static_cast<int>(brute.size()) == w.length() &&
                      g == moment_graph(smooth_reduce(w));
      if (!ok) fail(r, {{"w", w.to_string()}});
    }
  } else if (name == "kl-duality") {
    for (const auto& w : all_permutations(n)) {
      ++r.cases;
      const HeckeElement c = cprime_normalized(w);
      bool ok = iota(c) == c;
      auto table = kl_table_cached(w);
      for (const auto& [z, p] : table->row(w))
        if (z != w && 2 * p->degree() >= w.length() - z.length()) ok = false;
      if (!ok) fail(r, {{"w", w.to_string()}});
    }
  } else if (name == "unimodality") {
    const auto& parts = partitions(n);
    for (const auto& w : all_permutations(n)) {
      const SymmetricFunction f = ch_cprime(w);
      for (std::size_t l = 0; l < parts.size(); ++l) {
        ++r.cases;
        const auto value = to_integral(f.coefficients()[l]);
        if (!value) {
          fail(r, {{"w", w.to_string()}, {"lambda", parts[l].to_string()}, {"value", "non-integral"}});
          continue;
        }
        const PolyProps p = poly_props(*value);
        if (!p.nonnegative || !p.palindromic || !p.unimodal)
          fail(r, {{"w", w.to_string()}, {"lambda", parts[l].to_string()}, {"value", value->to_pretty_string()}});
      }
    }
  } else if (name == "csf-oracle") {
    for (const auto& m : enumerate_hessenberg(n)) {
      ++r.cases;
      if (!(csf(m) == csf_oracle(m))) fail(r, {{"m", m.to_string()}});
    }
  } else if (name == "modular-law") {
    for (const auto& t : modular_triples(n)) {
      ++r.cases;
      const SymmetricFunction lhs = one_plus_q_times(csf(t.m1));
      const SymmetricFunction rhs = csf(t.m2) + csf(t.m0).scaled(RationalLaurent::q());
      if (!(lhs == rhs))
        fail(r, {{"m0", t.m0.to_string()}, {"m1", t.m1.to_string()}, {"m2", t.m2.to_string()}});
    }
  }
  return r;
}

}  // namespace hecke_lab
