// Acceptance run: one PASS/FAIL line per criterion. Criteria 1-7 decide the
// exit status; criterion 8 concerns an open positivity question and is reported
// only.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hecke_lab/character.hpp"
#include "hecke_lab/cli.hpp"
#include "hecke_lab/csf.hpp"
#include "hecke_lab/kl.hpp"
#include "hecke_lab/lab.hpp"
#include "oracles.hpp"

using namespace hecke_lab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string cli(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

std::vector<Permutation> smooth_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (is_smooth(w)) out.push_back(w);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const std::string kl = cli({"kl", "--w", "62754381", "--z", "e"});
  if (kl != "1 + q\n") o.fail("kl printed '" + kl + "'");
  if (enumerate_hessenberg(8).size() != 1430) o.fail("wrong number of Hessenberg functions on [8]");
  for (bool general : {false, true}) {
    std::vector<std::string> args{"counterexample", "--m", "2,6,7,7,7,7,8,8"};
    if (general) args.push_back("--general");
    const std::string r = cli(args);
    if (r != "NOT FOUND\n") o.fail(std::string(general ? "general" : "restricted") + " search printed '" + r + "'");
  }
  if (o.passed) o.detail = "P_{e,62754381} = 1 + q; no (m0, m2) with or without --general";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : smooth_permutations(n)) {
      ++count;
      const Permutation v = smooth_reduce(w);
      if (!(frobenius_ch(cprime(w)) == frobenius_ch(cprime(v))))
        o.fail("ch differs for " + w.to_string() + " and " + v.to_string());
    }
  o.detail += std::to_string(count) + " smooth permutations, n = 3..6";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t count = 0;
  auto test = [&](const HessenbergFunction& m) {
    ++count;
    if (!(frobenius_ch(cprime(codominant_of_hessenberg(m))) == omega(csf(m))))
      o.fail("mismatch for m = " + m.to_string());
  };
  for (int n = 2; n <= 5; ++n)
    for (const auto& m : enumerate_hessenberg(n)) test(m);
  std::mt19937 rng(20240601);
  auto six = enumerate_hessenberg(6);
  std::shuffle(six.begin(), six.end(), rng);
  for (std::size_t k = 0; k < 50; ++k) test(six[k]);
  o.detail += std::to_string(count) + " Hessenberg functions (all n = 2..5, 50 sampled at n = 6)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const RationalLaurent one_plus_q = to_rational(1 + LaurentQ::q());
  std::size_t pairs = 0, smooth_case = 0, verified = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : smooth_permutations(n))
      for (int s = 1; s < n; ++s) {
        const Permutation ws = w.times_simple(s), sw = w.simple_times(s);
        if (!(sw.length() < w.length() && w.length() < ws.length())) continue;
        ++pairs;
        std::vector<Permutation> zs;
        for (const auto& z : lower_covers(w))
          if (z.times_simple(s).length() < z.length()) zs.push_back(z);
        const bool ws_smooth = is_smooth(ws);
        if (ws_smooth && !(zs.size() == 1 && is_smooth(zs[0])))
          o.fail("smooth ws without a unique smooth z: " + w.to_string() + ", s" + std::to_string(s));
        if (!ws_smooth && !zs.empty()) o.fail("singular ws with a z: " + w.to_string() + ", s" + std::to_string(s));
        const ModularRelation r = modular_relation(w, s, 5);
        if ((r.kind == ModularCase::Smooth) != ws_smooth || r.ws != ws ||
            (ws_smooth && zs.size() == 1 && r.z != zs[0]))
          o.fail("modular_relation disagrees for " + w.to_string() + ", s" + std::to_string(s));
        if (ws_smooth) ++smooth_case;
        if (n > 5) continue;
        // (1 + q) X_w = X_{ws} + q X_z, with X_v = ch(q^{l(v)/2} C'_v).
        SymmetricFunction rhs = ch_cprime(ws);
        if (ws_smooth && zs.size() == 1) rhs += ch_cprime(zs[0]).scaled(RationalLaurent::q());
        if (!(ch_cprime(w).scaled(one_plus_q) == rhs))
          o.fail("character identity fails for " + w.to_string() + ", s" + std::to_string(s));
        ++verified;
      }
  o.detail += std::to_string(pairs) + " pairs (" + std::to_string(smooth_case) + " with ws smooth), " +
              std::to_string(verified) + " identities verified for n <= 5";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      ++count;
      const HeckeElement c = cprime_normalized(w);
      if (!(iota(c) == c)) o.fail("C' not self-dual for " + w.to_string());
      const HeckeElement scaled = cprime(w);
      for (const auto& [z, p] : scaled.terms()) {
        if (z == w) {
          if (!(p == LaurentQ(1))) o.fail("P_{w,w} != 1 for " + w.to_string());
        } else if (!p.is_polynomial() || !p.has_integer_exponents() || p.max_half_exponent() >= w.length() - z.length()) {
          o.fail("degree bound fails for P_{" + z.to_string() + "," + w.to_string() + "}");
        }
      }
    }
  o.detail += std::to_string(count) + " permutations, n <= 5";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t values = 0, unimodal = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto table = character_table(n);
    for (const auto& w : all_permutations(n)) {
      const auto mu = oracle::cycle_type(w);
      for (const auto& lambda : partitions(n)) {
        ++values;
        if (table->value(lambda, w).to_laurent().at_one() != oracle::murnaghan_nakayama(lambda.parts(), mu))
          o.fail("q = 1 mismatch at " + lambda.to_string() + ", " + w.to_string());
      }
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const HeckeElement c = cprime(w);
      for (const auto& lambda : partitions(n)) {
        ++unimodal;
        const PolyProps p = poly_props(chi_element(lambda, c));
        if (!p.nonnegative || !p.palindromic || !p.unimodal)
          o.fail("chi^" + lambda.to_string() + "(C'_" + w.to_string() + ") not symmetric unimodal");
      }
    }
  o.detail += std::to_string(values) + " table values at q = 1 (n <= 7), " + std::to_string(unimodal) +
              " values of chi(C'_w) (n <= 5)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t functions = 0, triples = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : enumerate_hessenberg(n)) {
      ++functions;
      if (!(csf(m).coefficients() == csf_oracle(m).coefficients())) o.fail("csf != oracle for " + m.to_string());
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : modular_triples(n)) {
      ++triples;
      const SymmetricFunction lhs = csf(t.m1).scaled(to_rational(1 + LaurentQ::q()));
      if (!(lhs == csf(t.m2) + csf(t.m0).scaled(RationalLaurent::q())))
        o.fail("modular law fails for m1 = " + t.m1.to_string());
    }
  o.detail += std::to_string(functions) + " functions against the oracle (n <= 5), " + std::to_string(triples) +
              " modular triples (n <= 6)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0, failures = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      ++count;
      const PositivityResult r = positivity(ch_cprime(w), Basis::h);
      if (!r.positive) {
        ++failures;
        o.fail("witness w = " + w.to_string() + ", h_" + r.witness->to_string() + " coefficient " +
               r.witness_coeff.to_pretty_string());
      }
    }
  if (o.passed)
    o.detail = std::to_string(count) + " permutations, n <= 5, all h-positive";
  else
    o.detail = std::to_string(failures) + " of " + std::to_string(count) + " not h-positive; first " + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 counterexample in S_8", criterion1},
      {"2 smooth reduction preserves ch", criterion2},
      {"3 codominant characters are omega(csf)", criterion3},
      {"4 modular relation dichotomy and identities", criterion4},
      {"5 KL self-duality and degree bounds", criterion5},
      {"6 character table sanity", criterion6},
      {"7 csf oracle and modular law", criterion7},
      {"8 h-positivity (reported only)", criterion8},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << criteria[k].first << ": " << (o.passed ? "PASS" : "FAIL") << " - " << o.detail
              << " [" << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
    if (k < 7) all = all && o.passed;
  }
  return all ? 0 : 1;
}
