#include <doctest.h>

#include <random>

#include "hecke_lab/error.hpp"
#include "hecke_lab/kl.hpp"
#include "oracles.hpp"

using namespace hecke_lab;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
const LaurentQ q = LaurentQ::q();
HeckeElement T(const Permutation& w, const LaurentQ& c = LaurentQ(1)) { return HeckeElement::basis(w, c); }
HeckeElement T(const char* w, const LaurentQ& c = LaurentQ(1)) { return T(P(w), c); }

}  // namespace

TEST_CASE("quadratic relation and basic products") {
  CHECK(hecke_multiply(T("21"), T("21")) == T("21", q - 1) + T("12", q));
  CHECK(hecke_multiply(T("213"), T("132")) == T(P("213").times_simple(2)));
  const HeckeElement a = T("3142", 1 + q) + T("2143", LaurentQ(3));
  CHECK(hecke_multiply(a, T("1234")) == a);
  CHECK(hecke_multiply(T("1234"), a) == a);
  CHECK_THROWS_AS(hecke_multiply(T("21"), T("213")), SizeMismatch);
}

TEST_CASE("iota") {
  CHECK(iota(T("123")) == T("123"));
  const LaurentQ qi = LaurentQ::q(-1);
  CHECK(iota(T("21")) == T("21", qi) + T("12", qi - 1));
  for (const auto& w : all_permutations(4)) {
    const HeckeElement a = T(w, 1 + q) + T(w.times_simple(1), LaurentQ::q_power(3));
    CHECK(iota(iota(a)) == a);
  }
}

TEST_CASE("associativity on random triples, n <= 5") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const auto all = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 30; ++t) {
      const HeckeElement a = T(all[pick(rng)]), b = T(all[pick(rng)]), c = T(all[pick(rng)]);
      CHECK(hecke_multiply(hecke_multiply(a, b), c) == hecke_multiply(a, hecke_multiply(b, c)));
    }
  }
}

TEST_CASE("q = 1 gives the group algebra, n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n)) {
        const auto spec = specialize_at_one(hecke_multiply(T(u), T(v)));
        REQUIRE(spec.size() == 1);
        CHECK(spec.begin()->first == compose(u, v));
        CHECK(spec.begin()->second == 1);
      }
}

TEST_CASE("KL polynomials: examples") {
  const Permutation w = P("62754381");
  CHECK(kl_polynomial(w, w) == LaurentQ(1));
  CHECK(kl_polynomial(Permutation::identity(6), P("245361")) == LaurentQ(1));
  CHECK(kl_polynomial(Permutation::identity(4), P("3412")) == 1 + q);
  CHECK(kl_polynomial(Permutation::identity(4), P("4231")) == 1 + q);
  CHECK(kl_polynomial(Permutation::identity(8), w) == 1 + q);
  CHECK(kl_polynomial(P("2134"), P("1243")).is_zero());
}

TEST_CASE("mu") {
  CHECK(mu(P("12"), P("21")) == 1);
  CHECK(mu(Permutation::identity(3), P("321")) == 0);
  CHECK(mu(P("2134"), P("1243")) == 0);
  for (const auto& w : all_permutations(5)) {
    if (!is_smooth(w)) continue;
    const auto covers = lower_covers(w);
    for (const auto& z : all_permutations(5)) {
      const std::int64_t m = mu(z, w);
      if (std::find(covers.begin(), covers.end(), z) != covers.end())
        CHECK(m == 1);
      else
        CHECK(m == 0);
    }
  }
}

TEST_CASE("C' elements are self-dual and satisfy the degree bound, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const HeckeElement c = cprime_normalized(w);
      REQUIRE(iota(c) == c);
      const HeckeElement scaled = cprime(w);
      for (const auto& [z, p] : scaled.terms()) {
        REQUIRE(bruhat_leq(z, w));
        REQUIRE(p.is_polynomial());
        REQUIRE(p.has_integer_exponents());
        if (z == w) {
          CHECK(p == LaurentQ(1));
        } else {
          CHECK(p.q_coeff(0) == 1);
          CHECK(p.max_half_exponent() < w.length() - z.length());
        }
      }
    }
}

TEST_CASE("C' of small elements") {
  CHECK(cprime(P("123")) == T("123"));
  CHECK(cprime(P("21")) == T("12") + T("21"));
  HeckeElement all(6);
  const Permutation w = P("245361");
  for (const auto& z : all_permutations(6))
    if (bruhat_leq(z, w)) all.add_term(z, LaurentQ(1));
  CHECK(cprime(w) == all);
}

TEST_CASE("smooth permutations have trivial KL polynomials, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const bool trivial = kl_polynomial(Permutation::identity(n), w) == LaurentQ(1);
      REQUIRE(trivial == is_smooth(w));
      if (!is_smooth(w)) continue;
      const auto table = kl_table_cached(w);
      for (const auto& [z, p] : table->row(w)) REQUIRE(p->to_laurent() == LaurentQ(1));
    }
}

TEST_CASE("product rule C'_w C'_s") {
  const LaurentQ v = LaurentQ::q_power(-1) + LaurentQ::q_power(1);
  CHECK(cprime_times_cs(P("21"), 1) == CPrimeExpansion{{P("21"), v}});
  CHECK(cprime_times_cs(P("12"), 1) == CPrimeExpansion{{P("21"), LaurentQ(1)}});
  CHECK(cprime_times_cs(P("231"), 1) == CPrimeExpansion{{P("321"), LaurentQ(1)}, {P("213"), LaurentQ(1)}});
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i < n; ++i) {
        const HeckeElement lhs = hecke_multiply(cprime_normalized(w), cprime_normalized(Permutation::simple(n, i)));
        REQUIRE(to_hecke_element(cprime_times_cs(w, i), n) == lhs);
      }
}

TEST_CASE("KL table JSON round trip") {
  const KLTable t = kl_table(P("3412"));
  const KLTable back = KLTable::from_json(Json::parse(t.to_json().dump()));
  CHECK(back.entry_count() == t.entry_count());
  for (const auto& y : t.interval())
    for (const auto& z : t.interval()) CHECK(back.poly(z, y) == t.poly(z, y));
  CHECK(t.to_json().dump() == back.to_json().dump());
  Json stale = t.to_json();
  stale["version"] = 0;
  CHECK_THROWS_AS(KLTable::from_json(stale), ParseError);
}
