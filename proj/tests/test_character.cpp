#include <doctest.h>

#include <random>

#include "hecke_lab/character.hpp"
#include "hecke_lab/error.hpp"
#include "hecke_lab/kl.hpp"
#include "oracles.hpp"

using namespace hecke_lab;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
const LaurentQ q = LaurentQ::q();

LaurentQ minus_one_power(int k) { return LaurentQ(k % 2 ? -1 : 1); }

}  // namespace

TEST_CASE("seminormal matrices satisfy the Hecke relations, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions(n)) {
      const SeminormalRep rep(lambda);
      REQUIRE(BigInt(rep.dimension()) == standard_tableaux_count(lambda));
      for (int q0 : {2, 3, 7}) REQUIRE(rep.satisfies_relations(Rational(q0)));
      CHECK(rep.satisfies_relations(Rational(5, 3)));
    }
}

TEST_CASE("one-dimensional characters") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      std::vector<int> row{n}, col(static_cast<std::size_t>(n), 1);
      CHECK(chi(Partition(row), w) == LaurentQ::q(w.length()));
      CHECK(chi(Partition(col), w) == minus_one_power(w.length()));
    }
  CHECK(chi(Partition{2}, P("21")) == q);
  CHECK(chi(Partition{1, 1}, P("21")) == LaurentQ(-1));
  CHECK_THROWS_AS(chi(Partition{2, 1}, P("21")), SizeMismatch);
}

TEST_CASE("characters do not depend on the reduced word") {
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const auto all = all_permutations(n);
    const auto& parts = partitions(n);
    const Permutation w = all[rng() % all.size()];
    const Partition& lambda = parts[rng() % parts.size()];
    const auto word = oracle::bubble_word(w);
    REQUIRE(oracle::from_word(n, word) == w);
    CHECK(chi_along_word(lambda, word, n) == chi(lambda, w));
  }
}

TEST_CASE("non-reduced words follow the quadratic relation") {
  // T_1 T_1 = (q - 1) T_1 + q
  for (const auto& lambda : partitions(3))
    CHECK(chi_along_word(lambda, {1, 1}, 3) ==
          (q - 1) * chi(lambda, P("213")) + q * chi(lambda, Permutation::identity(3)));
}

TEST_CASE("q = 1 gives the symmetric group characters, n <= 6") {
  // Every element for n <= 5, one element per cycle type for n = 6.
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& w : all_permutations(n)) {
      if (n == 6 && !seen.insert(oracle::cycle_type(w)).second) continue;
      for (const auto& lambda : partitions(n))
        REQUIRE(chi(lambda, w).at_one() == oracle::murnaghan_nakayama(lambda.parts(), oracle::cycle_type(w)));
    }
  }
}

TEST_CASE("character table agrees with the seminormal form, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = character_table(n);
    for (const auto& w : all_permutations(n))
      for (const auto& lambda : partitions(n)) REQUIRE(table->value(lambda, w).to_laurent() == chi(lambda, w));
  }
}

TEST_CASE("character table sampled against the seminormal form, n = 6, 7") {
  std::mt19937 rng(11);
  for (int n : {6, 7}) {
    const auto table = character_table(n);
    const auto all = all_permutations(n);
    for (int t = 0; t < 60; ++t) {
      const Permutation& w = all[rng() % all.size()];
      const Partition& lambda = partitions(n)[rng() % partitions(n).size()];
      CHECK(table->value(lambda, w).to_laurent() == chi(lambda, w));
    }
  }
}

TEST_CASE("characters of Hecke elements") {
  CHECK(chi_element(Partition{2, 1}, HeckeElement::basis(Permutation::identity(3))) == LaurentQ(2));
  CHECK(chi_element(Partition{2}, cprime(P("21"))) == 1 + q);
  CHECK(chi_element(Partition{1, 1}, cprime(P("21"))).is_zero());
}

TEST_CASE("Frobenius characters") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    CHECK(frobenius_ch(HeckeElement::basis(Permutation::identity(n))) ==
          SymmetricFunction::basis_element(Basis::h, Partition(ones)));
  }
  CHECK(ch_cprime(P("21")) == SymmetricFunction::basis_element(Basis::h, Partition{2}, to_rational(1 + q)));
  CHECK(ch_cprime(P("321")) ==
        SymmetricFunction::basis_element(Basis::h, Partition{3}, to_rational((1 + q) * (1 + q + q * q))));
  CHECK(frobenius_ch(cprime(P("3412"))) == ch_cprime(P("3412")));
  // The longest element gives lambda!_q h_lambda with lambda = (n).
  for (int n = 2; n <= 6; ++n)
    CHECK(ch_cprime(Permutation::longest(n)) ==
          SymmetricFunction::basis_element(Basis::h, Partition{n}, to_rational(q_factorial(Partition{n}))));
}

TEST_CASE("characters of C' are symmetric unimodal, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const SymmetricFunction f = ch_cprime(w);
      for (const auto& c : f.coefficients()) {
        const auto integral = to_integral(c);
        REQUIRE(integral.has_value());
        const PolyProps props = poly_props(*integral);
        REQUIRE(props.nonnegative);
        REQUIRE(props.unimodal);
        REQUIRE(props.palindromic);
        if (props.max_half_exponent) {
          // Symmetric about l(w)/2.
          REQUIRE(*props.min_half_exponent + *props.max_half_exponent == 2 * w.length());
        }
      }
    }
}

TEST_CASE("character table JSON round trip") {
  const auto table = character_table(4);
  const CharacterTable back = CharacterTable::from_json(Json::parse(table->to_json().dump()));
  for (const auto& w : all_permutations(4))
    for (const auto& lambda : partitions(4)) CHECK(back.value(lambda, w) == table->value(lambda, w));
  Json bad = table->to_json();
  bad["format"] = "something-else";
  CHECK_THROWS_AS(CharacterTable::from_json(bad), ParseError);
}
