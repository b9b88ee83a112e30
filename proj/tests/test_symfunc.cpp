#include <doctest.h>

#include <random>

#include "hecke_lab/error.hpp"
#include "hecke_lab/symfunc.hpp"
#include "oracles.hpp"

using namespace hecke_lab;

namespace {

const RationalLaurent Q = RationalLaurent::q();
constexpr Basis kBases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

RationalLaurent R(long c) { return RationalLaurent(c); }

SymmetricFunction el(Basis b, std::initializer_list<int> parts, const RationalLaurent& c = R(1)) {
  return SymmetricFunction::basis_element(b, Partition(parts), c);
}

SymmetricFunction random_function(std::mt19937& rng, int n, Basis b) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 3);
  SymmetricFunction f(n, b);
  for (const auto& lambda : partitions(n))
    f.set_coeff(lambda, R(coeff(rng)) + R(coeff(rng)) * RationalLaurent::q(expo(rng)));
  return f;
}

// prod_i e_{lambda_i} (or h, p) in `vars` variables as an explicit polynomial.
oracle::Poly expand(Basis b, const Partition& lambda, int vars) {
  oracle::Poly out{{std::vector<int>(static_cast<std::size_t>(vars), 0), 1}};
  for (int k : lambda.parts()) {
    oracle::Poly factor;
    if (b == Basis::h) {
      factor = oracle::complete_homogeneous(k, vars);
    } else if (b == Basis::p) {
      for (int i = 0; i < vars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = k;
        factor[e] = 1;
      }
    } else {
      for (unsigned mask = 0; mask < (1u << vars); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = mask >> i & 1;
        factor[e] = 1;
      }
    }
    out = oracle::multiply(out, factor);
  }
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(1) == std::vector<Partition>{Partition{1}});
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(10).size() == 42);
  CHECK(partitions(0).size() == 1);
  CHECK(Partition::parse("2,1,1") == Partition{2, 1, 1});
  CHECK(Partition::parse("211") == Partition{2, 1, 1});
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK_THROWS_AS(Partition({1, 2}), ParseError);
  for (int n = 1; n <= 8; ++n)
    for (std::size_t k = 0; k < partitions(n).size(); ++k) CHECK(partition_index(partitions(n)[k]) == k);
}

TEST_CASE("conversion examples") {
  const SymmetricFunction h2 = el(Basis::h, {2}).to(Basis::m);
  CHECK(h2.coeff(Partition{2}) == R(1));
  CHECK(h2.coeff(Partition{1, 1}) == R(1));
  CHECK(el(Basis::p, {2}) == el(Basis::m, {2}));
  CHECK(el(Basis::s, {1, 1}) == el(Basis::e, {2}));
  CHECK(el(Basis::s, {1, 1}).to(Basis::e).coeff(Partition{2}) == R(1));
}

TEST_CASE("e, h and p expansions match explicit polynomials, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (Basis b : {Basis::e, Basis::h, Basis::p})
      for (const auto& lambda : partitions(n)) {
        const oracle::Poly poly = expand(b, lambda, n);
        const SymmetricFunction f = SymmetricFunction::basis_element(b, lambda).to(Basis::m);
        for (const auto& mu : partitions(n)) {
          std::vector<int> e = mu.parts();
          e.resize(static_cast<std::size_t>(n), 0);
          const auto it = poly.find(e);
          REQUIRE(f.coeff(mu) == R(it == poly.end() ? 0 : it->second));
        }
      }
}

TEST_CASE("Schur functions in the power-sum basis follow Murnaghan-Nakayama, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) {
      const SymmetricFunction f = SymmetricFunction::basis_element(Basis::s, lambda).to(Basis::p);
      for (const auto& mu : partitions(n)) {
        // z_mu = prod_i i^{m_i} m_i!
        long z = 1;
        for (int i = 1; i <= n; ++i) {
          long mult = std::count(mu.parts().begin(), mu.parts().end(), i);
          for (long k = 1; k <= mult; ++k) z *= i * k;
        }
        REQUIRE(f.coeff(mu) * Rational(z) == R(oracle::murnaghan_nakayama(lambda.parts(), mu.parts())));
      }
    }
}

TEST_CASE("round trips between all bases, n <= 8") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 8; ++n)
    for (Basis a : kBases) {
      const SymmetricFunction f = random_function(rng, n, a);
      for (Basis b : kBases) {
        const SymmetricFunction g = f.to(b);
        CHECK(g.basis() == b);
        CHECK(g.to(a).coefficients() == f.coefficients());
        CHECK(g == f);
        CHECK(g.at_q_one().to(a).coefficients() == f.at_q_one().coefficients());
      }
    }
}

TEST_CASE("omega") {
  CHECK(omega(el(Basis::h, {2})) == el(Basis::e, {2}));
  CHECK(omega(el(Basis::s, {2, 1})) == el(Basis::s, {2, 1}));
  CHECK(omega(el(Basis::s, {3, 1})) == el(Basis::s, {2, 1, 1}));
  CHECK(omega(el(Basis::p, {2})) == el(Basis::p, {2}, R(-1)));
  std::mt19937 rng(99);
  for (int n = 1; n <= 8; ++n)
    for (Basis b : kBases) {
      const SymmetricFunction f = random_function(rng, n, b);
      CHECK(omega(omega(f)).coefficients() == f.coefficients());
      CHECK(omega(f).basis() == b);
      CHECK(omega(f) == omega(f.to(Basis::m)));
    }
}

TEST_CASE("sum of f^lambda s_lambda is h_1^n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    SymmetricFunction f(n, Basis::s);
    for (const auto& lambda : partitions(n))
      f.set_coeff(lambda, RationalLaurent(Rational(standard_tableaux_count(lambda))));
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    CHECK(f == SymmetricFunction::basis_element(Basis::h, Partition(ones)));
  }
  CHECK(standard_tableaux_count(Partition{3, 2}) == 5);
}

TEST_CASE("positivity") {
  CHECK(positivity(el(Basis::h, {2}, 1 + Q), Basis::h).positive);
  const auto r = positivity(el(Basis::s, {1, 1}), Basis::h);
  CHECK_FALSE(r.positive);
  CHECK(*r.witness == Partition{2});
  CHECK(r.witness_coeff == R(-1));
  CHECK(positivity(SymmetricFunction(3, Basis::s), Basis::h).positive);
  CHECK(positivity(el(Basis::p, {2}), Basis::m).positive);
  CHECK(positivity(el(Basis::p, {1, 1}), Basis::s).positive);
  CHECK_FALSE(positivity(el(Basis::p, {2}), Basis::s).positive);
}

TEST_CASE("q-factorials") {
  const LaurentQ q = LaurentQ::q();
  CHECK(q_factorial(Partition{3}) == 1 + LaurentQ(2) * q + LaurentQ(2) * q * q + q * q * q);
  CHECK(q_factorial(Partition{2, 1}) == 1 + q);
  CHECK(q_factorial(Partition{1, 1, 1, 1}) == LaurentQ(1));
}

TEST_CASE("text, LaTeX and JSON forms") {
  const SymmetricFunction f = el(Basis::h, {2}, 1 + Q) + el(Basis::h, {1, 1});
  CHECK(f.to_string() == "(1 + q)*h[2] + h[1,1]");
  CHECK(f.to_latex() == "(1 + q)h_{2} + h_{11}");
  std::mt19937 rng(5);
  for (Basis b : kBases) {
    const SymmetricFunction g = random_function(rng, 5, b);
    const SymmetricFunction back = symmetric_function_from_json(Json::parse(to_json(g).dump()));
    CHECK(back.basis() == b);
    CHECK(back.coefficients() == g.coefficients());
  }
  CHECK(parse_basis("s") == Basis::s);
  CHECK_THROWS_AS(parse_basis("x"), ParseError);
}
