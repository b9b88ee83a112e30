#include <doctest.h>

#include <random>

#include "hecke_lab/qring.hpp"
#include "hecke_lab/serialize.hpp"

using namespace hecke_lab;

namespace {

const LaurentQ q = LaurentQ::q();
const LaurentQ rq = LaurentQ::q_power(1);  // q^{1/2}

LaurentQ random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-6, 6), c(-5, 5), k(0, 4);
  std::vector<LaurentQ::Term> terms;
  for (int i = k(rng); i > 0; --i) terms.emplace_back(e(rng), BigInt(c(rng)));
  return LaurentQ::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK((1 + q) * (1 + q) == 1 + LaurentQ(2) * q + q * q);
  CHECK((LaurentQ::q_power(-1) + rq) * rq == 1 + q);
  const LaurentQ a = LaurentQ(3) * q - rq;
  CHECK(a + LaurentQ() == a);
  CHECK((a - a).is_zero());
  CHECK((1 + q).to_pretty_string() == "1 + q");
  CHECK((1 - LaurentQ(2) * LaurentQ::q(3)).to_pretty_string() == "1 - 2*q^3");
}

TEST_CASE("bar involution") {
  CHECK(rq.bar() == LaurentQ::q_power(-1));
  CHECK((1 + q).bar() == 1 + LaurentQ::q(-1));
  CHECK(LaurentQ(7).bar() == LaurentQ(7));
}

TEST_CASE("ring laws and round trips on random values") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 300; ++t) {
    const LaurentQ a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(LaurentQ::parse_canonical(a.to_canonical_string()) == a);
    CHECK(laurent_from_json(to_json(a)) == a);
    CHECK(laurent_from_json(Json::parse(to_json(a).dump())) == a);
  }
}

TEST_CASE("no overflow in big coefficients") {
  LaurentQ a = 1 + q;
  for (int i = 0; i < 80; ++i) a = a * (1 + q);
  // Central binomial coefficient C(81, 40) exceeds 64 bits.
  CHECK(a.q_coeff(40).get_str() == "212392290424395860814420");
}

TEST_CASE("polynomial properties") {
  auto p = poly_props(1 + q);
  CHECK(p.palindromic);
  CHECK(p.unimodal);
  CHECK(p.nonnegative);
  p = poly_props(1 + LaurentQ(3) * q + q * q);
  CHECK(p.palindromic);
  CHECK(p.unimodal);
  CHECK(*p.min_half_exponent == 0);
  CHECK(*p.max_half_exponent == 4);
  CHECK_FALSE(poly_props(1 - q).nonnegative);
  CHECK_FALSE(poly_props(1 + LaurentQ(2) * q).palindromic);
  CHECK_FALSE(poly_props(2 + q + LaurentQ(2) * q * q).unimodal);
  CHECK_FALSE(poly_props(LaurentQ()).min_half_exponent.has_value());
}

TEST_CASE("dense polynomials") {
  const DensePoly a = DensePoly::from_laurent(1 + LaurentQ(2) * q);
  CHECK(a.degree() == 1);
  CHECK((a * a).to_laurent() == (1 + LaurentQ(2) * q) * (1 + LaurentQ(2) * q));
  CHECK(a.shifted(2).to_laurent() == (1 + LaurentQ(2) * q) * q * q);
  DensePoly big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big += big, ArithmeticOverflow);
}
