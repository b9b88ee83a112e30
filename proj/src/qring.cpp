#include "hecke_lab/qring.hpp"

#include <limits>

namespace hecke_lab {

namespace detail {

namespace {
bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}
}  // namespace

bool parse_rational_coefficient(std::string_view s, BigInt& out) {
  if (!valid_integer_text(s)) return false;
  std::string t(s);
  if (t.front() == '+') t.erase(0, 1);
  return out.set_str(t, 10) == 0;
}

bool parse_rational_coefficient(std::string_view s, Rational& out) {
  const std::size_t slash = s.find('/');
  BigInt num;
  BigInt den(1);
  if (!parse_rational_coefficient(s.substr(0, slash), num)) return false;
  if (slash != std::string_view::npos) {
    if (!parse_rational_coefficient(s.substr(slash + 1), den) || sgn(den) == 0) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

}  // namespace detail

RationalLaurent to_rational(const LaurentQ& a) {
  std::vector<RationalLaurent::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) terms.emplace_back(e, Rational(c));
  return RationalLaurent::from_terms(std::move(terms));
}

std::optional<LaurentQ> to_integral(const RationalLaurent& a) {
  std::vector<LaurentQ::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    terms.emplace_back(e, c.get_num());
  }
  return LaurentQ::from_terms(std::move(terms));
}

PolyProps poly_props(const LaurentQ& a) {
  PolyProps props;
  if (a.is_zero()) return props;
  const int lo = a.min_half_exponent();
  const int hi = a.max_half_exponent();
  props.min_half_exponent = lo;
  props.max_half_exponent = hi;
  bool same_parity = true;
  for (const auto& [e, c] : a.terms()) {
    if ((e - lo) % 2 != 0) same_parity = false;
    if (sgn(c) < 0) props.nonnegative = false;
  }
  const int step = same_parity ? 2 : 1;
  std::vector<BigInt> seq;
  for (int e = lo; e <= hi; e += step) seq.push_back(a.coeff(e));
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != seq[seq.size() - 1 - i]) props.palindromic = false;
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  props.unimodal = (i >= seq.size());
  return props;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in polynomial addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in polynomial product");
  return r;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) { return add_scaled(o, 1, 0); }
DensePoly& DensePoly::operator-=(const DensePoly& o) { return add_scaled(o, -1, 0); }

DensePoly& DensePoly::add_scaled(const DensePoly& o, std::int64_t c, int shift) {
  if (o.is_zero() || c == 0) return *this;
  const std::size_t need = o.c_.size() + static_cast<std::size_t>(shift);
  if (c_.size() < need) c_.resize(need, 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    auto& slot = c_[k + static_cast<std::size_t>(shift)];
    slot = checked_add(slot, c == 1 ? o.c_[k] : checked_mul(c, o.c_[k]));
  }
  trim();
  return *this;
}

DensePoly DensePoly::shifted(int k) const {
  if (is_zero()) return {};
  DensePoly out;
  out.c_.assign(static_cast<std::size_t>(k), 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

DensePoly DensePoly::operator-() const {
  DensePoly out = *this;
  for (auto& x : out.c_) {
    if (x == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("int64 overflow in negation");
    x = -x;
  }
  return out;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  DensePoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] = checked_add(out.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  out.trim();
  return out;
}

BigInt DensePoly::evaluate(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += BigInt(static_cast<long>(*it));
  }
  return acc;
}

LaurentQ DensePoly::to_laurent() const {
  std::vector<LaurentQ::Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms.emplace_back(2 * static_cast<int>(k), BigInt(static_cast<long>(c_[k])));
  return LaurentQ::from_terms(std::move(terms));
}

DensePoly DensePoly::from_laurent(const LaurentQ& a) {
  if (!a.is_polynomial() || !a.has_integer_exponents())
    throw PreconditionViolated("not a polynomial in q: " + a.to_pretty_string());
  DensePoly out;
  if (a.is_zero()) return out;
  out.c_.assign(static_cast<std::size_t>(a.max_half_exponent() / 2) + 1, 0);
  for (const auto& [e, c] : a.terms()) {
    if (!c.fits_slong_p()) throw ArithmeticOverflow("coefficient does not fit in int64");
    out.c_[static_cast<std::size_t>(e / 2)] = c.get_si();
  }
  return out;
}

std::size_t DensePoly::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : c_) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hecke_lab
