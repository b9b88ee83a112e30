#pragma once

// Exact coefficient rings.
//
// Laurent<R> is a sparse Laurent polynomial in the formal variable q^{1/2}.
// Exponents are stored as integers counting powers of q^{1/2}, so q itself is
// the half-exponent 2. LaurentQ (integer coefficients) is the coefficient ring
// of Hecke-algebra elements and characters; RationalLaurent carries
// symmetric-function coordinates, whose power-sum coordinates need
// denominators.
//
// DensePoly is the int64 fast path used in the hot loops (Kazhdan-Lusztig
// tables, character tables, chromatic functions). Every operation is overflow
// checked; an overflow raises ArithmeticOverflow instead of wrapping.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke_lab/error.hpp"

namespace hecke_lab {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace detail {

inline bool is_zero(const BigInt& c) { return sgn(c) == 0; }
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }

inline std::string coeff_to_string(const BigInt& c) { return c.get_str(); }
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }

}  // namespace detail

template <class R>
class Laurent {
 public:
  using Coeff = R;
  using Term = std::pair<int, R>;  // (half-exponent, coefficient)

  Laurent() = default;
  Laurent(long c) {  // NOLINT: implicit constants are convenient in formulas
    if (c != 0) terms_.emplace_back(0, R(c));
  }
  explicit Laurent(const R& c) {
    if (!detail::is_zero(c)) terms_.emplace_back(0, c);
  }

  /// c * q^{half_exp / 2}
  static Laurent monomial(const R& c, int half_exp) {
    Laurent out;
    if (!detail::is_zero(c)) out.terms_.emplace_back(half_exp, c);
    return out;
  }
  static Laurent q_power(int half_exp) { return monomial(R(1), half_exp); }
  /// q^k for integer k.
  static Laurent q(int k = 1) { return q_power(2 * k); }

  /// Builds sum_k coeffs[k] q^{k} (integer powers of q).
  static Laurent from_q_coefficients(std::span<const R> coeffs, int lowest_q_exp = 0) {
    Laurent out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!detail::is_zero(coeffs[k]))
        out.terms_.emplace_back(2 * (lowest_q_exp + static_cast<int>(k)), coeffs[k]);
    return out;
  }

  /// Takes arbitrary (half-exponent, coefficient) pairs; duplicates are summed.
  static Laurent from_terms(std::vector<Term> terms) {
    Laurent out;
    out.terms_ = std::move(terms);
    out.normalize();
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  R coeff(int half_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == half_exp) return it->second;
    return R(0);
  }
  /// Coefficient of q^k.
  R q_coeff(int k) const { return coeff(2 * k); }

  /// Smallest / largest half-exponent; requires a non-zero value.
  int min_half_exponent() const { return terms_.front().first; }
  int max_half_exponent() const { return terms_.back().first; }

  /// True when every exponent is an integer power of q.
  bool has_integer_exponents() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first % 2 == 0; });
  }
  /// True for an honest polynomial in q^{1/2} (no negative exponents).
  bool is_polynomial() const { return is_zero() || min_half_exponent() >= 0; }

  /// Multiplication by q^{half/2}.
  Laurent shifted(int half) const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.first += half;
    return out;
  }

  /// The involution q^{1/2} -> q^{-1/2}.
  Laurent bar() const {
    Laurent out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      out.terms_.emplace_back(-it->first, it->second);
    return out;
  }

  /// Value at q = 1 (so q^{1/2} = 1 as well).
  R at_one() const {
    R s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  Laurent operator-() const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  Laurent& operator+=(const Laurent& o) { return merge(o, +1); }
  Laurent& operator-=(const Laurent& o) { return merge(o, -1); }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(const R& c) {
    if (detail::is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const R& c) { return a *= c; }
  friend Laurent operator*(const R& c, Laurent a) { return a *= c; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int lo = a.min_half_exponent() + b.min_half_exponent();
    const int hi = a.max_half_exponent() + b.max_half_exponent();
    std::vector<R> dense(static_cast<std::size_t>(hi - lo + 1), R(0));
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        dense[static_cast<std::size_t>(x.first + y.first - lo)] += x.second * y.second;
    Laurent out;
    for (std::size_t k = 0; k < dense.size(); ++k)
      if (!detail::is_zero(dense[k])) out.terms_.emplace_back(lo + static_cast<int>(k), dense[k]);
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Canonical text form: "c*q^(k/2)" terms joined by "+", "0" for zero.
  std::string to_canonical_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += '+';
      out += detail::coeff_to_string(terms_[i].second);
      out += "*q^(" + std::to_string(terms_[i].first) + "/2)";
    }
    return out;
  }

  /// Human readable form, e.g. "1 + q", "q^(-1/2) + q^(1/2)", "1 - 2*q^3".
  std::string to_pretty_string() const { return pretty(false); }
  std::string to_latex() const { return pretty(true); }

  static Laurent parse_canonical(std::string_view text);

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
      h ^= std::hash<int>{}(t.first) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= std::hash<std::string>{}(detail::coeff_to_string(t.second)) + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  Laurent& merge(const Laurent& o, int sign) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, sign > 0 ? j->second : R(-j->second));
        ++j;
      } else {
        R c = sign > 0 ? R(i->second + j->second) : R(i->second - j->second);
        if (!detail::is_zero(c)) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return detail::is_zero(t.second); });
    terms_ = std::move(out);
  }

  static std::string power_string(int half, bool latex) {
    if (half == 0) return "";
    if (half == 2) return "q";
    std::string e = (half % 2 == 0) ? std::to_string(half / 2) : std::to_string(half) + "/2";
    if (latex) return "q^{" + e + "}";
    if (half % 2 == 0 && half > 0) return "q^" + e;
    return "q^(" + e + ")";
  }

  std::string pretty(bool latex) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      R c = terms_[i].second;
      const bool negative = sgn(c) < 0;
      if (negative) c = -c;
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string pw = power_string(terms_[i].first, latex);
      const std::string cs = detail::coeff_to_string(c);
      if (pw.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += pw;
      } else {
        out += latex ? cs + pw : cs + "*" + pw;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using LaurentQ = Laurent<BigInt>;
using RationalLaurent = Laurent<Rational>;

RationalLaurent to_rational(const LaurentQ& a);
/// Exact conversion back; nullopt when some coefficient is not an integer.
std::optional<LaurentQ> to_integral(const RationalLaurent& a);

/// Shape summary used for the unimodality / positivity checks.
struct PolyProps {
  std::optional<int> min_half_exponent;  // empty for the zero polynomial
  std::optional<int> max_half_exponent;
  bool nonnegative = true;
  bool palindromic = true;
  bool unimodal = true;
};

/// The coefficient sequence is read with step q when all exponents share a
/// parity, and with step q^{1/2} otherwise.
PolyProps poly_props(const LaurentQ& a);

/// Dense polynomial in q with int64 coefficients, index = exponent.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::int64_t c) {
    if (c != 0) c_.push_back(c);
  }
  explicit DensePoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly q_power(int k) {
    DensePoly p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, 0);
    p.c_.back() = 1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  /// this += c * q^shift * o
  DensePoly& add_scaled(const DensePoly& o, std::int64_t c, int shift);
  DensePoly shifted(int k) const;
  DensePoly operator-() const;

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

  BigInt evaluate(const BigInt& x) const;
  LaurentQ to_laurent() const;
  /// Fails with PreconditionViolated unless `a` is a polynomial in q with
  /// coefficients that fit in int64.
  static DensePoly from_laurent(const LaurentQ& a);

  std::size_t hash() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct DensePolyHash {
  std::size_t operator()(const DensePoly& p) const { return p.hash(); }
};

namespace detail {
bool parse_rational_coefficient(std::string_view s, BigInt& out);
bool parse_rational_coefficient(std::string_view s, Rational& out);
}  // namespace detail

template <class R>
Laurent<R> Laurent<R>::parse_canonical(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string_view piece = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    const std::size_t star = piece.find("*q^(");
    if (star == std::string_view::npos || piece.size() < star + 7 || piece.back() != ')')
      throw ParseError("malformed Laurent term: '" + std::string(piece) + "'");
    std::string_view exp = piece.substr(star + 4, piece.size() - star - 5);
    if (exp.size() < 3 || exp.substr(exp.size() - 2) != "/2")
      throw ParseError("malformed exponent in term: '" + std::string(piece) + "'");
    R c;
    if (!detail::parse_rational_coefficient(piece.substr(0, star), c))
      throw ParseError("malformed coefficient in term: '" + std::string(piece) + "'");
    int e = 0;
    try {
      std::size_t used = 0;
      std::string es(exp.substr(0, exp.size() - 2));
      e = std::stoi(es, &used);
      if (used != es.size()) throw ParseError("bad exponent");
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in term: '" + std::string(piece) + "'");
    }
    terms.emplace_back(e, c);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return from_terms(std::move(terms));
}

}  // namespace hecke_lab

template <class R>
struct std::hash<hecke_lab::Laurent<R>> {
  std::size_t operator()(const hecke_lab::Laurent<R>& a) const { return a.hash(); }
};
