#include "hecke_lab/hecke.hpp"

#include <mutex>
#include <unordered_map>

namespace hecke_lab {

HeckeElement HeckeElement::basis(const Permutation& w, const LaurentQ& coeff) {
  HeckeElement out(w.size());
  out.add_term(w, coeff);
  return out;
}

LaurentQ HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentQ() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentQ& c) {
  if (w.size() != n_) throw SizeMismatch("Hecke term of rank " + std::to_string(w.size()) +
                                         " added to an element of rank " + std::to_string(n_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::check_rank(const HeckeElement& o) const {
  if (o.n_ != n_) throw SizeMismatch("Hecke elements of different ranks");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentQ& c) const {
  HeckeElement out(n_);
  if (c.is_zero()) return out;
  for (const auto& [w, a] : terms_) out.terms_.emplace(w, a * c);
  return out;
}

HeckeElement HeckeElement::times_generator(int i) const {
  // T_w T_s = T_{ws} if ws > w, else (q-1) T_w + q T_{ws}.
  static const LaurentQ q_minus_one = LaurentQ::q() - LaurentQ(1);
  HeckeElement out(n_);
  for (const auto& [w, c] : terms_) {
    const Permutation ws = w.times_simple(i);
    if (!w.has_right_descent(i)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, c * q_minus_one);
      out.add_term(ws, c.shifted(2));
    }
  }
  return out;
}

HeckeElement HeckeElement::generator_times(int i) const {
  static const LaurentQ q_minus_one = LaurentQ::q() - LaurentQ(1);
  HeckeElement out(n_);
  for (const auto& [w, c] : terms_) {
    const Permutation sw = w.simple_times(i);
    if (!w.has_left_descent(i)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, c * q_minus_one);
      out.add_term(sw, c.shifted(2));
    }
  }
  return out;
}

HeckeElement HeckeElement::times_generator_inverse(int i) const {
  static const LaurentQ inv_q_minus_one = LaurentQ::q(-1) - LaurentQ(1);
  HeckeElement out = times_generator(i).scaled(LaurentQ::q(-1));
  out += scaled(inv_q_minus_one);
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw SizeMismatch("Hecke elements of different ranks");
  HeckeElement out(a.rank());
  for (const auto& [x, c] : b.terms()) {
    HeckeElement partial = a;
    for (int s : x.reduced_word()) partial = partial.times_generator(s);
    out += partial.scaled(c);
  }
  return out;
}

namespace {

// iota(T_w) for single basis elements, memoised per permutation.
const HeckeElement& iota_of_basis(const Permutation& w) {
  static std::mutex mutex;
  static std::unordered_map<Permutation, HeckeElement, PermutationHash> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(w); it != memo.end()) return it->second;
  }
  // For w = s_1 ... s_k: T_{w^{-1}}^{-1} = T_{s_1}^{-1} ... T_{s_k}^{-1}.
  HeckeElement value;
  if (w.is_identity()) {
    value = HeckeElement::basis(w);
  } else {
    const auto word = w.reduced_word();
    const int last = word.back();
    value = iota_of_basis(w.times_simple(last)).times_generator_inverse(last);
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(w, std::move(value)).first->second;
}

}  // namespace

HeckeElement iota(const HeckeElement& a) {
  HeckeElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out += iota_of_basis(w).scaled(c.bar());
  return out;
}

std::map<Permutation, BigInt> specialize_at_one(const HeckeElement& a) {
  std::map<Permutation, BigInt> out;
  for (const auto& [w, c] : a.terms()) {
    BigInt v = c.at_one();
    if (sgn(v) != 0) out.emplace(w, v);
  }
  return out;
}

}  // namespace hecke_lab
