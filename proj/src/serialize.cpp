#include "hecke_lab/serialize.hpp"

namespace hecke_lab {

namespace {

Json coeff_json(const BigInt& c) {
  if (c.fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_si()));
  return Json(c.get_str());
}

Json coeff_json(const Rational& c) {
  if (c.get_den() == 1) return coeff_json(BigInt(c.get_num()));
  return Json(c.get_str());
}

template <class R>
R coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return R(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    R out;
    if (detail::parse_rational_coefficient(j.get<std::string>(), out)) return out;
  }
  throw ParseError("malformed coefficient in JSON: " + j.dump());
}

template <class R>
Json laurent_json(const Laurent<R>& a) {
  Json out = Json::object();
  for (const auto& [e, c] : a.terms()) out[std::to_string(e)] = coeff_json(c);
  return out;
}

template <class R>
Laurent<R> laurent_parse(const Json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  std::vector<typename Laurent<R>::Term> terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("malformed exponent key '" + key + "'");
    }
    terms.emplace_back(e, coeff_from_json<R>(value));
  }
  return Laurent<R>::from_terms(std::move(terms));
}

}  // namespace

Json to_json(const LaurentQ& a) { return laurent_json(a); }
Json to_json(const RationalLaurent& a) { return laurent_json(a); }
LaurentQ laurent_from_json(const Json& j) { return laurent_parse<BigInt>(j); }
RationalLaurent rational_laurent_from_json(const Json& j) { return laurent_parse<Rational>(j); }

}  // namespace hecke_lab
