#pragma once

// JSON forms shared by the cache files, the CLI and the Python module.
//
// A Laurent polynomial is an object mapping exponents of q^{1/2} (as decimal
// strings) to coefficients: {"0": 1, "2": 1} is 1 + q. Coefficients are JSON
// integers when they fit in 64 bits and decimal strings otherwise; rational
// coefficients are written "a/b".

#include "json.hpp"

#include "hecke_lab/qring.hpp"

namespace hecke_lab {

using Json = nlohmann::json;

Json to_json(const LaurentQ& a);
Json to_json(const RationalLaurent& a);
LaurentQ laurent_from_json(const Json& j);
RationalLaurent rational_laurent_from_json(const Json& j);

}  // namespace hecke_lab
