#pragma once

// JSON and CSV renderings. Keys keep insertion order.

#include "json.hpp"

#include <string>

#include "weilrep/deligne.hpp"

namespace weilrep {

using Json = nlohmann::ordered_json;

/// {"p": p, "coeffs": [[num, den], ...]} plus "complex": [re, im] on request.
Json to_json(const CycNum& x, bool with_complex = false);
CycNum cycnum_from_json(const Json& j);

/// {"p", "N", "values": [CycNum, ...]} in lexicographic V order.
Json to_json(const Kernel& k, bool with_complex = false);

/// {"g": "a,b;c,d", "matrix": [[CycNum, ...], ...]}.
Json to_json(const SchrodingerKernel& k, bool with_complex = false);

/// Quotes a CSV cell when needed.
std::string csv_escape(const std::string& cell);

}  // namespace weilrep
