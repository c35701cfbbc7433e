#pragma once

#include "kemeny/harness.hpp"
#include "kemeny/rational.hpp"

#include "json.hpp"

namespace kemeny::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"exact": "p/q", "decimal": "..."}
Json rational_json(const Rational& x, int digits);

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json integer_json(const BigInt& x);

Json report_json(const VerificationReport& r, int digits);

}  // namespace kemeny::cli
