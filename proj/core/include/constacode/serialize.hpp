#ifndef CONSTACODE_SERIALIZE_HPP
#define CONSTACODE_SERIALIZE_HPP

#include <string>

#include "constacode/code.hpp"
#include "constacode/weights.hpp"

namespace constacode {

/// {"q":..,"n":..,"r":..,"lambda_log":..,"field_spec":"p^K:...",
///  "generator_coeffs":[...],"k":..} with generator coefficients ascending as
/// subfield symbol indices.  Key order is fixed, output is byte-stable.
std::string code_to_json(const ConstacyclicCode& code);

/// Inverse of code_to_json; throws ParseError on malformed input.
ConstacyclicCode code_from_json(const std::string& json);

/// Sparse map {"w": "count-as-decimal-string"}, ascending w.
std::string weights_to_json(const WeightDistribution& wd);

WeightDistribution weights_from_json(const std::string& json, std::int64_t n, std::int64_t q);

}  // namespace constacode

#endif
