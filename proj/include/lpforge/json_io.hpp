#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <variant>

#include "lpforge/bm.hpp"
#include "lpforge/verify.hpp"

namespace lpforge {

using Json = nlohmann::json;

// Rationals travel as {"num":..,"den":..}; components are JSON integers when
// they fit in 64 bits and decimal strings otherwise, and both forms are
// accepted on input. Floating scalars are plain JSON numbers.

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);

inline Json scalar_to_json(const Rat& v) { return rat_to_json(v); }
inline Json scalar_to_json(double v) { return v; }

Json exponent_to_json(const Exponent& p);
Exponent exponent_from_json(const Json& j);

Json space_to_json(const MeasureSpace& space);
SpacePtr space_from_json(const Json& j);

// value arrays aligned to the space's atoms
template <class S>
Json function_values_to_json(const SimpleFunction<S>& f) {
  Json arr = Json::array();
  for (const S& v : f.values) arr.push_back(scalar_to_json(v));
  return arr;
}

Rat exact_value_from_json(const Json& j);
double float_value_from_json(const Json& j);

SimpleFunction<Rat> exact_function_from_json(const Json& values, SpacePtr sp);
SimpleFunction<double> float_function_from_json(const Json& values,
                                                SpacePtr sp);

// {"functions": [[..],..]} or a bare array of value arrays
std::vector<SimpleFunction<Rat>> exact_functions_from_json(const Json& j,
                                                           SpacePtr sp);
std::vector<SimpleFunction<double>> float_functions_from_json(const Json& j,
                                                              SpacePtr sp);

Json verdict_to_json(const VerdictReport& report);
VerdictReport verdict_from_json(const Json& j);

// A self-contained witness file: space, inputs, certificate, coordinates,
// bounds, and an optional verdict block.
template <class S>
struct WitnessDocumentT {
  std::vector<SimpleFunction<S>> inputs;
  ApproximationWitness<S> witness;
  std::optional<VerdictReport> verdict;
  std::uint64_t seed = 0;
  std::optional<std::string> generated_at;
};

using WitnessDocument =
    std::variant<WitnessDocumentT<Rat>, WitnessDocumentT<double>>;

Json witness_document_to_json(const WitnessDocument& doc);
WitnessDocument witness_document_from_json(const Json& j);

RatMatrix matrix_from_json(const Json& j);

}  // namespace lpforge
