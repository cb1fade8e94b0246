#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "superconf/transform.hpp"

namespace superconf {

using Json = nlohmann::ordered_json;

// Rationals are [numerator, denominator] pairs of integers; an integer that
// does not fit in 64 bits is written as a decimal string. A Gaussian
// rational is {"re": [n, d]} with an "im" pair present only when nonzero.
// A Grassmann number is a list of {"mask", "re"[, "im"]} terms sorted by
// mask; bit k of the mask stands for theta_{k+1}.
Json to_json(const GaussianRational& x);
Json to_json(const GrassmannNumber& x);
// Coefficient list, index = power of z.
Json to_json(const ComponentFunction& p);
Json to_json(const RationalComponent& r);
Json to_json(const Superfield& f);
Json to_json(const TangentMatrix& m);
Json to_json(const SATransform& t);
Json to_json(const ReducedPair& p);

// The parsers throw Error(Errc::Parse) naming the JSON path of the offending
// value, or Errc::Parity / Errc::AlgebraMismatch from the value constructors.
GaussianRational gaussian_from_json(const Json& j);
GrassmannNumber grassmann_from_json(const Json& j, int generator_count);
ComponentFunction component_from_json(const Json& j, int generator_count,
                                      Parity parity);
Superfield superfield_from_json(const Json& j, int generator_count);
// `path` prefixes error locations when the value is nested in a document.
SATransform transform_from_json(const Json& j, const std::string& path = "");
// f0 and chi0 default to zero when absent.
ReducedPair reduced_pair_from_json(const Json& j);

// Parses text; syntax errors carry the byte offset.
Json parse_json(std::string_view text);
// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace superconf
