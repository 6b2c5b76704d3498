#pragma once

// JSON and text surfaces: space objects, forms, classes, verdicts and the
// inline space syntax accepted by the command-line tool.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "spq/classify.hpp"

namespace spq {

using json = nlohmann::json;

/// Accepts {"p": int, "n": int, "R": [int...], "Q": [int...]}; entries may be
/// unreduced. Malformed objects raise ParseError, invalid data the errors of
/// validate().
RotationData rotation_from_json(const json& j);
json to_json(const RotationData& data);

/// {"deg": d, "coeffs": [...]}
json to_json(const HomogeneousForm& f);
json to_json(const KInvariant& k);
/// {"4": {...}, "8": {...}} keyed by cohomological degree.
json to_json(const TotalClass& cls);
json to_json(const Mat2& m);
json to_json(const FreenessReport& report);
/// {"equivalent", "level", "witness": {"A", "B"} or null, "checked_pairs"}
json to_json(const Verdict& verdict);

/// Parses one space argument. Three spellings are accepted:
///   JSON object                        {"p":5,"n":2,"R":[1,1,0,0],"Q":[0,0,1,1]}
///   inline                             p=5 n=2 R=1,1,0,0 Q=0,0,1,1
///   lens shorthand L(p;r) x L(p;r')    lens p=5 r=1,2 rp=1,3
/// The lens form expands through product_of_lens_spaces; each of r and rp
/// lists the rotation numbers of one factor, so the 3-dimensional L(p;r) is
/// written r=1,r.
RotationData parse_space(std::string_view text);

}  // namespace spq
