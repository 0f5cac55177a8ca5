#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "gtmm/bilinear.hpp"
#include "gtmm/bounds.hpp"
#include "gtmm/constructions.hpp"
#include "gtmm/group.hpp"
#include "gtmm/matrix.hpp"
#include "gtmm/tpp.hpp"

namespace gtmm::io {

using nlohmann::json;

/// Structural word of an element, per group kind:
///   cyclic     integer exponent
///   product    array of factor words
///   symmetric  array of images
///   wreath     [ [base words...], [images...] ]
json word_of(const Group& g, const Elem& e);
Elem element_from_word(const Group& g, const json& word);

json triple_to_json(const SubsetTriple& t);
/// Accepts {"S": [...], "T": [...], "U": [...]}.
SubsetTriple triple_from_json(const Group& g, const json& j);

json family_to_json(const SimultaneousFamily& f);
/// Accepts {"triples": [...]} or a bare single-triple object.
SimultaneousFamily family_from_json(const Group& g, const json& j);

/// Matrix entries are integers or "p/q" strings; whole values that fit a
/// signed 64-bit integer serialize as JSON integers.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json computation_to_json(const BilinearComputation& c);
/// Re-verifies against the naive product when verify_trials > 0.
BilinearComputation computation_from_json(const json& j,
                                          std::uint32_t verify_trials = 0,
                                          std::uint64_t seed = 1);

json bound_report_to_json(const BoundReport& r);

json perm_family_to_json(const PermutationFamily& f);
PermutationFamily perm_family_from_json(const json& j);

/// FNV-1a over the compact dump; stamped into persisted search results so
/// later runs can detect tampered files.
std::uint64_t content_hash(const json& j);

/// Persisted search results carry {"hash": "..."} over the remaining body.
json seal(json body);
/// Throws ParseError when the seal does not match.
json unseal(const json& sealed);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace gtmm::io
