#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eigencomp/bijection.hpp"
#include "eigencomp/four_patterns.hpp"
#include "eigencomp/perm_core.hpp"

namespace eigencomp {

using Json = nlohmann::json;

/// Positive integers separated by spaces or commas; surrounding brackets are ignored.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(std::span<const Entry> p);

/// Entries with a trailing '^' are marked: "25 26^ 13".
MarkedPermutation parse_marked(std::string_view text);
std::string format_marked(const MarkedPermutation& m);

/// '*' tokens; a run directly after the maximum is stored as stars_after_max.
StarredPermutation parse_starred(std::string_view text);
std::string format_starred(const StarredPermutation& s);

/// Items separated by '/'; k slashes give k+1 items, any of which may be empty.
PermList parse_list(std::string_view text);
std::string format_list(const PermList& list);

/// "rho ; item / item / ...".
EigenPair parse_eigen_pair(std::string_view text);
std::string format_eigen_pair(const EigenPair& pair);

Json to_json(std::span<const Entry> p);
Json to_json(const MarkedPermutation& m);
Json to_json(const PermList& list);
Json to_json(const EigenPair& pair);
/// [{"n": 1, "value": "..."}, ...]; values are decimal strings. first_index labels values[0].
Json sequence_to_json(std::span<const BigInt> values, std::size_t first_index = 1);
Json to_json(const std::vector<PatternClass>& classes);

Permutation permutation_from_json(const Json& j);
MarkedPermutation marked_from_json(const Json& j);
PermList list_from_json(const Json& j);
EigenPair eigen_pair_from_json(const Json& j);
std::vector<BigInt> sequence_from_json(const Json& j);

/// Throws InvalidInput on syntax errors.
Json parse_json(std::string_view text);

/// True when text starts, after whitespace, with '{' or '['.
bool looks_like_json(std::string_view text);

/// One "i value" line per term, 1-indexed unless first_index says otherwise.
std::string format_bfile(std::span<const BigInt> values, std::size_t first_index = 1);

} // namespace eigencomp
