#pragma once

// Canonical JSON encodings.
//   signed set: [[x,y],...] sorted by x
//   family:     {"n":..,"r":..,"k":..,"t":..,"members":[...]} in canonical member order

#include <filesystem>
#include <string>

#include "json.hpp"
#include "signedfam/core.hpp"

namespace signedfam {

nlohmann::json to_json(const SignedSet& s);
nlohmann::json to_json(const Params& params);
nlohmann::json to_json(const Family& fam);

/// Throws ValidityError on malformed input.
SignedSet signed_set_from_json(const nlohmann::json& j);
Family family_from_json(const nlohmann::json& j);

/// Compact, whitespace-free serialization; identical families give identical bytes.
std::string canonical_json(const Family& fam);

Family read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const Family& fam);

} // namespace signedfam
