#pragma once

// JSON spec documents and machine-readable reports.

#include <filesystem>
#include <string>
#include <vector>

#include "fcig/extension.hpp"
#include "json.hpp"

namespace fcig {

using Json = nlohmann::ordered_json;

/// Throws SpecParseError on malformed JSON or schema errors. Cross-field
/// constraints are left to the module validators.
FciGroupSpec parse_spec(const Json& doc);
FciGroupSpec load_spec(const std::filesystem::path& path);
Json to_json(const FciGroupSpec& spec);

Json to_json(const Cardinal& c);
Json to_json(const Classification& c);
Json to_json(const TruncationParams& p);
Json to_json(const TruncationEvidence& ev);

/// Spec files bundled with the project, sorted by file name.
std::vector<std::filesystem::path> bundled_spec_files(const std::filesystem::path& dir = FCIG_SPECS_DIR);

}  // namespace fcig
