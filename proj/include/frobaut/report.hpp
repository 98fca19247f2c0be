#pragma once

#include "frobaut/autstruct.hpp"
#include "frobaut/repdecomp.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace frobaut {

using json = nlohmann::json;

/// Parses the input schema:
/// { "n": <int>, "components": [ { "p": <prime>,
///   "constituents": [ { "r": <int>, "e": <int> }, ... ] }, ... ] }
KernelActionSpec spec_from_json(const json& j);
json spec_to_json(const KernelActionSpec& spec);

/// JSON rendering of an AutReport. All orders are decimal strings.
json report_to_json(const AutReport& report);

/// Full report document with provenance (tool version, spec hash and, when
/// requested, a timestamp).
json report_document(const AutReport& report, bool with_timestamp = true);

/// Plain-text rendering with the same numeric content as the JSON form.
std::string report_to_text(const AutReport& report);

/// Stable content hash of the canonical spec JSON (FNV-1a, hex).
std::string spec_hash(const KernelActionSpec& spec);

extern const char* const kToolVersion;

}  // namespace frobaut
