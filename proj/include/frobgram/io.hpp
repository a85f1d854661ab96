#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "frobgram/bounds.hpp"
#include "frobgram/curves.hpp"

namespace frobgram {

using Json = nlohmann::ordered_json;

/// What a manifest describes: a single curve or a biquadratic diagram.
using ManifestSubject = std::variant<CurveModel, DiagramData>;

/// Manifest layout:
///   {"kind": "line" | "hyperelliptic" | "plane" | "biquadratic", "p": 3, "k": 1,
///    "f": [...], "g": [...]                      coefficients ascending by degree
///    "degree": d, "F": [c, ex, ey, ez, ...]       plane curves, flattened monomials
///    "certificate": {"absolutely_irreducible": b, "smooth": b}   optional, biquadratic
///    "label": "..."}                              optional
/// Integer coefficients are reduced mod p. Malformed input raises Errc::ParseError;
/// invalid curves raise the constructor errors.
ManifestSubject parse_manifest(const Json& doc);
ManifestSubject parse_manifest_text(const std::string& text);
ManifestSubject read_manifest(const std::filesystem::path& path);

Json manifest_json(const ManifestSubject& subject);
bool same_model(const ManifestSubject& a, const ManifestSubject& b);

Json check_json(const CheckRecord& check);
Json report_json(const BoundReport& report);

/// subject,name,lhs,rhs,holds,margin,scale
std::string csv_header();
std::string csv_rows(const BoundReport& report);
/// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& value);

}  // namespace frobgram
