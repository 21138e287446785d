#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "berncone/coherence.hpp"
#include "berncone/moments.hpp"

namespace berncone {

// JSON schemas (all rationals as decimal integer strings in "num"/"den"
// pairs; term and weight arrays in lexicographic index order):
//
//   Polynomial  {"n_vars": n, "terms": [{"exp": [...], "num": "...", "den": "..."}]}
//   Gamble set  {"gambles": [Polynomial, ...]}
//   Certificate {"degree": d, "weights": [{"index": [...], "num": "...", "den": "..."}]}
//   Domain      {"n_vars": n, "constraints": [{"terms": [...], "sup": "..."}]}
//   State       {"n_vars": n, "degree": d, "moments": [{"exp": [...], "num": "...", "den": "..."}]}

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json gambles_to_json(const AssessmentSet& assessments);
AssessmentSet gambles_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& certificate);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json domain_to_json(const SemiAlgebraicDomain& domain);
SemiAlgebraicDomain domain_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const MomentState& state);
MomentState state_from_json(const nlohmann::json& j);

nlohmann::json prevision_to_json(const PrevisionResult& result);
nlohmann::json verdict_to_json(const CoherenceVerdict& verdict);

/// Parses a whole document, converting json exceptions into ParseError.
nlohmann::json parse_json_file(const std::string& path);

/// Serialises with 2-space indent and a trailing newline (byte-stable).
void write_json_file(const std::string& path, const nlohmann::json& j);
std::string json_text(const nlohmann::json& j);

}  // namespace berncone
