#pragma once

#include "cgsig/gilmer.hpp"
#include "cgsig/knot.hpp"
#include "cgsig/smith.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cgsig {

using json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 53 bits and as
// decimal strings beyond that; either form is accepted on input. Rationals
// are "p/q" strings in lowest terms (plain "p" when the denominator is 1).
json integer_to_json(const mpz_class& v);
mpz_class integer_from_json(const json& j);
json rational_to_json(const mpq_class& v);
mpq_class rational_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

// SatelliteKnot <-> {"base_seifert", "surgery": {"a", "b"}, "infections":
// [{"class", "sign", "companion_seifert", "multiplicity"}]}. A KnotSum is an
// array of these; a bare object is accepted as a one-summand sum.
json satellite_to_json(const SatelliteKnot& k);
SatelliteKnot satellite_from_json(const json& j);
json knot_sum_to_json(const KnotSum& k);
KnotSum knot_sum_from_json(const json& j);

// {"invariant_factors": [...], "generator_classes": [[...], ...]}
json presentation_to_json(const GroupPresentation& p);

// [{"character": [...], "center": "p/q", "slack": "p/q"}, ...]
json signature_table_to_json(const std::vector<TableEntry>& table);

// {"genus", "p", "rank", "knot", "records": [{"subspace_basis", "witness",
// "center", "slack", "threshold"}]}; self-contained (embeds the knot).
json certificate_to_json(const GenusCertificate& cert);

// Revalidate a certificate against nothing but its own contents: rebuild the
// instance from the embedded knot, recompute every record's estimate, check
// every bound strictly exceeds the threshold, and check the records cover all
// subspaces of every admissible dimension in sweep order. Returns true and
// leaves *why empty on success; false with a reason otherwise. Throws
// MalformedCertificateError on structural problems.
bool check_certificate(const json& cert, std::string* why = nullptr);

// Parse helpers for CLI input (path, inline text, or stdin).
json parse_json_text(const std::string& text);

} // namespace cgsig
