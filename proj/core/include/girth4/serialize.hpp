#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "girth4/decomposition.hpp"
#include "girth4/search.hpp"
#include "girth4/theta.hpp"
#include "girth4/verification.hpp"

namespace girth4 {

// Malformed JSON or a document that does not match the decomposition schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema (field order fixed so outputs are byte-stable):
//   {"n": int, "girth_claim": int, "optimal": bool,
//    "parts": [[[u,v],...], ...]}
// with 0-based vertex ids, u < v within an edge, parts in construction order.
// One compact line terminated by '\n'.
std::string decomposition_to_json(const Decomposition& d);

// Inverse of decomposition_to_json. Unknown fields are ignored (fixtures
// carry a "generator" field); semantic defects such as out-of-range or
// duplicate edges are left for verify. Orders above 1000000 are rejected.
Decomposition decomposition_from_json(const std::string& text);

Decomposition load_decomposition(const std::filesystem::path& path);
void save_decomposition(const Decomposition& d, const std::filesystem::path& path);

// Report as one JSON line; girth values serialize as ints with infinite girth
// as the string "inf".
std::string report_to_json(const VerificationReport& r);

std::string theta_to_json(const ThetaValue& t);

std::string to_string(SearchStatus status);

// Outcome as one JSON line. Deliberately excludes wall-clock time so that
// repeated runs with the same config are byte-identical.
std::string outcome_to_json(const SearchOutcome& outcome);

// One log line for persisted experiment records: config, status, stats,
// wall_ms and the given timestamp.
std::string search_log_line(const SearchOutcome& outcome, const std::string& timestamp);

// Current UTC time as e.g. 2025-03-14T09:26:53Z.
std::string utc_timestamp();

// Graphviz rendering: one undirected graph block per part, annotated with
// size, girth and planarity. Paper labels name the vertices v_j / v'_j / x / y
// as in the construction; integer labels use the raw ids.
enum class LabelMode { Integer, Paper };
std::string to_dot(const Decomposition& d, LabelMode mode = LabelMode::Integer);

} // namespace girth4
