#pragma once

// Input files and report serialization.

#include <string>

#include <json.hpp>

#include "asymvar/variety.hpp"

namespace asymvar {

struct InputSpec {
  PolyMap map;
  AnalysisOptions options;
};

/// Text form: lines "P: <expr>", "Q: <expr>" and "key=value" options
/// (tower_limit, iter_cap, oracle=on|off, keep_going=on|off); '#' starts a
/// comment. A document starting with '{' is read as JSON
/// {"P": ..., "Q": ..., "options": {...}} with the same option keys.
InputSpec parse_input(const std::string& text);

enum class Section : unsigned {
  Input = 1,
  Basis = 2,
  Phantom = 4,
  Verdicts = 8,
  Certificate = 16,
  Picard = 32,
  Oracle = 64,
  All = 127,
};

constexpr Section operator|(Section a, Section b) {
  return static_cast<Section>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Section set, Section s) { return (static_cast<unsigned>(set) & static_cast<unsigned>(s)) != 0; }

/// Canonical text report. The final "timing:" line is the only
/// nondeterministic one and is omitted when seconds < 0.
std::string format_text(const AnalysisReport& rep, Section sections = Section::All, double seconds = -1);

nlohmann::json to_json(const AnalysisReport& rep, Section sections = Section::All, double seconds = -1);

/// Drops "timing:" lines before comparing reports.
std::string canonical_section(const std::string& report);

}  // namespace asymvar
