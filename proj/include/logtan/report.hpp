#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logtan/bigint.hpp"
#include "logtan/camacho_sad.hpp"
#include "logtan/curve_graph.hpp"
#include "logtan/moebius.hpp"
#include "logtan/phi.hpp"
#include "logtan/rational.hpp"

namespace logtan::report {

inline constexpr const char* kSchemaVersion = "1";

/// Self-describing analysis document:
///   {"schema": "1", "subcommand": ..., "inputs": {...}, "results": {...}}
/// Keys keep insertion order so rendering is byte-stable.
using Report = nlohmann::ordered_json;

enum class Format { Text, Structured };

/// "text", or "json" / "structured".
Format parse_format(const std::string& name);

// Encoding. Integers that fit in 64 bits are JSON numbers, larger ones are
// decimal strings; the decoders accept both.
Report to_json(const BigInt& n);
Report to_json(const StepSequence& e);
Report to_json(const MoebiusMap& f);
Report to_json(const ObstructionVerdict& v);
Report to_json(const RemarkRow& row);

BigInt bigint_from_json(const Report& j);
StepSequence steps_from_json(const Report& j);
MoebiusMap moebius_from_json(const Report& j);
ObstructionVerdict verdict_from_json(const Report& j);
RemarkRow remark_row_from_json(const Report& j);

/// Graph document: {"vertices": [{"id", "genus", "e"}], "edges": [{"a", "b", "mult"}]}.
/// Throws InputError with the offending field path.
CurveConfiguration configuration_from_json(const nlohmann::json& doc);
Report to_json(const CurveConfiguration& config);

Report run_phi(const std::vector<BigInt>& steps, const std::optional<std::string>& x);
Report run_lemma_scan(long r, long bound, const ScanLimits& limits = {});
Report run_remark(long r_max);
Report run_graph(const nlohmann::json& doc);
/// Single mode. Without x0 only the obstruction verdict is reported.
Report run_cycle(const std::vector<BigInt>& steps, const std::optional<std::string>& x0);
/// Scan mode.
Report run_cycle_scan(const ObstructionScanBounds& bounds, const ScanLimits& limits = {});

/// Pretty JSON, two-space indent, trailing newline.
std::string render_structured(const Report& report);
/// Line-oriented "path: value" listing.
std::string render_text(const Report& report);
std::string render(const Report& report, Format format);

/// Parses a structured rendering back into a Report.
Report parse_report(const std::string& text);

}  // namespace logtan::report
