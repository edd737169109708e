#pragma once

#include "pspos/surgery.hpp"

#include <string>

namespace pspos {

enum class ReportFormat { HumanText, JsonLines, Csv };

/// Parses "text", "jsonl" or "csv". Throws std::invalid_argument.
ReportFormat parse_format(const std::string& name);

/// One JSON object per record, compact, no trailing newline. Exact values
/// stay exact: every integer and rational serializes as a string ("p/q"
/// reduced with q >= 1). Index sets serialize as sorted ascending arrays.
/// Requires the verdict to be filled.
std::string to_jsonl(const SurgeryRecord& record);

/// Inverse of to_jsonl; throws std::invalid_argument on malformed input.
SurgeryRecord record_from_jsonl(const std::string& line);

std::string csv_header();
std::string to_csv_row(const SurgeryRecord& record);

/// Multi-line human-readable block.
std::string to_text(const SurgeryRecord& record);

}  // namespace pspos
