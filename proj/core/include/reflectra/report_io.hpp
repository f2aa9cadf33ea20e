#pragma once

// Stable text serializations of scan reports and verification results.
// Both formats are deterministic byte for byte given the same report
// content; elapsed_ms is the one field that varies between runs.

#include <string>
#include <string_view>
#include <vector>

#include "reflectra/catalog.hpp"
#include "reflectra/scanner.hpp"

namespace reflectra {

// "zero" for the zero limit, "cycle-<canonical>" otherwise.
std::string class_label(ReflectiveInt class_key);

// CSV with header `limit_class,iterations,count`, one row per populated
// (class, iteration count) cell, sorted by (label, iterations), LF line
// endings, no trailing blank line.
std::string emit_scan_csv(const ScanReport& report);

// One JSON object: range {lo, hi}, totals, class_counts, histogram,
// max_iterations, elapsed_ms, worker_count; keys sorted.
std::string emit_scan_json(const ScanReport& report);

// Inverse of emit_scan_json. digit_width is restored when [lo, hi] is
// exactly a full-width range.
ScanReport parse_scan_json(std::string_view text);

// JSON array of {check_name, claimed, computed, holds}; failing checks are
// included, never suppressed.
std::string emit_verification_report(const std::vector<CheckResult>& results);

}  // namespace reflectra
