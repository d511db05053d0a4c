#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/invariants.hpp"

namespace knotsig {

// All emitters return canonical text: fixed key order, 2-space indent,
// rationals as "p/q" strings. Identical inputs give identical bytes, which
// is what the reproducibility tests pin.

std::string info_json(const Diagram& d);

// Region index map plus the three matrices; `pair` overrides the deleted
// adjacent regions (default: flanks of edge 1).
std::string matrices_json(const Diagram& d,
                          std::optional<std::array<int, 2>> pair = {});

std::string signature_at_json(const Diagram& d, const Rat& x0);

std::string signature_scan_json(const std::string& name,
                                const std::vector<ScanRow>& rows, bool has_oracle);
std::string signature_scan_csv(const std::vector<ScanRow>& rows, bool has_oracle);

std::string report_json(const ConjectureReport& r);

struct FuzzSummary {
  std::uint64_t seed = 0;
  int rewrites = 0;
  int factorization_failures = 0;
  int crossing_sign_failures = 0;  // eta * t = sgn violations
  int writhe_split_failures = 0;   // mu_w + mu_b = w violations
  int invariance_failures = 0;
};

std::string verify_json(const std::vector<ConjectureReport>& reports,
                        const std::optional<FuzzSummary>& fuzz, bool all_ok);

}  // namespace knotsig
