#pragma once

/// @file format.hpp
/// @brief Report serialization: one text line, or one JSON object per line.
///
/// Elapsed times are only written when asked for, so that repeated runs
/// produce identical bytes.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"
#include "report.hpp"

namespace qcore {

struct FormatOptions {
  bool timing = false;
};

inline std::string format_text(const VerificationReport& r, const FormatOptions& fo = {}) {
  std::string out;
  switch (r.status) {
    case Status::exact_match: out = "PASS "; break;
    case Status::mismatch: out = "FAIL "; break;
    case Status::skipped: out = "SKIP "; break;
  }
  out += r.id + " N=" + std::to_string(r.order) + " " + to_string(r.status);
  if (r.status == Status::exact_match) out += " checks=" + std::to_string(r.checks);
  if (r.mismatch) {
    out += " at index " + std::to_string(r.mismatch->index) + ": lhs=" + r.mismatch->lhs + " rhs=" + r.mismatch->rhs;
  }
  if (r.status == Status::skipped) out += " (" + r.skip_reason + ")";
  if (!r.detail.empty()) out += " [" + r.detail + "]";
  if (fo.timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3fs", r.elapsed_seconds);
    out += buf;
  }
  return out;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r, const FormatOptions& fo = {}) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["N"] = r.order;
  j["checks"] = r.checks;
  if (r.mismatch) j["mismatch"] = {{"index", r.mismatch->index}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
  if (r.status == Status::skipped) j["reason"] = r.skip_reason;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (fo.timing) j["elapsed"] = r.elapsed_seconds;
  return j;
}

inline std::string format_json(const VerificationReport& r, const FormatOptions& fo = {}) { return to_json(r, fo).dump(); }

inline std::string format_summary_text(const Summary& s) {
  return "summary: " + std::to_string(s.exact) + " exact-match, " + std::to_string(s.mismatched) + " mismatch, " +
         std::to_string(s.skipped) + " skipped";
}

}  // namespace qcore
