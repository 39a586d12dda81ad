#pragma once

/// @file report.hpp
/// @brief Outcome of verifying one identity.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "series.hpp"

namespace qcore {

enum class Status { exact_match, mismatch, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::exact_match: return "exact-match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct Mismatch {
  long long index = 0;  // smallest offending index (exponent, or n of a relation)
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string id;
  std::size_t order = 0;
  Status status = Status::exact_match;
  std::optional<Mismatch> mismatch;
  std::string skip_reason;
  std::size_t checks = 0;  // coefficients or relation instances compared
  std::string detail;      // free-form extra facts (census frequencies, k range)
  double elapsed_seconds = 0.0;

  bool ok() const { return status == Status::exact_match; }

  static VerificationReport skipped(std::string id, std::size_t order, std::string reason) {
    VerificationReport r;
    r.id = std::move(id);
    r.order = order;
    r.status = Status::skipped;
    r.skip_reason = std::move(reason);
    return r;
  }
};

/// Compares two series coefficientwise up to the smaller order.
inline VerificationReport compare_series(std::string id, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  VerificationReport r;
  r.id = std::move(id);
  r.order = std::min(lhs.order(), rhs.order());
  r.checks = r.order + 1;
  if (auto i = lhs.first_difference(rhs)) {
    r.status = Status::mismatch;
    r.mismatch = Mismatch{static_cast<long long>(*i), lhs.at(*i).get_str(), rhs.at(*i).get_str()};
  }
  return r;
}

/// Runs `fn` and stamps the wall-clock time it took onto the returned report.
template <typename Fn>
VerificationReport timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = fn();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qcore
