#pragma once

/// @file partitions.hpp
/// @brief Partition enumeration, conjugation and hook numbers: a
///        generating-function-free oracle for the number of t-cores of n.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcore {

/// Thrown when an exhaustive enumeration is requested above the configured ceiling.
class OracleScaleExceeded : public std::runtime_error {
 public:
  OracleScaleExceeded(std::size_t n, std::size_t ceiling)
      : std::runtime_error("oracle: n = " + std::to_string(n) + " exceeds enumeration ceiling " +
                           std::to_string(ceiling)),
        n_(n),
        ceiling_(ceiling) {}
  std::size_t n() const { return n_; }
  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t n_;
  std::size_t ceiling_;
};

inline constexpr std::size_t kDefaultOracleCeiling = 60;

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto p : parts_) w += p;
    return w;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.parts_.size(); ++i) os << (i ? "," : "") << p.parts_[i];
    return os << ')';
  }

 private:
  std::vector<std::size_t> parts_;
};

/// Column lengths of the Ferrers-Young diagram.
inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<std::size_t> cols(p.parts().front(), 0);
  for (auto row : p.parts())
    for (std::size_t j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

/// Hook numbers of every node, row-major.
struct HookTable {
  std::vector<std::vector<std::size_t>> rows;

  std::vector<std::size_t> flattened() const {
    std::vector<std::size_t> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
  }
};

inline HookTable hook_numbers(const Partition& p) {
  const Partition c = conjugate(p);
  HookTable table;
  table.rows.resize(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) {
    const std::size_t li = p.parts()[i];
    table.rows[i].reserve(li);
    // 0-based: H = lambda_i + lambda'_j - i - j - 1
    for (std::size_t j = 0; j < li; ++j) table.rows[i].push_back(li + c.parts()[j] - i - j - 1);
  }
  return table;
}

inline bool is_t_core(const Partition& p, std::size_t t) {
  if (t == 0) throw std::invalid_argument("is_t_core: t must be positive");
  for (const auto& row : hook_numbers(p).rows)
    for (auto h : row)
      if (h % t == 0) return false;
  return true;
}

/// Calls `visit` on each partition of n, in lexicographically decreasing order
/// of parts: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
inline void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  if (n == 0) {
    visit(Partition{});
    return;
  }
  std::vector<std::size_t> a{n};
  for (;;) {
    visit(Partition(a));
    // Find the rightmost part > 1.
    std::size_t ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    std::size_t rest = ones + 1;
    const std::size_t k = --a.back();
    while (rest > k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest) a.push_back(rest);
  }
}

inline std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Number of t-cores of n by exhaustive enumeration.
inline std::uint64_t count_t_cores(std::size_t n, std::size_t t, std::size_t ceiling = kDefaultOracleCeiling) {
  if (n > ceiling) throw OracleScaleExceeded(n, ceiling);
  std::uint64_t count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (is_t_core(p, t)) ++count;
  });
  return count;
}

/// The t-cores of n themselves.
inline std::vector<Partition> t_cores_of(std::size_t n, std::size_t t, std::size_t ceiling = kDefaultOracleCeiling) {
  if (n > ceiling) throw OracleScaleExceeded(n, ceiling);
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    if (is_t_core(p, t)) out.push_back(p);
  });
  return out;
}

}  // namespace qcore
