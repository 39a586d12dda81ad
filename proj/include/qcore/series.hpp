#pragma once

/// @file series.hpp
/// @brief Exact truncated formal power series in q over arbitrary-precision integers.
///
/// A TruncatedSeries of order N stores the exact coefficients of q^0..q^N.
/// Binary operations on series of different orders truncate to the smaller
/// order. Reads below index 0 (or above the order) return 0.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qcore {

using Coefficient = mpz_class;

/// Thrown by invert/div when the divisor's constant term is not +1 or -1.
class NonUnitConstantTerm : public std::domain_error {
 public:
  NonUnitConstantTerm() : std::domain_error("series constant term is not a unit (+1 or -1)") {}
};

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

  /// Takes ownership of coefficients; the order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  /// Builds from small integers and pads with zeros up to `order`.
  TruncatedSeries(std::initializer_list<long> cs, std::size_t order) : coeffs_(order + 1) {
    std::size_t i = 0;
    for (long c : cs) {
      if (i > order) break;
      coeffs_[i++] = c;
    }
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  /// The monomial c*q^k, truncated.
  static TruncatedSeries monomial(std::size_t k, const Coefficient& c, std::size_t order) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  /// Coefficient of q^n; 0 for n < 0 or n > order.
  Coefficient operator[](long long n) const {
    if (n < 0 || static_cast<unsigned long long>(n) > order()) return 0;
    return coeffs_[static_cast<std::size_t>(n)];
  }

  const Coefficient& at(std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }

  /// Copy cut down to a smaller order (never grows).
  TruncatedSeries truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncatedSeries(std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return sgn(c) != 0; }));
  }

  bool is_zero() const { return nonzero_count() == 0; }

  /// Smallest index where the two series differ, compared up to the smaller order.
  std::optional<std::size_t> first_difference(const TruncatedSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    for (std::size_t i = 0; i <= n; ++i)
      if (coeffs_[i] != other.coeffs_[i]) return i;
    return std::nullopt;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    for (std::size_t i = 0; i <= s.order(); ++i) {
      if (i) os << ' ';
      os << s.coeffs_[i];
    }
    return os;
  }

 private:
  std::vector<Coefficient> coeffs_;
};

namespace detail {

// int64 view of a series, or nullopt if some coefficient does not fit.
inline std::optional<std::vector<std::int64_t>> to_machine(const TruncatedSeries& a, std::size_t n) {
  std::vector<std::int64_t> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Coefficient& c = a.at(i);
    if (!c.fits_slong_p()) return std::nullopt;
    out[i] = c.get_si();
  }
  return out;
}

inline Coefficient from_i128(__int128 v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
    return Coefficient(static_cast<long>(v));
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Coefficient hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Coefficient lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Coefficient r = (hi << 64) + lo;
  return neg ? Coefficient(-r) : r;
}

// Positions of nonzero coefficients of a up to n.
inline std::vector<std::size_t> support(const TruncatedSeries& a, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= n; ++i)
    if (sgn(a.at(i)) != 0) idx.push_back(i);
  return idx;
}

// Cauchy product with int64 inputs and checked int128 accumulation.
// Returns nullopt on any overflow so the caller can redo the work exactly.
inline std::optional<TruncatedSeries> mul_machine(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                                  const std::vector<std::size_t>& a_support, std::size_t n) {
  std::vector<__int128> acc(n + 1, 0);
  for (std::size_t i : a_support) {
    __int128 ai = a[i];
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      __int128 prod = ai * static_cast<__int128>(b[j]);  // |prod| < 2^126
      if (__builtin_add_overflow(acc[i + j], prod, &acc[i + j])) return std::nullopt;
    }
  }
  std::vector<Coefficient> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = from_i128(acc[k]);
  return TruncatedSeries(std::move(out));
}

inline const Coefficient& unit_inverse(const Coefficient& c0) {
  static const Coefficient plus_one(1), minus_one(-1);
  if (c0 == 1) return plus_one;
  if (c0 == -1) return minus_one;
  throw NonUnitConstantTerm();
}

}  // namespace detail

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Coefficient> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a.at(i) + b.at(i);
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Coefficient> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a.at(i) - b.at(i);
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Coefficient> out(a.coeffs());
  for (auto& c : out) c = -c;
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries scale(const TruncatedSeries& a, const Coefficient& k) {
  std::vector<Coefficient> out(a.coeffs());
  for (auto& c : out) c *= k;
  return TruncatedSeries(std::move(out));
}

/// Cauchy product to min(a.order, b.order). Sparse operands only visit their
/// support; an int64/int128 fast path is used when every input coefficient
/// fits a machine word and falls back to GMP on overflow.
inline TruncatedSeries mul(const TruncatedSeries& a_in, const TruncatedSeries& b_in) {
  std::size_t n = std::min(a_in.order(), b_in.order());
  const TruncatedSeries* a = &a_in;
  const TruncatedSeries* b = &b_in;
  auto sa = detail::support(*a, n);
  auto sb = detail::support(*b, n);
  if (sb.size() < sa.size()) {
    std::swap(a, b);
    std::swap(sa, sb);
  }
  if (sa.empty()) return TruncatedSeries(n);

  auto ma = detail::to_machine(*a, n);
  auto mb = detail::to_machine(*b, n);
  if (ma && mb) {
    if (auto r = detail::mul_machine(*ma, *mb, sa, n)) return *std::move(r);
  }

  std::vector<Coefficient> out(n + 1);
  for (std::size_t i : sa) {
    const Coefficient& ai = a->at(i);
    for (std::size_t j : sb) {
      if (i + j > n) break;
      mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), b->at(j).get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(out));
}

/// Exact division a / b by the triangular recurrence; b must have a unit constant term.
inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Coefficient& b0_inv = detail::unit_inverse(b.at(0));
  std::size_t n = std::min(a.order(), b.order());
  std::vector<std::size_t> sb;
  for (std::size_t i = 1; i <= n; ++i)
    if (sgn(b.at(i)) != 0) sb.push_back(i);

  auto mb = detail::to_machine(b, n);
  auto ma = detail::to_machine(a, n);
  if (ma && mb) {
    // Machine path: every produced coefficient is kept as int64; bail out as soon
    // as one does not fit.
    std::vector<std::int64_t> c(n + 1);
    bool ok = true;
    std::int64_t inv = b0_inv.get_si();
    for (std::size_t k = 0; k <= n && ok; ++k) {
      __int128 acc = (*ma)[k];
      for (std::size_t i : sb) {
        if (i > k) break;
        __int128 prod = static_cast<__int128>((*mb)[i]) * c[k - i];
        if (__builtin_sub_overflow(acc, prod, &acc)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      acc *= inv;
      if (acc < std::numeric_limits<std::int64_t>::min() || acc > std::numeric_limits<std::int64_t>::max()) {
        ok = false;
        break;
      }
      c[k] = static_cast<std::int64_t>(acc);
    }
    if (ok) {
      std::vector<Coefficient> out(n + 1);
      for (std::size_t k = 0; k <= n; ++k) out[k] = static_cast<long>(c[k]);
      return TruncatedSeries(std::move(out));
    }
  }

  std::vector<Coefficient> c(n + 1);
  Coefficient acc;
  for (std::size_t k = 0; k <= n; ++k) {
    acc = a.at(k);
    for (std::size_t i : sb) {
      if (i > k) break;
      mpz_submul(acc.get_mpz_t(), b.at(i).get_mpz_t(), c[k - i].get_mpz_t());
    }
    c[k] = acc * b0_inv;
  }
  return TruncatedSeries(std::move(c));
}

/// Multiplicative inverse of a series with constant term +1 or -1.
inline TruncatedSeries invert(const TruncatedSeries& a) { return div(TruncatedSeries::one(a.order()), a); }

/// a^k by binary exponentiation; pow(a, 0) is 1.
inline TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  bool first = true;
  while (k) {
    if (k & 1u) {
      result = first ? base : mul(result, base);
      first = false;
    }
    k >>= 1u;
    if (k) base = mul(base, base);
  }
  return result;
}

/// Signed power; negative exponents go through invert.
inline TruncatedSeries pow(const TruncatedSeries& a, int k) {
  if (k >= 0) return pow(a, static_cast<unsigned>(k));
  return invert(pow(a, static_cast<unsigned>(-k)));
}

/// Substitution q -> q^m. The result has order a.order()*m. With a working
/// order `cap`, the result has order min(cap, (a.order()+1)*m - 1): the slots
/// strictly between a.order()*m and the next multiple of m are known zeros.
inline TruncatedSeries inflate(const TruncatedSeries& a, std::size_t m,
                               std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  if (m == 0) throw std::invalid_argument("inflate: factor must be positive");
  std::size_t n = a.order() * m;
  if (cap != std::numeric_limits<std::size_t>::max()) n = std::min(cap, (a.order() + 1) * m - 1);
  std::vector<Coefficient> out(n + 1);
  for (std::size_t i = 0; i * m <= n; ++i) out[i * m] = a.at(i);
  return TruncatedSeries(std::move(out));
}

/// Coefficients a(m*n + r), re-indexed to q^n. Empty progressions yield a
/// zero series of order 0.
inline TruncatedSeries extract_ap(const TruncatedSeries& a, std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw std::invalid_argument("extract_ap: need 0 <= r < m");
  if (r > a.order()) return TruncatedSeries(0);
  std::size_t n = (a.order() - r) / m;
  std::vector<Coefficient> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a.at(m * i + r);
  return TruncatedSeries(std::move(out));
}

/// Multiplication by q^k at fixed order.
inline TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  std::vector<Coefficient> out(a.order() + 1);
  for (std::size_t i = k; i <= a.order(); ++i) out[i] = a.at(i - k);
  return TruncatedSeries(std::move(out));
}

/// Substitution q -> -q.
inline TruncatedSeries alternate(const TruncatedSeries& a) {
  std::vector<Coefficient> out(a.coeffs());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Coefficient& k, const TruncatedSeries& a) { return scale(a, k); }
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }

}  // namespace qcore
