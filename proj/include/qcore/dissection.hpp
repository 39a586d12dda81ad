#pragma once

/// @file dissection.hpp
/// @brief m-dissections of truncated series, and the four classical
///        5-dissections (f1, 1/f1, phi, psi) checked coefficient by coefficient.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "report.hpp"
#include "series.hpp"
#include "theta.hpp"

namespace qcore {

/// components[r] holds the coefficients of q^{m n + r}, re-indexed to q^n.
struct Dissection {
  std::size_t modulus = 1;
  std::size_t source_order = 0;
  std::vector<TruncatedSeries> components;
};

inline Dissection dissect(const TruncatedSeries& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("dissect: modulus must be positive");
  Dissection d{m, a.order(), {}};
  d.components.reserve(m);
  for (std::size_t r = 0; r < m; ++r) d.components.push_back(extract_ap(a, m, r));
  return d;
}

/// Sum over r of q^r * component_r(q^m), at the source order.
inline TruncatedSeries reassemble(const Dissection& d) {
  const std::size_t n = d.source_order;
  std::vector<Coefficient> out(n + 1);
  for (std::size_t r = 0; r < d.modulus; ++r) {
    const TruncatedSeries& c = d.components[r];
    for (std::size_t i = 0; i <= c.order() && d.modulus * i + r <= n; ++i) out[d.modulus * i + r] += c.at(i);
  }
  return TruncatedSeries(std::move(out));
}

namespace detail {

inline TruncatedSeries perturbed(TruncatedSeries rhs, const std::optional<TruncatedSeries>& delta) {
  if (delta) rhs = add(rhs, *delta);
  return rhs;
}

}  // namespace detail

/// f1 = f25 (1/R(q^5) - q - q^2 R(q^5))
inline VerificationReport verify_f1_5dissection(std::size_t order,
                                                const std::optional<TruncatedSeries>& rhs_delta = std::nullopt) {
  return timed([&] {
    const TruncatedSeries r5 = rr_quotient(5, order);
    TruncatedSeries rhs = invert(r5);
    rhs = sub(rhs, TruncatedSeries::monomial(1, 1, order));
    rhs = sub(rhs, shift(r5, 2));
    rhs = mul(euler_f(25, order), rhs);
    return compare_series("dissection.f1", euler_f(1, order), detail::perturbed(std::move(rhs), rhs_delta));
  });
}

/// Weights of q^k R(q^5)^{k-4}, k = 0..8, in the 5-dissection of 1/f1.
inline constexpr std::array<long, 9> kInverseEulerWeights{1, 1, 2, 3, 5, -3, 2, -1, 1};

/// 1/f1 = f25^5/f5^6 * sum_k w_k q^k R(q^5)^{k-4}
inline TruncatedSeries inverse_euler_5dissection_rhs(std::size_t order) {
  const TruncatedSeries r5 = rr_quotient(5, order);
  const TruncatedSeries r5_inv = invert(r5);
  // Powers R^{-4..4}, built incrementally from R and 1/R.
  std::array<TruncatedSeries, 9> powers{TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order)};
  powers[4] = TruncatedSeries::one(order);
  for (int k = 1; k <= 4; ++k) {
    powers[4 + k] = mul(powers[3 + k], r5);
    powers[4 - k] = mul(powers[5 - k], r5_inv);
  }
  TruncatedSeries bracket(order);
  for (std::size_t k = 0; k < 9; ++k) bracket = add(bracket, scale(shift(powers[k], k), kInverseEulerWeights[k]));
  const TruncatedSeries prefactor = div(pow(euler_f(25, order), 5u), pow(euler_f(5, order), 6u));
  return mul(prefactor, bracket);
}

inline VerificationReport verify_inv_f1_5dissection(std::size_t order,
                                                    const std::optional<TruncatedSeries>& rhs_delta = std::nullopt) {
  return timed([&] {
    return compare_series("dissection.inv_f1", invert(euler_f(1, order)),
                          detail::perturbed(inverse_euler_5dissection_rhs(order), rhs_delta));
  });
}

/// phi(q) = phi(q^25) + 2q f(q^15, q^35) + 2q^4 f(q^5, q^45); with `alternated`,
/// both sides under q -> -q.
inline VerificationReport verify_phi_5dissection(std::size_t order, bool alternated = false,
                                                 const std::optional<TruncatedSeries>& rhs_delta = std::nullopt) {
  return timed([&] {
    TruncatedSeries lhs = phi(Sign::plus, 1, order);
    TruncatedSeries rhs = phi(Sign::plus, 25, order);
    rhs = add(rhs, scale(shift(theta_general({Sign::plus, 15, Sign::plus, 35}, order), 1), 2));
    rhs = add(rhs, scale(shift(theta_general({Sign::plus, 5, Sign::plus, 45}, order), 4), 2));
    if (alternated) {
      lhs = alternate(lhs);
      rhs = alternate(rhs);
    }
    return compare_series(alternated ? "dissection.phi.alt" : "dissection.phi", lhs,
                          detail::perturbed(std::move(rhs), rhs_delta));
  });
}

/// psi(q) = f(q^10, q^15) + q f(q^5, q^20) + q^3 psi(q^25)
inline VerificationReport verify_psi_5dissection(std::size_t order, bool alternated = false,
                                                 const std::optional<TruncatedSeries>& rhs_delta = std::nullopt) {
  return timed([&] {
    TruncatedSeries lhs = psi(Sign::plus, 1, order);
    TruncatedSeries rhs = theta_general({Sign::plus, 10, Sign::plus, 15}, order);
    rhs = add(rhs, shift(theta_general({Sign::plus, 5, Sign::plus, 20}, order), 1));
    rhs = add(rhs, shift(psi(Sign::plus, 25, order), 3));
    if (alternated) {
      lhs = alternate(lhs);
      rhs = alternate(rhs);
    }
    return compare_series(alternated ? "dissection.psi.alt" : "dissection.psi", lhs,
                          detail::perturbed(std::move(rhs), rhs_delta));
  });
}

}  // namespace qcore
