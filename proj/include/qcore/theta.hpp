#pragma once

/// @file theta.hpp
/// @brief Constructors for q-products, Ramanujan theta functions and the
///        generating functions of c5, a5bar and b5bar.
///
/// Every constructor takes the truncation order N explicitly. Named
/// constructors are memoized process-wide; a cached series of order M >= N
/// answers a request for order N by truncation.

#include <cstddef>
#include <cstdint>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "series.hpp"

namespace qcore {

enum class Sign : int { minus = -1, plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// (sign*q^offset; q^modulus)_inf ^ exponent
struct PochhammerFactor {
  Sign sign = Sign::plus;
  std::size_t offset = 1;
  std::size_t modulus = 1;
  int exponent = 1;
};

/// Finite product of Pochhammer factors, e.g. f_j = {(+, j, j, 1)}.
struct QProductSpec {
  std::vector<PochhammerFactor> factors;
};

/// Ramanujan's f(a, b) with a = s1*q^e1, b = s2*q^e2.
struct ThetaSpec {
  Sign s1 = Sign::plus;
  std::size_t e1 = 1;
  Sign s2 = Sign::plus;
  std::size_t e2 = 1;
};

namespace detail {

// Multiplies (or divides, when `divide`) the dense vector in place by (1 - c*q^d).
// Returns false on int64 overflow; the vector is then in an unspecified state.
inline bool apply_binomial(std::vector<std::int64_t>& v, std::size_t d, std::int64_t c, bool divide) {
  const std::size_t n = v.size() - 1;
  if (d > n) return true;
  if (!divide) {
    for (std::size_t i = n; i >= d; --i) {
      std::int64_t t;
      if (__builtin_mul_overflow(c, v[i - d], &t) || __builtin_sub_overflow(v[i], t, &v[i])) return false;
      if (i == d) break;
    }
  } else {
    for (std::size_t i = d; i <= n; ++i) {
      std::int64_t t;
      if (__builtin_mul_overflow(c, v[i - d], &t) || __builtin_add_overflow(v[i], t, &v[i])) return false;
    }
  }
  return true;
}

inline void apply_binomial(std::vector<Coefficient>& v, std::size_t d, long c, bool divide) {
  const std::size_t n = v.size() - 1;
  if (d > n) return;
  if (!divide) {
    for (std::size_t i = n; i >= d; --i) {
      v[i] -= c * v[i - d];
      if (i == d) break;
    }
  } else {
    for (std::size_t i = d; i <= n; ++i) v[i] += c * v[i - d];
  }
}

template <typename Vec>
bool apply_factor(Vec& v, const PochhammerFactor& f) {
  const std::size_t n = v.size() - 1;
  const bool divide = f.exponent < 0;
  const int reps = divide ? -f.exponent : f.exponent;
  const long c = to_int(f.sign);
  for (int r = 0; r < reps; ++r) {
    for (std::size_t d = f.offset; d <= n; d += f.modulus) {
      if constexpr (std::is_same_v<Vec, std::vector<std::int64_t>>) {
        if (!apply_binomial(v, d, c, divide)) return false;
      } else {
        apply_binomial(v, d, c, divide);
      }
    }
  }
  return true;
}

inline void check_factor(const PochhammerFactor& f) {
  if (f.offset < 1 || f.modulus < 1) throw std::invalid_argument("Pochhammer factor needs offset >= 1 and modulus >= 1");
}

}  // namespace detail

/// Exact expansion of a product of Pochhammer factors to order N.
inline TruncatedSeries expand(const QProductSpec& spec, std::size_t order) {
  for (const auto& f : spec.factors) detail::check_factor(f);
  std::vector<std::int64_t> fast(order + 1, 0);
  fast[0] = 1;
  bool ok = true;
  for (const auto& f : spec.factors) {
    if (!detail::apply_factor(fast, f)) {
      ok = false;
      break;
    }
  }
  std::vector<Coefficient> out(order + 1);
  if (ok) {
    for (std::size_t i = 0; i <= order; ++i) out[i] = static_cast<long>(fast[i]);
    return TruncatedSeries(std::move(out));
  }
  out[0] = 1;
  for (const auto& f : spec.factors) detail::apply_factor(out, f);
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries expand_pochhammer(const PochhammerFactor& factor, std::size_t order) {
  return expand(QProductSpec{{factor}}, order);
}

/// Series-level cache shared by the named constructors. Thread safe; concurrent
/// requests for the same key share one computation.
class SeriesCache {
 public:
  template <typename Fn>
  TruncatedSeries get(const std::string& key, std::size_t order, Fn&& compute) {
    std::shared_future<TruncatedSeries> fut;
    std::promise<TruncatedSeries> promise;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end() && it->second.order >= order) {
        fut = it->second.value;
      } else {
        fut = promise.get_future().share();
        entries_[key] = Entry{order, fut};
        owner = true;
      }
    }
    if (owner) {
      try {
        promise.set_value(compute());
      } catch (...) {
        {
          std::lock_guard lock(mutex_);
          entries_.erase(key);
        }
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get().truncated(order);
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

  static SeriesCache& global() {
    static SeriesCache cache;
    return cache;
  }

 private:
  struct Entry {
    std::size_t order;
    std::shared_future<TruncatedSeries> value;
  };
  std::mutex mutex_;
  std::map<std::string, Entry> entries_;
};

namespace detail {

inline std::string cache_key(const char* name, Sign s, std::size_t j) {
  return std::string(name) + (s == Sign::plus ? "+" : "-") + std::to_string(j);
}

// G(s*q^j) from the order-floor(N/j) expansion of G(q).
inline TruncatedSeries specialize(const TruncatedSeries& base, Sign s, std::size_t j, std::size_t order) {
  return inflate(s == Sign::plus ? base : alternate(base), j, order);
}

}  // namespace detail

/// f_j = (q^j; q^j)_inf, from the pentagonal number theorem.
inline TruncatedSeries euler_f(std::size_t j, std::size_t order) {
  if (j == 0) throw std::invalid_argument("euler_f: j must be positive");
  return SeriesCache::global().get(detail::cache_key("f", Sign::minus, j), order, [&] {
    std::vector<Coefficient> c(order + 1);
    c[0] = 1;
    for (long long n = 1;; ++n) {
      unsigned long long e_pos = static_cast<unsigned long long>(n * (3 * n - 1) / 2) * j;
      unsigned long long e_neg = static_cast<unsigned long long>(n * (3 * n + 1) / 2) * j;
      if (e_pos > order) break;
      const long sgn = (n % 2) ? -1 : 1;
      c[e_pos] += sgn;
      if (e_neg <= order) c[e_neg] += sgn;
    }
    return TruncatedSeries(std::move(c));
  });
}

/// f(a, b) as the bilateral sum over n of a^{n(n+1)/2} b^{n(n-1)/2}.
inline TruncatedSeries theta_general(const ThetaSpec& spec, std::size_t order) {
  if (spec.e1 + spec.e2 < 1) throw std::invalid_argument("theta_general: need e1 + e2 >= 1");
  std::vector<Coefficient> c(order + 1);
  auto tri = [](long long n) { return n * (n + 1) / 2; };
  auto add_term = [&](long long n) {
    const long long ta = tri(n), tb = tri(n - 1);
    const unsigned long long e =
        static_cast<unsigned long long>(ta) * spec.e1 + static_cast<unsigned long long>(tb) * spec.e2;
    if (e > order) return false;
    int s = 1;
    if (spec.s1 == Sign::minus && (ta & 1)) s = -s;
    if (spec.s2 == Sign::minus && (tb & 1)) s = -s;
    c[e] += s;
    return true;
  };
  add_term(0);
  for (long long n = 1; add_term(n); ++n) {
  }
  for (long long n = -1; add_term(n); --n) {
  }
  return TruncatedSeries(std::move(c));
}

/// phi(s*q^j) = sum over n of (s q^j)^{n^2}.
inline TruncatedSeries phi(Sign s, std::size_t j, std::size_t order) {
  return SeriesCache::global().get(detail::cache_key("phi", s, j), order, [&] {
    std::vector<Coefficient> c(order + 1);
    c[0] = 1;
    for (unsigned long long n = 1; n * n * j <= order; ++n) c[n * n * j] = (s == Sign::minus && (n & 1)) ? -2 : 2;
    return TruncatedSeries(std::move(c));
  });
}

/// psi(s*q^j) = sum over n >= 0 of (s q^j)^{n(n+1)/2}.
inline TruncatedSeries psi(Sign s, std::size_t j, std::size_t order) {
  return SeriesCache::global().get(detail::cache_key("psi", s, j), order, [&] {
    std::vector<Coefficient> c(order + 1);
    for (unsigned long long n = 0; n * (n + 1) / 2 * j <= order; ++n) {
      const unsigned long long t = n * (n + 1) / 2;
      c[t * j] = (s == Sign::minus && (t & 1)) ? -1 : 1;
    }
    return TruncatedSeries(std::move(c));
  });
}

/// One-argument Ramanujan f(s*q^j); f(-q^j) = f_j.
inline TruncatedSeries f_theta(Sign s, std::size_t j, std::size_t order) {
  if (s == Sign::minus) return euler_f(j, order);
  return detail::specialize(alternate(euler_f(1, order / j)), Sign::plus, j, order);
}

/// chi(s*q^j) = (-s*q^j; q^{2j})_inf; chi(-q) = (q; q^2)_inf.
inline TruncatedSeries chi(Sign s, std::size_t j, std::size_t order) {
  return SeriesCache::global().get(detail::cache_key("chi", s, j), order, [&] {
    const Sign inner = s == Sign::minus ? Sign::plus : Sign::minus;
    return expand_pochhammer({inner, j, 2 * j, 1}, order);
  });
}

/// R(q^j) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)), with q -> q^j.
inline TruncatedSeries rr_quotient(std::size_t j, std::size_t order) {
  return SeriesCache::global().get(detail::cache_key("R", Sign::plus, j), order, [&] {
    return expand(QProductSpec{{{Sign::plus, j, 5 * j, 1},
                                {Sign::plus, 4 * j, 5 * j, 1},
                                {Sign::plus, 2 * j, 5 * j, -1},
                                {Sign::plus, 3 * j, 5 * j, -1}}},
                  order);
  });
}

/// Product-side constructions used as the independent route for the theta
/// functions: f_j from its Pochhammer product, phi(-q) = f1^2/f2,
/// psi(-q) = f1 f4 / f2.
namespace product_form {

inline TruncatedSeries euler_f(std::size_t j, std::size_t order) {
  return expand_pochhammer({Sign::plus, j, j, 1}, order);
}

inline TruncatedSeries phi(Sign s, std::size_t j, std::size_t order) {
  const std::size_t n = order / j;
  auto base = expand(QProductSpec{{{Sign::plus, 1, 1, 2}, {Sign::plus, 2, 2, -1}}}, n);  // phi(-q)
  return detail::specialize(base, s == Sign::minus ? Sign::plus : Sign::minus, j, order);
}

inline TruncatedSeries psi(Sign s, std::size_t j, std::size_t order) {
  const std::size_t n = order / j;
  auto base = expand(QProductSpec{{{Sign::plus, 1, 1, 1}, {Sign::plus, 4, 4, 1}, {Sign::plus, 2, 2, -1}}}, n);
  return detail::specialize(base, s == Sign::minus ? Sign::plus : Sign::minus, j, order);
}

/// Jacobi triple product (-a; ab)(-b; ab)(ab; ab) for e1, e2 >= 1. A negative
/// base ab = -q^m is split into two factors with base q^{2m}.
inline QProductSpec triple_product(const ThetaSpec& t) {
  if (t.e1 < 1 || t.e2 < 1) throw std::invalid_argument("triple_product: need e1, e2 >= 1");
  const std::size_t m = t.e1 + t.e2;
  const bool neg_base = (t.s1 == Sign::minus) != (t.s2 == Sign::minus);
  auto flip = [](Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; };
  QProductSpec spec;
  // (x q^e; base)_inf with x = sign, base = (neg_base ? -1 : 1) q^m
  auto push = [&](Sign x, std::size_t e) {
    if (!neg_base) {
      spec.factors.push_back({x, e, m, 1});
    } else {
      spec.factors.push_back({x, e, 2 * m, 1});
      spec.factors.push_back({flip(x), e + m, 2 * m, 1});
    }
  };
  push(flip(t.s1), t.e1);
  push(flip(t.s2), t.e2);
  push(neg_base ? Sign::minus : Sign::plus, m);
  return spec;
}

}  // namespace product_form

/// sum c5(n) q^n = f5^5 / f1
inline TruncatedSeries gen_c5(std::size_t order) {
  return SeriesCache::global().get("c5", order, [&] {
    return div(inflate(pow(euler_f(1, order / 5), 5u), 5, order), euler_f(1, order));
  });
}

/// sum a5bar(n) q^n = phi^5(-q^5) / phi(-q)
inline TruncatedSeries gen_a5bar(std::size_t order) {
  return SeriesCache::global().get("a5bar", order, [&] {
    return div(inflate(pow(phi(Sign::minus, 1, order / 5), 5u), 5, order), phi(Sign::minus, 1, order));
  });
}

/// sum b5bar(n) q^n = psi^5(-q^5) / psi(-q)
inline TruncatedSeries gen_b5bar(std::size_t order) {
  return SeriesCache::global().get("b5bar", order, [&] {
    return div(inflate(pow(psi(Sign::minus, 1, order / 5), 5u), 5, order), psi(Sign::minus, 1, order));
  });
}

}  // namespace qcore
