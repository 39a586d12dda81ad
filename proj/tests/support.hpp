#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <qcore/series.hpp>

namespace testing_support {

inline qcore::TruncatedSeries from_strings(const std::vector<const char*>& vals, std::size_t order) {
  std::vector<qcore::Coefficient> cs;
  for (std::size_t i = 0; i <= order && i < vals.size(); ++i) cs.emplace_back(vals[i]);
  return qcore::TruncatedSeries(std::move(cs));
}

inline qcore::TruncatedSeries series(std::initializer_list<long> cs) {
  return qcore::TruncatedSeries(cs, cs.size() - 1);
}

// Random series with small and occasionally huge coefficients, so both the
// machine-word path and the bignum path get exercised.
inline qcore::TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit = false) {
  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> pick(0, 19);
  std::vector<qcore::Coefficient> cs(order + 1);
  for (auto& c : cs) {
    const int k = pick(rng);
    if (k == 0) {
      c = 0;
    } else if (k == 1) {
      c = qcore::Coefficient(static_cast<long>(rng() >> 2));
      c *= c;
      c *= small(rng);
    } else {
      c = small(rng);
    }
  }
  if (unit) cs[0] = (rng() & 1) ? 1 : -1;
  return qcore::TruncatedSeries(std::move(cs));
}

}  // namespace testing_support
