#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cstdint>
#include <span>

namespace lgd::test {

/// Pearson statistic against equal expected counts.
inline double chi_square_uniform(std::span<const std::uint64_t> counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

/// Upper-tail p-value of a chi-square statistic.
inline double chi_square_p_value(double stat, std::size_t dof) {
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace lgd::test
