#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace hamrel {

// Exact arithmetic everywhere: reliability comparisons near p = 0 and p = 1
// are ill-conditioned in floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k) with a grow-on-demand Pascal triangle.
inline const Integer& binom(std::size_t n, std::size_t k) {
  static thread_local std::vector<std::vector<Integer>> rows = {{1}};
  static thread_local const Integer zero = 0;
  if (k > n) return zero;
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<Integer> row(prev.size() + 1, 1);
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace hamrel
