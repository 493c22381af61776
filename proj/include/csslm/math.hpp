#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace csslm {

// Sum of a multiset of doubles in value-sorted order, so the result is
// invariant to the enumeration order of the inputs.
inline double sorted_sum(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

// log(sum_k exp(v_k)) with max-subtraction; same order-invariance as
// sorted_sum. Callers guarantee v is non-empty.
inline double log_sum_exp(std::vector<double> v) {
  double m = v[0];
  for (double x : v) m = std::max(m, x);
  std::vector<double> e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = std::exp(v[i] - m);
  std::sort(e.begin(), e.end());
  double acc = 0.0;
  for (double x : e) acc += x;
  return m + std::log(acc);
}

// Plain sequential dot product; component order is fixed, so no sorting.
inline double dot(std::span<const double> u, std::span<const double> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

inline double l2_norm(std::span<const double> u) { return std::sqrt(dot(u, u)); }

}  // namespace csslm
