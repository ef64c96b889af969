#pragma once

#include <span>
#include <vector>

namespace tsfex {

double series_mean(std::span<const double> values);
// Population variance / standard deviation.
double series_variance(std::span<const double> values);
double series_stddev(std::span<const double> values);

// Linear interpolation on a uniform grid over the original index range;
// endpoints preserved exactly. Requires input length >= 2 and target_len >= 2.
std::vector<double> resample_series(std::span<const double> values,
                                    std::size_t target_len);

// Original values followed by zeros up to target_len.
std::vector<double> pad_series(std::span<const double> values,
                               std::size_t target_len);

// Mean 0, population sd 1; constant input maps to all zeros.
std::vector<double> znormalize(std::span<const double> values);

// Classic full-window DTW with absolute-difference local cost.
double dtw_distance(std::span<const double> a, std::span<const double> b);

}  // namespace tsfex
