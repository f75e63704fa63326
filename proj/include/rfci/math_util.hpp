#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace rfci {

// Quantile of the standard normal distribution (Wichura's PPND16).
// Absolute error below 1e-15 for u in (0,1).
double normal_quantile(double u);

// Sum of a range by recursive halving. Result depends only on element order,
// not on chunking or thread count.
double pairwise_sum(std::span<const double> values);

double pairwise_mean(std::span<const double> values);

// Sample variance with divisor (n-1).
double sample_variance(std::span<const double> values);

// Sample median; midpoint of the two middle order statistics for even n.
double median(std::span<const double> values);

// Shortest decimal string that round-trips the value through strtod.
std::string format_double(double value);

// Half-away-from-zero rounding of rate * count, as a count.
std::size_t round_count(double rate, std::size_t count);

}  // namespace rfci
