#pragma once

#include <span>

namespace dg {

double mean(std::span<const double> xs);

// Standard error of the mean (sample standard deviation / sqrt(n)).
double stderr_of_mean(std::span<const double> xs);

// Paired one-sided Wilcoxon signed-rank test of H1: a < b.
// Exact null distribution for n <= 30 pairs (normal approximation above),
// zero differences dropped, ties given average ranks. Returns the p-value;
// 1.0 if every difference is zero.
double wilcoxon_signed_rank_less(std::span<const double> a, std::span<const double> b);

} // namespace dg
