#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spde::stats {

// Pairwise (cascade) summation; fixed association order, so the result does
// not depend on how the values were produced.
double pairwise_sum(std::span<const double> v);

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;
    std::size_t n = 0;
    double ess = 0.0;  // effective sample size used for the SE
};

// Mean and standard error for independent samples.
MeanSE mean_se(std::span<const double> v);

// Mean and standard error for a serially correlated chain. The effective
// sample size comes from the integrated autocorrelation time, estimated with
// the initial-positive-sequence truncation.
MeanSE mean_se_chain(std::span<const double> v);

// Normalized-weight mean with an effective-sample-size-based SE
// (ess = 1 / sum w_i^2 for weights summing to 1).
MeanSE mean_se_weighted(std::span<const double> v, std::span<const double> w);

double quantile(std::vector<double> v, double p);

}  // namespace spde::stats
