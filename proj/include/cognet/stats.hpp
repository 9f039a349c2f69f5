#pragma once

// Small statistical toolkit shared by the analyses.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cognet {

struct TwoProportionResult {
    double p1 = 0, p2 = 0;
    std::uint64_t n1 = 0, n2 = 0;
    double chi2 = 0;
    double p_value = 1;
};

// Pearson chi-square on the 2x2 table [[k1, n1-k1], [k2, n2-k2]], 1 dof.
// Throws AnalysisError when the pooled proportion is 0 or 1.
TwoProportionResult chi2_two_proportions(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2,
                                         std::uint64_t n2, bool continuity_correction = false);

// Upper tail of the chi-square distribution.
double chi2_survival(double x, double dof);
// Standard normal quantile.
double normal_quantile(double p);

enum class Tail { Greater, Less, Two };

// Add-one empirical p-value: (#samples at least as extreme + 1) / (n + 1).
// Two-sided doubles the smaller tail, capped at 1.
double empirical_p(double observed, std::span<const double> null_samples, Tail side);

// Nearest-rank percentiles, 0 <= low < high <= 100.
std::pair<double, double> centile_bounds(std::span<const double> samples, double low = 1.0, double high = 99.0);
double nearest_rank(std::span<const double> sorted_samples, double percent);

struct Summary {
    double mean = 0;
    double sd = 0;  // sample standard deviation (n - 1); 0 for a single value
    std::size_t n = 0;
};

Summary summarize(std::span<const double> xs);

// (x - mean) / sd, or nullopt when sd is zero.
std::optional<double> z_score(double x, const Summary& s);

}  // namespace cognet
