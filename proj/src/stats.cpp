#include "cognet/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "cognet/error.hpp"

namespace cognet {

TwoProportionResult chi2_two_proportions(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2,
                                         std::uint64_t n2, bool continuity_correction) {
    if (n1 == 0 || n2 == 0) throw InputError("chi2_two_proportions: sample sizes must be >= 1");
    if (k1 > n1 || k2 > n2) throw InputError("chi2_two_proportions: count exceeds sample size");
    const std::uint64_t k = k1 + k2;
    const std::uint64_t n = n1 + n2;
    if (k == 0 || k == n) throw AnalysisError("chi2_two_proportions: pooled proportion is 0 or 1, test undefined");

    const double a = static_cast<double>(k1), b = static_cast<double>(n1 - k1);
    const double c = static_cast<double>(k2), d = static_cast<double>(n2 - k2);
    const double total = static_cast<double>(n);
    double diff = std::abs(a * d - b * c);
    if (continuity_correction) diff = std::max(0.0, diff - total / 2.0);

    TwoProportionResult r;
    r.n1 = n1;
    r.n2 = n2;
    r.p1 = a / static_cast<double>(n1);
    r.p2 = c / static_cast<double>(n2);
    r.chi2 = total * diff * diff / ((a + b) * (c + d) * (a + c) * (b + d));
    r.p_value = chi2_survival(r.chi2, 1.0);
    return r;
}

double chi2_survival(double x, double dof) {
    if (x <= 0) return 1.0;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x));
}

double normal_quantile(double p) { return boost::math::quantile(boost::math::normal(), p); }

double empirical_p(double observed, std::span<const double> null_samples, Tail side) {
    if (null_samples.empty()) throw InputError("empirical_p: no null samples");
    std::size_t ge = 0, le = 0;
    for (double x : null_samples) {
        if (x >= observed) ++ge;
        if (x <= observed) ++le;
    }
    const double denom = static_cast<double>(null_samples.size()) + 1.0;
    const double p_greater = (static_cast<double>(ge) + 1.0) / denom;
    const double p_less = (static_cast<double>(le) + 1.0) / denom;
    switch (side) {
        case Tail::Greater: return p_greater;
        case Tail::Less: return p_less;
        case Tail::Two: return std::min(1.0, 2.0 * std::min(p_greater, p_less));
    }
    return 1.0;
}

double nearest_rank(std::span<const double> sorted, double percent) {
    if (sorted.empty()) throw InputError("nearest_rank: no samples");
    const double n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

std::pair<double, double> centile_bounds(std::span<const double> samples, double low, double high) {
    if (samples.empty()) throw InputError("centile_bounds: no samples");
    if (!(low >= 0 && low < high && high <= 100)) throw InputError("centile_bounds: need 0 <= low < high <= 100");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    return {nearest_rank(sorted, low), nearest_rank(sorted, high)};
}

Summary summarize(std::span<const double> xs) {
    Summary s;
    s.n = xs.size();
    if (xs.empty()) return s;
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::optional<double> z_score(double x, const Summary& s) {
    // Rounding in the mean can leave a tiny nonzero sd for constant samples.
    if (!(s.sd > 1e-12 * std::max(1.0, std::abs(s.mean)))) return std::nullopt;
    return (x - s.mean) / s.sd;
}

}  // namespace cognet
