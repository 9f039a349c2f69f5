#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cognet/error.hpp"
#include "cognet/stats.hpp"

using namespace cognet;

TEST_CASE("two proportions against the closed form") {
    const auto r = chi2_two_proportions(40, 100, 20, 100);
    // N (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d)) with a=40 b=60 c=20 d=80.
    const double chi2 = 200.0 * 2000.0 * 2000.0 / (100.0 * 100.0 * 60.0 * 140.0);
    CHECK(r.chi2 == doctest::Approx(chi2).epsilon(1e-12));
    CHECK(r.p_value == doctest::Approx(std::erfc(std::sqrt(chi2 / 2.0))).epsilon(1e-10));
    CHECK(r.p1 == 0.4);
    CHECK(r.p2 == 0.2);
    CHECK(r.n1 == 100);

    const auto s = chi2_two_proportions(20, 100, 40, 100);
    CHECK(s.chi2 == doctest::Approx(r.chi2).epsilon(1e-14));
    CHECK(s.p_value == doctest::Approx(r.p_value).epsilon(1e-14));

    const auto same = chi2_two_proportions(3, 10, 30, 100);
    CHECK(same.chi2 == doctest::Approx(0.0));
    CHECK(same.p_value == doctest::Approx(1.0));

    // Yates: (|ad - bc| - N/2)^2 in the numerator.
    const auto y = chi2_two_proportions(40, 100, 20, 100, true);
    CHECK(y.chi2 == doctest::Approx(200.0 * 1900.0 * 1900.0 / (100.0 * 100.0 * 60.0 * 140.0)).epsilon(1e-12));

    CHECK_THROWS_AS(chi2_two_proportions(0, 10, 0, 20), AnalysisError);
    CHECK_THROWS_AS(chi2_two_proportions(10, 10, 20, 20), AnalysisError);
    CHECK_THROWS(chi2_two_proportions(11, 10, 1, 20));
    CHECK_THROWS(chi2_two_proportions(1, 0, 1, 20));
}

TEST_CASE("chi-square survival and normal quantile") {
    CHECK(chi2_survival(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(chi2_survival(0, 1) == 1.0);
    CHECK(normal_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-12));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
}

TEST_CASE("empirical p extremes") {
    std::vector<double> xs(999);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    CHECK(empirical_p(-1, xs, Tail::Less) == doctest::Approx(1.0 / 1000.0));
    CHECK(empirical_p(2000, xs, Tail::Greater) == doctest::Approx(1.0 / 1000.0));
    CHECK(empirical_p(499, xs, Tail::Two) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(empirical_p(499, xs, Tail::Two) <= 1.0);
}

TEST_CASE("empirical p equals direct counting") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> nd;
    std::vector<double> xs(200);
    for (auto& x : xs) x = std::round(nd(rng) * 4.0) / 4.0;  // ties on purpose
    for (double obs : {-3.0, -1.25, 0.0, 0.5, 2.75}) {
        const double ge = static_cast<double>(std::count_if(xs.begin(), xs.end(), [&](double x) { return x >= obs; }));
        const double le = static_cast<double>(std::count_if(xs.begin(), xs.end(), [&](double x) { return x <= obs; }));
        CHECK(empirical_p(obs, xs, Tail::Greater) == doctest::Approx((ge + 1) / 201.0));
        CHECK(empirical_p(obs, xs, Tail::Less) == doctest::Approx((le + 1) / 201.0));
        CHECK(empirical_p(obs, xs, Tail::Two) ==
              doctest::Approx(std::min(1.0, 2.0 * std::min(ge + 1, le + 1) / 201.0)));
    }
}

TEST_CASE("empirical p is monotone in the observation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 10);
    std::vector<double> xs(300);
    for (auto& x : xs) x = u(rng);
    double prev_g = 2, prev_l = -1;
    for (double obs = -1; obs <= 11; obs += 0.05) {
        const double g = empirical_p(obs, xs, Tail::Greater);
        const double l = empirical_p(obs, xs, Tail::Less);
        CHECK(g <= prev_g);
        CHECK(l >= prev_l);
        CHECK(g > 0);
        CHECK(g <= 1);
        prev_g = g;
        prev_l = l;
    }
}

TEST_CASE("centile bounds") {
    const std::vector<double> c(50, 4.5);
    CHECK(centile_bounds(c) == std::pair{4.5, 4.5});

    std::vector<double> xs(100);
    for (std::size_t i = 0; i < 100; ++i) xs[i] = static_cast<double>(100 - i);
    CHECK(centile_bounds(xs) == std::pair{1.0, 99.0});
    CHECK(centile_bounds(xs, 0, 100) == std::pair{1.0, 100.0});
    CHECK(centile_bounds(xs, 25, 75) == std::pair{25.0, 75.0});

    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    std::vector<double> z(1000);
    for (auto& x : z) x = nd(rng);
    const auto [lo, hi] = centile_bounds(z);
    // Sampling sd of the 1% quantile for n = 1000 is about 0.1.
    CHECK(std::abs(lo + 2.326) < 0.35);
    CHECK(std::abs(hi - 2.326) < 0.35);
    CHECK(lo <= hi);
    CHECK_THROWS(centile_bounds(z, 50, 50));
    CHECK_THROWS(centile_bounds(std::vector<double>{}));
}

TEST_CASE("summaries") {
    const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
    const auto s = summarize(xs);
    CHECK(s.mean == 5.0);
    CHECK(s.sd == doctest::Approx(std::sqrt(32.0 / 7.0)));
    CHECK(s.n == 8);
    CHECK(*z_score(7, s) == doctest::Approx(2.0 / std::sqrt(32.0 / 7.0)));
    CHECK_FALSE(z_score(1, summarize(std::vector<double>{3, 3, 3})).has_value());
    CHECK(summarize(std::vector<double>{1}).sd == 0.0);
}
