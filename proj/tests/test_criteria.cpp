#include <gtest/gtest.h>

#include <cmath>

#include "betscan/criteria.hpp"
#include "betscan/regression.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace betscan {
namespace {

Window whole(const Isotherm& iso) {
    const IndexRange r{0, iso.size() - 1};
    return Window{r, iso.slice(r)};
}

Window window_of(const Isotherm& iso, std::size_t i, std::size_t j) {
    const IndexRange r{i, j};
    return Window{r, iso.slice(r)};
}

Config loose(std::size_t min_points = 2) {
    Config cfg;
    cfg.min_points = min_points;
    return cfg;
}

RejectionReason rejected(const CheckOutcome& o) {
    EXPECT_FALSE(accepted(o));
    return accepted(o) ? RejectionReason::ToleranceExceeded : std::get<RejectionReason>(o);
}

TEST(IsNondecreasing, Examples) {
    const std::vector<double> ties{1, 1, 2};
    const std::vector<double> down{2, 1};
    const std::vector<double> one{5};
    EXPECT_TRUE(is_nondecreasing(ties));
    EXPECT_FALSE(is_nondecreasing(down));
    EXPECT_TRUE(is_nondecreasing({}));
    EXPECT_TRUE(is_nondecreasing(one));
}

TEST(IsNondecreasing, AgreesWithDefinition) {
    testing::Rng rng(61);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> seq;
        for (std::size_t k = 0, n = rng.index(0, 12); k < n; ++k) seq.push_back(static_cast<double>(rng.index(0, 4)));
        bool expected = true;
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) expected = expected && seq[k] <= seq[k + 1];
        ASSERT_EQ(is_nondecreasing(seq), expected);
    }
}

TEST(PcError, Examples) {
    EXPECT_EQ(pc_error(0.2, 0.2), 0.0);
    EXPECT_NEAR(pc_error(0.2, 0.25), 25.0, 1e-12);
    EXPECT_NEAR(pc_error(0.2, 0.16), 20.0, 1e-12);
    EXPECT_THROW(pc_error(0.0, 0.1), std::domain_error);
    EXPECT_THROW(pc_error(-0.1, 0.1), std::domain_error);
}

TEST(AdmissibleParams, SignCases) {
    const auto ok = admissible_params(0.99, 0.01);
    ASSERT_TRUE(std::holds_alternative<BetParams>(ok));
    EXPECT_EQ(std::get<BetParams>(ok).nm, 1.0);
    EXPECT_EQ(std::get<BetParams>(ok).c, 100.0);

    // m = 2, b = -1: c = 1 + m/b = -1.
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(2.0, -1.0)), RejectionReason::NonPositiveC);
    // m = -0.5, b = -1: c = 1.5 but nm = 1/(b+m) < 0.
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(-0.5, -1.0)), RejectionReason::NonPositiveNm);
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(1.0, 0.0)), RejectionReason::NonPositiveC);
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(1.0, -1.0)), RejectionReason::NonPositiveNm);
    // c exactly zero: m = -b.
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(-1.0, 1.0)), RejectionReason::NonPositiveNm);
    EXPECT_EQ(std::get<RejectionReason>(admissible_params(-2.0, 1.0)), RejectionReason::NonPositiveC);
}

TEST(MonolayerWithinWindow, InclusiveBoundsOnReadPressure) {
    EXPECT_TRUE(monolayer_within_window(0.5, 0.1, 0.1, 0.3));
    EXPECT_TRUE(monolayer_within_window(0.5, 0.3, 0.1, 0.3));
    EXPECT_FALSE(monolayer_within_window(0.2, 0.09, 0.1, 0.3));
    EXPECT_FALSE(monolayer_within_window(0.2, 0.31, 0.1, 0.3));
}

TEST(CheckWindow, AcceptsNoiseFreeSyntheticIsotherm) {
    const auto iso = testing::synthetic_bet_isotherm(1.0, 100.0, 0.01, 0.30, 20);
    const auto f = pchip_build(iso);
    const auto out = check_window(iso, whole(iso), f, Config{});
    ASSERT_TRUE(accepted(out));
    const auto& cand = std::get<Candidate>(out);
    EXPECT_NEAR(cand.fit.nm, 1.0, 1e-6);
    EXPECT_NEAR(cand.fit.c, 100.0, 1e-4);
    EXPECT_EQ(cand.fit.n_points, 20u);
    EXPECT_EQ(cand.window, iso.points());
    EXPECT_NEAR(cand.p_nm, 1.0 / 11.0, 1e-9);
    EXPECT_NEAR(cand.p_read, 1.0 / 11.0, 1e-3);
    EXPECT_TRUE(testing::reverify_candidate(iso, cand, Config{}).empty());
}

TEST(CheckWindow, TooFewPoints) {
    const auto iso = testing::synthetic_bet_isotherm(1.0, 100.0, 0.05, 0.30, 5);
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), Config{})), RejectionReason::TooFewPoints);
}

TEST(CheckWindow, NonLinearizablePoint) {
    // A point at p = 1 cannot come from a validated isotherm; the window is
    // built by hand to reach the guard.
    const auto iso = validate_isotherm({{0.1, 1.0}, {0.2, 2.0}});
    const Window w{{0, 1}, {{0.1, 1.0}, {1.0, 2.0}}};
    EXPECT_EQ(rejected(check_window(iso, w, pchip_build(iso), loose())), RejectionReason::NonLinearizablePoint);
}

TEST(CheckWindow, NotMonotoneN1mP) {
    // n(1-p): 0.9, 0.88
    const auto iso = validate_isotherm({{0.1, 1.0}, {0.2, 1.1}});
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), loose())), RejectionReason::NotMonotoneN1mP);
}

TEST(CheckWindow, NotMonotoneLinearized) {
    // n(1-p): 0.9, 2.0 rises; y: 0.111, 0.1 falls.
    const auto iso = validate_isotherm({{0.1, 1.0}, {0.2, 2.5}});
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), loose())),
              RejectionReason::NotMonotoneLinearized);
}

TEST(CheckWindow, ZeroVariance) {
    const auto iso = validate_isotherm({{0.1, 1.0}, {0.2, 2.0}});
    const Window w{{0, 1}, {{0.2, 2.0}, {0.2, 2.0}}};
    EXPECT_EQ(rejected(check_window(iso, w, pchip_build(iso), loose())), RejectionReason::ZeroVariance);
}

TEST(CheckWindow, LowRSquared) {
    const std::vector<double> p{0.1, 0.2, 0.3, 0.4, 0.5};
    const std::vector<double> y{0.1, 0.19, 0.2, 0.21, 0.22};
    std::vector<Point> pts;
    for (std::size_t k = 0; k < p.size(); ++k) pts.push_back({p[k], p[k] / (y[k] * (1.0 - p[k]))});
    const auto iso = validate_isotherm(pts);
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), loose())), RejectionReason::LowRSquared);
}

TEST(CheckWindow, NonPositiveCFromRoundOffIntercept) {
    // n = K/(1-p) puts the linearized points on a ray through the origin, so
    // the fitted intercept is zero up to rounding. For K = 1 on this grid it
    // comes out non-positive.
    std::vector<Point> pts;
    for (int k = 1; k <= 5; ++k) pts.push_back({k / 10.0, 1.0 / (1.0 - k / 10.0)});
    const auto iso = validate_isotherm(pts);
    const auto line = linear_regression(linearize_window(iso.points()));
    ASSERT_TRUE(line);
    ASSERT_LE(line->intercept, 0.0);
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), loose())), RejectionReason::NonPositiveC);
}

TEST(CheckWindow, MonolayerReadFailed) {
    // Sampled uptake stays below n_m = 1.
    const auto iso = testing::synthetic_bet_isotherm(1.0, 100.0, 0.001, 0.02, 10);
    ASSERT_LT(iso.points().back().n, 1.0);
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), Config{})),
              RejectionReason::MonolayerReadFailed);
}

TEST(CheckWindow, MonolayerOutsideWindow) {
    const auto iso = testing::synthetic_bet_isotherm(1.0, 100.0, 0.01, 0.30, 20);
    EXPECT_EQ(rejected(check_window(iso, window_of(iso, 10, 19), pchip_build(iso), Config{})),
              RejectionReason::MonolayerOutsideWindow);
}

TEST(CheckWindow, ToleranceExceeded) {
    const auto iso = testing::synthetic_bet_isotherm(1.0, 100.0, 0.01, 0.30, 20);
    Config cfg;
    cfg.monolayer_tolerance_pct = 1e-9;
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), cfg)), RejectionReason::ToleranceExceeded);
}

TEST(CheckWindow, FirstFailingCheckWins) {
    // Fails both the length gate and the n(1-p) gate; the length gate is first.
    const auto iso = validate_isotherm({{0.1, 1.0}, {0.2, 1.1}});
    EXPECT_EQ(rejected(check_window(iso, whole(iso), pchip_build(iso), Config{})), RejectionReason::TooFewPoints);
}

TEST(CheckWindow, Deterministic) {
    testing::Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto iso = testing::synthetic_bet_isotherm(rng.log_uniform(0.1, 10.0), rng.log_uniform(5.0, 500.0),
                                                         0.01, 0.35, rng.index(10, 25), 0.005, &rng);
        const auto f = pchip_build(iso);
        const auto g = pchip_build(iso);
        for (const auto& w : enumerate_windows(iso)) {
            ASSERT_EQ(check_window(iso, w, f, Config{}), check_window(iso, w, g, Config{}));
        }
    }
}

TEST(CheckWindow, AcceptedWindowsPassIndependentReverification) {
    testing::Rng rng(63);
    std::size_t accepted_count = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto iso = testing::synthetic_bet_isotherm(rng.log_uniform(0.1, 10.0), rng.log_uniform(5.0, 500.0),
                                                         0.01, 0.35, rng.index(10, 25), 0.005, &rng);
        const auto f = pchip_build(iso);
        const auto cfg = loose(5);
        for (const auto& w : enumerate_windows(iso)) {
            const auto out = check_window(iso, w, f, cfg);
            if (!accepted(out)) continue;
            ++accepted_count;
            const auto fails = testing::reverify_candidate(iso, std::get<Candidate>(out), cfg);
            ASSERT_TRUE(fails.empty()) << fails.front();
        }
    }
    EXPECT_GT(accepted_count, 0u);
}

}  // namespace
}  // namespace betscan
