#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace gaussq;
using test::ref_float;

namespace {

const double sqrt_pi = std::sqrt(std::numbers::pi);

// Orthonormal-in-sign Hermite value by the three-term recurrence.
long double hermite_poly(int n, long double x) {
    long double h0 = 1, h1 = 2 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const long double h2 = 2 * x * h1 - 2 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

}  // namespace

TEST(HermiteState, InitialValues) {
    const auto even = hermite_initial_state<double>(4);
    EXPECT_EQ(even.value(), 1.0);
    EXPECT_EQ(even.derivative(), 0.0);
    const auto odd = hermite_initial_state<double>(7);
    EXPECT_EQ(odd.value(), 0.0);
    EXPECT_EQ(odd.derivative(), 1.0);
    EXPECT_THROW(hermite_initial_state<double>(0), gaussq::invalid_argument);
}

TEST(HermiteState, SecondDerivativeAtOrigin) {
    const auto d = hermite_derivatives<double>(4, 0.0, 1.0, 0.0, 3);
    EXPECT_EQ(d[2], -9.0);
}

TEST(HermiteTaylor, DegreeTwoClosedForm) {
    auto s = hermite_initial_state<double>(2);
    const double h = 0.1;
    const auto e = hermite_taylor_eval(s, h);
    const double y = std::exp(-h * h / 2) * (1 - 2 * h * h);
    const double yp = std::exp(-h * h / 2) * (-h * (1 - 2 * h * h) - 4 * h);
    EXPECT_NEAR(e.y, y, 1e-15);
    EXPECT_NEAR(e.yp, yp, 1e-15);
    EXPECT_EQ(s.point(), h);
}

TEST(HermiteTaylor, ZeroStepIsIdentity) {
    auto s = hermite_initial_state<double>(5);
    const auto e = hermite_taylor_eval(s, 0.0);
    EXPECT_EQ(e.y, 0.0);
    EXPECT_EQ(e.yp, 1.0);
    EXPECT_EQ(e.terms, 1);
}

// The series step agrees with the recurrence for raw derivatives summed as
// an ordinary Taylor polynomial.
TEST(HermiteTaylor, MatchesDerivativeTable) {
    test::Gen g(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = g.integer(2, 60);
        const double x = g.real(0.0, 2.0), h = g.real(-0.05, 0.05);
        const double y = g.real(-1, 1), yp = g.real(-1, 1);
        const auto d = hermite_derivatives<double>(n, x, y, yp, 40);
        double sum = 0, dsum = 0, f = 1;
        for (int k = 0; k < 39; ++k) {
            sum += d[k] * f;
            dsum += d[k + 1] * f;
            f *= h / (k + 1);
        }
        HermiteTaylor<double> s(n, x, y, yp, TaylorLimits<double>::for_digits(16));
        s.advance(x + h, h);
        EXPECT_NEAR(s.value(), sum, 1e-13);
        EXPECT_NEAR(s.derivative(), dsum, 1e-12);
    }
}

TEST(HermiteTaylor, TypicalStepCost) {
    const int n = 1000;
    auto s = hermite_initial_state<double>(n);
    const double step = std::numbers::pi / (2 * std::sqrt(2.0 * n + 1));
    const long terms = s.advance(step);
    EXPECT_GE(terms, 15);
    EXPECT_LE(terms, 45);
}

TEST(HermiteTaylor, TermLimitWithoutSplitting) {
    TaylorLimits<double> lim = TaylorLimits<double>::for_digits(16);
    lim.max_terms = 21;
    lim.max_splits = 0;
    HermiteTaylor<double> s(200, 0.0, 1.0, 0.0, lim);
    EXPECT_THROW(s.advance(1.5), term_limit_exceeded);
    lim.max_splits = 6;
    HermiteTaylor<double> t(200, 0.0, 1.0, 0.0, lim);
    EXPECT_NO_THROW(t.advance(1.5));
}

TEST(HermiteRule, DegreeOne) {
    const auto r = hermite_rule<double>(1);
    ASSERT_EQ(r.nodes.size(), 1u);
    EXPECT_EQ(r.nodes[0], 0.0);
    EXPECT_NEAR(r.weights[0], sqrt_pi, 1e-15);
}

TEST(HermiteRule, DegreeTwo) {
    const auto r = hermite_rule<double>(2);
    EXPECT_NEAR(r.nodes[1], 1 / std::sqrt(2.0), 2e-16);
    EXPECT_EQ(r.nodes[0], -r.nodes[1]);
    EXPECT_NEAR(r.weights[0], sqrt_pi / 2, 1e-15);
    EXPECT_NEAR(r.weights[1], sqrt_pi / 2, 1e-15);
}

TEST(HermiteRule, DegreeThree) {
    const auto r = hermite_rule<double>(3);
    EXPECT_NEAR(r.nodes[2], std::sqrt(1.5), 3e-16);
    EXPECT_EQ(r.nodes[1], 0.0);
    EXPECT_NEAR(r.weights[1], 2 * sqrt_pi / 3, 3e-15);
    EXPECT_NEAR(r.weights[0], sqrt_pi / 6, 1e-15);
    EXPECT_NEAR(r.weights[2], sqrt_pi / 6, 1e-15);
}

TEST(HermiteRule, DegreeFiveFrozen) {
    const auto r = hermite_rule<double>(5);
    const ref_float x[] = {ref_float("0.9585724646138185071127706"),
                           ref_float("2.020182870456085632928724")};
    const ref_float w[] = {ref_float("0.9453087204829418812256893"),
                           ref_float("0.3936193231522411598284956"),
                           ref_float("0.01995324205904591320774346")};
    EXPECT_LT(test::rel_err_hp(r.nodes[3], x[0]), 4e-16);
    EXPECT_LT(test::rel_err_hp(r.nodes[4], x[1]), 4e-16);
    EXPECT_LT(test::rel_err_hp(r.weights[2], w[0]), 1e-14);
    EXPECT_LT(test::rel_err_hp(r.weights[3], w[1]), 1e-14);
    EXPECT_LT(test::rel_err_hp(r.weights[4], w[2]), 1e-14);
}

TEST(HermiteRule, DegreeTenLargestNode) {
    const auto r = hermite_rule<double>(10);
    EXPECT_LT(test::rel_err_hp(r.nodes.back(), ref_float("3.436159118837737603326725")), 4e-16);
}

TEST(HermiteRule, NodesAreZerosOfThePolynomial) {
    for (int n : {7, 12, 25}) {
        const auto r = hermite_rule<double>(n);
        for (double x : r.nodes) {
            const long double h = 1e-6L;
            // sign change across each node
            EXPECT_LT(hermite_poly(n, x - h) * hermite_poly(n, x + h), 0.0L) << n << " " << x;
        }
    }
}

TEST(HermiteRule, SymmetryIsExact) {
    const auto r = hermite_rule<double>(37);
    for (int i = 0; i < 37; ++i) {
        EXPECT_EQ(r.nodes[i], -r.nodes[36 - i]);
        EXPECT_EQ(r.weights[i], r.weights[36 - i]);
    }
}

TEST(HermiteRule, AgainstGolubWelsch) {
    for (int n : {2, 3, 4, 9, 16, 33, 64, 100}) {
        const auto r = hermite_rule<double>(n);
        const auto ref = test::hermite_reference(n);
        for (int i = 0; i < n; ++i) {
            if (abs(ref.nodes[i]) < ref_float(1e-30)) {
                EXPECT_LT(std::abs(r.nodes[i]), 1e-300);
            } else {
                EXPECT_LT(test::rel_err_hp(r.nodes[i], ref.nodes[i]), 1e-15) << n << " " << i;
            }
            EXPECT_LT(test::rel_err_hp(r.weights[i], ref.weights[i]), 5e-14) << n << " " << i;
        }
    }
}

TEST(HermiteRule, ScaledWeightsRelation) {
    const auto r = hermite_rule<double>(50);
    for (int i = 0; i < 50; ++i)
        EXPECT_NEAR(r.weights[i], r.scaled_weights[i] * std::exp(-r.nodes[i] * r.nodes[i]),
                    1e-15 * r.weights[i] + 1e-300);
}

TEST(HermiteRule, NormalizationsAgree) {
    HermiteOptions<double> a, b;
    b.normalization = HermiteNormalization::zeroth_moment;
    for (int n : {2, 11, 200}) {
        const auto ra = hermite_rule<double>(n, a), rb = hermite_rule<double>(n, b);
        for (int i = 0; i < n; ++i)
            if (ra.weights[i] > 1e-200) EXPECT_LT(test::rel_err(ra.weights[i], rb.weights[i]), 1e-13);
    }
}

TEST(HermiteRule, AsymptoticWeightsNearOrigin) {
    const int n = 100;
    const auto r = hermite_rule<double>(n);
    for (int k = 0; k < 5; ++k) {
        const double x = r.nodes[n / 2 + k];
        const double approx = std::numbers::pi / std::sqrt(2.0 * n) * std::exp(-x * x);
        EXPECT_LT(test::rel_err(r.weights[n / 2 + k], approx), 0.02);
    }
}

TEST(HermiteRule, UnderflowedWeightsKeepScaledValue) {
    const auto r = hermite_rule<double>(10000);
    EXPECT_EQ(r.weights.back(), 0.0);
    EXPECT_GT(r.scaled_weights.back(), 0.0);
    EXPECT_TRUE(std::isfinite(r.scaled_weights.back()));
}

TEST(HermiteRule, Budgets) {
    EXPECT_LE(hermite_rule<double>(100).stats.mean_iterations, 2.5);
    const auto r = hermite_rule<double>(1000);
    EXPECT_LE(r.stats.mean_iterations, 2.0);
    EXPECT_LE(r.stats.mean_terms, 80.0);
}

TEST(HermiteRule, RejectsZeroDegree) { EXPECT_THROW(hermite_rule<double>(0), gaussq::invalid_argument); }

TEST(HermiteWeights, RejectsWrongCount) {
    EXPECT_THROW(hermite_weights<double>(4, {1.0}, {1.0}), count_mismatch);
    EXPECT_THROW(hermite_weights<double>(2, {1.0}, {0.0}), zero_derivative);
}

// Weight functional omega = 1/y'^2 is flat to first order at every zero.
TEST(HermiteProperty, ScaledWeightConditioning) {
    const int n = 20;
    const double a = 2 * n + 1;
    const auto r = hermite_rule<double>(n);
    const double eps = 1e-4;
    for (int i = n / 2; i < n; ++i) {
        auto omega_at = [&](double x) {
            HermiteTaylor<double> s(n, r.nodes[i], 0.0, r.derivatives[i],
                                    TaylorLimits<double>::for_digits(16));
            s.advance(x);
            const double d = s.derivative();
            return 1 / (d * d);
        };
        const double w0 = omega_at(r.nodes[i]);
        for (double e : {eps, -eps}) {
            const double rel = std::abs(omega_at(r.nodes[i] + e) - w0) / w0;
            EXPECT_LT(rel, 2 * a * eps * eps + 1e-12);
        }
    }
}

TEST(HermiteProperty, Interlacing) {
    test::Gen g(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = g.integer(1, 600);
        const auto a = hermite_rule<double>(n), b = hermite_rule<double>(n + 1);
        for (int i = 0; i < n; ++i) {
            EXPECT_LT(b.nodes[i], a.nodes[i]);
            EXPECT_LT(a.nodes[i], b.nodes[i + 1]);
        }
    }
}

TEST(HermiteProperty, StrictlyIncreasingPositiveWeights) {
    test::Gen g(43);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = g.integer(1, 3000);
        const auto r = hermite_rule<double>(n);
        ASSERT_EQ(static_cast<int>(r.nodes.size()), n);
        for (int i = 1; i < n; ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
        for (int i = 0; i < n; ++i) {
            EXPECT_GE(r.weights[i], 0.0);
            EXPECT_GT(r.scaled_weights[i], 0.0);
        }
    }
}

TEST(HermiteProperty, PolynomialExactness) {
    for (int n = 1; n <= 20; ++n) {
        const auto r = hermite_rule<double>(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            long double q = 0, mag = 0;
            for (int i = 0; i < n; ++i) {
                const long double t = r.weights[i] * std::pow(static_cast<long double>(r.nodes[i]), k);
                q += t;
                mag += std::abs(t);
            }
            const double exact = k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0);
            EXPECT_LE(std::abs(static_cast<double>(q) - exact), 50 * 2.2e-16 * static_cast<double>(mag))
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(HermiteProperty, WeightsSumToSqrtPi) {
    test::Gen g(47);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = g.integer(1, 2000);
        const auto r = hermite_rule<double>(n);
        long double s = 0;
        for (double w : r.weights) s += w;
        EXPECT_LT(std::abs(static_cast<double>(s) / sqrt_pi - 1), 5e-15) << n;
    }
}

TEST(HermiteProperty, AgreesWithHighPrecision) {
    using R = mp_float<64>;
    const auto hi = hermite_rule<R>(40);
    const auto lo = hermite_rule<mp_float<128>>(40);
    for (int i = 0; i < 40; ++i) {
        const auto d = abs(mp_float<128>(hi.nodes[i]) - lo.nodes[i]);
        EXPECT_LT(d, mp_float<128>("1e-62"));
    }
}
