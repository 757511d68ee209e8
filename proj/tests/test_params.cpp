#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numbers>

#include "omarray/params.hpp"
#include "support.hpp"

using namespace omarray;
using namespace testing_support;

namespace
{
bool has_violation(const Violations &vs, const std::string &message)
{
    return std::any_of(vs.begin(), vs.end(), [&](const Violation &v) { return v.message == message; });
}
} // namespace

TEST(PumpSteadyState, NoDriveNoAmplitude)
{
    const auto amps = pump_steady_state({cplx{0.0, 0.0}, 1.0, 1.0, 0.3});
    EXPECT_EQ(amps.d_cw, cplx(0.0, 0.0));
    EXPECT_EQ(amps.d_ccw, cplx(0.0, 0.0));
}

TEST(PumpSteadyState, NoBackscatterLeavesCcwEmpty)
{
    const auto amps = pump_steady_state({cplx{1.0, 0.0}, 1.0, 1.0, 0.0});
    EXPECT_DOUBLE_EQ(amps.d_cw.real(), 0.0);
    EXPECT_DOUBLE_EQ(amps.d_cw.imag(), -2.0);
    EXPECT_EQ(std::abs(amps.d_ccw), 0.0);
}

TEST(PumpSteadyState, HalfKappaBackscatter)
{
    const auto amps = pump_steady_state({cplx{1.0, 0.0}, 1.0, 1.0, 0.5});
    EXPECT_NEAR(amps.d_cw.real(), 0.0, 1e-15);
    EXPECT_NEAR(amps.d_cw.imag(), -1.0, 1e-15);
    EXPECT_NEAR(amps.d_ccw.real(), -1.0, 1e-15);
    EXPECT_NEAR(amps.d_ccw.imag(), 0.0, 1e-15);
}

// Steady state of the driven cw/ccw pair solved directly:
//   0 = -(kd/2) d_cw - i Jd d_ccw - i Omega
//   0 = -(kd/2) d_ccw - i Jd d_cw
// (the linear system the closed forms come from).
TEST(PumpSteadyState, SolvesTheTwoModeSystem)
{
    for (int trial = 0; trial < 50; ++trial)
    {
        const PumpConfig pump{{uniform(-2, 2), uniform(-2, 2)}, uniform(0.1, 2), uniform(0.1, 3), uniform(0, 2)};
        const auto amps = pump_steady_state(pump);
        const cplx i{0, 1};
        const cplx r1 = -0.5 * pump.kappa_d * amps.d_cw - i * pump.J_d * amps.d_ccw - i * pump.Omega;
        const cplx r2 = -0.5 * pump.kappa_d * amps.d_ccw - i * pump.J_d * amps.d_cw;
        EXPECT_LT(std::abs(r1), 1e-12);
        EXPECT_LT(std::abs(r2), 1e-12);
    }
}

TEST(PumpSteadyState, RejectsNonPositiveKappa)
{
    EXPECT_THROW(pump_steady_state({cplx{1.0, 0.0}, 1.0, 0.0, 0.0}), ValidationError);
}

TEST(LinearizedCouplings, NoBackscatterMeansNoGs)
{
    const auto c = linearized_couplings({cplx{1.0, 0.0}, 0.7, 1.0, 0.0});
    EXPECT_GT(c.g.real(), 0.0);
    EXPECT_EQ(c.g.imag(), 0.0);
    EXPECT_EQ(std::abs(c.g_s), 0.0);
}

TEST(LinearizedCouplings, HalfKappaEqualisesMagnitudes)
{
    const auto c = linearized_couplings({cplx{0.3, 0.2}, 1.3, 1.0, 0.5});
    EXPECT_NEAR(std::abs(c.g_s), c.g.real(), 1e-14);
}

TEST(LinearizedCouplings, WorkedExample)
{
    const auto c = linearized_couplings({cplx{1.0, 0.0}, 1.0, 1.0, 0.1});
    EXPECT_NEAR(c.g.real(), 2.0 / 1.04, 1e-12);
    EXPECT_NEAR(c.g_s.real(), 0.0, 1e-15);
    EXPECT_NEAR(c.g_s.imag(), -0.2 * 2.0 / 1.04, 1e-12);
    EXPECT_NEAR(std::abs(c.g_s) / c.g.real(), 0.2, 1e-14);
}

TEST(LinearizedCouplings, RatioHoldsForRandomPumps)
{
    for (int trial = 0; trial < 200; ++trial)
    {
        const PumpConfig pump{{uniform(-3, 3), uniform(-3, 3)}, uniform(-2, 2), log_uniform(1e-3, 1e3),
                              uniform(0, 5)};
        const auto c = linearized_couplings(pump);
        if (c.g.real() == 0.0)
        {
            continue;
        }
        const cplx want{0.0, -2.0 * pump.J_d / pump.kappa_d};
        EXPECT_EQ(c.g.imag(), 0.0);
        EXPECT_GE(c.g.real(), 0.0);
        EXPECT_LE(std::abs(c.g_s / c.g - want), 1e-14 * std::max(1.0, std::abs(want)));
        if (pump.J_d > 0.0)
        {
            EXPECT_NEAR(std::arg(c.g_s), -std::numbers::pi / 2, 1e-14);
        }
    }
}

TEST(LatticeParams, FromPumpKeepsTheRest)
{
    LatticeParams base{4, 2.0, 0.0, {}, 0.1, 0.2, 0.3, 1.0, 1.5, 0.02};
    const auto p = LatticeParams::from_pump({cplx{1.0, 0.0}, 1.0, 1.0, 0.1}, base);
    EXPECT_EQ(p.N, 4);
    EXPECT_EQ(p.J_b, 0.2);
    EXPECT_NEAR(p.g, 2.0 / 1.04, 1e-12);
    EXPECT_NEAR(std::abs(p.g_s), 0.2 * p.g, 1e-14);
}

TEST(Validate, ZeroCells)
{
    LatticeParams p = fig4_set();
    p.N = 0;
    EXPECT_TRUE(has_violation(validate(p), "N >= 1"));
}

TEST(Validate, NegativeAcousticDamping)
{
    SingleCavityParams p{1.0, -1.0, 0.0};
    const auto vs = validate(p);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].field, "kappa_c");
    EXPECT_EQ(vs[0].message, "kappa_c > 0");
}

TEST(Validate, Fig4SetIsValid)
{
    EXPECT_TRUE(validate(fig4_set()).empty());
}

TEST(Validate, ReportsEveryViolation)
{
    LatticeParams p{0, 1.0, -1.0, {}, -0.1, 0.0, 0.0, 0.0, 1.0, 1.0};
    const auto vs = validate(p);
    EXPECT_EQ(vs.size(), 4u);
    EXPECT_THROW(require_valid(p), ValidationError);
}

TEST(Validate, DoesNotMutate)
{
    const LatticeParams p{0, 1.0, -1.0, {}, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0};
    const LatticeParams copy = p;
    (void)validate(p);
    EXPECT_EQ(p, copy);
}

TEST(Validate, NonFiniteValues)
{
    SingleCavityParams p{std::numeric_limits<double>::quiet_NaN(), 0.01, std::numeric_limits<double>::infinity()};
    EXPECT_EQ(validate(p).size(), 2u);
    PumpConfig pump{{std::numeric_limits<double>::infinity(), 0.0}, 1.0, 1.0, -1.0};
    EXPECT_EQ(validate(pump).size(), 2u);
}

TEST(Validate, TripleResonance)
{
    FrameConfig ok{10.0, 3.0, 7.0, 7.0, 0.0, 0.0, 0.0};
    EXPECT_TRUE(validate(ok).empty());
    FrameConfig off{10.0, 3.0, 7.0, 7.5, 0.0, 0.0, 0.0};
    const auto vs = validate(off);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].field, "omega_p");
}

TEST(ValidationError, CarriesViolations)
{
    const ValidationError e("N", "N >= 1");
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_NE(std::string(e.what()).find("N >= 1"), std::string::npos);
}
