#include <gtest/gtest.h>

#include <cmath>

#include "omarray/metrics.hpp"
#include "support.hpp"

using namespace omarray;
using namespace testing_support;

TEST(ArrayBandwidth, ReciprocalSystemHasNone)
{
    auto p = fig4_set();
    p.g = 0.0;
    const auto r = array_isolation_bandwidth(p, -50.0);
    EXPECT_TRUE(r.interval.empty);
    EXPECT_EQ(r.width(), 0.0);
}

TEST(ArrayBandwidth, Fig4IntervalContainsZero)
{
    const auto r = array_isolation_bandwidth(fig4_set(), -50.0);
    ASSERT_FALSE(r.interval.empty);
    EXPECT_LE(r.interval.lo, 0.0);
    EXPECT_GE(r.interval.hi, 0.0);
    EXPECT_NEAR(r.width(), r.interval.hi - r.interval.lo, 0.0);
    EXPECT_GE(r.width(), 0.8 * 40.0);
    EXPECT_LE(r.width(), 40.0);
    EXPECT_EQ(r.threshold_db, -50.0);
    EXPECT_EQ(r.params, fig4_set());
}

TEST(ArrayBandwidth, EdgesSitOnThreshold)
{
    const auto p = fig4_set();
    const auto r = array_isolation_bandwidth(p, -50.0);
    const DynamicalMatrix dyn(p);
    for (double edge : {r.interval.lo, r.interval.hi})
    {
        const auto inside = port_transmissions(dyn, edge * (1 - 1e-4));
        const auto outside = port_transmissions(dyn, edge * (1 + 1e-4));
        EXPECT_LE(ratio_db(inside.t31, inside.t13), -50.0 + 0.5);
        EXPECT_GE(ratio_db(outside.t31, outside.t13), -50.0 - 0.5);
    }
}

TEST(ArrayBandwidth, StableUnderScanRefinement)
{
    for (const auto &p : {fig4_set(), [] {
                              auto q = fig4_set();
                              q.N = 5;
                              return q;
                          }()})
    {
        const double half = 2.0 * p.v + 5.0 * p.kappa_a;
        const auto base = array_isolation_bandwidth(p, -50.0);
        const auto fine = array_isolation_bandwidth(p, -50.0, IntervalSearch{half, 4001, 1e-4 * p.kappa_a});
        EXPECT_LT(std::abs(base.width() - fine.width()), 1e-3 * p.kappa_a);
    }
}

TEST(ArrayBandwidth, SingleCellIsolation)
{
    auto p = fig4_set();
    p.N = 1;
    const auto t = port_transmissions(DynamicalMatrix(p), 0.0);
    EXPECT_NEAR(ratio_db(t.t31, t.t13), -52.0, 0.05);
}

TEST(Improvement, SignIsMeaningful)
{
    LatticeParams weak{1, 0.5, 0.5, {}, 0, 0, 0, 1.0, 1.0, 0.01};
    const SingleCavityParams strong{1.0, 0.01, 20.0};
    EXPECT_LT(isolation_improvement(weak, strong), 0.0);
    EXPECT_GT(isolation_improvement(fig4_set(), default_reference(fig4_set())), 0.0);
}

TEST(Improvement, DefaultReference)
{
    const auto ref = default_reference(fig4_set());
    EXPECT_EQ(ref.kappa_a, 1.0);
    EXPECT_EQ(ref.kappa_c, 0.01);
    EXPECT_EQ(ref.g, 20.0);
    // |T31/T13| at the band centre: ((kc) ka / (ka kc + g^2))^2
    const double want = 20.0 * std::log10(0.01 / (0.01 + 400.0));
    EXPECT_NEAR(single_cavity_isolation_db(ref, 0.0), want, 1e-10);
}

TEST(SweepG, WidthGrowsUpToTwoV)
{
    const auto p = fig4_set();
    std::vector<double> g_grid;
    for (int i = 0; i <= 20; ++i)
        g_grid.push_back(i);
    const auto sweep = sweep_g(p, g_grid, -50.0);
    ASSERT_EQ(sweep.scalars.size(), g_grid.size());
    EXPECT_EQ(sweep.scalars.front(), 0.0);
    for (std::size_t i = 1; i < sweep.scalars.size(); ++i)
        EXPECT_GE(sweep.scalars[i], sweep.scalars[i - 1] - 1e-3) << "g = " << g_grid[i];
    EXPECT_EQ(sweep.parameter, "g");
    EXPECT_EQ(sweep.values, g_grid);
}

TEST(SweepG, KeepsTheGsRatio)
{
    auto p = fig4_set();
    p.N = 3;
    p.g_s = {0.0, -4.0};
    const auto a = sweep_g(p, {10.0}, -20.0);
    auto q = p;
    q.g = 10.0;
    q.g_s = {0.0, -2.0};
    EXPECT_EQ(a.scalars[0], array_isolation_bandwidth(q, -20.0).width());
    p.g = 0.0;
    EXPECT_THROW(sweep_g(p, {1.0}, -20.0), ValidationError);
}

TEST(SweepBackscatter, ZeroColumnIsTheBareSpectrum)
{
    const auto omega = FrequencyGrid{-30, 30, 201}.points();
    const auto sweep = sweep_backscatter(fig4_set(), {0.0}, omega);
    const auto bare = spectrum_sweep(DynamicalMatrix(fig4_set()), omega);
    EXPECT_EQ(sweep.spectra[0].isolation_db, bare.isolation_db);
}

TEST(SweepBackscatter, HalfKappaRemovesNonreciprocity)
{
    const auto omega = FrequencyGrid{-30, 30, 201}.points();
    const auto sweep = sweep_backscatter(fig4_set(), {0.5}, omega);
    EXPECT_NEAR(std::abs(sweep.spectra[0].params.g_s), 20.0, 1e-12);
    for (double db : sweep.spectra[0].isolation_db)
        EXPECT_LT(std::abs(db), 1.0);
}

TEST(SweepBackscatter, CentreIsolationWeakensWithJ)
{
    const auto sweep = sweep_backscatter(fig4_set(), {0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.5}, {0.0});
    for (std::size_t r = 1; r < sweep.spectra.size(); ++r)
        EXPECT_LT(std::abs(sweep.spectra[r].isolation_db[0]), std::abs(sweep.spectra[r - 1].isolation_db[0]));
}

TEST(SweepBackscatter, DirectionFlipsPastHalfKappa)
{
    const auto sweep = sweep_backscatter(fig4_set(), {0.4, 0.6}, {10.0});
    EXPECT_LT(sweep.spectra[0].isolation_db[0], 0.0);
    EXPECT_GT(sweep.spectra[1].isolation_db[0], 0.0);
}

TEST(SweepBackscatter, SerialAndParallelAgreeBitwise)
{
    const auto omega = FrequencyGrid{-30, 30, 301}.points();
    const std::vector<double> j{0.0, 0.2, 0.5, 0.8};
    const auto a = sweep_backscatter(fig4_set(), j, omega, 1.0, Execution::serial);
    const auto b = sweep_backscatter(fig4_set(), j, omega, 1.0, Execution::parallel);
    for (std::size_t r = 0; r < j.size(); ++r)
        EXPECT_EQ(a.spectra[r].isolation_db, b.spectra[r].isolation_db);
}

TEST(SweepBackscatter, RejectsBadInput)
{
    EXPECT_THROW(sweep_backscatter(fig4_set(), {-0.1}, {0.0}), ValidationError);
    EXPECT_THROW(sweep_backscatter(fig4_set(), {0.1}, {0.0}, 0.0), ValidationError);
    EXPECT_THROW(sweep_backscatter(fig4_set(), {}, {0.0}), ValidationError);
}

TEST(SweepN, MonotoneAndBounded)
{
    std::vector<int> n_grid;
    for (int n = 1; n <= 10; ++n)
        n_grid.push_back(n);
    const auto sweep = sweep_N(fig4_set(), -50.0, n_grid);
    ASSERT_TRUE(sweep.baseline.has_value());
    EXPECT_NEAR(*sweep.baseline, isolation_bandwidth({1.0, 0.01, 20.0}, -50.0, PortPair::p13), 0.0);
    for (std::size_t i = 1; i < sweep.scalars.size(); ++i)
        EXPECT_GE(sweep.scalars[i], sweep.scalars[i - 1] - 1e-3) << "N = " << n_grid[i];
    EXPECT_LE(sweep.scalars.back(), 40.0);
    // three cells sit near -46 dB off-centre; the array overtakes the g = 20 cavity from four cells on
    EXPECT_LT(sweep.scalars[2], *sweep.baseline);
    for (std::size_t i = 3; i < sweep.scalars.size(); ++i)
        EXPECT_GT(sweep.scalars[i], *sweep.baseline);
}

TEST(SweepN, SerialAndParallelAgreeBitwise)
{
    const auto a = sweep_N(fig4_set(), -50.0, {1, 4, 7}, Execution::serial);
    const auto b = sweep_N(fig4_set(), -50.0, {1, 4, 7}, Execution::parallel);
    EXPECT_EQ(a.scalars, b.scalars);
}

TEST(SweepN, RejectsBadGrids)
{
    EXPECT_THROW(sweep_N(fig4_set(), -50.0, {}), ValidationError);
    EXPECT_THROW(sweep_N(fig4_set(), -50.0, {0}), ValidationError);
}
