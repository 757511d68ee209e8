#ifndef OMARRAY_TEST_SUPPORT_HPP
#define OMARRAY_TEST_SUPPORT_HPP

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "omarray/params.hpp"
#include "oracles.hpp"

namespace testing_support
{

// Fixed seeds keep every property run reproducible; bump the seed to explore.
inline std::mt19937_64 &rng()
{
    static std::mt19937_64 engine(0x5eed2024ULL);
    return engine;
}

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double log_uniform(double lo, double hi)
{
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

inline int uniform_int(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

// Random array: optional backscattering and complex g_s.
inline omarray::LatticeParams random_lattice(int n_lo, int n_hi, bool backscatter = true)
{
    omarray::LatticeParams p;
    p.N = uniform_int(n_lo, n_hi);
    p.v = uniform(0.2, 3.0);
    p.g = uniform(0.0, 4.0);
    p.g_s = backscatter ? omarray::cplx{uniform(-2.0, 2.0), uniform(-2.0, 2.0)} : omarray::cplx{};
    p.J_a = backscatter ? uniform(0.0, 1.0) : 0.0;
    p.J_b = backscatter ? uniform(0.0, 1.0) : 0.0;
    p.J_c = backscatter ? uniform(0.0, 1.0) : 0.0;
    p.kappa_a = uniform(0.3, 2.0);
    p.kappa_b = uniform(0.3, 2.0);
    p.kappa_c = log_uniform(0.01, 1.0);
    return p;
}

inline oracle::ArrayParams to_oracle(const omarray::LatticeParams &p)
{
    return {p.N, p.v, p.g, p.g_s, p.J_a, p.J_b, p.J_c, p.kappa_a, p.kappa_b, p.kappa_c};
}

// Ten cells, v = 10, g = 2v, kappa_b = kappa_a = 1, kappa_c = 0.01, no backscattering.
inline omarray::LatticeParams fig4_set()
{
    return {10, 10.0, 20.0, {0.0, 0.0}, 0.0, 0.0, 0.0, 1.0, 1.0, 0.01};
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

inline std::filesystem::path scratch_dir(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / ("omarray_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace testing_support

#endif // OMARRAY_TEST_SUPPORT_HPP
