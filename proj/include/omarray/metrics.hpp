#ifndef OMARRAY_METRICS_HPP
#define OMARRAY_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "omarray/execution.hpp"
#include "omarray/isolation.hpp"
#include "omarray/params.hpp"
#include "omarray/scattering.hpp"
#include "omarray/single_cavity.hpp"

namespace omarray
{

struct BandwidthResult
{
    double threshold_db = 0.0;
    Interval interval;
    LatticeParams params;

    double width() const noexcept { return interval.width(); }
};

// Largest interval around omega = 0 on which I(omega) = 10 log10(T31/T13) meets the
// signed threshold (-50 means I <= -50 dB). Scan of 2001 points over
// +-(2|v| + 5 kappa_a), edges bisected to 1e-4 kappa_a.
BandwidthResult array_isolation_bandwidth(const LatticeParams &params, double threshold_db);

// Same search with a caller-chosen scan; used for grid-refinement checks.
BandwidthResult array_isolation_bandwidth(const LatticeParams &params, double threshold_db, const IntervalSearch &search);

// Single-cavity baseline for comparisons: ports 1 <-> 3, the array's g and kappa_a,
// kappa_c = kappa_a / 100.
SingleCavityParams default_reference(const LatticeParams &params);

// |I_array(omega)| - |I_single(omega)| in dB, single cavity on ports 1 <-> 3.
double isolation_improvement(const LatticeParams &params, const SingleCavityParams &reference, double omega = 0.0);

// Isolation of the single cavity on ports 1 <-> 3, 10 log10(T31/T13).
double single_cavity_isolation_db(const SingleCavityParams &reference, double omega);

struct SweepResult
{
    std::string parameter;
    std::vector<double> values;
    std::vector<double> scalars;        // per-point bandwidth, when the sweep is scalar
    std::vector<SpectrumTable> spectra; // per-point spectrum, when the sweep is spectral
    std::optional<double> baseline;     // single-cavity reference width (sweep_N)
    double threshold_db = 0.0;
    LatticeParams params;
};

// Bandwidth at threshold_db per g; g_s follows g with the fixed ratio params.g_s / params.g.
SweepResult sweep_g(const LatticeParams &params, const std::vector<double> &g_grid, double threshold_db,
                    Execution exec = Execution::parallel);

// Isolation spectra per backscattering rate J: J_a = J_b = J_c = J_d = J and
// g_s = (-2i J / kappa_d) g.
SweepResult sweep_backscatter(const LatticeParams &params, const std::vector<double> &j_grid,
                              const std::vector<double> &omega_grid, double kappa_d = 1.0,
                              Execution exec = Execution::parallel);

// Bandwidth per cell count (params.N is ignored). baseline holds the width of
// default_reference(params) at the same threshold.
SweepResult sweep_N(const LatticeParams &params, double threshold_db, const std::vector<int> &n_grid,
                    Execution exec = Execution::parallel);

} // namespace omarray

#endif // OMARRAY_METRICS_HPP
