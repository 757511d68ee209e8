#ifndef OMARRAY_SINGLE_CAVITY_HPP
#define OMARRAY_SINGLE_CAVITY_HPP

#include <vector>

#include "omarray/execution.hpp"
#include "omarray/grid.hpp"
#include "omarray/params.hpp"

namespace omarray
{

// Closed-form scattering of the four-port Brillouin cavity. Port 1 drives a_cw,
// which leaves through ports 2 (with the direct reflection) and 3; the ccw mode
// connects ports 2 and 3 to port 1 and never sees the acoustic wave.
struct ScatteringCoeffs
{
    cplx S12;
    cplx S21;
    cplx S13;
    cplx S31;
    cplx S2c;
    cplx S3c;

    cplx S34() const noexcept { return S21; }
    cplx S24() const noexcept { return S31; }
};

ScatteringCoeffs scattering_coeffs(const SingleCavityParams &params, double omega);

enum class PortPair
{
    p12, // T21 forward, T12 backward
    p13, // T31 forward, T13 backward
};

// forward[i] / backward[i] are T21 / T12 for p12 and T31 / T13 for p13;
// isolation_db[i] = 10 log10(forward / backward).
struct SingleCavitySpectrum
{
    PortPair pair = PortPair::p12;
    std::vector<double> omega;
    std::vector<double> forward;
    std::vector<double> backward;
    std::vector<double> isolation_db;
    SingleCavityParams params;
};

SingleCavitySpectrum transmission_spectrum(const SingleCavityParams &params, const FrequencyGrid &grid, PortPair pair,
                                           Execution exec = Execution::parallel);

// Forward / backward transmission of one pair at one frequency.
struct PairTransmission
{
    double forward = 0.0;
    double backward = 0.0;
};

PairTransmission pair_transmission(const SingleCavityParams &params, double omega, PortPair pair);

// Width of the interval around omega = 0 on which the pair's isolation meets the
// signed threshold (+20 for T21/T12 >= 100, -20 for T31/T13 <= 0.01). Scan of
// 4001 points over +-max(5g, 5 kappa_a), edges refined to 1e-6 kappa_a.
// Returns 0 when omega = 0 itself fails.
double isolation_bandwidth(const SingleCavityParams &params, double threshold_db, PortPair pair);

} // namespace omarray

#endif // OMARRAY_SINGLE_CAVITY_HPP
