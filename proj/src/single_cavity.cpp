#include "omarray/single_cavity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "omarray/isolation.hpp"

namespace omarray
{

ScatteringCoeffs scattering_coeffs(const SingleCavityParams &params, double omega)
{
    require_valid(params);
    const double ka = params.kappa_a;
    const double kc = params.kappa_c;
    const double g = params.g;
    const cplx i{0.0, 1.0};

    const cplx optical = ka - i * omega;
    const cplx acoustic = kc - i * omega;
    const cplx denom = optical * acoustic + g * g;

    ScatteringCoeffs s;
    s.S13 = ka / optical;
    s.S12 = s.S13 - 1.0;
    s.S31 = acoustic * ka / denom;
    s.S21 = s.S31 - 1.0;
    s.S2c = -i * g * std::sqrt(2.0 * ka * kc) / denom;
    s.S3c = s.S2c;
    return s;
}

PairTransmission pair_transmission(const SingleCavityParams &params, double omega, PortPair pair)
{
    const auto s = scattering_coeffs(params, omega);
    if (pair == PortPair::p12)
    {
        return {std::norm(s.S21), std::norm(s.S12)};
    }
    return {std::norm(s.S31), std::norm(s.S13)};
}

SingleCavitySpectrum transmission_spectrum(const SingleCavityParams &params, const FrequencyGrid &grid, PortPair pair,
                                           Execution exec)
{
    require_valid(params);
    require_valid(grid);

    SingleCavitySpectrum out;
    out.pair = pair;
    out.params = params;
    out.omega = grid.points();
    out.forward.resize(grid.n);
    out.backward.resize(grid.n);
    out.isolation_db.resize(grid.n);

    detail::for_each_index(grid.n, exec, [&](std::size_t k) {
        const auto t = pair_transmission(params, out.omega[k], pair);
        out.forward[k] = t.forward;
        out.backward[k] = t.backward;
        out.isolation_db[k] = ratio_db(t.forward, t.backward);
    });
    return out;
}

double isolation_bandwidth(const SingleCavityParams &params, double threshold_db, PortPair pair)
{
    require_valid(params);
    const auto accept = [&](double omega) {
        const auto t = pair_transmission(params, omega, pair);
        return meets_threshold(ratio_db(t.forward, t.backward), threshold_db);
    };
    IntervalSearch search;
    search.half_width = std::max(5.0 * params.g, 5.0 * params.kappa_a);
    search.points = 4001;
    search.edge_tolerance = 1e-6 * params.kappa_a;
    return interval_around_zero(accept, search).width();
}

} // namespace omarray
