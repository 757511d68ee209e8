#include "omarray/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "omarray/grid.hpp"

namespace omarray
{

BandwidthResult array_isolation_bandwidth(const LatticeParams &params, double threshold_db, const IntervalSearch &search)
{
    const DynamicalMatrix dyn(params);
    const auto accept = [&](double omega) {
        const auto t = port_transmissions(dyn, omega);
        return meets_threshold(ratio_db(t.t31, t.t13), threshold_db);
    };
    return {threshold_db, interval_around_zero(accept, search), params};
}

BandwidthResult array_isolation_bandwidth(const LatticeParams &params, double threshold_db)
{
    require_valid(params);
    IntervalSearch search;
    search.half_width = 2.0 * std::abs(params.v) + 5.0 * params.kappa_a;
    search.points = 2001;
    search.edge_tolerance = 1e-4 * params.kappa_a;
    return array_isolation_bandwidth(params, threshold_db, search);
}

SingleCavityParams default_reference(const LatticeParams &params)
{
    return {params.kappa_a, params.kappa_a / 100.0, params.g};
}

double single_cavity_isolation_db(const SingleCavityParams &reference, double omega)
{
    const auto t = pair_transmission(reference, omega, PortPair::p13);
    return ratio_db(t.forward, t.backward);
}

double isolation_improvement(const LatticeParams &params, const SingleCavityParams &reference, double omega)
{
    const DynamicalMatrix dyn(params);
    const auto t = port_transmissions(dyn, omega);
    return std::abs(ratio_db(t.t31, t.t13)) - std::abs(single_cavity_isolation_db(reference, omega));
}

SweepResult sweep_g(const LatticeParams &params, const std::vector<double> &g_grid, double threshold_db, Execution exec)
{
    require_valid(params);
    require_monotone(g_grid, "g_grid");
    if (params.g == 0.0 && params.g_s != cplx{0.0, 0.0})
    {
        throw ValidationError("g", "g_s / g ratio undefined for g = 0");
    }
    const cplx ratio = params.g > 0.0 ? params.g_s / params.g : cplx{0.0, 0.0};

    SweepResult out;
    out.parameter = "g";
    out.values = g_grid;
    out.threshold_db = threshold_db;
    out.params = params;
    out.scalars.resize(g_grid.size());
    detail::for_each_index(g_grid.size(), exec, [&](std::size_t i) {
        auto p = params;
        p.g = g_grid[i];
        p.g_s = ratio * g_grid[i];
        out.scalars[i] = array_isolation_bandwidth(p, threshold_db).width();
    });
    return out;
}

SweepResult sweep_backscatter(const LatticeParams &params, const std::vector<double> &j_grid,
                              const std::vector<double> &omega_grid, double kappa_d, Execution exec)
{
    require_valid(params);
    require_monotone(j_grid, "J_grid");
    require_monotone(omega_grid, "omega grid");
    if (!(kappa_d > 0.0))
    {
        throw ValidationError("kappa_d", "kappa_d > 0");
    }

    std::vector<DynamicalMatrix> systems;
    systems.reserve(j_grid.size());
    for (double j : j_grid)
    {
        if (j < 0.0)
        {
            throw ValidationError("J_grid", "J >= 0");
        }
        auto p = params;
        p.J_a = p.J_b = p.J_c = j;
        p.g_s = cplx{0.0, -2.0 * j / kappa_d} * p.g;
        systems.emplace_back(p);
    }

    SweepResult out;
    out.parameter = "J";
    out.values = j_grid;
    out.params = params;
    out.spectra.resize(j_grid.size());
    for (std::size_t r = 0; r < j_grid.size(); ++r)
    {
        auto &table = out.spectra[r];
        table.params = systems[r].params();
        table.omega = omega_grid;
        table.t31.resize(omega_grid.size());
        table.t13.resize(omega_grid.size());
        table.isolation_db.resize(omega_grid.size());
    }

    // One flat loop over (J, omega) so the parallel path balances across both axes.
    const std::size_t per_row = omega_grid.size();
    detail::for_each_index(j_grid.size() * per_row, exec, [&](std::size_t flat) {
        const std::size_t r = flat / per_row;
        const std::size_t c = flat % per_row;
        const auto t = port_transmissions(systems[r], omega_grid[c]);
        auto &table = out.spectra[r];
        table.t31[c] = t.t31;
        table.t13[c] = t.t13;
        table.isolation_db[c] = ratio_db(t.t31, t.t13);
    });
    return out;
}

SweepResult sweep_N(const LatticeParams &params, double threshold_db, const std::vector<int> &n_grid, Execution exec)
{
    if (n_grid.empty())
    {
        throw ValidationError("N_grid", "N_grid must not be empty");
    }
    for (int n : n_grid)
    {
        if (n < 1)
        {
            throw ValidationError("N_grid", "N >= 1");
        }
    }

    SweepResult out;
    out.parameter = "N";
    out.threshold_db = threshold_db;
    out.params = params;
    out.values.assign(n_grid.begin(), n_grid.end());
    out.scalars.resize(n_grid.size());
    detail::for_each_index(n_grid.size(), exec, [&](std::size_t i) {
        auto p = params;
        p.N = n_grid[i];
        out.scalars[i] = array_isolation_bandwidth(p, threshold_db).width();
    });
    out.baseline = isolation_bandwidth(default_reference(params), threshold_db, PortPair::p13);
    return out;
}

} // namespace omarray
