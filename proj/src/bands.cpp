#include "omarray/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "omarray/dynamical_matrix.hpp"
#include "omarray/grid.hpp"

namespace omarray
{

namespace
{
// Tolerates the rounding of grids built as -pi + 2 pi t.
constexpr double kZoneSlack = 1e-12;

void require_in_zone(double k)
{
    if (!(std::abs(k) <= std::numbers::pi + kZoneSlack))
    {
        throw std::invalid_argument("wavenumber outside [-pi, pi]");
    }
}

template <class Matrix>
std::vector<double> sorted_eigenvalues(const Matrix &h)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
    {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    const auto &values = solver.eigenvalues();
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

BlochHamiltonian bloch_matrix(const LatticeParams &params, double k)
{
    require_valid(params);
    require_in_zone(k);

    BlochHamiltonian out;
    out.k = k;
    out.rho = params.v + params.v * std::exp(cplx{0.0, k * LatticeParams::d0});

    Matrix6c &h = out.h;
    h.setZero();
    // forward sector (a_cw, b_ccw, c_cw)
    h(0, 1) = out.rho;
    h(1, 0) = std::conj(out.rho);
    h(0, 2) = params.g;
    h(2, 0) = params.g;
    // backward sector (a_ccw, b_cw, c_ccw)
    h(3, 4) = out.rho;
    h(4, 3) = std::conj(out.rho);
    h(3, 5) = params.g_s;
    h(5, 3) = std::conj(params.g_s);
    // backscattering between same species
    const double j[3] = {params.J_a, params.J_b, params.J_c};
    for (int s = 0; s < 3; ++s)
    {
        h(s, s + 3) = j[s];
        h(s + 3, s) = j[s];
    }
    return out;
}

DispersionTriple dispersion_analytic(const LatticeParams &params, double k, BandSector sector)
{
    if (params.has_backscattering())
    {
        throw std::logic_error("analytic dispersion requires J_a = J_b = J_c = 0");
    }
    require_valid(params);
    require_in_zone(k);
    const double rho = std::abs(params.v + params.v * std::exp(cplx{0.0, k}));
    const double g_om = sector == BandSector::stub ? params.g : std::abs(params.g_s);
    const double w = std::hypot(rho, g_om);
    return {w, 0.0, -w};
}

BandData bloch_bands(const LatticeParams &params, const std::vector<double> &k_grid, std::optional<BandSector> sector,
                     Execution exec)
{
    require_valid(params);
    require_monotone(k_grid, "k_grid");
    for (double k : k_grid)
    {
        require_in_zone(k);
    }

    BandData out;
    out.k = k_grid;
    out.branches.resize(k_grid.size());
    detail::for_each_index(k_grid.size(), exec, [&](std::size_t i) {
        const auto bloch = bloch_matrix(params, k_grid[i]);
        if (sector)
        {
            out.branches[i] = sorted_eigenvalues<Matrix3c>(bloch.sector(to_sector(*sector)));
        }
        else
        {
            out.branches[i] = sorted_eigenvalues<Matrix6c>(bloch.h);
        }
    });
    return out;
}

BandData finite_chain_bands(const LatticeParams &params, BandSector sector)
{
    const DynamicalMatrix dyn(params);
    BandData out;
    out.finite_eigenvalues = sorted_eigenvalues<Eigen::MatrixXcd>(sector_hamiltonian(dyn, to_sector(sector)));
    return out;
}

std::vector<BandEdges> band_edges_vs_g(const LatticeParams &params, const std::vector<double> &g_grid)
{
    require_monotone(g_grid, "g_grid");
    std::vector<BandEdges> out;
    out.reserve(g_grid.size());
    for (double g : g_grid)
    {
        if (g < 0.0)
        {
            throw ValidationError("g_grid", "g >= 0");
        }
        const double outer = std::sqrt(4.0 * params.v * params.v + g * g);
        out.push_back({g, -outer, -g, g, outer});
    }
    return out;
}

} // namespace omarray
