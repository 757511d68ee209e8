#include "omarray/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "omarray/isolation.hpp"

namespace omarray
{

namespace
{
Eigen::PartialPivLU<Eigen::MatrixXcd> factorize(const DynamicalMatrix &dyn, double omega)
{
    if (!std::isfinite(omega))
    {
        throw std::invalid_argument("frequency must be finite");
    }
    Eigen::MatrixXcd shifted = dyn.matrix();
    shifted.diagonal().array() -= cplx{0.0, omega};
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    // (M - i omega) = Gamma/2 + i(H - omega) has Re(spectrum) >= min(kappa)/2 > 0,
    // so a vanishing pivot means the input was corrupted.
    const auto &lu_matrix = lu.matrixLU();
    for (Eigen::Index k = 0; k < lu_matrix.rows(); ++k)
    {
        if (lu_matrix(k, k) == cplx{0.0, 0.0} || !std::isfinite(std::abs(lu_matrix(k, k))))
        {
            throw std::runtime_error("singular (M - i omega I) in scattering solve");
        }
    }
    return lu;
}
} // namespace

ScatteringMatrix scattering_matrix(const DynamicalMatrix &dyn, double omega)
{
    const auto lu = factorize(dyn, omega);
    const Eigen::VectorXd root = dyn.gamma().cwiseSqrt();
    const Eigen::MatrixXcd rhs = root.cast<cplx>().asDiagonal();

    ScatteringMatrix out;
    out.omega = omega;
    out.u = root.cast<cplx>().asDiagonal() * lu.solve(rhs);
    out.u.diagonal().array() -= 1.0;
    return out;
}

PortIndices port_indices(const DynamicalMatrix &dyn)
{
    const int n = dyn.cells();
    return {
        dyn.index(1, Species::a, Circulation::cw),
        dyn.index(n, Species::b, Circulation::ccw),
        dyn.index(n, Species::b, Circulation::cw),
        dyn.index(1, Species::a, Circulation::ccw),
    };
}

PortTransmissions port_transmissions(const DynamicalMatrix &dyn, double omega)
{
    const auto lu = factorize(dyn, omega);
    const auto ports = port_indices(dyn);
    const auto &gamma = dyn.gamma();

    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dyn.dim(), 2);
    rhs(ports.in_forward, 0) = std::sqrt(gamma(ports.in_forward));
    rhs(ports.in_backward, 1) = std::sqrt(gamma(ports.in_backward));
    const Eigen::MatrixXcd field = lu.solve(rhs);

    // The ports are distinct modes, so the -I term of U never contributes here.
    const cplx u31 = std::sqrt(gamma(ports.out_forward)) * field(ports.out_forward, 0);
    const cplx u13 = std::sqrt(gamma(ports.out_backward)) * field(ports.out_backward, 1);
    return {std::norm(u31), std::norm(u13)};
}

SpectrumTable spectrum_sweep(const DynamicalMatrix &dyn, const std::vector<double> &omega, Execution exec)
{
    require_monotone(omega, "omega grid");
    SpectrumTable out;
    out.params = dyn.params();
    out.omega = omega;
    out.t31.resize(omega.size());
    out.t13.resize(omega.size());
    out.isolation_db.resize(omega.size());

    detail::for_each_index(omega.size(), exec, [&](std::size_t i) {
        const auto t = port_transmissions(dyn, omega[i]);
        out.t31[i] = t.t31;
        out.t13[i] = t.t13;
        out.isolation_db[i] = ratio_db(t.t31, t.t13);
    });
    return out;
}

SpectrumTable spectrum_sweep(const DynamicalMatrix &dyn, const FrequencyGrid &grid, Execution exec)
{
    require_valid(grid);
    return spectrum_sweep(dyn, grid.points(), exec);
}

} // namespace omarray
