#ifndef OMARRAY_SCATTERING_HPP
#define OMARRAY_SCATTERING_HPP

#include <Eigen/Dense>
#include <vector>

#include "omarray/dynamical_matrix.hpp"
#include "omarray/execution.hpp"
#include "omarray/grid.hpp"

namespace omarray
{

// U(omega) = sqrt(Gamma) (M - i omega I)^{-1} sqrt(Gamma) - I, built column by column
// from one LU factorisation. Unitary for real omega.
struct ScatteringMatrix
{
    double omega = 0.0;
    Eigen::MatrixXcd u;
};

ScatteringMatrix scattering_matrix(const DynamicalMatrix &dyn, double omega);

// Waveguide ports of the array.
//   T31: in at a_{1,cw},  out at b_{N,ccw}
//   T13: in at b_{N,cw},  out at a_{1,ccw}
struct PortIndices
{
    Eigen::Index in_forward;
    Eigen::Index out_forward;
    Eigen::Index in_backward;
    Eigen::Index out_backward;
};

PortIndices port_indices(const DynamicalMatrix &dyn);

struct PortTransmissions
{
    double t31 = 0.0;
    double t13 = 0.0;
};

// Two right-hand sides against one LU of (M - i omega I).
PortTransmissions port_transmissions(const DynamicalMatrix &dyn, double omega);

struct SpectrumTable
{
    std::vector<double> omega;
    std::vector<double> t31;
    std::vector<double> t13;
    std::vector<double> isolation_db; // 10 log10(T31 / T13)
    LatticeParams params;

    std::size_t size() const noexcept { return omega.size(); }
};

SpectrumTable spectrum_sweep(const DynamicalMatrix &dyn, const std::vector<double> &omega,
                             Execution exec = Execution::parallel);
SpectrumTable spectrum_sweep(const DynamicalMatrix &dyn, const FrequencyGrid &grid,
                             Execution exec = Execution::parallel);

} // namespace omarray

#endif // OMARRAY_SCATTERING_HPP
