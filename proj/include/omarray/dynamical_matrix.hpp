#ifndef OMARRAY_DYNAMICAL_MATRIX_HPP
#define OMARRAY_DYNAMICAL_MATRIX_HPP

#include <Eigen/Dense>
#include <iosfwd>

#include "omarray/mode_index.hpp"
#include "omarray/params.hpp"

namespace omarray
{

// Coefficient matrix of the array's linear equations of motion
//   dV/dt = -M V + sqrt(Gamma) V_in,
// with V ordered per flat_index(). M = Gamma/2 + iH with H Hermitian, so
// M + M^dagger = Gamma holds exactly in floating point.
//
// Boundaries are open: cell j's a couples to b_j and b_{j-1}, so a_1 has no left
// neighbour and b_N talks only to a_N. Every mode carries its own decay channel
// sqrt(kappa); only a_{1,cw}, b_{N,ccw}, a_{1,ccw} and b_{N,cw} are read as
// waveguide ports, the rest are loss ports.
class DynamicalMatrix
{
public:
    explicit DynamicalMatrix(const LatticeParams &params);

    const Eigen::MatrixXcd &matrix() const noexcept { return m_; }
    const Eigen::VectorXd &gamma() const noexcept { return gamma_; }
    const LatticeParams &params() const noexcept { return params_; }
    int cells() const noexcept { return params_.N; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

    Eigen::Index index(int cell, Species species, Circulation direction) const;

private:
    LatticeParams params_;
    Eigen::MatrixXcd m_;
    Eigen::VectorXd gamma_;
};

DynamicalMatrix build_dynamical_matrix(const LatticeParams &params);

// H = (M - Gamma/2) / i.
Eigen::MatrixXcd hermitian_part(const DynamicalMatrix &dyn);

// The 3N x 3N block of H belonging to one sector.
Eigen::MatrixXcd sector_hamiltonian(const DynamicalMatrix &dyn, Sector sector);

// Debug dump: one "row,col,re,im" line per nonzero entry of M, 0-based indices.
void write_matrix_csv(std::ostream &os, const DynamicalMatrix &dyn);

} // namespace omarray

#endif // OMARRAY_DYNAMICAL_MATRIX_HPP
