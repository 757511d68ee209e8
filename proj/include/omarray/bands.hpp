#ifndef OMARRAY_BANDS_HPP
#define OMARRAY_BANDS_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "omarray/execution.hpp"
#include "omarray/mode_index.hpp"
#include "omarray/params.hpp"

namespace omarray
{

using Matrix3c = Eigen::Matrix<cplx, 3, 3>;
using Matrix6c = Eigen::Matrix<cplx, 6, 6>;

// Momentum-space Hamiltonian in the basis (a_cw, b_ccw, c_cw, a_ccw, b_cw, c_ccw):
//   [ H_fwd(k)  H_bs   ]      H_fwd = [[0, rho, g  ], [rho*, 0, 0], [g,    0, 0]]
//   [ H_bs      H_bwd(k)]     H_bwd = [[0, rho, g_s], [rho*, 0, 0], [g_s*, 0, 0]]
// with rho = v (1 + e^{ik}) and H_bs = diag(J_a, J_b, J_c).
struct BlochHamiltonian
{
    double k = 0.0;
    cplx rho;
    Matrix6c h;

    Matrix3c forward() const { return h.topLeftCorner<3, 3>(); }
    Matrix3c backward() const { return h.bottomRightCorner<3, 3>(); }
    Matrix3c backscatter() const { return h.topRightCorner<3, 3>(); }
    Matrix3c sector(Sector s) const { return s == Sector::forward ? forward() : backward(); }
};

// k must lie in [-pi, pi].
BlochHamiltonian bloch_matrix(const LatticeParams &params, double k);

// Sector names used for band plots: the forward (1 -> 3) sector is a stub
// lattice, the backward (3 -> 1) sector an SSH chain.
enum class BandSector
{
    stub,
    ssh,
};

inline Sector to_sector(BandSector s) noexcept
{
    return s == BandSector::stub ? Sector::forward : Sector::backward;
}

struct DispersionTriple
{
    double upper = 0.0;
    double zero = 0.0;
    double lower = 0.0;
};

// omega = +-sqrt(|rho|^2 + g_om^2) and 0, with g_om = g (stub) or |g_s| (ssh).
// Only valid without backscattering; throws std::logic_error if any J is non-zero.
DispersionTriple dispersion_analytic(const LatticeParams &params, double k, BandSector sector);

// Eigenvalues per k (branches[i] belongs to k[i], ascending), or a finite-chain
// spectrum in finite_eigenvalues.
struct BandData
{
    std::vector<double> k;
    std::vector<std::vector<double>> branches;
    std::vector<double> finite_eigenvalues;

    std::size_t branch_count() const noexcept { return branches.empty() ? 0 : branches.front().size(); }
};

// All six bands of H(k) when sector is empty, otherwise the three bands of that sector's block.
BandData bloch_bands(const LatticeParams &params, const std::vector<double> &k_grid,
                     std::optional<BandSector> sector = std::nullopt, Execution exec = Execution::parallel);

// Sorted eigenvalues of one sector's open-chain Hamiltonian (3N values).
BandData finite_chain_bands(const LatticeParams &params, BandSector sector);

// Stub-lattice passbands [g, sqrt(4v^2 + g^2)] and mirror, gap (-g, g).
struct BandEdges
{
    double g = 0.0;
    double lower_outer = 0.0;
    double lower_inner = 0.0;
    double upper_inner = 0.0;
    double upper_outer = 0.0;

    double gap_width() const noexcept { return upper_inner - lower_inner; }
};

std::vector<BandEdges> band_edges_vs_g(const LatticeParams &params, const std::vector<double> &g_grid);

} // namespace omarray

#endif // OMARRAY_BANDS_HPP
