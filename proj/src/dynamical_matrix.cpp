#include "omarray/dynamical_matrix.hpp"

#include <ostream>

#include "omarray/csv.hpp"

namespace omarray
{

namespace
{
const cplx kI{0.0, 1.0};

// Adds the Hermitian coupling amplitude * |row><col| + h.c. to H, written into M as iH.
void couple(Eigen::MatrixXcd &m, Eigen::Index row, Eigen::Index col, cplx amplitude)
{
    m(row, col) += kI * amplitude;
    m(col, row) += kI * std::conj(amplitude);
}
} // namespace

DynamicalMatrix::DynamicalMatrix(const LatticeParams &params) : params_(params)
{
    require_valid(params_);
    const Eigen::Index dim = 6 * static_cast<Eigen::Index>(params_.N);
    m_ = Eigen::MatrixXcd::Zero(dim, dim);
    gamma_ = Eigen::VectorXd::Zero(dim);

    const auto &p = params_;
    for (int j = 1; j <= p.N; ++j)
    {
        for (const auto sector : {Sector::forward, Sector::backward})
        {
            const auto a = index(j, Species::a, circulation_in(sector, Species::a));
            const auto b = index(j, Species::b, circulation_in(sector, Species::b));
            const auto c = index(j, Species::c, circulation_in(sector, Species::c));

            gamma_(a) = p.kappa_a;
            gamma_(b) = p.kappa_b;
            gamma_(c) = p.kappa_c;

            couple(m_, a, b, p.v);
            if (j > 1)
            {
                const auto b_left = index(j - 1, Species::b, circulation_in(sector, Species::b));
                couple(m_, a, b_left, p.v);
            }
            // a-c coupling: g in the forward sector, g_s on the (a, c) entry in the backward one.
            couple(m_, a, c, sector == Sector::forward ? cplx{p.g, 0.0} : p.g_s);
        }

        couple(m_, index(j, Species::a, Circulation::cw), index(j, Species::a, Circulation::ccw), p.J_a);
        couple(m_, index(j, Species::b, Circulation::cw), index(j, Species::b, Circulation::ccw), p.J_b);
        couple(m_, index(j, Species::c, Circulation::cw), index(j, Species::c, Circulation::ccw), p.J_c);
    }

    for (Eigen::Index k = 0; k < dim; ++k)
    {
        m_(k, k) += 0.5 * gamma_(k);
    }
}

Eigen::Index DynamicalMatrix::index(int cell, Species species, Circulation direction) const
{
    return static_cast<Eigen::Index>(flat_index({cell, species, direction}, params_.N));
}

DynamicalMatrix build_dynamical_matrix(const LatticeParams &params)
{
    return DynamicalMatrix(params);
}

Eigen::MatrixXcd hermitian_part(const DynamicalMatrix &dyn)
{
    Eigen::MatrixXcd shifted = dyn.matrix();
    shifted.diagonal() -= (0.5 * dyn.gamma()).cast<cplx>();
    return -kI * shifted;
}

Eigen::MatrixXcd sector_hamiltonian(const DynamicalMatrix &dyn, Sector sector)
{
    const Eigen::Index half = dyn.dim() / 2;
    const Eigen::Index offset = sector == Sector::forward ? 0 : half;
    return hermitian_part(dyn).block(offset, offset, half, half);
}

void write_matrix_csv(std::ostream &os, const DynamicalMatrix &dyn)
{
    os << "row,col,re,im\n";
    const auto &m = dyn.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
        for (Eigen::Index c = 0; c < m.cols(); ++c)
        {
            if (m(r, c) != cplx{0.0, 0.0})
            {
                os << r << ',' << c << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag())
                   << '\n';
            }
        }
    }
}

} // namespace omarray
