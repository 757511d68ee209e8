#ifndef OMARRAY_ISOLATION_HPP
#define OMARRAY_ISOLATION_HPP

#include <cstddef>
#include <functional>

namespace omarray
{

// Transmissions are floored before the log so the analytic zeros (e.g. T12(0))
// give a finite ratio.
inline constexpr double kTransmissionFloor = 1e-300;

// 10 log10(t_num / t_den) with both arguments floored.
double ratio_db(double t_num, double t_den);

// Signed threshold convention: a positive threshold asks for ratio_db >= threshold,
// a negative one for ratio_db <= threshold. Zero is rejected.
bool meets_threshold(double ratio_in_db, double threshold_db);

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;

    double width() const noexcept { return empty ? 0.0 : hi - lo; }
};

struct IntervalSearch
{
    double half_width = 1.0;          // scan covers [-half_width, half_width]
    std::size_t points = 2001;        // odd, so omega = 0 is a scan point
    double edge_tolerance = 1e-6;     // bisection stops once the bracket is this narrow
};

// Largest contiguous interval containing omega = 0 on which accept(omega) holds.
// Dense scan outward from 0, then bisection between the last accepted and the
// first rejected scan point on each side. An edge that reaches the scan limit
// is reported at the limit.
Interval interval_around_zero(const std::function<bool(double)> &accept, const IntervalSearch &search);

} // namespace omarray

#endif // OMARRAY_ISOLATION_HPP
