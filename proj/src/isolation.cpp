#include "omarray/isolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace omarray
{

double ratio_db(double t_num, double t_den)
{
    return 10.0 * std::log10(std::max(t_num, kTransmissionFloor) / std::max(t_den, kTransmissionFloor));
}

bool meets_threshold(double ratio_in_db, double threshold_db)
{
    if (threshold_db > 0.0)
    {
        return ratio_in_db >= threshold_db;
    }
    if (threshold_db < 0.0)
    {
        return ratio_in_db <= threshold_db;
    }
    throw std::invalid_argument("isolation threshold must be non-zero");
}

namespace
{
// accept(inside) is true, accept(outside) is false.
double bisect_edge(const std::function<bool(double)> &accept, double inside, double outside, double tolerance)
{
    while (std::abs(outside - inside) > tolerance)
    {
        const double mid = 0.5 * (inside + outside);
        if (mid == inside || mid == outside)
        {
            break;
        }
        if (accept(mid))
        {
            inside = mid;
        }
        else
        {
            outside = mid;
        }
    }
    return 0.5 * (inside + outside);
}

double walk(const std::function<bool(double)> &accept, const IntervalSearch &search, double sign)
{
    const std::size_t steps = (search.points - 1) / 2;
    double last_inside = 0.0;
    for (std::size_t i = 1; i <= steps; ++i)
    {
        const double omega = sign * search.half_width * static_cast<double>(i) / static_cast<double>(steps);
        if (!accept(omega))
        {
            return bisect_edge(accept, last_inside, omega, search.edge_tolerance);
        }
        last_inside = omega;
    }
    return last_inside;
}
} // namespace

Interval interval_around_zero(const std::function<bool(double)> &accept, const IntervalSearch &search)
{
    if (!(search.half_width > 0.0) || search.points < 3 || search.points % 2 == 0 || !(search.edge_tolerance > 0.0))
    {
        throw std::invalid_argument("interval search needs half_width > 0, an odd point count >= 3 and a positive tolerance");
    }
    if (!accept(0.0))
    {
        return {};
    }
    return {walk(accept, search, -1.0), walk(accept, search, 1.0), false};
}

} // namespace omarray
