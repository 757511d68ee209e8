#ifndef OMARRAY_GRID_HPP
#define OMARRAY_GRID_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "omarray/params.hpp"

namespace omarray
{

// Uniform grid of n points on [lo, hi], endpoints included.
struct FrequencyGrid
{
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;

    double at(std::size_t i) const noexcept
    {
        if (n < 2)
        {
            return lo;
        }
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        return lo + (hi - lo) * t;
    }

    std::vector<double> points() const;

    bool operator==(const FrequencyGrid &) const = default;
};

Violations validate(const FrequencyGrid &grid);

// Parses "lo:hi:n", e.g. "-30:30:2001".
FrequencyGrid parse_grid(std::string_view text);

// Explicit grids (k-points, g values) must be non-empty and non-decreasing.
void require_monotone(const std::vector<double> &grid, const char *what);

} // namespace omarray

#endif // OMARRAY_GRID_HPP
