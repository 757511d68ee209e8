#include "omarray/grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace omarray
{

std::vector<double> FrequencyGrid::points() const
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        out[i] = at(i);
    }
    return out;
}

Violations validate(const FrequencyGrid &grid)
{
    Violations out;
    if (grid.n == 0)
    {
        out.push_back({"grid.n", "grid.n >= 1"});
    }
    if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi))
    {
        out.push_back({"grid", "grid bounds finite"});
    }
    else if (grid.hi < grid.lo)
    {
        out.push_back({"grid", "grid.lo <= grid.hi"});
    }
    else if (grid.n == 1 && grid.hi != grid.lo)
    {
        out.push_back({"grid.n", "a one-point grid needs lo == hi"});
    }
    return out;
}

namespace
{
template <class T>
T parse_number(std::string_view text, std::string_view whole)
{
    T value{};
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
    {
        throw ValidationError("grid", "cannot parse '" + std::string(whole) + "' as lo:hi:n");
    }
    return value;
}
} // namespace

FrequencyGrid parse_grid(std::string_view text)
{
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
    {
        throw ValidationError("grid", "expected lo:hi:n, got '" + std::string(text) + "'");
    }
    FrequencyGrid grid{
        parse_number<double>(text.substr(0, first), text),
        parse_number<double>(text.substr(first + 1, second - first - 1), text),
        parse_number<std::size_t>(text.substr(second + 1), text),
    };
    require_valid(grid);
    return grid;
}

void require_monotone(const std::vector<double> &grid, const char *what)
{
    if (grid.empty())
    {
        throw ValidationError(what, std::string(what) + " must not be empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (!std::isfinite(grid[i]) || (i > 0 && grid[i] < grid[i - 1]))
        {
            throw ValidationError(what, std::string(what) + " must be finite and non-decreasing");
        }
    }
}

} // namespace omarray
