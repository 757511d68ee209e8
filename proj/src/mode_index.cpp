#include "omarray/mode_index.hpp"

#include <stdexcept>

namespace omarray
{

Sector sector_of(Species species, Circulation direction) noexcept
{
    const bool b_mode = species == Species::b;
    const bool cw = direction == Circulation::cw;
    return (cw != b_mode) ? Sector::forward : Sector::backward;
}

Circulation circulation_in(Sector sector, Species species) noexcept
{
    const bool forward = sector == Sector::forward;
    const bool b_mode = species == Species::b;
    return (forward != b_mode) ? Circulation::cw : Circulation::ccw;
}

std::size_t flat_index(const ModeIndex &mode, int cells)
{
    if (cells < 1 || mode.cell < 1 || mode.cell > cells)
    {
        throw std::out_of_range("mode cell outside 1..N");
    }
    const auto n = static_cast<std::size_t>(cells);
    const std::size_t base = sector_of(mode.species, mode.direction) == Sector::forward ? 0 : 3 * n;
    return base + 3 * static_cast<std::size_t>(mode.cell - 1) + static_cast<std::size_t>(mode.species);
}

ModeIndex unflatten(std::size_t index, int cells)
{
    const auto n = static_cast<std::size_t>(cells);
    if (cells < 1 || index >= 6 * n)
    {
        throw std::out_of_range("flat index outside 0..6N-1");
    }
    const Sector sector = index < 3 * n ? Sector::forward : Sector::backward;
    const std::size_t local = index % (3 * n);
    const auto species = static_cast<Species>(local % 3);
    return {static_cast<int>(local / 3) + 1, species, circulation_in(sector, species)};
}

} // namespace omarray
