#ifndef OMARRAY_MODE_INDEX_HPP
#define OMARRAY_MODE_INDEX_HPP

#include <cstddef>

namespace omarray
{

enum class Species
{
    a,
    b,
    c,
};

enum class Circulation
{
    cw,
    ccw,
};

// A mode of the array. cell is 1-based, as in the lattice sums.
struct ModeIndex
{
    int cell = 1;
    Species species = Species::a;
    Circulation direction = Circulation::cw;

    bool operator==(const ModeIndex &) const = default;
};

// Which half of the state vector a mode lives in: the forward (1 -> 3) sector
// holds (a_cw, b_ccw, c_cw), the backward (3 -> 1) sector (a_ccw, b_cw, c_ccw).
enum class Sector
{
    forward,
    backward,
};

Sector sector_of(Species species, Circulation direction) noexcept;
Circulation circulation_in(Sector sector, Species species) noexcept;

// 0-based position in the 6N state vector. Cell j occupies rows 3(j-1)..3(j-1)+2
// of its sector, in the order a, b, c; the backward sector starts at 3N.
// (The 1-based row numbers of the lattice equations are this plus one.)
std::size_t flat_index(const ModeIndex &mode, int cells);

ModeIndex unflatten(std::size_t index, int cells);

} // namespace omarray

#endif // OMARRAY_MODE_INDEX_HPP
