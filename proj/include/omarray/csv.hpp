#ifndef OMARRAY_CSV_HPP
#define OMARRAY_CSV_HPP

#include <string>

namespace omarray
{

// Locale-independent scientific notation with 17 significant digits
// (round-trips every double).
std::string format_double(double value);

} // namespace omarray

#endif // OMARRAY_CSV_HPP
