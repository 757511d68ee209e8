#ifndef OMARRAY_EXECUTION_HPP
#define OMARRAY_EXECUTION_HPP

#include <cstddef>
#include <exception>

namespace omarray
{

// Every data-parallel kernel runs either as a plain loop (the reference used by
// the tests) or as an OpenMP loop. Both paths evaluate the same per-point
// function, so their outputs are bitwise identical.
enum class Execution
{
    serial,
    parallel,
};

namespace detail
{
template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn &&fn)
{
    if (exec == Execution::serial)
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            fn(i);
        }
        return;
    }

    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        try
        {
            fn(static_cast<std::size_t>(i));
        }
        catch (...)
        {
#pragma omp critical(omarray_failure)
            if (!failure)
            {
                failure = std::current_exception();
            }
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}
} // namespace detail

} // namespace omarray

#endif // OMARRAY_EXECUTION_HPP
