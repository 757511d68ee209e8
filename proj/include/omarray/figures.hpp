#ifndef OMARRAY_FIGURES_HPP
#define OMARRAY_FIGURES_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "omarray/config.hpp"
#include "omarray/execution.hpp"

namespace omarray
{

// Frozen parameter set behind one figure panel.
struct FigureRecipe
{
    std::string id;
    std::string description;
    RunConfig config;
};

const std::vector<FigureRecipe> &figure_recipes();

// Throws ValidationError for an unknown id.
const FigureRecipe &figure_recipe(std::string_view id);

struct ManifestEntry
{
    std::string file;
    std::size_t bytes = 0;
    std::string sha256;
};

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

// Writes the CSV files for one figure and a manifest.json listing them. Output is
// byte-identical for identical recipes. Throws std::runtime_error when out_dir
// cannot be created or written.
std::vector<ManifestEntry> run_figure(const FigureRecipe &recipe, const std::filesystem::path &out_dir,
                                      Execution exec = Execution::parallel);

} // namespace omarray

#endif // OMARRAY_FIGURES_HPP
