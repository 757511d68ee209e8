#ifndef OMARRAY_EXPORT_HPP
#define OMARRAY_EXPORT_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "omarray/bands.hpp"
#include "omarray/metrics.hpp"
#include "omarray/scattering.hpp"
#include "omarray/single_cavity.hpp"

namespace omarray
{

// Column-oriented numeric table plus the parameter snapshot it came from.
// CSV carries only the numbers; JSON embeds the snapshot.
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<bool> integer_column; // printed without exponent in CSV
    nlohmann::json params = nlohmann::json::object();

    void add_row(std::vector<double> row);
};

enum class Format
{
    csv,
    json,
};

Format parse_format(const std::string &text);
const char *extension(Format format);

std::string to_csv(const Table &table);
std::string to_json_text(const Table &table);
std::string export_table(const Table &table, Format format);
Table table_from_json(const std::string &text);

nlohmann::json params_json(const LatticeParams &params);
nlohmann::json params_json(const SingleCavityParams &params);

// Column layouts. Spectra always start with omega.
Table spectrum_table(const SpectrumTable &spectrum);                 // omega, T31, T13, isolation_db
Table transmission_table(const SpectrumTable &spectrum);             // omega, T31, T13
Table isolation_table(const SpectrumTable &spectrum);                // omega, isolation_db
Table single_cavity_table(const SingleCavitySpectrum &spectrum);     // omega, T21|T31, T12|T13, isolation_db
Table bloch_table(const BandData &bands);                           // k, omega_1..omega_n
Table finite_chain_table(const BandData &bands);                    // index, omega
Table band_edges_table(const std::vector<BandEdges> &edges);        // g, lower_outer, lower_inner, upper_inner, upper_outer
Table scalar_sweep_table(const SweepResult &sweep, const std::string &value_column); // param, value[, sc_baseline_width]
Table isolation_map_table(const SweepResult &sweep);                // omega, J, isolation_db (long format)

} // namespace omarray

#endif // OMARRAY_EXPORT_HPP
