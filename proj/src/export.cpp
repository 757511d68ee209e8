#include "omarray/export.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "omarray/csv.hpp"

namespace omarray
{

std::string format_double(double value)
{
    std::array<char, 64> buffer{};
    const auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::scientific, 16);
    if (ec != std::errc{})
    {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buffer.data(), ptr);
}

void Table::add_row(std::vector<double> row)
{
    if (row.size() != columns.size())
    {
        throw std::invalid_argument("row width does not match the column count");
    }
    rows.push_back(std::move(row));
}

Format parse_format(const std::string &text)
{
    if (text == "csv")
    {
        return Format::csv;
    }
    if (text == "json")
    {
        return Format::json;
    }
    throw ValidationError("format", "format must be csv or json");
}

const char *extension(Format format)
{
    return format == Format::csv ? ".csv" : ".json";
}

std::string to_csv(const Table &table)
{
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
    {
        os << (c ? "," : "") << table.columns[c];
    }
    os << '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            if (c)
            {
                os << ',';
            }
            const bool integer = c < table.integer_column.size() && table.integer_column[c];
            if (integer)
            {
                os << static_cast<long long>(std::llround(row[c]));
            }
            else
            {
                os << format_double(row[c]);
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json_text(const Table &table)
{
    nlohmann::json doc;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    doc["params"] = table.params;
    return doc.dump(2) + "\n";
}

std::string export_table(const Table &table, Format format)
{
    return format == Format::csv ? to_csv(table) : to_json_text(table);
}

Table table_from_json(const std::string &text)
{
    const auto doc = nlohmann::json::parse(text);
    Table table;
    table.columns = doc.at("columns").get<std::vector<std::string>>();
    table.rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    table.params = doc.value("params", nlohmann::json::object());
    return table;
}

nlohmann::json params_json(const LatticeParams &p)
{
    return {
        {"N", p.N},
        {"v", p.v},
        {"g", p.g},
        {"g_s", {p.g_s.real(), p.g_s.imag()}},
        {"J_a", p.J_a},
        {"J_b", p.J_b},
        {"J_c", p.J_c},
        {"kappa_a", p.kappa_a},
        {"kappa_b", p.kappa_b},
        {"kappa_c", p.kappa_c},
    };
}

nlohmann::json params_json(const SingleCavityParams &p)
{
    return {{"kappa_a", p.kappa_a}, {"kappa_c", p.kappa_c}, {"g", p.g}};
}

Table spectrum_table(const SpectrumTable &s)
{
    Table t;
    t.columns = {"omega", "T31", "T13", "isolation_db"};
    t.params = params_json(s.params);
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        t.add_row({s.omega[i], s.t31[i], s.t13[i], s.isolation_db[i]});
    }
    return t;
}

Table transmission_table(const SpectrumTable &s)
{
    Table t;
    t.columns = {"omega", "T31", "T13"};
    t.params = params_json(s.params);
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        t.add_row({s.omega[i], s.t31[i], s.t13[i]});
    }
    return t;
}

Table isolation_table(const SpectrumTable &s)
{
    Table t;
    t.columns = {"omega", "isolation_db"};
    t.params = params_json(s.params);
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        t.add_row({s.omega[i], s.isolation_db[i]});
    }
    return t;
}

Table single_cavity_table(const SingleCavitySpectrum &s)
{
    Table t;
    if (s.pair == PortPair::p12)
    {
        t.columns = {"omega", "T21", "T12", "isolation_db"};
    }
    else
    {
        t.columns = {"omega", "T31", "T13", "isolation_db"};
    }
    t.params = params_json(s.params);
    for (std::size_t i = 0; i < s.omega.size(); ++i)
    {
        t.add_row({s.omega[i], s.forward[i], s.backward[i], s.isolation_db[i]});
    }
    return t;
}

Table bloch_table(const BandData &bands)
{
    Table t;
    t.columns = {"k"};
    for (std::size_t b = 0; b < bands.branch_count(); ++b)
    {
        t.columns.push_back("omega_" + std::to_string(b + 1));
    }
    for (std::size_t i = 0; i < bands.k.size(); ++i)
    {
        std::vector<double> row{bands.k[i]};
        row.insert(row.end(), bands.branches[i].begin(), bands.branches[i].end());
        t.add_row(std::move(row));
    }
    return t;
}

Table finite_chain_table(const BandData &bands)
{
    Table t;
    t.columns = {"index", "omega"};
    t.integer_column = {true, false};
    for (std::size_t i = 0; i < bands.finite_eigenvalues.size(); ++i)
    {
        t.add_row({static_cast<double>(i + 1), bands.finite_eigenvalues[i]});
    }
    return t;
}

Table band_edges_table(const std::vector<BandEdges> &edges)
{
    Table t;
    t.columns = {"g", "lower_outer", "lower_inner", "upper_inner", "upper_outer"};
    for (const auto &e : edges)
    {
        t.add_row({e.g, e.lower_outer, e.lower_inner, e.upper_inner, e.upper_outer});
    }
    return t;
}

Table scalar_sweep_table(const SweepResult &sweep, const std::string &value_column)
{
    Table t;
    t.columns = {sweep.parameter, value_column};
    t.integer_column = {sweep.parameter == "N", false};
    if (sweep.baseline)
    {
        t.columns.push_back("sc_baseline_width");
        t.integer_column.push_back(false);
    }
    t.params = params_json(sweep.params);
    t.params["threshold_db"] = sweep.threshold_db;
    for (std::size_t i = 0; i < sweep.values.size(); ++i)
    {
        std::vector<double> row{sweep.values[i], sweep.scalars[i]};
        if (sweep.baseline)
        {
            row.push_back(*sweep.baseline);
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table isolation_map_table(const SweepResult &sweep)
{
    Table t;
    t.columns = {"omega", "J", "isolation_db"};
    t.params = params_json(sweep.params);
    for (std::size_t r = 0; r < sweep.values.size(); ++r)
    {
        const auto &s = sweep.spectra[r];
        for (std::size_t c = 0; c < s.size(); ++c)
        {
            t.add_row({s.omega[c], sweep.values[r], s.isolation_db[c]});
        }
    }
    return t;
}

} // namespace omarray
