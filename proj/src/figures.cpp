#include "omarray/figures.hpp"

#include <fstream>
#include <numbers>
#include <openssl/evp.h>
#include <stdexcept>

#include "omarray/bands.hpp"
#include "omarray/export.hpp"
#include "omarray/metrics.hpp"
#include "omarray/scattering.hpp"
#include "omarray/single_cavity.hpp"

namespace omarray
{

namespace
{

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    return FrequencyGrid{lo, hi, n}.points();
}

RunConfig single_cavity_base(Task task, PortPair pair)
{
    RunConfig cfg;
    cfg.system = SystemKind::single_cavity;
    cfg.task = task;
    cfg.single_cavity = {1.0, 0.01, 3.0};
    cfg.grid = {-6.0, 6.0, 2001};
    cfg.bandwidth.pair = pair;
    cfg.bandwidth.threshold_db = pair == PortPair::p12 ? 20.0 : -20.0;
    if (task == Task::sweep)
    {
        cfg.sweep.parameter = "g";
        cfg.sweep.values = linspace(0.0, 5.0, 101);
    }
    return cfg;
}

// Ten cells, v = 10, g = 2v, kappa_b = kappa_a, kappa_c = kappa_a / 100.
RunConfig array_base(Task task)
{
    RunConfig cfg;
    cfg.system = SystemKind::array;
    cfg.task = task;
    cfg.lattice = {10, 10.0, 20.0, {0.0, 0.0}, 0.0, 0.0, 0.0, 1.0, 1.0, 0.01};
    cfg.grid = {-30.0, 30.0, 2001};
    return cfg;
}

RunConfig with_backscattering(RunConfig cfg, double j)
{
    cfg.lattice.J_a = cfg.lattice.J_b = cfg.lattice.J_c = j;
    cfg.lattice.g_s = cplx{0.0, -2.0 * j / cfg.sweep.kappa_d} * cfg.lattice.g;
    return cfg;
}

RunConfig bands_config(BandsMode mode, std::optional<BandSector> sector)
{
    auto cfg = array_base(Task::bands);
    cfg.bands.mode = mode;
    cfg.bands.sector = sector;
    return cfg;
}

std::vector<FigureRecipe> make_recipes()
{
    std::vector<FigureRecipe> r;
    auto add = [&](std::string id, std::string description, RunConfig cfg) {
        cfg.figure = id;
        r.push_back({std::move(id), std::move(description), std::move(cfg)});
    };

    add("fig1b", "single cavity T21, T12; g = 3, kappa_c = 0.01", single_cavity_base(Task::spectrum, PortPair::p12));
    add("fig1c", "single cavity isolation T21/T12; g = 3", single_cavity_base(Task::spectrum, PortPair::p12));
    add("fig1d", "single cavity 20 dB bandwidth (T21/T12 >= 100) vs g", single_cavity_base(Task::sweep, PortPair::p12));
    add("fig1e", "single cavity T31, T13; g = 3", single_cavity_base(Task::spectrum, PortPair::p13));
    add("fig1f", "single cavity isolation T31/T13; g = 3", single_cavity_base(Task::spectrum, PortPair::p13));
    add("fig1g", "single cavity 20 dB bandwidth (T31/T13 <= 0.01) vs g", single_cavity_base(Task::sweep, PortPair::p13));

    add("fig3a", "finite SSH chain (3 -> 1), N = 10, v = 10", bands_config(BandsMode::finite, BandSector::ssh));
    add("fig3b", "finite stub chain (1 -> 3), N = 10, v = 10, g = 20", bands_config(BandsMode::finite, BandSector::stub));
    {
        auto cfg = bands_config(BandsMode::edges, BandSector::stub);
        cfg.bands.g_values = linspace(0.0, 30.0, 61);
        add("fig3c", "stub band edges and finite-chain spectrum vs g, N = 10, v = 10", cfg);
    }

    add("fig4a", "Bloch bands, 3 -> 1 sector", bands_config(BandsMode::bloch, BandSector::ssh));
    add("fig4b", "Bloch bands, 1 -> 3 sector", bands_config(BandsMode::bloch, BandSector::stub));
    add("fig4c", "array T31, T13; N = 10, v = 10, g = 2v, J = 0", array_base(Task::spectrum));
    add("fig4d", "array isolation; N = 10, v = 10, g = 2v, J = 0", array_base(Task::spectrum));

    {
        auto cfg = array_base(Task::sweep);
        cfg.sweep.parameter = "N";
        cfg.sweep.values = {5.0, 10.0};
        cfg.single_cavity = {1.0, 0.01, 20.0};
        add("fig5a", "isolation of the single cavity and of N = 5, 10 arrays", cfg);
    }
    {
        auto cfg = array_base(Task::sweep);
        cfg.sweep.parameter = "N";
        cfg.sweep.values = linspace(1.0, 20.0, 20);
        cfg.bandwidth.threshold_db = -50.0;
        add("fig5b", "-50 dB bandwidth vs N with single-cavity baseline", cfg);
    }

    {
        auto cfg = with_backscattering(bands_config(BandsMode::bloch, std::nullopt), 0.1);
        add("fig6a", "six Bloch bands with J = 0.1", cfg);
    }
    add("fig6b", "array T31, T13 with J = 0.1", with_backscattering(array_base(Task::spectrum), 0.1));
    add("fig6c", "array isolation with J = 0.1", with_backscattering(array_base(Task::spectrum), 0.1));
    {
        auto cfg = array_base(Task::sweep);
        cfg.sweep.parameter = "J";
        cfg.sweep.values = linspace(0.0, 1.0, 81);
        add("fig6d", "isolation map over omega and J", cfg);
    }
    return r;
}

std::vector<double> k_grid(std::size_t points)
{
    return linspace(-std::numbers::pi, std::numbers::pi, points);
}

Table pick(const Table &source, const std::vector<std::string> &columns)
{
    Table out;
    out.params = source.params;
    std::vector<std::size_t> index;
    for (const auto &name : columns)
    {
        for (std::size_t c = 0; c < source.columns.size(); ++c)
        {
            if (source.columns[c] == name)
            {
                index.push_back(c);
                out.columns.push_back(name);
                out.integer_column.push_back(c < source.integer_column.size() && source.integer_column[c]);
            }
        }
    }
    for (const auto &row : source.rows)
    {
        std::vector<double> picked;
        for (auto c : index)
        {
            picked.push_back(row[c]);
        }
        out.add_row(std::move(picked));
    }
    return out;
}

std::vector<int> as_cells(const std::vector<double> &values)
{
    std::vector<int> cells;
    for (double v : values)
    {
        cells.push_back(static_cast<int>(v));
    }
    return cells;
}

// Builds the named tables for one recipe.
std::vector<std::pair<std::string, Table>> figure_tables(const FigureRecipe &recipe, Execution exec)
{
    const auto &cfg = recipe.config;
    const auto &id = recipe.id;
    const auto lattice = cfg.effective_lattice();
    std::vector<std::pair<std::string, Table>> files;

    if (id == "fig1b" || id == "fig1c" || id == "fig1e" || id == "fig1f")
    {
        const auto table = single_cavity_table(transmission_spectrum(cfg.single_cavity, cfg.grid, cfg.bandwidth.pair, exec));
        const bool transmissions = id == "fig1b" || id == "fig1e";
        if (transmissions)
        {
            files.emplace_back(id, pick(table, {"omega", table.columns[1], table.columns[2]}));
        }
        else
        {
            files.emplace_back(id, pick(table, {"omega", "isolation_db"}));
        }
    }
    else if (id == "fig1d" || id == "fig1g")
    {
        SweepResult sweep;
        sweep.parameter = "g";
        sweep.values = cfg.sweep.values;
        sweep.threshold_db = cfg.bandwidth.threshold_db;
        sweep.scalars.resize(sweep.values.size());
        detail::for_each_index(sweep.values.size(), exec, [&](std::size_t i) {
            auto p = cfg.single_cavity;
            p.g = sweep.values[i];
            sweep.scalars[i] = isolation_bandwidth(p, cfg.bandwidth.threshold_db, cfg.bandwidth.pair);
        });
        auto table = scalar_sweep_table(sweep, "bandwidth");
        table.params = params_json(cfg.single_cavity);
        table.params["threshold_db"] = cfg.bandwidth.threshold_db;
        files.emplace_back(id, table);
    }
    else if (id == "fig3a" || id == "fig3b")
    {
        files.emplace_back(id, finite_chain_table(finite_chain_bands(lattice, *cfg.bands.sector)));
    }
    else if (id == "fig3c")
    {
        files.emplace_back(id + "_edges", band_edges_table(band_edges_vs_g(lattice, cfg.bands.g_values)));
        Table long_form;
        long_form.columns = {"g", "index", "omega"};
        long_form.integer_column = {false, true, false};
        for (double g : cfg.bands.g_values)
        {
            auto p = lattice;
            p.g = g;
            const auto bands = finite_chain_bands(p, BandSector::stub);
            for (std::size_t i = 0; i < bands.finite_eigenvalues.size(); ++i)
            {
                long_form.add_row({g, static_cast<double>(i + 1), bands.finite_eigenvalues[i]});
            }
        }
        files.emplace_back(id, long_form);
    }
    else if (id == "fig4a" || id == "fig4b" || id == "fig6a")
    {
        files.emplace_back(id, bloch_table(bloch_bands(lattice, k_grid(cfg.bands.k_points), cfg.bands.sector, exec)));
    }
    else if (id == "fig4c" || id == "fig6b")
    {
        files.emplace_back(id, transmission_table(spectrum_sweep(DynamicalMatrix(lattice), cfg.grid, exec)));
    }
    else if (id == "fig4d" || id == "fig6c")
    {
        files.emplace_back(id, isolation_table(spectrum_sweep(DynamicalMatrix(lattice), cfg.grid, exec)));
    }
    else if (id == "fig5a")
    {
        const auto omega = cfg.grid.points();
        Table table;
        table.columns = {"omega", "isolation_sc_db"};
        std::vector<SpectrumTable> arrays;
        for (int n : as_cells(cfg.sweep.values))
        {
            auto p = lattice;
            p.N = n;
            arrays.push_back(spectrum_sweep(DynamicalMatrix(p), omega, exec));
            table.columns.push_back("isolation_n" + std::to_string(n) + "_db");
        }
        table.params = params_json(lattice);
        table.params["single_cavity"] = params_json(cfg.single_cavity);
        for (std::size_t i = 0; i < omega.size(); ++i)
        {
            std::vector<double> row{omega[i], single_cavity_isolation_db(cfg.single_cavity, omega[i])};
            for (const auto &a : arrays)
            {
                row.push_back(a.isolation_db[i]);
            }
            table.add_row(std::move(row));
        }
        files.emplace_back(id, table);
    }
    else if (id == "fig5b")
    {
        files.emplace_back(id, scalar_sweep_table(sweep_N(lattice, cfg.bandwidth.threshold_db, as_cells(cfg.sweep.values), exec),
                                                  "width"));
    }
    else if (id == "fig6d")
    {
        files.emplace_back(id, isolation_map_table(
                                   sweep_backscatter(lattice, cfg.sweep.values, cfg.grid.points(), cfg.sweep.kappa_d, exec)));
    }
    else
    {
        throw ValidationError("figure", "unknown figure id '" + id + "'");
    }
    return files;
}

void write_file(const std::filesystem::path &path, const std::string &bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << bytes;
    if (!out)
    {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace

const std::vector<FigureRecipe> &figure_recipes()
{
    static const std::vector<FigureRecipe> recipes = make_recipes();
    return recipes;
}

const FigureRecipe &figure_recipe(std::string_view id)
{
    for (const auto &recipe : figure_recipes())
    {
        if (recipe.id == id)
        {
            return recipe;
        }
    }
    throw ValidationError("figure", "unknown figure id '" + std::string(id) + "'");
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    {
        throw std::runtime_error("SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i)
    {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0f]);
    }
    return out;
}

std::vector<ManifestEntry> run_figure(const FigureRecipe &recipe, const std::filesystem::path &out_dir, Execution exec)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
    {
        throw std::runtime_error("cannot create output directory " + out_dir.string());
    }

    std::vector<ManifestEntry> manifest;
    for (const auto &[name, table] : figure_tables(recipe, exec))
    {
        const std::string bytes = to_csv(table);
        const std::string file = name + ".csv";
        write_file(out_dir / file, bytes);
        manifest.push_back({file, bytes.size(), sha256_hex(bytes)});
    }

    nlohmann::json doc;
    doc["figure"] = recipe.id;
    doc["description"] = recipe.description;
    doc["recipe"] = to_json(recipe.config);
    for (const auto &entry : manifest)
    {
        doc["files"].push_back({{"file", entry.file}, {"bytes", entry.bytes}, {"sha256", entry.sha256}});
    }
    write_file(out_dir / (recipe.id + "_manifest.json"), doc.dump(2) + "\n");
    return manifest;
}

} // namespace omarray
