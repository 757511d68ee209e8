// Command-line front end: spectra, bands, bandwidths, sweeps and figure data.
//
//   omarray transmission --grid -30:30:2001 --out results
//   omarray figure fig4c --out figures
//   omarray validate run.json
//
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "omarray/bands.hpp"
#include "omarray/config.hpp"
#include "omarray/export.hpp"
#include "omarray/figures.hpp"
#include "omarray/metrics.hpp"
#include "omarray/scattering.hpp"
#include "omarray/single_cavity.hpp"

namespace
{

using namespace omarray;

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct CommonOptions
{
    std::string config;
    std::string out;
    std::string format;
    std::string grid;
};

void add_common(CLI::App *cmd, CommonOptions &opts, bool with_grid = true)
{
    cmd->add_option("--config", opts.config, "JSON run configuration")->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out, "Output directory (stdout when omitted)");
    cmd->add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (with_grid)
    {
        cmd->add_option("--grid", opts.grid, "Frequency grid lo:hi:n, in units of kappa_a");
    }
}

// Loads --config (or starts from the defaults) and checks that it describes the
// kind of run the subcommand performs.
RunConfig resolve(const CommonOptions &opts, std::optional<SystemKind> system, std::optional<Task> task)
{
    RunConfig cfg;
    if (!opts.config.empty())
    {
        cfg = load_config(opts.config);
        if (system && cfg.system != *system)
        {
            throw ConfigError("/system", std::string("this command needs system ") + to_string(*system));
        }
        if (task && cfg.task != *task)
        {
            throw ConfigError("/task", std::string("this command needs task ") + to_string(*task));
        }
    }
    else
    {
        if (system)
        {
            cfg.system = *system;
        }
        if (task)
        {
            cfg.task = *task;
        }
        if (cfg.system == SystemKind::single_cavity)
        {
            cfg.grid = {-6.0, 6.0, 2001};
        }
    }
    if (!opts.grid.empty())
    {
        cfg.grid = parse_grid(opts.grid);
    }
    if (!opts.format.empty())
    {
        cfg.output.format = opts.format;
    }
    if (!opts.out.empty())
    {
        cfg.output.path = opts.out;
    }
    return cfg;
}

void emit(const Table &table, const RunConfig &cfg, const std::string &name)
{
    const Format format = parse_format(cfg.output.format);
    const std::string bytes = export_table(table, format);
    if (cfg.output.path.empty())
    {
        std::cout << bytes;
        return;
    }
    const std::filesystem::path dir(cfg.output.path);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto file = dir / (name + extension(format));
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out || !(out << bytes))
    {
        throw std::runtime_error("cannot write " + file.string());
    }
    std::cerr << "wrote " << file.string() << '\n';
}

int run_validate(const std::string &path)
{
    try
    {
        const auto cfg = load_config(path);
        std::cout << "ok: " << to_string(cfg.system) << " / " << to_string(cfg.task) << '\n';
        return 0;
    }
    catch (const ValidationError &e)
    {
        for (const auto &v : e.violations())
        {
            std::cout << v.field << ": " << v.message << '\n';
        }
        return kExitValidation;
    }
}

std::vector<int> to_cells(const std::vector<double> &values)
{
    std::vector<int> cells;
    for (double v : values)
    {
        if (v != static_cast<double>(static_cast<int>(v)))
        {
            throw ValidationError("/sweep/values", "N values must be integers");
        }
        cells.push_back(static_cast<int>(v));
    }
    return cells;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Scattering, band structure and isolation of Brillouin optomechanical cavities and arrays"};
    app.require_subcommand(1);

    CommonOptions sc_opts;
    std::string sc_pair;
    auto *sc_cmd = app.add_subcommand("single-cavity", "Transmission spectrum of the four-port cavity");
    add_common(sc_cmd, sc_opts);
    sc_cmd->add_option("--pair", sc_pair, "Port pair 12 or 13")->check(CLI::IsMember({"12", "13"}));

    CommonOptions bands_opts;
    std::string bands_mode;
    std::string bands_sector;
    auto *bands_cmd = app.add_subcommand("bands", "Bloch or finite-chain band structure of the array");
    add_common(bands_cmd, bands_opts, false);
    bands_cmd->add_option("--mode", bands_mode, "bloch, finite or edges")
        ->check(CLI::IsMember({"bloch", "finite", "edges"}));
    bands_cmd->add_option("--sector", bands_sector, "stub, ssh or both")->check(CLI::IsMember({"stub", "ssh", "both"}));

    CommonOptions tr_opts;
    auto *tr_cmd = app.add_subcommand("transmission", "T31, T13 and isolation spectrum of the array");
    add_common(tr_cmd, tr_opts);

    CommonOptions bw_opts;
    std::optional<double> bw_threshold;
    std::string bw_system;
    auto *bw_cmd = app.add_subcommand("bandwidth", "Isolation bandwidth around omega = 0");
    add_common(bw_cmd, bw_opts, false);
    bw_cmd->add_option("--threshold", bw_threshold, "Signed threshold in dB (e.g. -50 or 20)");
    bw_cmd->add_option("--system", bw_system, "array or single-cavity")
        ->check(CLI::IsMember({"array", "single-cavity"}));

    CommonOptions sw_opts;
    std::string sw_parameter;
    std::vector<double> sw_values;
    auto *sw_cmd = app.add_subcommand("sweep", "Bandwidth vs g or N, or isolation map vs J");
    add_common(sw_cmd, sw_opts);
    sw_cmd->add_option("--parameter", sw_parameter, "g, J or N")->check(CLI::IsMember({"g", "J", "N"}));
    sw_cmd->add_option("--values", sw_values, "Swept values")->delimiter(',');

    std::string fig_id;
    CommonOptions fig_opts;
    bool fig_list = false;
    bool fig_print = false;
    auto *fig_cmd = app.add_subcommand("figure", "Write the data files behind one figure panel");
    fig_cmd->add_option("id", fig_id, "Figure id, e.g. fig4c");
    fig_cmd->add_option("--config", fig_opts.config, "Recipe override (JSON run configuration)")
        ->check(CLI::ExistingFile);
    fig_cmd->add_option("--out", fig_opts.out, "Output directory")->default_val(".");
    fig_cmd->add_flag("--list", fig_list, "List figure ids and exit");
    fig_cmd->add_flag("--print-recipe", fig_print, "Print the recipe as a JSON run configuration and exit");

    std::string validate_path;
    auto *val_cmd = app.add_subcommand("validate", "Check a run configuration against the schema");
    val_cmd->add_option("config", validate_path, "JSON run configuration")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try
    {
        if (val_cmd->parsed())
        {
            return run_validate(validate_path);
        }

        if (sc_cmd->parsed())
        {
            auto cfg = resolve(sc_opts, SystemKind::single_cavity, Task::spectrum);
            if (!sc_pair.empty())
            {
                cfg.bandwidth.pair = sc_pair == "12" ? PortPair::p12 : PortPair::p13;
            }
            emit(single_cavity_table(transmission_spectrum(cfg.single_cavity, cfg.grid, cfg.bandwidth.pair)), cfg,
                 "single_cavity");
        }
        else if (tr_cmd->parsed())
        {
            const auto cfg = resolve(tr_opts, SystemKind::array, Task::spectrum);
            emit(spectrum_table(spectrum_sweep(DynamicalMatrix(cfg.effective_lattice()), cfg.grid)), cfg, "transmission");
        }
        else if (bands_cmd->parsed())
        {
            auto cfg = resolve(bands_opts, SystemKind::array, Task::bands);
            if (!bands_mode.empty())
            {
                cfg.bands.mode = bands_mode == "bloch" ? BandsMode::bloch
                                 : bands_mode == "finite" ? BandsMode::finite
                                                          : BandsMode::edges;
            }
            if (!bands_sector.empty())
            {
                cfg.bands.sector = bands_sector == "both" ? std::nullopt
                                   : std::optional<BandSector>(bands_sector == "stub" ? BandSector::stub
                                                                                      : BandSector::ssh);
            }
            const auto lattice = cfg.effective_lattice();
            switch (cfg.bands.mode)
            {
            case BandsMode::bloch:
                emit(bloch_table(bloch_bands(lattice,
                                             FrequencyGrid{-std::numbers::pi, std::numbers::pi, cfg.bands.k_points}.points(),
                                             cfg.bands.sector)),
                     cfg, "bands");
                break;
            case BandsMode::finite:
                if (!cfg.bands.sector)
                {
                    throw ValidationError("/bands/sector", "finite-chain bands need sector stub or ssh");
                }
                emit(finite_chain_table(finite_chain_bands(lattice, *cfg.bands.sector)), cfg, "bands");
                break;
            case BandsMode::edges:
            {
                auto g_values = cfg.bands.g_values;
                if (g_values.empty())
                {
                    g_values = FrequencyGrid{0.0, 3.0 * lattice.v, 61}.points();
                }
                emit(band_edges_table(band_edges_vs_g(lattice, g_values)), cfg, "band_edges");
                break;
            }
            }
        }
        else if (bw_cmd->parsed())
        {
            std::optional<SystemKind> system;
            if (!bw_system.empty())
            {
                system = bw_system == "array" ? SystemKind::array : SystemKind::single_cavity;
            }
            auto cfg = resolve(bw_opts, system, Task::bandwidth);
            if (bw_threshold)
            {
                cfg.bandwidth.threshold_db = *bw_threshold;
            }
            Table table;
            table.columns = {"threshold_db", "omega_lo", "omega_hi", "width"};
            if (cfg.system == SystemKind::array)
            {
                const auto lattice = cfg.effective_lattice();
                const auto result = array_isolation_bandwidth(lattice, cfg.bandwidth.threshold_db);
                table.params = params_json(lattice);
                table.add_row({result.threshold_db, result.interval.lo, result.interval.hi, result.width()});
            }
            else
            {
                const double width = isolation_bandwidth(cfg.single_cavity, cfg.bandwidth.threshold_db, cfg.bandwidth.pair);
                table.params = params_json(cfg.single_cavity);
                table.add_row({cfg.bandwidth.threshold_db, -0.5 * width, 0.5 * width, width});
            }
            emit(table, cfg, "bandwidth");
        }
        else if (sw_cmd->parsed())
        {
            auto cfg = resolve(sw_opts, std::nullopt, Task::sweep);
            if (!sw_parameter.empty())
            {
                cfg.sweep.parameter = sw_parameter;
            }
            if (!sw_values.empty())
            {
                cfg.sweep.values = sw_values;
            }
            if (cfg.sweep.values.empty())
            {
                throw ValidationError("/sweep/values", "no sweep values given");
            }
            const auto lattice = cfg.effective_lattice();
            if (cfg.system == SystemKind::single_cavity)
            {
                SweepResult sweep;
                sweep.parameter = "g";
                sweep.values = cfg.sweep.values;
                sweep.threshold_db = cfg.bandwidth.threshold_db;
                for (double g : sweep.values)
                {
                    auto p = cfg.single_cavity;
                    p.g = g;
                    sweep.scalars.push_back(isolation_bandwidth(p, cfg.bandwidth.threshold_db, cfg.bandwidth.pair));
                }
                auto table = scalar_sweep_table(sweep, "bandwidth");
                table.params = params_json(cfg.single_cavity);
                emit(table, cfg, "sweep_g");
            }
            else if (cfg.sweep.parameter == "g")
            {
                emit(scalar_sweep_table(sweep_g(lattice, cfg.sweep.values, cfg.bandwidth.threshold_db), "width"), cfg,
                     "sweep_g");
            }
            else if (cfg.sweep.parameter == "N")
            {
                emit(scalar_sweep_table(sweep_N(lattice, cfg.bandwidth.threshold_db, to_cells(cfg.sweep.values)), "width"),
                     cfg, "sweep_N");
            }
            else
            {
                emit(isolation_map_table(sweep_backscatter(lattice, cfg.sweep.values, cfg.grid.points(), cfg.sweep.kappa_d)),
                     cfg, "sweep_J");
            }
        }
        else if (fig_cmd->parsed())
        {
            if (fig_list)
            {
                for (const auto &recipe : figure_recipes())
                {
                    std::cout << recipe.id << "  " << recipe.description << '\n';
                }
                return 0;
            }
            if (fig_id.empty())
            {
                throw ValidationError("figure", "figure id required (see --list)");
            }
            FigureRecipe recipe = figure_recipe(fig_id);
            if (fig_print)
            {
                std::cout << to_json(recipe.config).dump(2) << '\n';
                return 0;
            }
            if (!fig_opts.config.empty())
            {
                recipe.config = load_config(fig_opts.config);
            }
            for (const auto &entry : run_figure(recipe, fig_opts.out))
            {
                std::cout << entry.file << "  " << entry.bytes << " bytes  sha256 " << entry.sha256 << '\n';
            }
        }
        return 0;
    }
    catch (const ValidationError &e)
    {
        std::cerr << "validation error:";
        for (const auto &v : e.violations())
        {
            std::cerr << "\n  " << v.field << ": " << v.message;
        }
        std::cerr << '\n';
        return kExitValidation;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
