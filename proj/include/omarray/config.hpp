#ifndef OMARRAY_CONFIG_HPP
#define OMARRAY_CONFIG_HPP

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "omarray/bands.hpp"
#include "omarray/grid.hpp"
#include "omarray/params.hpp"
#include "omarray/single_cavity.hpp"

namespace omarray
{

// Schema violations reported with JSON-pointer paths in Violation::field.
class ConfigError : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

enum class SystemKind
{
    single_cavity,
    array,
};

enum class Task
{
    spectrum,
    bands,
    bandwidth,
    sweep,
    figure,
};

enum class BandsMode
{
    bloch,
    finite,
    edges,
};

struct BandsSpec
{
    BandsMode mode = BandsMode::bloch;
    std::optional<BandSector> sector; // empty: both sectors coupled (bloch only)
    std::size_t k_points = 201;
    std::vector<double> g_values;      // edges mode

    bool operator==(const BandsSpec &) const = default;
};

struct BandwidthSpec
{
    double threshold_db = -50.0;
    PortPair pair = PortPair::p13; // single cavity only

    bool operator==(const BandwidthSpec &) const = default;
};

struct SweepSpec
{
    std::string parameter = "g"; // g | J | N
    std::vector<double> values;
    double kappa_d = 1.0;        // J sweeps: g_s = (-2i J / kappa_d) g

    bool operator==(const SweepSpec &) const = default;
};

struct OutputSpec
{
    std::string path;
    std::string format = "csv";

    bool operator==(const OutputSpec &) const = default;
};

// One validated run. Parameter blocks not present in the file keep the
// defaults below (the four-port cavity at g = 3, the ten-cell array with
// v = 10, g = 20).
struct RunConfig
{
    std::string units = "kappa_a";
    SystemKind system = SystemKind::array;
    Task task = Task::spectrum;
    SingleCavityParams single_cavity{1.0, 0.01, 3.0};
    LatticeParams lattice{10, 10.0, 20.0, {0.0, 0.0}, 0.0, 0.0, 0.0, 1.0, 1.0, 0.01};
    std::optional<PumpConfig> pump;
    FrequencyGrid grid{-30.0, 30.0, 2001};
    BandsSpec bands;
    BandwidthSpec bandwidth;
    SweepSpec sweep;
    std::string figure;
    OutputSpec output;

    // Lattice parameters with pump-derived couplings applied when a pump block is present.
    LatticeParams effective_lattice() const;

    bool operator==(const RunConfig &) const = default;
};

// Strict parse: unknown keys, wrong types and invariant violations are all
// collected and thrown together as ConfigError.
RunConfig parse_config(const nlohmann::json &doc);
RunConfig parse_config_text(const std::string &text);
RunConfig load_config(const std::filesystem::path &path);

nlohmann::json to_json(const RunConfig &config);

const char *to_string(SystemKind kind);
const char *to_string(Task task);

} // namespace omarray

#endif // OMARRAY_CONFIG_HPP
