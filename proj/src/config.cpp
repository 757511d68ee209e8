#include "omarray/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace omarray
{

using nlohmann::json;

namespace
{

// Walks one JSON object, recording every problem under its JSON-pointer path.
class ObjectReader
{
public:
    ObjectReader(const json &node, std::string path, Violations &out, std::set<std::string> allowed)
        : node_(node), path_(std::move(path)), out_(out), ok_(node.is_object())
    {
        if (!ok_)
        {
            out_.push_back({path_.empty() ? "/" : path_, "expected an object"});
            return;
        }
        for (const auto &item : node_.items())
        {
            if (!allowed.count(item.key()))
            {
                out_.push_back({path_ + "/" + item.key(), "unknown key"});
            }
        }
    }

    bool ok() const noexcept { return ok_; }
    bool has(const std::string &key) const { return ok_ && node_.contains(key); }
    const json &at(const std::string &key) const { return node_.at(key); }
    std::string path(const std::string &key) const { return path_ + "/" + key; }

    void number(const std::string &key, double &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (!v.is_number())
        {
            out_.push_back({path(key), "expected a number"});
            return;
        }
        target = v.get<double>();
    }

    void integer(const std::string &key, int &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (!v.is_number_integer())
        {
            out_.push_back({path(key), "expected an integer"});
            return;
        }
        target = v.get<int>();
    }

    void count(const std::string &key, std::size_t &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (!v.is_number_unsigned())
        {
            out_.push_back({path(key), "expected a non-negative integer"});
            return;
        }
        target = v.get<std::size_t>();
    }

    // Complex numbers are written [re, im]; a bare number means a real value.
    void complex(const std::string &key, cplx &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (v.is_number())
        {
            target = {v.get<double>(), 0.0};
        }
        else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        {
            target = {v[0].get<double>(), v[1].get<double>()};
        }
        else
        {
            out_.push_back({path(key), "expected a number or [re, im]"});
        }
    }

    void string(const std::string &key, std::string &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (!v.is_string())
        {
            out_.push_back({path(key), "expected a string"});
            return;
        }
        target = v.get<std::string>();
    }

    template <class Enum>
    void choice(const std::string &key, Enum &target, const std::map<std::string, Enum> &options) const
    {
        if (!has(key))
        {
            return;
        }
        std::string text;
        string(key, text);
        const auto found = options.find(text);
        if (found != options.end())
        {
            target = found->second;
            return;
        }
        if (node_.at(key).is_string())
        {
            std::string allowed;
            for (const auto &[name, value] : options)
            {
                allowed += (allowed.empty() ? "" : "|") + name;
            }
            out_.push_back({path(key), "expected one of " + allowed});
        }
    }

    void numbers(const std::string &key, std::vector<double> &target) const
    {
        if (!has(key))
        {
            return;
        }
        const auto &v = node_.at(key);
        if (!v.is_array())
        {
            out_.push_back({path(key), "expected an array of numbers"});
            return;
        }
        std::vector<double> values;
        for (const auto &x : v)
        {
            if (!x.is_number())
            {
                out_.push_back({path(key), "expected an array of numbers"});
                return;
            }
            values.push_back(x.get<double>());
        }
        target = std::move(values);
    }

private:
    const json &node_;
    std::string path_;
    Violations &out_;
    bool ok_;
};

const std::map<std::string, SystemKind> kSystems{{"single-cavity", SystemKind::single_cavity},
                                                 {"array", SystemKind::array}};
const std::map<std::string, Task> kTasks{{"spectrum", Task::spectrum},
                                         {"bands", Task::bands},
                                         {"bandwidth", Task::bandwidth},
                                         {"sweep", Task::sweep},
                                         {"figure", Task::figure}};
const std::map<std::string, BandsMode> kBandsModes{
    {"bloch", BandsMode::bloch}, {"finite", BandsMode::finite}, {"edges", BandsMode::edges}};
const std::map<std::string, int> kSectors{{"stub", 0}, {"ssh", 1}, {"both", 2}};
const std::map<std::string, PortPair> kPairs{{"12", PortPair::p12}, {"13", PortPair::p13}};

template <class Enum>
std::string name_of(Enum value, const std::map<std::string, Enum> &options)
{
    for (const auto &[name, v] : options)
    {
        if (v == value)
        {
            return name;
        }
    }
    return {};
}

void prefixed(Violations &out, const std::string &prefix, const Violations &found)
{
    for (const auto &v : found)
    {
        out.push_back({prefix + "/" + v.field, v.message});
    }
}

} // namespace

LatticeParams RunConfig::effective_lattice() const
{
    return pump ? LatticeParams::from_pump(*pump, lattice) : lattice;
}

const char *to_string(SystemKind kind)
{
    return kind == SystemKind::array ? "array" : "single-cavity";
}

const char *to_string(Task task)
{
    switch (task)
    {
    case Task::spectrum:
        return "spectrum";
    case Task::bands:
        return "bands";
    case Task::bandwidth:
        return "bandwidth";
    case Task::sweep:
        return "sweep";
    case Task::figure:
        return "figure";
    }
    return "";
}

RunConfig parse_config(const json &doc)
{
    Violations out;
    RunConfig cfg;

    const ObjectReader root(doc, "", out,
                            {"units", "system", "task", "single_cavity", "lattice", "pump", "grid", "bands", "bandwidth",
                             "sweep", "figure", "output"});
    if (!root.ok())
    {
        throw ConfigError(out);
    }

    for (const char *key : {"units", "system", "task"})
    {
        if (!root.has(key))
        {
            out.push_back({root.path(key), "required key missing"});
        }
    }
    root.string("units", cfg.units);
    if (root.has("units") && cfg.units != "kappa_a")
    {
        out.push_back({"/units", "units must be \"kappa_a\""});
    }
    root.choice("system", cfg.system, kSystems);
    root.choice("task", cfg.task, kTasks);

    if (root.has("single_cavity"))
    {
        const ObjectReader r(root.at("single_cavity"), "/single_cavity", out, {"kappa_a", "kappa_c", "g"});
        r.number("kappa_a", cfg.single_cavity.kappa_a);
        r.number("kappa_c", cfg.single_cavity.kappa_c);
        r.number("g", cfg.single_cavity.g);
    }
    if (root.has("lattice"))
    {
        const ObjectReader r(root.at("lattice"), "/lattice", out,
                             {"N", "v", "g", "g_s", "J_a", "J_b", "J_c", "kappa_a", "kappa_b", "kappa_c"});
        auto &p = cfg.lattice;
        r.integer("N", p.N);
        r.number("v", p.v);
        r.number("g", p.g);
        r.complex("g_s", p.g_s);
        r.number("J_a", p.J_a);
        r.number("J_b", p.J_b);
        r.number("J_c", p.J_c);
        r.number("kappa_a", p.kappa_a);
        r.number("kappa_b", p.kappa_b);
        r.number("kappa_c", p.kappa_c);
    }
    if (root.has("pump"))
    {
        const ObjectReader r(root.at("pump"), "/pump", out, {"Omega", "g_b", "kappa_d", "J_d"});
        PumpConfig pump;
        r.complex("Omega", pump.Omega);
        r.number("g_b", pump.g_b);
        r.number("kappa_d", pump.kappa_d);
        r.number("J_d", pump.J_d);
        cfg.pump = pump;
    }
    if (root.has("grid"))
    {
        const ObjectReader r(root.at("grid"), "/grid", out, {"lo", "hi", "n"});
        r.number("lo", cfg.grid.lo);
        r.number("hi", cfg.grid.hi);
        r.count("n", cfg.grid.n);
    }
    if (root.has("bands"))
    {
        const ObjectReader r(root.at("bands"), "/bands", out, {"mode", "sector", "k_points", "g_values"});
        r.choice("mode", cfg.bands.mode, kBandsModes);
        int sector = 2;
        r.choice("sector", sector, kSectors);
        cfg.bands.sector = sector == 2 ? std::nullopt : std::optional<BandSector>(static_cast<BandSector>(sector));
        r.count("k_points", cfg.bands.k_points);
        r.numbers("g_values", cfg.bands.g_values);
    }
    if (root.has("bandwidth"))
    {
        const ObjectReader r(root.at("bandwidth"), "/bandwidth", out, {"threshold_db", "pair"});
        r.number("threshold_db", cfg.bandwidth.threshold_db);
        r.choice("pair", cfg.bandwidth.pair, kPairs);
    }
    if (root.has("sweep"))
    {
        const ObjectReader r(root.at("sweep"), "/sweep", out, {"parameter", "values", "kappa_d"});
        r.string("parameter", cfg.sweep.parameter);
        r.numbers("values", cfg.sweep.values);
        r.number("kappa_d", cfg.sweep.kappa_d);
    }
    root.string("figure", cfg.figure);
    if (root.has("output"))
    {
        const ObjectReader r(root.at("output"), "/output", out, {"path", "format"});
        r.string("path", cfg.output.path);
        r.string("format", cfg.output.format);
    }

    // Invariants, checked only once the shape is right.
    if (out.empty())
    {
        prefixed(out, "/single_cavity", validate(cfg.single_cavity));
        prefixed(out, "/lattice", validate(cfg.lattice));
        if (cfg.pump)
        {
            prefixed(out, "/pump", validate(*cfg.pump));
        }
        prefixed(out, "", validate(cfg.grid));
        if (cfg.bands.k_points < 2)
        {
            out.push_back({"/bands/k_points", "k_points >= 2"});
        }
        if (cfg.bandwidth.threshold_db == 0.0 || !std::isfinite(cfg.bandwidth.threshold_db))
        {
            out.push_back({"/bandwidth/threshold_db", "threshold_db non-zero"});
        }
        if (cfg.sweep.parameter != "g" && cfg.sweep.parameter != "J" && cfg.sweep.parameter != "N")
        {
            out.push_back({"/sweep/parameter", "expected one of g|J|N"});
        }
        if (!(cfg.sweep.kappa_d > 0.0))
        {
            out.push_back({"/sweep/kappa_d", "kappa_d > 0"});
        }
        if (cfg.output.format != "csv" && cfg.output.format != "json")
        {
            out.push_back({"/output/format", "expected one of csv|json"});
        }
        if (cfg.task == Task::figure && cfg.figure.empty())
        {
            out.push_back({"/figure", "figure id required for task figure"});
        }
        if (cfg.system == SystemKind::single_cavity && cfg.task == Task::bands)
        {
            out.push_back({"/task", std::string("task ") + to_string(cfg.task) + " needs system array"});
        }
        if (cfg.system == SystemKind::single_cavity && cfg.task == Task::sweep && cfg.sweep.parameter != "g")
        {
            out.push_back({"/sweep/parameter", "single-cavity sweeps support only g"});
        }
    }

    if (!out.empty())
    {
        throw ConfigError(std::move(out));
    }
    return cfg;
}

RunConfig parse_config_text(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("byte " + std::to_string(e.byte), e.what());
    }
    return parse_config(doc);
}

RunConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigError(path.string(), "cannot open config file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return parse_config_text(buffer.str());
    }
    catch (const ConfigError &e)
    {
        Violations located;
        for (const auto &v : e.violations())
        {
            located.push_back({path.string() + ":" + v.field, v.message});
        }
        throw ConfigError(std::move(located));
    }
}

json to_json(const RunConfig &cfg)
{
    json doc;
    doc["units"] = cfg.units;
    doc["system"] = to_string(cfg.system);
    doc["task"] = to_string(cfg.task);
    doc["single_cavity"] = {
        {"kappa_a", cfg.single_cavity.kappa_a}, {"kappa_c", cfg.single_cavity.kappa_c}, {"g", cfg.single_cavity.g}};
    const auto &p = cfg.lattice;
    doc["lattice"] = {{"N", p.N},
                      {"v", p.v},
                      {"g", p.g},
                      {"g_s", {p.g_s.real(), p.g_s.imag()}},
                      {"J_a", p.J_a},
                      {"J_b", p.J_b},
                      {"J_c", p.J_c},
                      {"kappa_a", p.kappa_a},
                      {"kappa_b", p.kappa_b},
                      {"kappa_c", p.kappa_c}};
    if (cfg.pump)
    {
        doc["pump"] = {{"Omega", {cfg.pump->Omega.real(), cfg.pump->Omega.imag()}},
                       {"g_b", cfg.pump->g_b},
                       {"kappa_d", cfg.pump->kappa_d},
                       {"J_d", cfg.pump->J_d}};
    }
    doc["grid"] = {{"lo", cfg.grid.lo}, {"hi", cfg.grid.hi}, {"n", cfg.grid.n}};
    const int sector = cfg.bands.sector ? static_cast<int>(*cfg.bands.sector) : 2;
    doc["bands"] = {{"mode", name_of(cfg.bands.mode, kBandsModes)},
                    {"sector", name_of(sector, kSectors)},
                    {"k_points", cfg.bands.k_points},
                    {"g_values", cfg.bands.g_values}};
    doc["bandwidth"] = {{"threshold_db", cfg.bandwidth.threshold_db}, {"pair", name_of(cfg.bandwidth.pair, kPairs)}};
    doc["sweep"] = {{"parameter", cfg.sweep.parameter}, {"values", cfg.sweep.values}, {"kappa_d", cfg.sweep.kappa_d}};
    if (!cfg.figure.empty())
    {
        doc["figure"] = cfg.figure;
    }
    doc["output"] = {{"path", cfg.output.path}, {"format", cfg.output.format}};
    return doc;
}

} // namespace omarray
