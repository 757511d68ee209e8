#include <gtest/gtest.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "omarray/config.hpp"
#include "omarray/csv.hpp"
#include "omarray/export.hpp"
#include "omarray/metrics.hpp"
#include "support.hpp"

using namespace omarray;
using namespace testing_support;

namespace
{
std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

bool mentions(const ConfigError &e, const std::string &field, const std::string &message_part = "")
{
    return std::any_of(e.violations().begin(), e.violations().end(), [&](const Violation &v) {
        return v.field == field && v.message.find(message_part) != std::string::npos;
    });
}

// Runs parse_config_text and returns the error, failing the test if it parsed.
ConfigError parse_error(const std::string &text)
{
    try
    {
        parse_config_text(text);
    }
    catch (const ConfigError &e)
    {
        return e;
    }
    ADD_FAILURE() << "config parsed: " << text;
    return ConfigError(Violations{});
}

const char *kMinimal = R"({"units": "kappa_a", "system": "array", "task": "spectrum"})";
} // namespace

TEST(FormatDouble, RoundTripsAndIsScientific)
{
    for (int trial = 0; trial < 1000; ++trial)
    {
        const double x = uniform(-1, 1) * std::pow(10.0, uniform(-300, 300));
        const std::string s = format_double(x);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, x) << s;
        EXPECT_NE(s.find('e'), std::string::npos);
        EXPECT_EQ(s.find(','), std::string::npos);
    }
    EXPECT_EQ(format_double(0.5), "5.0000000000000000e-01");
}

TEST(Export, EmptyTableIsHeaderOnly)
{
    Table t;
    t.columns = {"omega", "T31", "T13", "isolation_db"};
    EXPECT_EQ(to_csv(t), "omega,T31,T13,isolation_db\n");
}

TEST(Export, RowWidthChecked)
{
    Table t;
    t.columns = {"a", "b"};
    EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
}

TEST(Export, IntegerColumns)
{
    Table t;
    t.columns = {"N", "width"};
    t.integer_column = {true, false};
    t.add_row({3.0, 1.5});
    EXPECT_EQ(lines(to_csv(t))[1], "3,1.5000000000000000e+00");
}

TEST(Export, SpectrumColumnsOmegaFirst)
{
    const auto s = spectrum_sweep(DynamicalMatrix(fig4_set()), FrequencyGrid{-1, 1, 3});
    const auto csv = to_csv(spectrum_table(s));
    const auto ls = lines(csv);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "omega,T31,T13,isolation_db");
    EXPECT_EQ(ls[1].substr(0, ls[1].find(',')), format_double(-1.0));
    EXPECT_EQ(lines(to_csv(transmission_table(s)))[0], "omega,T31,T13");
    EXPECT_EQ(lines(to_csv(isolation_table(s)))[0], "omega,isolation_db");
}

TEST(Export, JsonRoundTripEmbedsParams)
{
    auto p = fig4_set();
    p.g_s = {0.25, -4.0};
    p.J_b = 0.1;
    const auto s = spectrum_sweep(DynamicalMatrix(p), FrequencyGrid{-30, 30, 201});
    const auto table = spectrum_table(s);
    const auto back = table_from_json(to_json_text(table));
    EXPECT_EQ(back.columns, table.columns);
    ASSERT_EQ(back.rows.size(), table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            EXPECT_LE(std::abs(back.rows[r][c] - table.rows[r][c]), 1e-12 * std::max(1.0, std::abs(table.rows[r][c])));
    EXPECT_EQ(back.params.at("N"), 10);
    EXPECT_EQ(back.params.at("g_s")[1].get<double>(), -4.0);
    EXPECT_EQ(back.params.at("J_b").get<double>(), 0.1);
}

TEST(Export, Formats)
{
    EXPECT_EQ(parse_format("csv"), Format::csv);
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_THROW(parse_format("xml"), ValidationError);
    EXPECT_STREQ(extension(Format::json), ".json");
}

TEST(Export, SweepTables)
{
    const auto sweep = sweep_N(fig4_set(), -50.0, {1, 2});
    const auto t = scalar_sweep_table(sweep, "width");
    EXPECT_EQ(t.columns, (std::vector<std::string>{"N", "width", "sc_baseline_width"}));
    EXPECT_EQ(lines(to_csv(t))[1].substr(0, 2), "1,");

    const auto map = isolation_map_table(sweep_backscatter(fig4_set(), {0.0, 0.5}, {-1.0, 0.0, 1.0}));
    EXPECT_EQ(map.columns, (std::vector<std::string>{"omega", "J", "isolation_db"}));
    EXPECT_EQ(map.rows.size(), 6u);
}

TEST(Config, MinimalArrayConfig)
{
    const auto cfg = parse_config_text(kMinimal);
    EXPECT_EQ(cfg.system, SystemKind::array);
    EXPECT_EQ(cfg.task, Task::spectrum);
    EXPECT_EQ(cfg.lattice, fig4_set());
    EXPECT_EQ(cfg.grid, (FrequencyGrid{-30, 30, 2001}));
}

TEST(Config, ZeroCellsReported)
{
    const auto e = parse_error(R"({"units": "kappa_a", "system": "array", "task": "spectrum", "lattice": {"N": 0}})");
    EXPECT_TRUE(mentions(e, "/lattice/N", "N >= 1"));
}

TEST(Config, UnknownKeysRejectedEverywhere)
{
    EXPECT_TRUE(mentions(parse_error(R"({"units": "kappa_a", "system": "array", "task": "spectrum", "extra": 1})"),
                         "/extra", "unknown key"));
    EXPECT_TRUE(mentions(
        parse_error(R"({"units": "kappa_a", "system": "array", "task": "spectrum", "lattice": {"kapa_a": 1}})"),
        "/lattice/kapa_a", "unknown key"));
    EXPECT_TRUE(
        mentions(parse_error(R"({"units": "kappa_a", "system": "array", "task": "spectrum", "grid": {"step": 1}})"),
                 "/grid/step"));
}

TEST(Config, RequiredKeysAndUnits)
{
    const auto e = parse_error(R"({"units": "Hz"})");
    EXPECT_TRUE(mentions(e, "/system", "required"));
    EXPECT_TRUE(mentions(e, "/task", "required"));
    EXPECT_TRUE(mentions(e, "/units"));
}

TEST(Config, TypeErrorsCarryPaths)
{
    const auto e = parse_error(
        R"({"units": "kappa_a", "system": "array", "task": "spectrum", "lattice": {"N": 2.5, "v": "ten", "g_s": [1]}})");
    EXPECT_TRUE(mentions(e, "/lattice/N", "integer"));
    EXPECT_TRUE(mentions(e, "/lattice/v", "number"));
    EXPECT_TRUE(mentions(e, "/lattice/g_s"));
}

TEST(Config, ParseErrorHasLocation)
{
    const auto e = parse_error("{\"units\": ");
    ASSERT_FALSE(e.violations().empty());
    EXPECT_EQ(e.violations()[0].field.rfind("byte ", 0), 0u);
}

TEST(Config, CrossFieldRules)
{
    EXPECT_TRUE(mentions(parse_error(R"({"units": "kappa_a", "system": "single-cavity", "task": "bands"})"), "/task"));
    EXPECT_TRUE(mentions(parse_error(R"({"units": "kappa_a", "system": "array", "task": "figure"})"), "/figure"));
    EXPECT_TRUE(mentions(
        parse_error(R"({"units": "kappa_a", "system": "array", "task": "bandwidth", "bandwidth": {"threshold_db": 0}})"),
        "/bandwidth/threshold_db"));
    EXPECT_TRUE(mentions(
        parse_error(R"({"units": "kappa_a", "system": "array", "task": "spectrum", "output": {"format": "xml"}})"),
        "/output/format"));
    EXPECT_TRUE(mentions(parse_error(R"({"units": "kappa_a", "system": "single-cavity", "task": "sweep",
                                          "sweep": {"parameter": "N", "values": [1]}})"),
                         "/sweep/parameter"));
}

TEST(Config, PumpDrivesEffectiveLattice)
{
    const auto cfg = parse_config_text(R"({"units": "kappa_a", "system": "array", "task": "spectrum",
        "pump": {"Omega": [1, 0], "g_b": 1, "kappa_d": 1, "J_d": 0.1}})");
    const auto p = cfg.effective_lattice();
    EXPECT_NEAR(p.g, 2.0 / 1.04, 1e-12);
    EXPECT_NEAR(p.g_s.imag(), -0.2 * p.g, 1e-14);
}

TEST(Config, JsonRoundTrip)
{
    RunConfig cfg;
    cfg.system = SystemKind::array;
    cfg.task = Task::sweep;
    cfg.lattice.g_s = {0.0, -4.0};
    cfg.lattice.J_a = 0.1;
    cfg.pump = PumpConfig{{0.5, -0.25}, 2.0, 1.0, 0.3};
    cfg.bands.sector = BandSector::ssh;
    cfg.bands.g_values = {0.0, 1.0};
    cfg.bandwidth.pair = PortPair::p12;
    cfg.sweep = {"J", {0.0, 0.5, 1.0}, 2.0};
    cfg.output = {"out", "json"};
    EXPECT_EQ(parse_config(to_json(cfg)), cfg);
    EXPECT_EQ(parse_config_text(to_json(cfg).dump()), cfg);
}

TEST(Config, LoadConfigPrefixesPath)
{
    const auto dir = scratch_dir("config");
    const auto path = dir / "bad.json";
    std::ofstream(path) << R"({"units": "kappa_a", "system": "array", "task": "spectrum", "lattice": {"N": 0}})";
    try
    {
        load_config(path);
        FAIL() << "expected ConfigError";
    }
    catch (const ConfigError &e)
    {
        EXPECT_EQ(e.violations()[0].field, path.string() + ":/lattice/N");
    }
    EXPECT_THROW(load_config(dir / "missing.json"), ConfigError);
}
