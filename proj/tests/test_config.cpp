#include <gtest/gtest.h>

#include <random>
#include <string>

#include "fracdyn/cli/config.hpp"

using namespace fracdyn;
using namespace fracdyn::cli;

namespace {

std::string rejected_field(std::string_view text)
{
    try {
        parse_config(text);
    }
    catch (const ParameterError& e) {
        return e.field();
    }
    return "<accepted>";
}

} // namespace

TEST(ParseConfig, EmptyObjectGivesReferenceDefaults)
{
    const RunConfig cfg = parse_config("{}");
    const auto& m = cfg.model;
    EXPECT_EQ(m.lambda, 1.5);
    EXPECT_EQ(m.accumulation_rate, 0.2);
    EXPECT_EQ(m.delta1, 1.0);
    EXPECT_EQ(m.delta2, 1.0);
    EXPECT_EQ(m.omega1, 0.5);
    EXPECT_EQ(m.omega2, 0.5);
    EXPECT_EQ(m.a, 5.0);
    EXPECT_EQ(m.b, 4.0);
    EXPECT_EQ(m.x_star, 1.35);
    EXPECT_EQ(m.y_star, 0.5);
    EXPECT_EQ(m.alpha1.value(), 1.0);
    EXPECT_EQ(m.alpha2.value(), 1.0);
    EXPECT_EQ(cfg.horizon, 1.0);
    EXPECT_EQ(cfg.steps, 320u);
    EXPECT_EQ(cfg.step_counts, (std::vector<std::size_t>{10, 20, 40, 80, 160, 320}));
}

TEST(ParseConfig, FractionalOrders)
{
    const RunConfig cfg = parse_config(R"({"alpha1": 0.9, "alpha2": 0.8})");
    RunConfig expected;
    expected.model.alpha1 = FractionalOrder(0.9);
    expected.model.alpha2 = FractionalOrder(0.8);
    EXPECT_EQ(cfg, expected);
}

TEST(ParseConfig, AccumulationRateOutOfRangeNamesField)
{
    try {
        parse_config(R"({"n": 1.5})");
        FAIL();
    }
    catch (const ParameterError& e) {
        EXPECT_EQ(e.field(), "n");
        EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos) << e.what();
    }
}

TEST(ParseConfig, RejectionsNameTheKey)
{
    EXPECT_EQ(rejected_field(R"({"gamma": 1})"), "gamma");
    EXPECT_EQ(rejected_field(R"({"lambda": "big"})"), "lambda");
    EXPECT_EQ(rejected_field(R"({"alpha1": 1.2})"), "alpha1");
    EXPECT_EQ(rejected_field(R"({"alpha2": 0})"), "alpha2");
    EXPECT_EQ(rejected_field(R"({"steps": 1})"), "steps");
    EXPECT_EQ(rejected_field(R"({"steps": 2.5})"), "steps");
    EXPECT_EQ(rejected_field(R"({"steps": -4})"), "steps");
    EXPECT_EQ(rejected_field(R"({"horizon": 0})"), "horizon");
    EXPECT_EQ(rejected_field(R"({"step_counts": [10, 30]})"), "step_counts");
    EXPECT_EQ(rejected_field(R"({"step_counts": [10]})"), "step_counts");
    EXPECT_EQ(rejected_field(R"({"mode": "plot"})"), "mode");
    EXPECT_EQ(rejected_field(R"({"a": -5})"), "a");
    EXPECT_EQ(rejected_field(R"({"output_path": 3})"), "output_path");
}

TEST(ParseConfig, MalformedDocuments)
{
    EXPECT_THROW(parse_config(R"({"lambda": 1.5.2})"), ConfigError);
    EXPECT_THROW(parse_config("[1, 2]"), ConfigError);
    try {
        parse_config("{\n  \"lambda\": 1,\n  \"n\": ,\n}");
        FAIL();
    }
    catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(ParseConfig, IntegralFloatsAreAcceptedAsCounts)
{
    EXPECT_EQ(parse_config(R"({"steps": 640.0})").steps, 640u);
}

TEST(ApplyOverride, ParsesJsonOrFallsBackToString)
{
    nlohmann::json doc = nlohmann::json::object();
    apply_override(doc, "alpha1=0.9");
    apply_override(doc, "mode=phase");
    apply_override(doc, "step_counts=[5,10,20]");
    apply_override(doc, "alpha1=0.7");
    const RunConfig cfg = config_from_json(doc);
    EXPECT_EQ(cfg.model.alpha1.value(), 0.7);
    EXPECT_EQ(cfg.mode, RunMode::phase);
    EXPECT_EQ(cfg.step_counts, (std::vector<std::size_t>{5, 10, 20}));
    EXPECT_THROW(apply_override(doc, "no_equals_sign"), ConfigError);
    EXPECT_THROW(apply_override(doc, "=3"), ConfigError);
}

TEST(SerializeConfig, RoundTripIsIdentity)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        RunConfig cfg;
        auto& m = cfg.model;
        m.lambda = 0.01 + 10.0 * unit(rng);
        m.accumulation_rate = 0.001 + 0.998 * unit(rng);
        m.delta1 = 3.0 * unit(rng);
        m.delta2 = 3.0 * unit(rng);
        m.omega1 = 5.0 * unit(rng);
        m.omega2 = 5.0 * unit(rng);
        m.x_star = 10.0 * unit(rng) - 5.0;
        m.y_star = 10.0 * unit(rng) - 5.0;
        m.a = 0.1 + 9.0 * unit(rng);
        m.b = 0.1 + 9.0 * unit(rng);
        m.alpha1 = FractionalOrder(1.0 - unit(rng));
        m.alpha2 = FractionalOrder(1.0 - unit(rng));
        cfg.horizon = 0.5 + 100.0 * unit(rng);
        cfg.steps = 2 + static_cast<std::size_t>(5000 * unit(rng));
        cfg.mode = static_cast<RunMode>(trial % 3);
        cfg.output_path = "out_" + std::to_string(trial) + ".csv";
        cfg.step_counts = {static_cast<std::size_t>(1 + trial), static_cast<std::size_t>(2 + 2 * trial)};

        const RunConfig once = parse_config(serialize_config(cfg));
        EXPECT_EQ(once, cfg);
        EXPECT_EQ(parse_config(serialize_config(once)), once);
        EXPECT_EQ(serialize_config(once), serialize_config(cfg));
    }
}
