#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "mgd/data/amputation.hpp"
#include "mgd/data/csv.hpp"
#include "mgd/data/ec_demo.hpp"
#include "mgd/data/sampling.hpp"
#include "mgd/data/transforms.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/independence.hpp"
#include "mgd/graphs/io.hpp"
#include "mgd/graphs/mgraph.hpp"
#include "oracles.hpp"

using namespace mgd;
using namespace mgd::data;
using graphs::MechanismClass;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

std::string data_path(const std::string& rel) { return std::string(MGD_SOURCE_DIR) + "/data/" + rel; }

CategoricalDataset column(const std::vector<int>& values, int card = 2) {
    std::vector<std::vector<int>> rows;
    for (int v : values) rows.push_back({v});
    return fixtures::dataset(fixtures::schema({card}), rows);
}

// Two independent uniform columns W and X (plus a third, Y, copying X with noise).
CategoricalDataset wxy(std::size_t n, std::uint64_t seed) {
    oracle::Network net;
    net.cards = {2, 3, 2};
    net.parents = {{}, {}, {1}};
    net.table = {{0.5, 0.5}, {0.3, 0.3, 0.4}, {0.8, 0.2, 0.5, 0.5, 0.1, 0.9}};
    const auto g = fixtures::dag(net);
    return forward_sample(g, fixtures::params(net, g), n, seed);
}

AmputationTarget mar_target(const std::string& x, const std::string& w, double p_w0, double p_w1) {
    AmputationTarget t;
    t.target = x;
    t.mechanism = MechanismClass::MAR;
    t.drivers = {w};
    t.intercept = logit(p_w0);
    t.weights[w] = {0.0, logit(p_w1) - logit(p_w0)};
    return t;
}

}  // namespace

TEST(Csv, OneNaGivesOneMissingCell) {
    const auto d = parse_csv("a,b\nx,1\ny,NA\nx,2\n");
    EXPECT_EQ(d.rows(), 3u);
    std::size_t missing = 0;
    for (const auto& row : d.mask())
        for (bool m : row) missing += m;
    EXPECT_EQ(missing, 1u);
    EXPECT_TRUE(d.is_missing(1, 1));
    EXPECT_EQ(d.variable(0).states, (std::vector<std::string>{"x", "y"}));
}

TEST(Csv, EmptyFieldIsMissing) {
    const auto d = parse_csv("a,b\nx,\n,y\nz,w\n");
    EXPECT_TRUE(d.is_missing(0, 1));
    EXPECT_TRUE(d.is_missing(1, 0));
}

TEST(Csv, UnknownStateNamesRowAndColumn) {
    const std::vector<VariableSchema> schema{{"a", {"x", "y"}}, {"b", {"1", "2"}}};
    try {
        parse_csv("a,b\nx,1\nz,2\n", schema);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownState);
        const std::string msg = e.what();
        EXPECT_NE(msg.find("'z'"), std::string::npos);
        EXPECT_NE(msg.find("row 2"), std::string::npos);
        EXPECT_NE(msg.find("'a'"), std::string::npos);
    }
}

TEST(Csv, HeaderAndShapeErrors) {
    const std::vector<VariableSchema> schema{{"a", {"x", "y"}}, {"b", {"1", "2"}}};
    EXPECT_EQ(code_of([&] { parse_csv("a,c\nx,1\n", schema); }), ErrorCode::HeaderMismatch);
    EXPECT_EQ(code_of([&] { parse_csv("a,b\nx\n"); }), ErrorCode::MalformedCsv);
    EXPECT_EQ(code_of([&] { parse_csv("a,b\n\"x,1\n"); }), ErrorCode::MalformedCsv);
    EXPECT_EQ(code_of([&] { parse_csv(""); }), ErrorCode::MalformedCsv);
}

TEST(Csv, SchemaColumnOrderFollowsHeader) {
    const std::vector<VariableSchema> schema{{"a", {"x", "y"}}, {"b", {"1", "2"}}};
    const auto d = parse_csv("b,a\n2,x\n", schema);
    EXPECT_EQ(d.variable(0).name, "b");
    EXPECT_EQ(d.at(0, 0), 1);
}

TEST(Csv, QuotingRoundTrip) {
    const auto d = parse_csv("\"a,1\",b\n\"he said \"\"hi\"\"\",NA\nplain,v\nplain,w\n");
    EXPECT_EQ(d.variable(0).name, "a,1");
    EXPECT_EQ(d.variable(0).states[0], "he said \"hi\"");
    const auto again = parse_csv(write_csv(d));
    EXPECT_EQ(again, d);
}

TEST(Csv, BundledEcFile) {
    const auto schema = parse_schema_json(graphs::read_text_file(data_path("examples/ec_schema.json")));
    const auto d = read_csv(data_path("examples/ec_demo.csv"), schema);
    EXPECT_EQ(d.rows(), 763u);
    EXPECT_EQ(d.cols(), 19u);
    EXPECT_EQ(d.cardinality(d.index_of("Hospital")), 10u);
    EXPECT_TRUE(d.is_complete());
    const auto mnar = read_csv(data_path("examples/ec_demo_mnar.csv"), schema);
    EXPECT_EQ(mnar.rows(), 763u);
    EXPECT_FALSE(mnar.is_complete());
}

TEST(Schema, Validation) {
    EXPECT_EQ(code_of([] { validate_schema({{"a", {"x"}}}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { validate_schema({{"a", {"x", "x"}}}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { validate_schema({{"a", {"x", "y"}}, {"a", {"x", "y"}}}); }), ErrorCode::InvalidArgument);
    const std::vector<VariableSchema> ok{{"a", {"x", "y"}}};
    EXPECT_EQ(parse_schema_json(write_schema_json(ok)), ok);
}

TEST(Indicators, FullyObservedUnchanged) {
    const auto d = column({0, 1, 1});
    EXPECT_EQ(indicators(d), d);
}

TEST(Indicators, MeanEqualsMissingRate) {
    std::vector<int> v(100, 1);
    for (int i = 0; i < 30; ++i) v[static_cast<std::size_t>(i * 3)] = CategoricalDataset::kMissing;
    const auto a = indicators(column(v));
    ASSERT_EQ(a.cols(), 2u);
    EXPECT_EQ(a.variable(1).name, "R_V0");
    double sum = 0;
    for (int x : a.column(1)) sum += x;
    EXPECT_DOUBLE_EQ(sum / 100.0, 0.3);
    for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(a.at(i, 1) == 1, a.is_missing(i, 0));
}

TEST(Indicators, TwoPartialColumns) {
    const auto d = fixtures::dataset(fixtures::schema({2, 2, 2}), {{-1, 0, 1}, {0, 0, -1}, {1, 1, 1}});
    const auto a = indicators(d);
    ASSERT_EQ(a.cols(), 5u);
    EXPECT_EQ(a.variable(3).name, "R_V0");
    EXPECT_EQ(a.variable(4).name, "R_V2");
    EXPECT_EQ(a.select_columns(std::vector<std::size_t>{0, 1, 2}), d);
}

TEST(Indicators, NameCollision) {
    const std::vector<VariableSchema> s{{"X", {"a", "b"}}, {"R_X", {"0", "1"}}};
    const auto d = fixtures::dataset(s, {{-1, 0}});
    EXPECT_EQ(code_of([&] { indicators(d); }), ErrorCode::NameCollision);
}

TEST(ForwardSample, DegenerateCpt) {
    oracle::Network net{{2}, {{}}, {{0.0, 1.0}}};
    const auto g = fixtures::dag(net);
    const auto d = forward_sample(g, fixtures::params(net, g), 5, 1);
    ASSERT_EQ(d.rows(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(d.at(i, 0), 1);
}

TEST(ForwardSample, CopyChain) {
    oracle::Network net{{2, 2}, {{}, {0}}, {{0.4, 0.6}, {1.0, 0.0, 0.0, 1.0}}};
    const auto g = fixtures::dag(net);
    const auto d = forward_sample(g, fixtures::params(net, g), 1000, 2);
    for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_EQ(d.at(i, 0), d.at(i, 1));
}

TEST(ForwardSample, ColliderMarginalsMatchExactEnumeration) {
    std::mt19937_64 rng(11);
    const auto net = oracle::random_network({2, 3, 2}, {{0, 2}, {1, 2}}, rng);
    const auto g = fixtures::dag(net);
    const auto d = forward_sample(g, fixtures::params(net, g), 100000, 3);
    for (int v = 0; v < 3; ++v)
        for (int s = 0; s < net.cards[static_cast<std::size_t>(v)]; ++s) {
            double hits = 0;
            for (int x : d.column(static_cast<std::size_t>(v))) hits += x == s;
            EXPECT_NEAR(hits / 100000.0, net.marginal(v, s), 0.01) << v << "=" << s;
        }
}

TEST(ForwardSample, DeterministicAndBlockwise) {
    const auto a = wxy(10000, 4);
    EXPECT_EQ(a, wxy(10000, 4));
    EXPECT_NE(a, wxy(10000, 5));
    // The first block does not depend on how many rows follow.
    const auto head = wxy(100, 4);
    std::vector<std::size_t> first(100);
    for (std::size_t i = 0; i < 100; ++i) first[i] = i;
    EXPECT_EQ(a.select_rows(first), head);
}

TEST(ForwardSample, ZeroRows) {
    EXPECT_EQ(wxy(0, 1).rows(), 0u);
}

TEST(Ampute, ExtremeMcar) {
    const auto d = wxy(500, 1);
    AmputationTarget t{"V1", MechanismClass::MCAR, {}, logit(0.0), {}};
    EXPECT_EQ(ampute(d, {{t}, 3}), d);
    t.intercept = logit(1.0);
    const auto all = ampute(d, {{t}, 3});
    EXPECT_EQ(all.missing_count(1), 500u);
    EXPECT_EQ(all.missing_count(0), 0u);
}

TEST(Ampute, MarStratumRates) {
    const auto d = wxy(100000, 2);
    const auto out = ampute(d, {{mar_target("V1", "V0", 0.5, 0.0)}, 9});
    double w0 = 0, miss0 = 0, miss1 = 0;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        if (out.at(i, 0) == 0) {
            ++w0;
            miss0 += out.is_missing(i, 1);
        } else {
            miss1 += out.is_missing(i, 1);
        }
    }
    EXPECT_NEAR(miss0 / w0, 0.5, 0.01);
    EXPECT_EQ(miss1, 0.0);
    const auto aug = indicators(out);
    EXPECT_LT(estimation::g_test(aug, aug.index_of("R_V1"), 0).p_value, 0.001);
    // Unmasked cells are untouched.
    for (std::size_t i = 0; i < out.rows(); ++i)
        if (!out.is_missing(i, 1)) {
            EXPECT_EQ(out.at(i, 1), d.at(i, 1));
        }
}

TEST(Ampute, ProbabilitiesFollowLogistic) {
    const auto d = wxy(50, 1);
    const auto p = missing_probabilities(d, mar_target("V1", "V0", 0.2, 0.7));
    for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_NEAR(p[i], d.at(i, 0) == 0 ? 0.2 : 0.7, 1e-12);
    EXPECT_DOUBLE_EQ(logistic(logit(0.0)), 0.0);
    EXPECT_DOUBLE_EQ(logistic(logit(1.0)), 1.0);
}

TEST(Ampute, Validation) {
    const auto d = wxy(50, 1);
    AmputationTarget t = mar_target("V1", "Nope", 0.2, 0.7);
    EXPECT_EQ(code_of([&] { ampute(d, {{t}, 1}); }), ErrorCode::UnknownVariable);
    // A MAR driver amputed elsewhere in the same spec.
    AmputationTarget other{"V0", MechanismClass::MCAR, {}, 0.0, {}};
    EXPECT_EQ(code_of([&] { ampute(d, {{mar_target("V1", "V0", 0.2, 0.7), other}, 1}); }), ErrorCode::DriverMissing);
    // A MAR driver with missing cells in the input.
    const auto holes = ampute(d, {{other}, 1});
    EXPECT_EQ(code_of([&] { ampute(holes, {{mar_target("V1", "V0", 0.2, 0.7)}, 1}); }), ErrorCode::DriverMissing);
    AmputationTarget bad = mar_target("V1", "V0", 0.2, 0.7);
    bad.weights["V0"] = {1.0};
    EXPECT_EQ(code_of([&] { ampute(d, {{bad}, 1}); }), ErrorCode::InvalidArgument);
}

TEST(Ampute, DeterministicInSeed) {
    const auto d = wxy(2000, 1);
    const AmputationSpec s{{mar_target("V1", "V0", 0.3, 0.6)}, 5};
    EXPECT_EQ(ampute(d, s), ampute(d, s));
    EXPECT_NE(ampute(d, s), ampute(d, {s.targets, 6}));
}

TEST(Ampute, JsonRoundTripAndStateKeys) {
    const auto d = wxy(10, 1);
    const AmputationSpec s{{mar_target("V1", "V0", 0.3, 0.6)}, 5};
    const auto back = parse_amputation_json(write_amputation_json(s));
    EXPECT_EQ(back.seed, 5u);
    ASSERT_EQ(back.targets.size(), 1u);
    EXPECT_EQ(back.targets[0].weights.at("V0"), s.targets[0].weights.at("V0"));
    const auto keyed = parse_amputation_json(
        R"({"targets":[{"target":"V1","mechanism":"MAR","drivers":["V0"],"weights":{"V0":{"s1":2.5}}}]})", &d);
    EXPECT_EQ(keyed.targets[0].weights.at("V0"), (std::vector<double>{0.0, 2.5}));
}

TEST(Ampute, ClassifyRoundTrip) {
    // The m-graph implied by each mechanism's drivers classifies back to it.
    const auto causal = graphs::build_dag({"W", "X", "Y"}, std::vector<graphs::NamedEdge>{{"W", "X"}, {"X", "Y"}});
    const std::vector<graphs::VertexClass> classes{graphs::VertexClass::Observed,
                                                   graphs::VertexClass::PartiallyObserved,
                                                   graphs::VertexClass::Observed};
    const std::vector<std::pair<MechanismClass, std::vector<std::string>>> cases{
        {MechanismClass::MCAR, {}}, {MechanismClass::MAR, {"W"}}, {MechanismClass::MNAR, {"X"}}};
    for (const auto& [mech, drivers] : cases) {
        const auto m = graphs::build_mgraph(causal, classes, {{"X", drivers}});
        EXPECT_EQ(graphs::classify_mechanism(m), mech);
    }
}

TEST(Ampute, McarPassesIndependenceTests) {
    int passed = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto d = wxy(100000, 100 + seed);
        const auto aug = indicators(ampute(d, {{{"V1", MechanismClass::MCAR, {}, logit(0.3), {}}}, seed}));
        const auto r = aug.index_of("R_V1");
        bool ok = true;
        for (std::size_t other : {std::size_t{0}, std::size_t{2}}) ok = ok && estimation::g_test(aug, r, other).p_value >= 0.001;
        passed += ok;
    }
    EXPECT_GE(passed, 19);
}

TEST(Ampute, MarRejectsDriverOnly) {
    int passed = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto d = wxy(100000, 200 + seed);
        const auto aug = indicators(ampute(d, {{mar_target("V2", "V0", 0.1, 0.5)}, seed}));
        const auto r = aug.index_of("R_V2");
        const std::vector<std::size_t> given_w{0};
        const bool ok = estimation::g_test(aug, r, 0).p_value < 0.001 &&
                        estimation::g_test(aug, r, 1, given_w).p_value >= 0.001;
        passed += ok;
    }
    EXPECT_GE(passed, 19);
}

TEST(ImputeMode, Examples) {
    EXPECT_EQ(impute_mode(column({0, 0, 1, -1})).at(3, 0), 0);
    EXPECT_EQ(impute_mode(column({0, 1, -1})).at(2, 0), 0);
    EXPECT_EQ(impute_mode(column({1, 2, 2, -1}, 3)).at(3, 0), 2);
    const auto full = column({0, 1, 1});
    EXPECT_EQ(impute_mode(full), full);
    EXPECT_TRUE(impute_mode(column({1, -1, -1})).is_complete());
    EXPECT_EQ(code_of([] { impute_mode(column({-1, -1})); }), ErrorCode::AllMissingColumn);
}

TEST(Bootstrap, SingleRow) {
    const auto d = column({1});
    EXPECT_EQ(bootstrap(d, 3), d);
    EXPECT_EQ(code_of([] { bootstrap(column({}), 1); }), ErrorCode::EmptyDataset);
}

TEST(Bootstrap, DistinctFractionNearOneMinusInverseE) {
    const auto rows = bootstrap_rows(10000, 8);
    const std::set<std::size_t> distinct(rows.begin(), rows.end());
    EXPECT_NEAR(static_cast<double>(distinct.size()) / 10000.0, 1.0 - std::exp(-1.0), 0.02);
}

TEST(Bootstrap, RowsAreOriginalRowsAndDeterministic) {
    auto d = ampute(wxy(300, 1), {{{"V1", MechanismClass::MCAR, {}, logit(0.3), {}}}, 2});
    const auto b = bootstrap(d, 5);
    EXPECT_EQ(b, bootstrap(d, 5));
    EXPECT_EQ(b.schema(), d.schema());
    EXPECT_EQ(b.rows(), d.rows());
    const auto orig = fixtures::rows_of(d);
    const std::set<std::vector<int>> pool(orig.begin(), orig.end());
    for (const auto& r : fixtures::rows_of(b)) EXPECT_TRUE(pool.count(r));
    const auto idx = bootstrap_rows(d.rows(), 5);
    EXPECT_EQ(d.select_rows(idx), b);
}

TEST(Split, Sizes) {
    std::vector<int> v(10);
    for (int i = 0; i < 10; ++i) v[static_cast<std::size_t>(i)] = i % 2;
    const auto s = split(column(v), 0.3, 1);
    EXPECT_EQ(s.train.rows(), 7u);
    EXPECT_EQ(s.test.rows(), 3u);
    std::set<std::size_t> all(s.train_rows.begin(), s.train_rows.end());
    all.insert(s.test_rows.begin(), s.test_rows.end());
    EXPECT_EQ(all.size(), 10u);
    EXPECT_TRUE(std::is_sorted(s.train_rows.begin(), s.train_rows.end()));
    const auto again = split(column(v), 0.3, 1);
    EXPECT_EQ(again.test_rows, s.test_rows);
    const auto ec = split(ec_demo::sample(763, 1), 0.2, 4);
    EXPECT_EQ(ec.train.rows(), 611u);
    EXPECT_EQ(ec.test.rows(), 152u);
}

TEST(Split, BadFraction) {
    const auto d = column({0, 1, 0});
    EXPECT_EQ(code_of([&] { split(d, 0.0, 1); }), ErrorCode::BadFraction);
    EXPECT_EQ(code_of([&] { split(d, 1.0, 1); }), ErrorCode::BadFraction);
    EXPECT_EQ(code_of([&] { split(column({0}), 0.5, 1); }), ErrorCode::BadFraction);
}

TEST(EcDemo, ShapeAndKnowledge) {
    const auto d = ec_demo::sample(763, 3);
    EXPECT_EQ(d.rows(), 763u);
    EXPECT_EQ(d.cols(), 19u);
    EXPECT_EQ(d.cardinality(d.index_of("Hospital")), ec_demo::kHospitals);
    const auto g = ec_demo::graph();
    for (const auto& [p, c] : ec_demo::required_edges()) EXPECT_TRUE(g.has_edge(g.index_of(p), g.index_of(c)));
    for (const auto& [p, c] : ec_demo::forbidden_edges()) EXPECT_FALSE(g.has_edge(g.index_of(p), g.index_of(c)));
}

TEST(EcDemo, MnarAmputationMasksBiomarkers) {
    const auto d = ec_demo::sample(5000, 3);
    const auto spec = ec_demo::mnar_amputation(4);
    validate_amputation(d, spec);
    std::size_t mnar = 0;
    for (const auto& t : spec.targets) mnar += t.mechanism == MechanismClass::MNAR;
    EXPECT_GE(mnar, 3u);
    const auto out = ampute(d, spec);
    for (const char* v : {"CA125", "p53", "L1CAM", "LVSI"}) EXPECT_GT(out.missing_count(out.index_of(v)), 0u) << v;
}
