#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mgd/error.hpp"
#include "mgd/graphs/dag.hpp"
#include "mgd/graphs/dsep.hpp"
#include "mgd/graphs/io.hpp"
#include "mgd/graphs/mgraph.hpp"
#include "oracles.hpp"

using namespace mgd;
using namespace mgd::graphs;

namespace {

Dag from_oracle(int n, const oracle::EdgeList& edges) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("V" + std::to_string(i));
    std::vector<Edge> es(edges.begin(), edges.end());
    return Dag(names, es);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

Dag chain() { return build_dag({"A", "B", "C"}, std::vector<NamedEdge>{{"A", "B"}, {"B", "C"}}); }
Dag collider() { return build_dag({"A", "B", "C"}, std::vector<NamedEdge>{{"A", "B"}, {"C", "B"}}); }

std::string data_path(const std::string& rel) { return std::string(MGD_SOURCE_DIR) + "/data/" + rel; }

}  // namespace

TEST(BuildDag, ChainIsValid) {
    const Dag g = chain();
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_EQ(g.topological_order(), (std::vector<int>{0, 1, 2}));
}

TEST(BuildDag, TwoCycleRejected) {
    EXPECT_EQ(code_of([] { build_dag({"A", "B"}, std::vector<NamedEdge>{{"A", "B"}, {"B", "A"}}); }),
              ErrorCode::CycleDetected);
}

TEST(BuildDag, CycleMessageListsCycle) {
    try {
        build_dag({"A", "B", "C"}, std::vector<NamedEdge>{{"A", "B"}, {"B", "C"}, {"C", "A"}});
        FAIL();
    } catch (const Error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("A"), std::string::npos);
        EXPECT_NE(msg.find("C"), std::string::npos);
    }
}

TEST(BuildDag, SurvivalChain) {
    const Dag g = build_dag({"Recurrence", "Survival1yr", "Survival3yr", "Survival5yr"},
                            std::vector<NamedEdge>{{"Survival1yr", "Survival3yr"}, {"Survival3yr", "Survival5yr"}});
    EXPECT_TRUE(g.reaches(g.index_of("Survival1yr"), g.index_of("Survival5yr")));
}

TEST(BuildDag, Errors) {
    EXPECT_EQ(code_of([] { build_dag({"A", "B"}, std::vector<NamedEdge>{{"A", "Z"}}); }), ErrorCode::UnknownVertex);
    EXPECT_EQ(code_of([] { build_dag({"A", "B"}, std::vector<NamedEdge>{{"A", "B"}, {"A", "B"}}); }),
              ErrorCode::DuplicateEdge);
    EXPECT_EQ(code_of([] { build_dag({"A", "A"}, std::vector<NamedEdge>{}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { build_dag({"A", ""}, std::vector<NamedEdge>{}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { build_dag({"A"}, std::vector<NamedEdge>{{"A", "A"}}); }), ErrorCode::CycleDetected);
}

TEST(BuildDag, NamesAreCaseSensitive) {
    const Dag g = build_dag({"a", "A"}, std::vector<NamedEdge>{{"a", "A"}});
    EXPECT_EQ(g.index_of("A"), 1);
    EXPECT_EQ(code_of([&] { g.index_of("B"); }), ErrorCode::UnknownVertex);
}

TEST(BuildDag, MutationKeepsAcyclic) {
    Dag g = chain();
    EXPECT_EQ(code_of([&] { g.add_edge(2, 0); }), ErrorCode::CycleDetected);
    EXPECT_EQ(g.edge_count(), 2u);
    g.reverse_edge(0, 1);
    EXPECT_TRUE(g.has_edge(1, 0));
    g.remove_edge(1, 0);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(DSeparation, Chain) {
    EXPECT_TRUE(d_separated(chain(), std::vector<std::string>{"A"}, {"C"}, {"B"}));
    EXPECT_FALSE(d_separated(chain(), std::vector<std::string>{"A"}, {"C"}, {}));
}

TEST(DSeparation, Collider) {
    EXPECT_FALSE(d_separated(collider(), std::vector<std::string>{"A"}, {"C"}, {"B"}));
    EXPECT_TRUE(d_separated(collider(), std::vector<std::string>{"A"}, {"C"}, {}));
}

TEST(DSeparation, ColliderOpenedByDescendant) {
    const Dag g = build_dag({"A", "B", "C", "D"}, std::vector<NamedEdge>{{"A", "B"}, {"C", "B"}, {"B", "D"}});
    EXPECT_FALSE(d_separated(g, std::vector<std::string>{"A"}, {"C"}, {"D"}));
}

TEST(DSeparation, Errors) {
    EXPECT_EQ(code_of([] { d_separated(chain(), std::vector<std::string>{"A"}, {"A"}, {}); }),
              ErrorCode::OverlappingSets);
    EXPECT_EQ(code_of([] { d_separated(chain(), std::vector<std::string>{"A"}, {"C"}, {"A"}); }),
              ErrorCode::OverlappingSets);
    EXPECT_EQ(code_of([] { d_separated(chain(), std::vector<std::string>{"A"}, {"Q"}, {}); }),
              ErrorCode::UnknownVertex);
}

TEST(DSeparation, ActiveTrailIsAWitness) {
    const Dag g = build_dag({"A", "B", "C", "D"}, std::vector<NamedEdge>{{"A", "B"}, {"C", "B"}, {"B", "D"}});
    const auto trail = active_trail(g, {0}, {2}, {3});
    ASSERT_TRUE(trail.has_value());
    EXPECT_EQ(trail->front(), 0);
    EXPECT_EQ(trail->back(), 2);
    for (std::size_t i = 0; i + 1 < trail->size(); ++i) {
        const int a = (*trail)[i], b = (*trail)[i + 1];
        EXPECT_TRUE(g.has_edge(a, b) || g.has_edge(b, a));
    }
    EXPECT_FALSE(active_trail(g, {0}, {2}, {}).has_value());
}

TEST(DSeparation, AgreesWithPathEnumerationOnAllFourVertexDags) {
    const auto dags = oracle::all_dags(4);
    ASSERT_EQ(dags.size(), 543u);
    std::size_t checked = 0;
    for (const auto& edges : dags) {
        const Dag g = from_oracle(4, edges);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                if (x == y) continue;
                for (int mask = 0; mask < 16; ++mask) {
                    if (mask & (1 << x) || mask & (1 << y)) continue;
                    std::vector<int> z;
                    for (int v = 0; v < 4; ++v)
                        if (mask & (1 << v)) z.push_back(v);
                    ASSERT_EQ(d_separated(g, {x}, {y}, z), oracle::d_separated(4, edges, {x}, {y}, z));
                    ++checked;
                }
            }
    }
    EXPECT_EQ(checked, 543u * 12u * 4u);
}

TEST(DSeparation, AgreesWithPathEnumerationOnRandomFiveVertexSets) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> role(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto edges = oracle::random_dag(5, 0.45, rng);
        const Dag g = from_oracle(5, edges);
        std::vector<int> order{0, 1, 2, 3, 4};
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> x{order[0]}, y{order[1]}, z;
        for (int k = 2; k < 5; ++k) {
            const int r = role(rng);
            (r == 0 ? x : r == 1 ? y : z).push_back(order[static_cast<std::size_t>(k)]);
            if (r == 3) z.pop_back();
        }
        ASSERT_EQ(d_separated(g, x, y, z), oracle::d_separated(5, edges, x, y, z)) << "trial " << trial;
    }
}

TEST(DSeparation, SymmetricInXAndY) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto edges = oracle::random_dag(6, 0.4, rng);
        const Dag g = from_oracle(6, edges);
        EXPECT_EQ(d_separated(g, {0, 1}, {4}, {2}), d_separated(g, {4}, {0, 1}, {2}));
        const std::vector<int> none;
        EXPECT_EQ(d_separated(g, {5}, {3}, none), d_separated(g, {3}, {5}, none));
    }
}

TEST(BundledGraphs, MnarStatements) {
    const Dag g = read_graph_json_file(data_path("graphs/m_mnar.json")).graph;
    using V = std::vector<std::string>;
    EXPECT_TRUE(d_separated(g, V{"LNM"}, V{"Radiotherapy"}, V{}));
    EXPECT_FALSE(d_separated(g, V{"LNM"}, V{"Chemotherapy"}, V{}));
    EXPECT_FALSE(d_separated(g, V{"LNM"}, V{"CA125", "p53"}, V{"PostoperativeGrade"}));
    EXPECT_FALSE(d_separated(g, V{"MyometrialInvasion"}, V{"Radiotherapy"}, V{}));
}

TEST(BundledGraphs, MarStatements) {
    const Dag g = read_graph_json_file(data_path("graphs/m_mar.json")).graph;
    using V = std::vector<std::string>;
    EXPECT_TRUE(d_separated(g, V{"LNM"}, V{"CA125", "p53"}, V{"PostoperativeGrade"}));
    EXPECT_FALSE(d_separated(g, V{"LNM"}, V{"Radiotherapy"}, V{}));
}

namespace {

// A causal graph X <- W with X partially observed; the indicator's parents vary.
MechanismClass classify_with(const std::vector<std::string>& r_parents) {
    const Dag causal = build_dag({"W", "X", "Y"}, std::vector<NamedEdge>{{"W", "X"}, {"X", "Y"}});
    const std::vector<VertexClass> classes{VertexClass::Observed, VertexClass::PartiallyObserved,
                                           VertexClass::Observed};
    return classify_mechanism(build_mgraph(causal, classes, {{"X", r_parents}}));
}

}  // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(classify_with({}), MechanismClass::MCAR);
    EXPECT_EQ(classify_with({"W"}), MechanismClass::MAR);
    EXPECT_EQ(classify_with({"X"}), MechanismClass::MNAR);
    EXPECT_EQ(classify_with({"Y"}), MechanismClass::MAR);
}

TEST(Classify, LatentDriverIsMnar) {
    const Dag causal = build_dag({"U", "X"}, std::vector<NamedEdge>{{"U", "X"}});
    const MGraph m = build_mgraph(causal, {VertexClass::Latent, VertexClass::PartiallyObserved}, {{"X", {"U"}}});
    EXPECT_EQ(classify_mechanism(m), MechanismClass::MNAR);
}

TEST(Classify, McarImpliesMarCriterion) {
    // For every 3-vertex causal DAG and every indicator parent set, MCAR
    // graphs also pass the MAR d-separation test.
    for (const auto& edges : oracle::all_dags(3)) {
        const Dag causal = from_oracle(3, edges);
        const std::vector<VertexClass> classes{VertexClass::Observed, VertexClass::PartiallyObserved,
                                               VertexClass::Latent};
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<std::string> ps;
            for (int v = 0; v < 3; ++v)
                if (mask & (1 << v)) ps.push_back("V" + std::to_string(v));
            const MGraph m = build_mgraph(causal, classes, {{"V1", ps}});
            const MechanismClass c = classify_mechanism(m);
            if (c == MechanismClass::MCAR) {
                const Dag& g = m.graph();
                EXPECT_TRUE(d_separated(g, std::vector<std::string>{"V1", "V2"}, {"R_V1"}, {"V0"}));
            }
            // The oracle decides the class independently.
            const bool mcar = mask == 0;
            const bool mar = (mask & 0b110) == 0;
            EXPECT_EQ(c, mcar ? MechanismClass::MCAR : mar ? MechanismClass::MAR : MechanismClass::MNAR);
        }
    }
}

TEST(MGraph, WiringValidated) {
    const Dag causal = build_dag({"X"}, std::vector<NamedEdge>{});
    const MGraph m = build_mgraph(causal, {VertexClass::PartiallyObserved}, {});
    ASSERT_EQ(m.wiring().size(), 1u);
    const Wiring w = m.wiring().at(0);
    EXPECT_EQ(m.graph().name(w.proxy), "S_X");
    EXPECT_EQ(m.graph().name(w.indicator), "R_X");

    // A proxy with a child breaks the wiring rules.
    Dag bad = m.graph();
    const std::vector<std::string> names = bad.vertices();
    std::vector<std::string> more = names;
    more.push_back("Z");
    std::vector<NamedEdge> edges = bad.named_edges();
    edges.push_back({"S_X", "Z"});
    std::vector<VertexClass> classes = m.classes();
    classes.push_back(VertexClass::Observed);
    EXPECT_EQ(code_of([&] { (void)MGraph{Dag(more, edges), classes}; }), ErrorCode::InvalidMGraph);
}

TEST(ExportDot, ChainIsDeterministic) {
    const std::string a = export_dot(chain());
    EXPECT_EQ(a, export_dot(chain()));
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(a);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("  ", 0) != 0) continue;
        ++(line.find("->") == std::string::npos ? nodes : edges);
    }
    EXPECT_EQ(nodes, 3u);
    EXPECT_EQ(edges, 2u);
    EXPECT_EQ(a.find('\r'), std::string::npos);
}

TEST(ExportDot, EmptyGraph) {
    const std::string dot = export_dot(Dag());
    EXPECT_EQ(dot.find("->"), std::string::npos);
    EXPECT_EQ(dot, "digraph G {\n}\n");
}

TEST(ExportDot, RoleColors) {
    const Dag g = read_graph_json_file(data_path("graphs/m_mnar.json")).graph;
    const RoleMap roles = parse_role_json(read_text_file(data_path("graphs/ec_roles.json")));
    const std::string dot = export_dot(g, std::nullopt, roles);
    const auto line_of = [&](const std::string& v) {
        const auto at = dot.find("\"" + v + "\" [");
        return dot.substr(at, dot.find('\n', at) - at);
    };
    EXPECT_NE(line_of("LNM").find("orange"), std::string::npos);
    EXPECT_NE(line_of("Hospital").find("gray"), std::string::npos);
    EXPECT_NE(line_of("Chemotherapy").find("blue"), std::string::npos);
    EXPECT_NE(line_of("Survival5yr").find("red"), std::string::npos);
    EXPECT_NE(line_of("CA125").find("lightblue"), std::string::npos);
}

TEST(ExportDot, RoundTripsThroughReader) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Dag g = from_oracle(7, oracle::random_dag(7, 0.3, rng));
        const GraphDocument back = parse_dot(export_dot(g));
        EXPECT_EQ(back.graph, g);
    }
}

TEST(ExportDot, ReaderAcceptsChainsAndComments) {
    const GraphDocument d = parse_dot("// c\ndigraph G {\n  a; b [color=red];\n  a -> b -> \"c d\"; /* x */\n}\n");
    EXPECT_EQ(d.graph.size(), 3u);
    EXPECT_TRUE(d.graph.has_edge(d.graph.index_of("b"), d.graph.index_of("c d")));
}

TEST(GraphJson, RoundTripWithClasses) {
    const Dag g = chain();
    const ClassMap classes{VertexClass::Observed, VertexClass::PartiallyObserved, VertexClass::Latent};
    const GraphDocument back = parse_graph_json(write_graph_json(g, classes));
    EXPECT_EQ(back.graph, g);
    ASSERT_TRUE(back.classes.has_value());
    EXPECT_EQ(*back.classes, classes);
    EXPECT_EQ(write_graph_json(back.graph, back.classes), write_graph_json(g, classes));
}

TEST(GraphJson, MalformedIsParseError) {
    EXPECT_EQ(code_of([] { parse_graph_json("{\"vertices\": 3}"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_graph_json("not json"); }), ErrorCode::Parse);
}
