#include <doctest.h>

#include "strat/graph.hpp"
#include "test_util.hpp"

using namespace strat;
using namespace testutil;

TEST_CASE("parse: smallest legal graph") {
    StratifoldGraph g = parse_graph("w a 0\n");
    CHECK(g.white_count() == 1);
    CHECK(g.black_count() == 0);
    CHECK(g.white(0).id == "a");
    CHECK(g.white(0).genus == 0);
}

TEST_CASE("parse: b12 tree with comments") {
    StratifoldGraph g = parse_graph(
        "# a b12 tree\n"
        "w w1 0\n"
        "w w2 0\n"
        "b k # the circle\n"
        "e w1 k 1\n"
        "e w2 k 2\n");
    CHECK(g.white_count() == 2);
    CHECK(g.black_count() == 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.black_labels(0) == std::vector<int>{1, 2});
    CHECK(is_trivalent(g));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_graph("w a 0\nb k\ne a k 0\n"),
                         doctest::Contains("label < 1"), ParseError);
    CHECK_THROWS_AS(parse_graph("w a 0\nw a 0\n"), ParseError);        // duplicate id
    CHECK_THROWS_AS(parse_graph("w a 0\ne a k 1\n"), ParseError);      // dangling endpoint
    CHECK_THROWS_AS(parse_graph("q zzz\n"), ParseError);               // syntax
    CHECK_THROWS_AS(parse_graph("w a\n"), ParseError);                 // missing genus
    try {
        parse_graph("w a 0\n\nw b 0\nxyz\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("serialize: canonical re-emission is byte-stable") {
    // scrambled declaration order
    std::string scrambled = "e w2 k 2\nb k\nw w2 -1\nw w1 0\ne w1 k 1\n";
    StratifoldGraph g = parse_graph(scrambled);
    std::string canonical = serialize(g);
    CHECK(canonical == "w w1 0\nw w2 -1\nb k\ne w1 k 1\ne w2 k 2\n");
    CHECK(serialize(parse_graph(canonical)) == canonical);
}

TEST_CASE("parse stream: records split on blank lines") {
    auto graphs = parse_graph_stream("w a 0\n\nw b 0\nb k\ne b k 3\n\n\nw c 2\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0].white(0).id == "a");
    CHECK(graphs[1].black_count() == 1);
    CHECK(graphs[2].white(0).genus == 2);
    CHECK(serialize_stream(graphs) ==
          "w a 0\n\nw b 0\nb k\ne b k 3\n\nw c 2\n");
}

TEST_CASE("validate_structure") {
    CHECK(validate_structure(dot()).empty());
    CHECK(validate_structure(b12_tree()).empty());
    CHECK(validate_structure(StratifoldGraph{}).size() == 1);

    StratifoldGraph two = GraphBuilder().add_white("a", 0).add_white("b", 0).build();
    auto v = validate_structure(two);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::NotConnected);
}

TEST_CASE("trivalence patterns") {
    CHECK(is_trivalent(b111_tree()));
    CHECK(is_trivalent(b12_tree()));

    StratifoldGraph term3 = GraphBuilder()
                                .add_white("a", 0)
                                .add_black("k")
                                .add_edge("a", "k", 3)
                                .build();
    CHECK(is_trivalent(term3));

    StratifoldGraph bad = GraphBuilder()
                              .add_white("a", 0)
                              .add_white("b", 0)
                              .add_black("k")
                              .add_edge("a", "k", 2)
                              .add_edge("b", "k", 2)
                              .build();
    CHECK(nontrivalent_blacks(bad) == std::vector<std::string>{"k"});
}

TEST_CASE("delete_open_star") {
    StratifoldGraph g = b111_tree();
    const std::vector<std::string> center{"k"};
    auto comps = delete_open_star(g, center);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) {
        CHECK(c.white_count() == 1);
        CHECK(c.black_count() == 0);
    }

    auto identity = delete_open_star(b12_tree(), {});
    REQUIRE(identity.size() == 1);
    CHECK(serialize(identity[0]) == serialize(b12_tree()));

    const std::vector<std::string> missing{"nope"};
    CHECK_THROWS_AS(delete_open_star(g, missing), GraphError);
}

TEST_CASE("delete_open_star with empty vertex set returns the components") {
    StratifoldGraph two = GraphBuilder()
                              .add_white("a", 0)
                              .add_white("z", 0)
                              .add_black("k")
                              .add_edge("a", "k", 3)
                              .build();
    auto comps = delete_open_star(two, {});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].black_count() == 1);  // component containing "a"
    CHECK(comps[1].white(0).id == "z");
}

TEST_CASE("multi-edges are representable, trees reject them") {
    StratifoldGraph g = GraphBuilder()
                            .add_white("a", 0)
                            .add_black("k")
                            .add_edge("a", "k", 1)
                            .add_edge("a", "k", 2)
                            .build();
    CHECK(g.edge_count() == 2);
    CHECK(is_trivalent(g));
    CHECK(!is_forest(g));
    auto cycle = find_cycle(g);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 2);
}

TEST_CASE("find_cycle on a four-cycle") {
    StratifoldGraph g = GraphBuilder()
                            .add_white("a", 0)
                            .add_white("b", 0)
                            .add_black("p")
                            .add_black("q")
                            .add_edge("a", "p", 1)
                            .add_edge("b", "p", 2)
                            .add_edge("a", "q", 1)
                            .add_edge("b", "q", 2)
                            .build();
    auto cycle = find_cycle(g);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 4);
    CHECK(!is_tree(g));
    CHECK(is_tree(b12_tree()));
}

TEST_CASE("prune: full subgraph is the identity") {
    StratifoldGraph g = b12_tree();
    auto sel = induced_subgraph(g, std::vector<std::string>{"u", "v", "k"});
    CHECK(serialize(prune(g, sel)) == serialize(g));
}

TEST_CASE("prune: fringe edge at a black gets a fresh capping white") {
    StratifoldGraph g = make_path({1, 1, 1, 1});  // w0 -1- k0 -1- w1 -1- k1 -1- w2
    auto sel = induced_subgraph(g, std::vector<std::string>{"w0", "k0"});
    StratifoldGraph pruned = prune(g, sel);
    CHECK(pruned.white_count() == 2);
    CHECK(pruned.black_count() == 1);
    CHECK(serialize(pruned) == "w pw0 0\nw w0 0\nb k0\ne pw0 k0 1\ne w0 k0 1\n");
}

TEST_CASE("prune: fringe edge at a white is dropped") {
    StratifoldGraph g = make_path({1, 2});  // w0 -1- k0 -2- w1
    auto sel = induced_subgraph(g, std::vector<std::string>{"w1"});
    StratifoldGraph pruned = prune(g, sel);
    CHECK(pruned.white_count() == 1);
    CHECK(pruned.black_count() == 0);
}

TEST_CASE("prune caps an unselected parallel edge at a selected black") {
    StratifoldGraph g = GraphBuilder()
                            .add_white("a", 0)
                            .add_black("k")
                            .add_edge("a", "k", 1)
                            .add_edge("a", "k", 2)
                            .build();
    SubgraphSelection sel{{"a", "k"}, {0}};  // keep only the label-1 edge
    StratifoldGraph pruned = prune(g, sel);
    CHECK(serialize(pruned) == "w a 0\nw pw0 0\nb k\ne a k 1\ne pw0 k 2\n");
}

TEST_CASE("prune rejects bad selections") {
    StratifoldGraph g = make_path({1, 1, 1, 1});
    CHECK_THROWS_AS(prune(g, SubgraphSelection{{"w0", "nope"}, {}}), GraphError);
    // disconnected pick
    CHECK_THROWS_AS(prune(g, SubgraphSelection{{"w0", "w2"}, {}}), GraphError);
}

TEST_CASE("export_dot shapes and labels") {
    std::string one = export_dot(dot());
    CHECK(one.find("\"w0\" [shape=circle") != std::string::npos);

    std::string b111 = export_dot(b111_tree());
    CHECK(std::count(b111.begin(), b111.end(), '[') == 4 + 3);

    std::string horned = export_dot(minimal_horned());
    size_t nodes = 0, edges = 0, twos = 0, pos = 0;
    while ((pos = horned.find("shape=", pos)) != std::string::npos) ++nodes, ++pos;
    pos = 0;
    while ((pos = horned.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
    pos = 0;
    while ((pos = horned.find("label=\"2\"", pos)) != std::string::npos) ++twos, ++pos;
    CHECK(nodes == 10);
    CHECK(edges == 9);
    CHECK(twos == 3);
}

TEST_CASE("fresh_counter skips used ids") {
    StratifoldGraph g = GraphBuilder().add_white("pw0", 0).add_white("pw2", 0).build();
    const std::vector<std::string> stems{"pw"};
    CHECK(fresh_counter(g, stems) == 1);
    const std::vector<std::string> extra{"pw1"};
    CHECK(fresh_counter(g, stems, extra) == 3);
}

TEST_CASE("builder invariants") {
    CHECK_THROWS_AS(
        GraphBuilder().add_white("a", 0).add_black("a").build(), GraphError);
    CHECK_THROWS_AS(
        GraphBuilder().add_white("a", 0).add_edge("a", "k", 1).build(), GraphError);
    CHECK_THROWS_AS(GraphBuilder()
                        .add_white("a", 0)
                        .add_black("k")
                        .add_edge("a", "k", 0)
                        .build(),
                    GraphError);
}
