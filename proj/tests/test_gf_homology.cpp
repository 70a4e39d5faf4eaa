#include <doctest.h>

#include "strat/census.hpp"
#include "strat/homology.hpp"
#include "test_util.hpp"

using namespace strat;
using namespace testutil;

TEST_CASE("rank on trivial matrices") {
    for (int p : {2, 3}) {
        GfMatrix zero(p, 4, 5);
        CHECK(zero.rank() == 0);
        GfMatrix id(p, 3, 3);
        for (int i = 0; i < 3; ++i) id.set(i, i, 1);
        CHECK(id.rank() == 3);
        CHECK(GfMatrix(p, 0, 0).rank() == 0);
    }
}

TEST_CASE("relation matrix of the b12 tree over GF(2)") {
    // whites sorted by id: u (label 1), v (label 2)
    GfMatrix m = relation_matrix(b12_tree(), 2);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.rank() == 1);
}

TEST_CASE("relation matrix of the b111 tree over GF(2)") {
    GfMatrix m = relation_matrix(b111_tree(), 2);
    REQUIRE(m.rows() == 3);
    for (int r = 0; r < 3; ++r) CHECK(m.at(r, 0) == 1);
    CHECK(m.rank() == 1);
}

TEST_CASE("relation matrix of the minimal horned tree") {
    StratifoldGraph h = minimal_horned();
    GfMatrix m = relation_matrix(h, 2);
    REQUIRE(m.rows() == 6);
    REQUIRE(m.cols() == 4);
    // mid whites m1..m3 sort before terminal whites t1..t3
    for (int i = 0; i < 3; ++i) {
        CHECK(m.at(i, 0) == 1);        // k0
        CHECK(m.at(i, i + 1) == 1);    // k{i+1}
        for (int c = 1; c < 4; ++c)
            if (c != i + 1) CHECK(m.at(i, c) == 0);
    }
    for (int i = 3; i < 6; ++i)
        for (int c = 0; c < 4; ++c) CHECK(m.at(i, c) == 0);
    CHECK(m.rank() == 3);
    CHECK(h1_dim(h, 2) == 1);
}

TEST_CASE("h1 dimensions of small graphs") {
    CHECK(h1_dim(b111_tree(), 2) == 0);
    CHECK(h1_dim(b12_tree(), 2) == 0);
    CHECK(h1_dim(make_path({2, 1, 1, 2}), 2) == 1);
    CHECK(h1_dim(StratifoldGraph{}, 2) == 0);
}

TEST_CASE("relation matrix preconditions") {
    StratifoldGraph genus = GraphBuilder().add_white("a", 1).build();
    CHECK_THROWS_AS(relation_matrix(genus, 2), PreconditionError);
    StratifoldGraph multi = GraphBuilder()
                                .add_white("a", 0)
                                .add_black("k")
                                .add_edge("a", "k", 1)
                                .add_edge("a", "k", 1)
                                .build();
    CHECK_THROWS_AS(relation_matrix(multi, 2), PreconditionError);
}

TEST_CASE("rank agrees with cross-multiplied elimination") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int p = trial % 2 == 0 ? 2 : 3;
        int rows = 1 + rng.below(30), cols = 1 + rng.below(30);
        GfMatrix m(p, rows, cols);
        std::vector<std::vector<int>> raw(rows, std::vector<int>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                int v = rng.below(p);
                m.set(r, c, v);
                raw[r][c] = v;
            }
        CHECK(m.rank() == naive_rank(raw, p));
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    Rng rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        int p = trial % 2 == 0 ? 2 : 3;
        int rows = 1 + rng.below(12), cols = 1 + rng.below(12);
        GfMatrix m(p, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.set(r, c, rng.below(p));
        auto x = m.kernel_vector();
        if (m.rank() == cols) {
            CHECK(!x.has_value());
            continue;
        }
        REQUIRE(x.has_value());
        bool nonzero = false;
        for (auto v : *x) nonzero |= v != 0;
        CHECK(nonzero);
        for (int r = 0; r < rows; ++r) {
            int sum = 0;
            for (int c = 0; c < cols; ++c) sum += m.at(r, c) * (*x)[c];
            CHECK(sum % p == 0);
        }
    }
}

TEST_CASE("oracle on building blocks") {
    OracleVerdict v = oracle_simply_connected(b12_tree());
    CHECK(v.simply_connected);
    CHECK(v.reason == OracleReason::Yes);
    CHECK(oracle_simply_connected(b111_tree()).simply_connected);
}

TEST_CASE("oracle on the minimal horned tree") {
    OracleVerdict v = oracle_simply_connected(minimal_horned());
    CHECK(!v.simply_connected);
    CHECK(v.reason == OracleReason::H1Z2Nonzero);
    CHECK(v.h1_dimension == 1);
    CHECK(v.kernel_witness == std::vector<std::string>{"k0", "k1", "k2", "k3"});
}

TEST_CASE("oracle prechecks in order") {
    StratifoldGraph term = GraphBuilder()
                               .add_white("a", 0)
                               .add_black("k")
                               .add_edge("a", "k", 3)
                               .build();
    OracleVerdict v = oracle_simply_connected(term);
    CHECK(v.reason == OracleReason::TerminalBlack);
    CHECK(v.vertex == "k");

    StratifoldGraph genus = GraphBuilder()
                                .add_white("a", -2)
                                .add_white("b", 0)
                                .add_black("k")
                                .add_edge("a", "k", 1)
                                .add_edge("b", "k", 2)
                                .build();
    v = oracle_simply_connected(genus);
    CHECK(v.reason == OracleReason::GenusNonzero);
    CHECK(v.vertex == "a");

    StratifoldGraph cyc = GraphBuilder()
                              .add_white("a", 0)
                              .add_white("b", 0)
                              .add_black("p")
                              .add_black("q")
                              .add_edge("a", "p", 1)
                              .add_edge("b", "p", 2)
                              .add_edge("a", "q", 1)
                              .add_edge("b", "q", 2)
                              .build();
    CHECK(oracle_simply_connected(cyc).reason == OracleReason::NotTree);

    StratifoldGraph bad = GraphBuilder()
                              .add_white("a", 0)
                              .add_white("b", 0)
                              .add_black("k")
                              .add_edge("a", "k", 2)
                              .add_edge("b", "k", 2)
                              .build();
    CHECK_THROWS_AS(oracle_simply_connected(bad), NotTrivalentError);
    CHECK_THROWS_AS(oracle_simply_connected(StratifoldGraph{}), PreconditionError);
}

TEST_CASE("kernel witness annihilates every relation row") {
    // obstructed trivalent trees: random horned trees plus census graphs
    std::vector<StratifoldGraph> pool;
    Rng rng(5150);
    for (int i = 0; i < 20; ++i)
        pool.push_back(horned_tree_from_tree(random_cubic_tree(rng, 1 + rng.below(6))));
    for (auto& g : all_trivalent_trees(4)) pool.push_back(std::move(g));

    int found = 0;
    for (const StratifoldGraph& g : pool) {
        OracleVerdict v = oracle_simply_connected(g);
        if (v.reason != OracleReason::H1Z2Nonzero) continue;
        ++found;
        REQUIRE(!v.kernel_witness.empty());
        GfMatrix m = relation_matrix(g, 2);
        std::set<std::string> ones(v.kernel_witness.begin(), v.kernel_witness.end());
        for (int r = 0; r < m.rows(); ++r) {
            int sum = 0;
            for (int b = 0; b < g.black_count(); ++b)
                if (ones.count(g.black(b).id)) sum += m.at(r, b);
            CHECK(sum % 2 == 0);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("pi1 presentations") {
    CHECK(pi1_presentation(b111_tree()) == "< k | k, k, k >");
    CHECK(pi1_presentation(b12_tree()) == "< k | k, k^2 >");
    CHECK(pi1_presentation(dot()) == "<  | 1 >");
    CHECK(pi1_presentation(minimal_horned()) ==
          "< k0, k1, k2, k3 | k0 k1, k0 k2, k0 k3, k1^2, k2^2, k3^2 >");
    StratifoldGraph genus = GraphBuilder().add_white("a", 1).build();
    CHECK_THROWS_AS(pi1_presentation(genus), PreconditionError);
}
