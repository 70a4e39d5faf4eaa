#include <doctest.h>

#include <map>

#include "strat/canonical.hpp"
#include "strat/census.hpp"
#include "test_util.hpp"

using namespace strat;
using namespace testutil;

TEST_CASE("relabeling invariance on the b12 tree") {
    StratifoldGraph a = b12_tree();
    StratifoldGraph b = GraphBuilder()
                            .add_white("v", 0)
                            .add_white("u", 0)
                            .add_black("k")
                            .add_edge("v", "k", 1)
                            .add_edge("u", "k", 2)
                            .build();
    CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("different trees separate") {
    CHECK(canonical_code(b111_tree()) != canonical_code(b12_tree()));
    CHECK(canonical_code(dot()) != canonical_code(dot(1)));
    CHECK(canonical_code(make_path({2, 1})) != canonical_code(make_path({2, 2})));
    CHECK(canonical_code(make_path({2, 1, 1, 2})) != canonical_code(make_path({1, 2, 2, 1})));

    // the two emission orders of the b12 tree are the same class
    CHECK(canonical_code(make_path({2, 1})) == canonical_code(make_path({1, 2})));
}

TEST_CASE("two plantings of a caterpillar agree") {
    // 4-black caterpillar grown left-to-right and right-to-left
    StratifoldGraph left = make_path({1, 1, 1, 2, 2, 1, 1, 1});
    StratifoldGraph right = make_path({1, 1, 1, 2, 2, 1, 1, 1});
    Rng rng(7);
    StratifoldGraph shuffled = shuffle_ids(rng, right);
    CHECK(canonical_code(left) == canonical_code(shuffled));
    CHECK(brute_force_isomorphic(left, shuffled));
}

TEST_CASE("non-tree input is rejected") {
    StratifoldGraph multi = GraphBuilder()
                                .add_white("a", 0)
                                .add_black("k")
                                .add_edge("a", "k", 1)
                                .add_edge("a", "k", 1)
                                .build();
    CHECK_THROWS_AS(canonical_code(multi), NotATreeError);
    StratifoldGraph disconnected =
        GraphBuilder().add_white("a", 0).add_white("b", 0).build();
    CHECK_THROWS_AS(canonical_code(disconnected), NotATreeError);
}

TEST_CASE("invariance under random relabelings") {
    Rng rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        StratifoldGraph g = random_bipartite_tree(rng, 1 + rng.below(8), {-1, 0, 2});
        StratifoldGraph h = shuffle_ids(rng, g);
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("separation against brute-force isomorphism on the census") {
    auto census = all_trivalent_trees(5);
    // codes within one census run are pairwise distinct
    std::map<std::string, const StratifoldGraph*> by_code;
    for (const auto& g : census) {
        auto [it, inserted] = by_code.emplace(canonical_code(g).bytes, &g);
        CHECK(inserted);
    }
    // distinct codes really are non-isomorphic, equal codes isomorphic
    Rng rng(99);
    int checked = 0;
    for (size_t i = 0; i < census.size(); ++i) {
        // a relabeled copy must collide with exactly its own class
        if (i % 7 == 0) {
            StratifoldGraph copy = shuffle_ids(rng, census[i]);
            CHECK(canonical_code(copy).bytes == canonical_code(census[i]).bytes);
            CHECK(brute_force_isomorphic(copy, census[i]));
        }
        for (size_t j = i + 1; j < census.size(); ++j) {
            if (census[i].vertex_count() != census[j].vertex_count()) continue;
            bool iso = brute_force_isomorphic(census[i], census[j]);
            CHECK(!iso);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("rooted codes distinguish roots") {
    StratifoldGraph path = make_path({2, 1});
    std::string at_root = rooted_code(path, VertexRef{true, 0});
    std::string at_leaf = rooted_code(path, VertexRef{true, 1});
    CHECK(at_root != at_leaf);
    CHECK_THROWS_AS(rooted_code(path, VertexRef{true, 9}), GraphError);
}

TEST_CASE("marks refine the code") {
    StratifoldGraph g = b111_tree();
    MarkMap none;
    MarkMap marked{{VertexRef{true, 0}, "a"}};
    CHECK(canonical_code(g, none) != canonical_code(g, marked));
    // marking symmetric whites gives equal codes
    MarkMap marked2{{VertexRef{true, 1}, "a"}};
    CHECK(canonical_code(g, marked) == canonical_code(g, marked2));
}
