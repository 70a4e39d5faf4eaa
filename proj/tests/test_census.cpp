#include <doctest.h>

#include <set>

#include "strat/canonical.hpp"
#include "strat/census.hpp"
#include "test_util.hpp"

using namespace strat;
using namespace testutil;

TEST_CASE("census level zero") {
    auto zero = all_trivalent_trees(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].white_count() == 1);
    CHECK(zero[0].black_count() == 0);
}

TEST_CASE("one black vertex: exactly the two building blocks") {
    auto one = all_trivalent_trees(1);
    REQUIRE(one.size() == 2);
    std::set<std::string> codes;
    for (const auto& g : one) codes.insert(canonical_code(g).bytes);
    CHECK(codes.count(canonical_code(b12_tree()).bytes) == 1);
    CHECK(codes.count(canonical_code(b111_tree()).bytes) == 1);
}

TEST_CASE("fast enumerator counts match the subset-built reference") {
    for (int blacks = 0; blacks <= 3; ++blacks) {
        auto reference = reference_trees(blacks, false);
        auto fast = all_trivalent_trees(blacks);
        long level_count = 0;
        for (const auto& g : fast)
            if (g.black_count() == blacks) ++level_count;
        CHECK(level_count == static_cast<long>(reference.size()));
    }
    // with terminal blacks admitted
    for (int blacks = 0; blacks <= 2; ++blacks) {
        auto reference = reference_trees(blacks, true);
        EnumOptions opt;
        opt.allow_terminal_blacks = true;
        auto fast = all_trivalent_trees(blacks, opt);
        long level_count = 0;
        for (const auto& g : fast)
            if (g.black_count() == blacks) ++level_count;
        CHECK(level_count == static_cast<long>(reference.size()));
    }
}

TEST_CASE("generate-and-dedup agrees with canonical augmentation") {
    EnumOptions dedup;
    EnumOptions augment;
    augment.mode = EnumMode::CanonicalAugmentation;
    auto a = all_trivalent_trees(5, dedup);
    auto b = all_trivalent_trees(5, augment);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(canonical_code(a[i]).bytes == canonical_code(b[i]).bytes);

    EnumOptions aug_term;
    aug_term.mode = EnumMode::CanonicalAugmentation;
    aug_term.allow_terminal_blacks = true;
    EnumOptions ded_term;
    ded_term.allow_terminal_blacks = true;
    auto c = all_trivalent_trees(3, ded_term);
    auto d = all_trivalent_trees(3, aug_term);
    REQUIRE(c.size() == d.size());
    for (size_t i = 0; i < c.size(); ++i)
        CHECK(canonical_code(c[i]).bytes == canonical_code(d[i]).bytes);
}

TEST_CASE("augmentation rejects genus variants") {
    EnumOptions opt;
    opt.mode = EnumMode::CanonicalAugmentation;
    opt.genus_choices = {0, 1};
    CHECK_THROWS_AS(all_trivalent_trees(1, opt), GraphError);
}

TEST_CASE("genus variants enter the dedup census") {
    EnumOptions opt;
    opt.genus_choices = {0, -1};
    auto graphs = all_trivalent_trees(1, opt);
    // single whites of genus 0 and -1, and label patterns with marked whites
    long genus_marked = 0;
    for (const auto& g : graphs)
        for (const auto& w : g.whites()) genus_marked += w.genus != 0;
    CHECK(genus_marked > 0);
    std::set<std::string> codes;
    for (const auto& g : graphs) CHECK(codes.insert(canonical_code(g).bytes).second);
}

TEST_CASE("genus and terminal-black branches agree with the oracle") {
    EnumOptions opt;
    opt.genus_choices = {-1, 0, 1};
    opt.allow_terminal_blacks = true;
    auto graphs = all_trivalent_trees(2, opt);
    long genus_obstructions = 0, terminal_obstructions = 0;
    for (const auto& g : graphs) {
        Verdict v = classify(g);
        OracleVerdict o = oracle_simply_connected(g);
        CHECK(v.simply_connected() == o.simply_connected);
        genus_obstructions += v.kind == VerdictKind::GenusNonzero;
        terminal_obstructions += v.kind == VerdictKind::TerminalBlack;
    }
    CHECK(genus_obstructions > 0);
    CHECK(terminal_obstructions > 0);
}

TEST_CASE("no isomorphism class is emitted twice") {
    auto census = all_trivalent_trees(4);
    std::set<std::string> codes;
    for (const auto& g : census) CHECK(codes.insert(canonical_code(g).bytes).second);
    // stream order matches (black count, code)
    std::pair<int, std::string> prev{-1, ""};
    for (const auto& g : census) {
        std::pair<int, std::string> cur{g.black_count(), canonical_code(g).bytes};
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("crosscheck of the one-black stream") {
    auto graphs = all_trivalent_trees(1);
    std::vector<CensusRecord> records;
    CensusReport report = census_crosscheck(graphs, &records, 1);
    CHECK(report.total == 2);
    CHECK(report.simply_connected == 2);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.verdict == VerdictKind::SimplyConnected);
        CHECK(r.oracle == OracleReason::Yes);
        CHECK(r.h1z2 == 0);
        CHECK(r.sequence_length.has_value());
    }
}

TEST_CASE("crosscheck counts the minimal horned tree as an obstruction") {
    std::vector<StratifoldGraph> graphs{minimal_horned()};
    std::vector<CensusRecord> records;
    CensusReport report = census_crosscheck(graphs, &records, 1);
    CHECK(report.total == 1);
    CHECK(report.simply_connected == 0);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].horned_tree == 1);
    CHECK(records[0].h1z2 == 1);
    CHECK(!records[0].sequence_length.has_value());
}

TEST_CASE("crosscheck of the empty stream") {
    std::vector<CensusRecord> records;
    CensusReport report = census_crosscheck({}, &records, 1);
    CHECK(report.total == 0);
    CHECK(report.rows.empty());
    CHECK(records.empty());
}

TEST_CASE("threaded crosscheck matches single-threaded") {
    auto graphs = all_trivalent_trees(3);
    std::vector<CensusRecord> a, b;
    census_crosscheck(graphs, &a, 1);
    census_crosscheck(graphs, &b, 3);
    CHECK(census_write(a) == census_write(b));
}

TEST_CASE("census files round-trip") {
    auto graphs = all_trivalent_trees(3);
    std::vector<CensusRecord> records;
    census_crosscheck(graphs, &records, 1);
    std::string text = census_write(records);
    auto back = census_read(text);
    CHECK(census_write(back) == text);
}

TEST_CASE("census file errors") {
    CHECK_THROWS_WITH_AS(census_read(""), doctest::Contains("empty"), std::runtime_error);
    CHECK_THROWS_WITH_AS(census_read("stratacensus v9\n"),
                         doctest::Contains("version"), std::runtime_error);
    CHECK_THROWS_WITH_AS(census_read("stratacensus v1\nw( 0\n"),
                         doctest::Contains("record 1"), std::runtime_error);
}

TEST_CASE("sorted shards merge stably") {
    auto graphs = all_trivalent_trees(3);
    std::vector<CensusRecord> records;
    census_crosscheck(graphs, &records, 1);
    std::vector<CensusRecord> odd, even;
    for (size_t i = 0; i < records.size(); ++i)
        (i % 2 ? odd : even).push_back(records[i]);
    auto merged = merge_records(even, odd);
    CHECK(census_write(merged) == census_write(records));
}

TEST_CASE("report text carries the machine trailer") {
    auto graphs = all_trivalent_trees(2);
    CensusReport report = census_crosscheck(graphs, nullptr, 1);
    std::string text = report.to_text();
    CHECK(text.find("total=") != std::string::npos);
    CHECK(text.find("disagreements=0") != std::string::npos);
    CHECK(text.find("simply_connected=") != std::string::npos);
}
