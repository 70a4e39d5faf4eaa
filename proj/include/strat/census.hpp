#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strat/classifier.hpp"
#include "strat/graph.hpp"
#include "strat/homology.hpp"

namespace strat {

enum class EnumMode {
    GenerateAndDedup,       // attach blacks level by level, dedup by canonical code
    CanonicalAugmentation,  // orderly generation; no global dedup set
};

struct EnumOptions {
    bool allow_terminal_blacks = false;
    std::vector<int> genus_choices = {0};  // genus values for white vertices
    EnumMode mode = EnumMode::GenerateAndDedup;
};

// Every isomorphism class of trivalent trees (no multi-edges) with 1 up to
// max_blacks black vertices, exactly once, ordered by (black count,
// canonical code); max_blacks 0 yields the single-white graphs alone.
// Canonical augmentation supports genus 0 only.
void enumerate_trivalent_trees(int max_blacks, const EnumOptions& options,
                               const std::function<void(const StratifoldGraph&)>& sink);
std::vector<StratifoldGraph> all_trivalent_trees(int max_blacks,
                                                 const EnumOptions& options = {});

// Cross-validation records ---------------------------------------------------

struct CensusRecord {
    std::string code;
    int blacks = 0;
    int whites = 0;
    VerdictKind verdict = VerdictKind::SimplyConnected;
    OracleReason oracle = OracleReason::Yes;
    std::optional<int> h1z2, h1z3;           // absent when preconditions fail
    std::optional<int> sequence_length;      // absent unless simply connected
};

class CensusDisagreement : public std::runtime_error {
public:
    CensusDisagreement(const std::string& message, std::string dump)
        : std::runtime_error(message), graph_dump(std::move(dump)) {}
    std::string graph_dump;
};

struct CensusReport {
    struct Row {
        int blacks = 0;
        long total = 0;
        long simply_connected = 0;
        long not_tree = 0;
        long genus_nonzero = 0;
        long terminal_black = 0;
        long non_collapsible = 0;
        long horned_tree = 0;
    };
    std::vector<Row> rows;  // ascending black count
    long total = 0;
    long simply_connected = 0;
    std::string to_text() const;
};

// Classifies every graph, runs the homology oracle beside it and aborts
// with a counterexample dump on any disagreement. Records come back in
// input order; `threads` > 1 splits the checking work.
CensusReport census_crosscheck(std::span<const StratifoldGraph> graphs,
                               std::vector<CensusRecord>* records, int threads = 1);

// Census files: header "stratacensus v1", one space-separated record per
// line, sorted by (black count, code).
std::string census_write(std::span<const CensusRecord> records);
std::vector<CensusRecord> census_read(std::string_view text);
std::vector<CensusRecord> merge_records(std::span<const CensusRecord> a,
                                        std::span<const CensusRecord> b);

}  // namespace strat
