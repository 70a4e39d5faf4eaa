#pragma once

#include <string>
#include <vector>

#include "strat/gf_matrix.hpp"
#include "strat/graph.hpp"

namespace strat {

// One row per white vertex, one column per black vertex (both id-ordered);
// entry(w, b) = sum of labels of the edges joining w and b, mod p. On an
// acyclic graph with genus-0 whites this presents H_1 of the stratifold
// with GF(p) coefficients: black circles generate, white surfaces relate.
// Disconnected forests are accepted; the presentation splits per component.
GfMatrix relation_matrix(const StratifoldGraph& g, int modulus);

// black count minus relation rank.
int h1_dim(const StratifoldGraph& g, int modulus);

enum class OracleReason {
    Yes,
    NotTree,
    GenusNonzero,
    TerminalBlack,
    WhiteTerminalOnlyOk,  // precheck marker: tree, genus 0, terminals white
    H1Z2Nonzero,
};

struct OracleVerdict {
    bool simply_connected = false;
    OracleReason reason = OracleReason::Yes;
    std::string vertex;                        // offending white/black id
    int h1_dimension = 0;                      // for H1Z2Nonzero
    std::vector<std::string> kernel_witness;   // blacks carrying coefficient 1
};

// Structural prechecks alone: NotTree / GenusNonzero / TerminalBlack, or
// WhiteTerminalOnlyOk when they all pass.
OracleReason oracle_precheck(const StratifoldGraph& g, std::string* offending = nullptr);

// Decision by necessary structural conditions plus GF(2) homology rank.
// Requires a structurally valid trivalent graph; when the verdict is
// H1Z2Nonzero it carries a nonzero functional on the black vertices that
// annihilates every white relation.
OracleVerdict oracle_simply_connected(const StratifoldGraph& g);

std::string oracle_reason_name(OracleReason r);

// Display-only presentation of the fundamental group: generators are the
// black vertices, one boundary relation per white vertex with factors in
// the graph's fixed edge order. No canonical word order is claimed.
std::string pi1_presentation(const StratifoldGraph& g);

}  // namespace strat
