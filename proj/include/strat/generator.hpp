#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strat/classifier.hpp"
#include "strat/graph.hpp"

namespace strat {

// Plain unlabeled tree input for the constructions below; vertices are
// 0..vertex_count-1.
struct SimpleTree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// The horned tree of a tree whose internal vertices all have degree 3:
// internal vertices turn black, leaves white; terminal edges are trisected
// and internal edges bisected; terminal edges get label 2, the rest 1.
StratifoldGraph horned_tree_from_tree(const SimpleTree& t);

// The labeled barycentric subdivision of (t, root): original vertices
// white of genus 0, barycenters black; an edge at even distance from the
// root gets label 2, at odd distance label 1.
StratifoldGraph collapsible_from_rooted_tree(const SimpleTree& t, int root);

// Rewriting operations -------------------------------------------------------

struct Op1Ids {
    std::string white_a;   // takes the first k edges
    std::string white_b;   // takes the remaining edges
    std::string black;
    std::string terminal;
};

struct PendantIds {
    std::string black;
    std::string terminal;
};

Op1Ids default_op1_ids(const StratifoldGraph& g);
PendantIds default_op1_star_ids(const StratifoldGraph& g1, const StratifoldGraph& g2);
PendantIds default_op2_ids(const StratifoldGraph& g);

// Splits white w: the first k of its incident edges (fixed edge order)
// move to a new white, the rest to another; a new degree-3 black with
// three label-1 edges joins the two halves and a fresh terminal white.
// Preserves trivalency; requires genus 0 at w.
StratifoldGraph op1(const StratifoldGraph& g, std::string_view white_id, int k);
StratifoldGraph op1(const StratifoldGraph& g, std::string_view white_id, int k,
                    const Op1Ids& ids);

// Joins two disjoint graphs through a new degree-3 black with label-1
// edges to the two anchor whites and a fresh terminal white.
StratifoldGraph op1_star(const StratifoldGraph& g1, std::string_view w1,
                         const StratifoldGraph& g2, std::string_view w2);
StratifoldGraph op1_star(const StratifoldGraph& g1, std::string_view w1,
                         const StratifoldGraph& g2, std::string_view w2,
                         const PendantIds& ids);

// Attaches a pendant tail at w0: a new black joined to w0 by a label-2
// edge and to a fresh terminal white by a label-1 edge.
StratifoldGraph op2(const StratifoldGraph& g, std::string_view w0);
StratifoldGraph op2(const StratifoldGraph& g, std::string_view w0, const PendantIds& ids);

// Build sequences -------------------------------------------------------------

// A replayable certificate: the state is a forest seeded with single
// genus-0 whites; O1/O2 rewrite the component holding their target and
// O1* merges two components. A valid sequence ends with one component.
struct BuildStep {
    enum class Kind { O1, O1Star, O2 };
    Kind kind = Kind::O2;
    std::string target;               // O1 / O2 white
    int k = 0;                        // O1
    std::vector<int> part_edges;      // O1: explicit edge partition (component edge indices)
    std::string anchor_a, anchor_b;   // O1Star
    std::vector<std::string> fresh;   // O1: wa wb black terminal; O1*/O2: black terminal
};

struct BuildSequence {
    std::vector<std::string> initial_whites;  // empty means the single default "w0"
    std::vector<BuildStep> steps;
};

std::string serialize(const BuildSequence& seq);
BuildSequence parse_build_sequence(std::string_view text);

// Deterministic replay; throws GraphError on dangling anchors, id clashes
// or a final forest of more than one component.
StratifoldGraph replay(const BuildSequence& seq);

// Nesting depth of O1* joins: components start at 0 and a join yields
// 1 + max of the joined levels.
int level(const BuildSequence& seq);

class NotSimplyConnectedError : public GraphError {
public:
    NotSimplyConnectedError(std::string message, Verdict v)
        : GraphError(std::move(message)), verdict(std::move(v)) {}
    Verdict verdict;
};

// Inverts a simply-connected graph into O2 / O1* steps by repeatedly
// removing a terminal label-1 edge with its black star, choosing the
// candidate that minimizes the canonical code of the residual. The
// recorded fresh ids are the original ones, so replay rebuilds the graph
// verbatim.
BuildSequence deconstruct(const StratifoldGraph& g);

// For a tree with every edge labeled 1, genus-0 whites and white terminal
// vertices: a sequence of O1 steps growing the graph from the chosen
// white vertex alone.
BuildSequence rebuild_all_ones(const StratifoldGraph& g, std::string_view white_id);

// Random generation ------------------------------------------------------------

struct OpWeights {
    double o1 = 2.0;
    double o1_star = 1.0;
    double o2 = 2.0;
};

struct GeneratedGraph {
    StratifoldGraph graph;
    BuildSequence sequence;
};

// Deterministic in the seed. `steps` main-loop operations are applied;
// trailing O1* joins are appended as needed to end with one component.
GeneratedGraph random_simply_connected(std::uint64_t seed, int steps,
                                       const OpWeights& weights = {});

}  // namespace strat
