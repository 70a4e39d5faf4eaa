#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strat/graph.hpp"

namespace strat {

// Recognition of (2,1)-collapsible trees -----------------------------------
//
// A collapsible tree is the barycentric subdivision of a rooted tree with
// edges labeled 2 at even and 1 at odd distance from the root. Locally:
// every black has degree 2 with labels {1,2}, every white has at most one
// incident label-1 edge, and the unique label-1-free white is the root.
// A parity sweep from the recovered root re-checks the distance labeling.

enum class CollapsibleRule {
    BlackDegreeLabels,   // a black is not degree 2 with labels {1,2}
    WhiteLabelOneCount,  // a white has more than one incident label-1 edge
    RootMissing,
    RootAmbiguous,
    ParityMismatch,
};

std::string collapsible_rule_name(CollapsibleRule r);

struct CollapsibleResult {
    std::optional<std::string> root;  // engaged iff recognized
    CollapsibleRule rule = CollapsibleRule::BlackDegreeLabels;
    std::string vertex;               // offending vertex on failure
    bool ok() const { return root.has_value(); }
};

CollapsibleResult collapsible_root(const StratifoldGraph& component);

// Decomposition at the degree-3 black vertices -----------------------------

struct RootedComponent {
    StratifoldGraph graph;
    std::string root;
};

struct StarWhite {
    std::string white;
    std::vector<int> star_edges;  // edges of g joining this white to a degree-3 black
    bool is_root = false;
};

struct Decomposition {
    std::vector<std::string> degree3_blacks;   // id-sorted
    std::vector<RootedComponent> components;   // ordered by smallest vertex id
    std::vector<StarWhite> star_map;           // whites of St(B), id-sorted
};

struct NonCollapsible {
    CollapsibleRule rule = CollapsibleRule::BlackDegreeLabels;
    std::string vertex;
    StratifoldGraph component;
};

// Removes the open stars of all degree-3 blacks and recognizes every
// remaining component. Requires a trivalent tree with genus-0 whites and
// white terminal vertices.
std::variant<Decomposition, NonCollapsible> decompose(const StratifoldGraph& g);

// St(B) plus, at each non-root white of St(B), a fresh pendant
// label-1/label-2 tail. Empty when there is no degree-3 black.
StratifoldGraph reduced_graph(const StratifoldGraph& g, const Decomposition& d);

// Horned trees --------------------------------------------------------------

// Conditions: blacks adjacent to a terminal white have degree 2 and all
// others degree 3; nonterminal whites have degree 2; terminal edges carry
// label 2 and all others label 1; some vertex has degree 3.
bool verify_horned(const StratifoldGraph& h);

struct HornedWitness {
    StratifoldGraph tree;
    // witness vertex id -> host (reduced graph) vertex id
    std::vector<std::pair<std::string, std::string>> host_map;
};

// Searches a reduced graph for a horned tree: strips pendant label-1
// branches while possible, and when a component with a degree-3 black has
// only label-2 terminal edges, extracts the witness by cutting every
// white of degree >= 3 down to its two code-smallest branches.
std::optional<HornedWitness> horned_search(const StratifoldGraph& reduced);

// Classification -------------------------------------------------------------

enum class VerdictKind {
    SimplyConnected,
    NotTree,
    GenusNonzero,
    TerminalBlack,
    NonCollapsibleComponent,
    HornedTree,
};

std::string verdict_kind_name(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::SimplyConnected;
    bool simply_connected() const { return kind == VerdictKind::SimplyConnected; }

    std::optional<Decomposition> decomposition;   // on success
    std::optional<StratifoldGraph> reduced;       // on success
    std::vector<std::string> cycle;               // NotTree
    std::string vertex;                           // GenusNonzero / TerminalBlack
    std::optional<NonCollapsible> non_collapsible;
    std::optional<HornedWitness> horned;
};

// Obstruction checks run in a fixed order: tree, genus, terminal blacks,
// component collapsibility, horned tree in the reduced graph. Requires a
// structurally valid trivalent graph.
Verdict classify(const StratifoldGraph& g);

std::string serialize_verdict(const Verdict& v, bool include_witness);

}  // namespace strat
