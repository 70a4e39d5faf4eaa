#pragma once

#include <optional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strat {

// Errors ---------------------------------------------------------------

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotATreeError : public GraphError {
public:
    using GraphError::GraphError;
};

class NotTrivalentError : public GraphError {
public:
    using GraphError::GraphError;
};

class PreconditionError : public GraphError {
public:
    using GraphError::GraphError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Model ----------------------------------------------------------------

struct WhiteVertex {
    std::string id;
    int genus = 0;  // negative genus marks a nonorientable surface piece
};

struct BlackVertex {
    std::string id;
};

// Endpoints are dense indices into the owning graph's vertex arrays.
struct Edge {
    int white = -1;
    int black = -1;
    int label = 1;
};

// A labeled bicolored multigraph. Whites carry a genus, edges a positive
// label. Instances are immutable once built; use GraphBuilder to create
// them. Vertex arrays are sorted by id and edges by (white, black, label),
// so dense indices are deterministic functions of the content.
class StratifoldGraph {
public:
    StratifoldGraph() = default;

    int white_count() const { return static_cast<int>(whites_.size()); }
    int black_count() const { return static_cast<int>(blacks_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return white_count() + black_count(); }
    bool empty() const { return vertex_count() == 0; }

    const WhiteVertex& white(int i) const { return whites_.at(i); }
    const BlackVertex& black(int i) const { return blacks_.at(i); }
    const Edge& edge(int i) const { return edges_.at(i); }
    const std::vector<WhiteVertex>& whites() const { return whites_; }
    const std::vector<BlackVertex>& blacks() const { return blacks_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<int> find_white(std::string_view id) const;
    std::optional<int> find_black(std::string_view id) const;
    bool has_id(std::string_view id) const;

    // Ascending edge indices incident to a vertex; this is the graph's
    // fixed edge order at that vertex.
    const std::vector<int>& white_edges(int w) const { return white_adj_.at(w); }
    const std::vector<int>& black_edges(int b) const { return black_adj_.at(b); }
    int white_degree(int w) const { return static_cast<int>(white_adj_.at(w).size()); }
    int black_degree(int b) const { return static_cast<int>(black_adj_.at(b).size()); }

    // Sorted multiset of labels incident to a black vertex (its partition).
    std::vector<int> black_labels(int b) const;

private:
    friend class GraphBuilder;
    std::vector<WhiteVertex> whites_;
    std::vector<BlackVertex> blacks_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> white_adj_;
    std::vector<std::vector<int>> black_adj_;
    std::map<std::string, int, std::less<>> white_index_;
    std::map<std::string, int, std::less<>> black_index_;
};

class GraphBuilder {
public:
    GraphBuilder& add_white(std::string id, int genus = 0);
    GraphBuilder& add_black(std::string id);
    GraphBuilder& add_edge(std::string white_id, std::string black_id, int label);
    // Throws GraphError on duplicate ids, dangling endpoints or labels < 1.
    StratifoldGraph build() const;

private:
    std::vector<WhiteVertex> whites_;
    std::vector<BlackVertex> blacks_;
    std::vector<std::tuple<std::string, std::string, int>> edges_;
};

// Copies a graph into a builder (used by operations that rewrite graphs).
GraphBuilder builder_from(const StratifoldGraph& g);

// Validation -----------------------------------------------------------

enum class ViolationKind { EmptyGraph, NotConnected };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

// Empty result iff the graph is connected and has at least one vertex.
// Type invariants (id uniqueness, endpoint existence, label positivity)
// hold by construction. Disconnection and emptiness are the model-level
// slack that stricter layers reject.
std::vector<Violation> validate_structure(const StratifoldGraph& g);

bool is_connected(const StratifoldGraph& g);

// Black vertices whose incident label multiset is not one of
// {1,1,1}, {1,2}, {3}; empty result means the graph is trivalent.
std::vector<std::string> nontrivalent_blacks(const StratifoldGraph& g);
bool is_trivalent(const StratifoldGraph& g);

// Tree utilities ---------------------------------------------------------

// No multi-edges and no cycles (any number of components, possibly none).
bool is_forest(const StratifoldGraph& g);
// Nonempty connected forest.
bool is_tree(const StratifoldGraph& g);
// A cycle as a vertex id sequence (a multi-edge pair yields a 2-cycle),
// or nullopt for forests.
std::optional<std::vector<std::string>> find_cycle(const StratifoldGraph& g);

// Components ordered by their smallest vertex id; ids preserved.
std::vector<StratifoldGraph> connected_components(const StratifoldGraph& g);

// Removes the listed vertices with all incident edges and returns the
// connected components of the remainder.
std::vector<StratifoldGraph> delete_open_star(const StratifoldGraph& g,
                                              std::span<const std::string> vertex_ids);

// Subgraphs and pruning --------------------------------------------------

struct SubgraphSelection {
    std::vector<std::string> vertex_ids;   // whites and blacks
    std::vector<int> edge_indices;         // indices into g.edges()
};

// The selection of a connected vertex subset together with every edge of g
// joining two selected vertices. In a tree this covers all connected
// subgraphs.
SubgraphSelection induced_subgraph(const StratifoldGraph& g,
                                   std::span<const std::string> vertex_ids);

// Closes the selected subgraph up: keeps it verbatim and, for every
// unselected edge at a selected black vertex, adds that edge ending in a
// fresh genus-0 terminal white. Unselected edges at selected whites are
// dropped.
StratifoldGraph prune(const StratifoldGraph& g, const SubgraphSelection& gamma);

// Serialization ----------------------------------------------------------

// Text format, one record per graph:
//   w <id> <genus>
//   b <id>
//   e <white-id> <black-id> <label>
// '#' starts a comment, blank lines separate records in a stream.
StratifoldGraph parse_graph(std::string_view text);
std::vector<StratifoldGraph> parse_graph_stream(std::string_view text);

// Canonical emission: whites by id, blacks by id, edges by
// (white id, black id, label).
std::string serialize(const StratifoldGraph& g);
std::string serialize_stream(std::span<const StratifoldGraph> graphs);

std::string export_dot(const StratifoldGraph& g);

// Fresh ids --------------------------------------------------------------

// Smallest n >= 0 such that no "<stem><n>" for any stem is a vertex id of g
// or listed in extra_used.
int fresh_counter(const StratifoldGraph& g, std::span<const std::string> stems,
                  std::span<const std::string> extra_used = {});

}  // namespace strat
