#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "strat/graph.hpp"

namespace strat {

// Total order is lexicographic on the bytes. Two connected trees receive
// equal codes iff they are isomorphic as bicolored, genus- and edge-labeled
// graphs.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

struct VertexRef {
    bool is_white = true;
    int index = 0;
    auto operator<=>(const VertexRef&) const = default;
};

// Optional per-vertex tags folded into the encoding; a tagged vertex is
// only exchangeable with an equally tagged one. Used for orbit tests
// during enumeration.
using MarkMap = std::map<VertexRef, std::string>;

// Centroid-rooted code of a connected tree; with two centroids the smaller
// of the two rooted codes is taken. Throws NotATreeError on cycles,
// multi-edges or disconnected input.
CanonicalCode canonical_code(const StratifoldGraph& g, const MarkMap& marks = {});

// Code of the tree rooted at a chosen vertex (not centroid-normalized).
std::string rooted_code(const StratifoldGraph& g, VertexRef root,
                        const MarkMap& marks = {});

// One or two centroids of a connected tree.
std::vector<VertexRef> tree_centroids(const StratifoldGraph& g);

}  // namespace strat
