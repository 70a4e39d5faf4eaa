#include "strat/canonical.hpp"

#include <algorithm>

namespace strat {

namespace {

struct TreeView {
    int whites = 0;
    int total = 0;
    // per unified vertex: (neighbor, edge label)
    std::vector<std::vector<std::pair<int, int>>> nbr;

    explicit TreeView(const StratifoldGraph& g) {
        whites = g.white_count();
        total = g.vertex_count();
        nbr.resize(total);
        for (const Edge& e : g.edges()) {
            nbr[e.white].push_back({whites + e.black, e.label});
            nbr[whites + e.black].push_back({e.white, e.label});
        }
    }
};

void require_tree(const StratifoldGraph& g) {
    if (!is_tree(g)) throw NotATreeError("graph is not a connected tree");
}

VertexRef to_ref(const TreeView& t, int v) {
    return v < t.whites ? VertexRef{true, v} : VertexRef{false, v - t.whites};
}

std::string vertex_head(const StratifoldGraph& g, const TreeView& t, int v,
                        const MarkMap& marks) {
    std::string head;
    if (v < t.whites) {
        head = "w";
        if (g.white(v).genus != 0) head += std::to_string(g.white(v).genus);
    } else {
        head = "b";
    }
    if (!marks.empty()) {
        auto it = marks.find(to_ref(t, v));
        if (it != marks.end()) head += "*" + it->second;
    }
    return head;
}

std::string encode_from(const StratifoldGraph& g, const TreeView& t, int v, int parent,
                        const MarkMap& marks) {
    std::vector<std::string> chunks;
    chunks.reserve(t.nbr[v].size());
    for (auto [u, label] : t.nbr[v]) {
        if (u == parent) continue;
        chunks.push_back(std::to_string(label) + "|" + encode_from(g, t, u, v, marks));
    }
    std::sort(chunks.begin(), chunks.end());
    std::string out = vertex_head(g, t, v, marks) + "(";
    for (const auto& c : chunks) out += c;
    out += ")";
    return out;
}

int unified_index(const TreeView& t, VertexRef r) {
    return r.is_white ? r.index : t.whites + r.index;
}

}  // namespace

std::vector<VertexRef> tree_centroids(const StratifoldGraph& g) {
    require_tree(g);
    TreeView t(g);
    if (t.total == 1) return {to_ref(t, 0)};

    std::vector<int> order;
    order.reserve(t.total);
    std::vector<int> parent(t.total, -1);
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (auto [u, label] : t.nbr[v]) {
            if (u == parent[v]) continue;
            parent[u] = v;
            order.push_back(u);
        }
    }
    std::vector<int> size(t.total, 1);
    for (int i = t.total - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];

    std::vector<int> widest(t.total, 0);
    for (int v = 0; v < t.total; ++v) {
        for (auto [u, label] : t.nbr[v]) {
            if (u == parent[v]) continue;
            widest[v] = std::max(widest[v], size[u]);
        }
        if (v != 0) widest[v] = std::max(widest[v], t.total - size[v]);
    }
    int best = *std::min_element(widest.begin(), widest.end());
    std::vector<VertexRef> out;
    for (int v = 0; v < t.total; ++v)
        if (widest[v] == best) out.push_back(to_ref(t, v));
    return out;
}

std::string rooted_code(const StratifoldGraph& g, VertexRef root, const MarkMap& marks) {
    require_tree(g);
    TreeView t(g);
    if (root.index < 0 || (root.is_white && root.index >= t.whites) ||
        (!root.is_white && root.index >= t.total - t.whites))
        throw GraphError("rooted_code: root out of range");
    int r = unified_index(t, root);
    return encode_from(g, t, r, -1, marks);
}

CanonicalCode canonical_code(const StratifoldGraph& g, const MarkMap& marks) {
    auto centroids = tree_centroids(g);
    std::string best;
    for (const VertexRef& c : centroids) {
        std::string code = rooted_code(g, c, marks);
        if (best.empty() || code < best) best = std::move(code);
    }
    return CanonicalCode{std::move(best)};
}

}  // namespace strat
