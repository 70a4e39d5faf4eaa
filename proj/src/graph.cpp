#include "strat/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace strat {

std::optional<int> StratifoldGraph::find_white(std::string_view id) const {
    auto it = white_index_.find(id);
    if (it == white_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> StratifoldGraph::find_black(std::string_view id) const {
    auto it = black_index_.find(id);
    if (it == black_index_.end()) return std::nullopt;
    return it->second;
}

bool StratifoldGraph::has_id(std::string_view id) const {
    return find_white(id).has_value() || find_black(id).has_value();
}

std::vector<int> StratifoldGraph::black_labels(int b) const {
    std::vector<int> labels;
    labels.reserve(black_adj_.at(b).size());
    for (int e : black_adj_.at(b)) labels.push_back(edges_[e].label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

GraphBuilder& GraphBuilder::add_white(std::string id, int genus) {
    whites_.push_back({std::move(id), genus});
    return *this;
}

GraphBuilder& GraphBuilder::add_black(std::string id) {
    blacks_.push_back({std::move(id)});
    return *this;
}

GraphBuilder& GraphBuilder::add_edge(std::string white_id, std::string black_id, int label) {
    edges_.emplace_back(std::move(white_id), std::move(black_id), label);
    return *this;
}

StratifoldGraph GraphBuilder::build() const {
    StratifoldGraph g;
    g.whites_ = whites_;
    g.blacks_ = blacks_;
    std::sort(g.whites_.begin(), g.whites_.end(),
              [](const WhiteVertex& a, const WhiteVertex& b) { return a.id < b.id; });
    std::sort(g.blacks_.begin(), g.blacks_.end(),
              [](const BlackVertex& a, const BlackVertex& b) { return a.id < b.id; });

    for (int i = 0; i < static_cast<int>(g.whites_.size()); ++i) {
        if (!g.white_index_.emplace(g.whites_[i].id, i).second)
            throw GraphError("duplicate vertex id '" + g.whites_[i].id + "'");
    }
    for (int i = 0; i < static_cast<int>(g.blacks_.size()); ++i) {
        if (g.white_index_.count(g.blacks_[i].id))
            throw GraphError("duplicate vertex id '" + g.blacks_[i].id + "'");
        if (!g.black_index_.emplace(g.blacks_[i].id, i).second)
            throw GraphError("duplicate vertex id '" + g.blacks_[i].id + "'");
    }

    g.edges_.reserve(edges_.size());
    for (const auto& [wid, bid, label] : edges_) {
        auto w = g.find_white(wid);
        if (!w) throw GraphError("edge endpoint '" + wid + "' is not a white vertex");
        auto b = g.find_black(bid);
        if (!b) throw GraphError("edge endpoint '" + bid + "' is not a black vertex");
        if (label < 1) throw GraphError("label < 1 on edge " + wid + " -- " + bid);
        g.edges_.push_back({*w, *b, label});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.white, a.black, a.label) < std::tie(b.white, b.black, b.label);
    });

    g.white_adj_.resize(g.whites_.size());
    g.black_adj_.resize(g.blacks_.size());
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        g.white_adj_[g.edges_[i].white].push_back(i);
        g.black_adj_[g.edges_[i].black].push_back(i);
    }
    return g;
}

GraphBuilder builder_from(const StratifoldGraph& g) {
    GraphBuilder b;
    for (const auto& w : g.whites()) b.add_white(w.id, w.genus);
    for (const auto& bv : g.blacks()) b.add_black(bv.id);
    for (const auto& e : g.edges())
        b.add_edge(g.white(e.white).id, g.black(e.black).id, e.label);
    return b;
}

// --- traversal helpers --------------------------------------------------

namespace {

// Unified vertex numbering: whites [0, W), blacks [W, W+B).
struct Adjacency {
    int whites = 0;
    int total = 0;
    // per vertex: (neighbor, edge index)
    std::vector<std::vector<std::pair<int, int>>> nbr;

    explicit Adjacency(const StratifoldGraph& g) {
        whites = g.white_count();
        total = g.vertex_count();
        nbr.resize(total);
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            nbr[e.white].push_back({whites + e.black, i});
            nbr[whites + e.black].push_back({e.white, i});
        }
    }

    std::string id(const StratifoldGraph& g, int v) const {
        return v < whites ? g.white(v).id : g.black(v - whites).id;
    }
};

std::vector<int> component_labels(const Adjacency& adj, int* component_count) {
    std::vector<int> comp(adj.total, -1);
    int n = 0;
    for (int s = 0; s < adj.total; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = n;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj.nbr[v]) {
                if (comp[u] == -1) {
                    comp[u] = n;
                    stack.push_back(u);
                }
            }
        }
        ++n;
    }
    if (component_count) *component_count = n;
    return comp;
}

StratifoldGraph subgraph_of(const StratifoldGraph& g, const std::vector<bool>& keep_white,
                            const std::vector<bool>& keep_black,
                            const std::vector<bool>& keep_edge) {
    GraphBuilder b;
    for (int i = 0; i < g.white_count(); ++i)
        if (keep_white[i]) b.add_white(g.white(i).id, g.white(i).genus);
    for (int i = 0; i < g.black_count(); ++i)
        if (keep_black[i]) b.add_black(g.black(i).id);
    for (int i = 0; i < g.edge_count(); ++i)
        if (keep_edge[i])
            b.add_edge(g.white(g.edge(i).white).id, g.black(g.edge(i).black).id,
                       g.edge(i).label);
    return b.build();
}

}  // namespace

std::vector<Violation> validate_structure(const StratifoldGraph& g) {
    std::vector<Violation> out;
    if (g.empty()) {
        out.push_back({ViolationKind::EmptyGraph, "graph has no vertices"});
        return out;
    }
    if (!is_connected(g)) {
        Adjacency adj(g);
        int n = 0;
        auto comp = component_labels(adj, &n);
        // name one vertex per extra component
        std::vector<std::string> reps(n);
        for (int v = adj.total - 1; v >= 0; --v) reps[comp[v]] = adj.id(g, v);
        std::string detail = "not connected; components rooted at";
        for (const auto& r : reps) detail += " " + r;
        out.push_back({ViolationKind::NotConnected, detail});
    }
    return out;
}

bool is_connected(const StratifoldGraph& g) {
    if (g.empty()) return false;
    Adjacency adj(g);
    int n = 0;
    component_labels(adj, &n);
    return n == 1;
}

std::vector<std::string> nontrivalent_blacks(const StratifoldGraph& g) {
    std::vector<std::string> out;
    for (int b = 0; b < g.black_count(); ++b) {
        auto labels = g.black_labels(b);
        bool ok = labels == std::vector<int>{1, 1, 1} || labels == std::vector<int>{1, 2} ||
                  labels == std::vector<int>{3};
        if (!ok) out.push_back(g.black(b).id);
    }
    return out;
}

bool is_trivalent(const StratifoldGraph& g) { return nontrivalent_blacks(g).empty(); }

bool is_forest(const StratifoldGraph& g) { return !find_cycle(g).has_value(); }

bool is_tree(const StratifoldGraph& g) { return is_forest(g) && is_connected(g); }

std::optional<std::vector<std::string>> find_cycle(const StratifoldGraph& g) {
    Adjacency adj(g);
    std::vector<int> parent(adj.total, -2), parent_edge(adj.total, -1);
    for (int s = 0; s < adj.total; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj.nbr[v]) {
                if (e == parent_edge[v]) continue;
                if (parent[u] == -2) {
                    parent[u] = v;
                    parent_edge[u] = e;
                    stack.push_back(u);
                    continue;
                }
                // Non-tree edge: both root paths meet; strip the common tail.
                std::vector<int> pv, pu;
                for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                while (pv.size() > 1 && pu.size() > 1 &&
                       pv[pv.size() - 2] == pu[pu.size() - 2]) {
                    pv.pop_back();
                    pu.pop_back();
                }
                // pv = v..meet, pu = u..meet; cycle closes over the edge u--v.
                std::vector<std::string> cycle;
                for (int x : pv) cycle.push_back(adj.id(g, x));
                for (int j = static_cast<int>(pu.size()) - 2; j >= 0; --j)
                    cycle.push_back(adj.id(g, pu[j]));
                return cycle;
            }
        }
    }
    return std::nullopt;
}

std::vector<StratifoldGraph> connected_components(const StratifoldGraph& g) {
    return delete_open_star(g, {});
}

std::vector<StratifoldGraph> delete_open_star(const StratifoldGraph& g,
                                              std::span<const std::string> vertex_ids) {
    std::vector<bool> drop_white(g.white_count(), false), drop_black(g.black_count(), false);
    for (const auto& id : vertex_ids) {
        if (auto w = g.find_white(id)) {
            drop_white[*w] = true;
        } else if (auto b = g.find_black(id)) {
            drop_black[*b] = true;
        } else {
            throw GraphError("unknown vertex id '" + id + "'");
        }
    }

    Adjacency adj(g);
    std::vector<bool> dropped(adj.total, false);
    for (int i = 0; i < g.white_count(); ++i) dropped[i] = drop_white[i];
    for (int i = 0; i < g.black_count(); ++i) dropped[adj.whites + i] = drop_black[i];

    std::vector<int> comp(adj.total, -1);
    int n = 0;
    for (int s = 0; s < adj.total; ++s) {
        if (dropped[s] || comp[s] != -1) continue;
        comp[s] = n;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj.nbr[v]) {
                if (dropped[u] || comp[u] != -1) continue;
                comp[u] = n;
                stack.push_back(u);
            }
        }
        ++n;
    }

    // Order components by smallest vertex id.
    std::vector<std::string> min_id(n);
    for (int v = 0; v < adj.total; ++v) {
        if (comp[v] < 0) continue;
        std::string id = adj.id(g, v);
        if (min_id[comp[v]].empty() || id < min_id[comp[v]]) min_id[comp[v]] = id;
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return min_id[a] < min_id[b]; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<StratifoldGraph> out(n);
    for (int c = 0; c < n; ++c) {
        std::vector<bool> kw(g.white_count(), false), kb(g.black_count(), false),
            ke(g.edge_count(), false);
        for (int v = 0; v < adj.total; ++v) {
            if (comp[v] != order[c]) continue;
            if (v < adj.whites)
                kw[v] = true;
            else
                kb[v - adj.whites] = true;
        }
        for (int i = 0; i < g.edge_count(); ++i)
            ke[i] = kw[g.edge(i).white] && kb[g.edge(i).black];
        out[c] = subgraph_of(g, kw, kb, ke);
    }
    return out;
}

SubgraphSelection induced_subgraph(const StratifoldGraph& g,
                                   std::span<const std::string> vertex_ids) {
    SubgraphSelection sel;
    std::vector<bool> kw(g.white_count(), false), kb(g.black_count(), false);
    for (const auto& id : vertex_ids) {
        if (auto w = g.find_white(id)) {
            kw[*w] = true;
        } else if (auto b = g.find_black(id)) {
            kb[*b] = true;
        } else {
            throw GraphError("unknown vertex id '" + id + "'");
        }
        sel.vertex_ids.push_back(id);
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (kw[g.edge(i).white] && kb[g.edge(i).black]) sel.edge_indices.push_back(i);
    return sel;
}

StratifoldGraph prune(const StratifoldGraph& g, const SubgraphSelection& gamma) {
    std::vector<bool> kw(g.white_count(), false), kb(g.black_count(), false),
        ke(g.edge_count(), false);
    for (const auto& id : gamma.vertex_ids) {
        if (auto w = g.find_white(id)) {
            kw[*w] = true;
        } else if (auto b = g.find_black(id)) {
            kb[*b] = true;
        } else {
            throw GraphError("subgraph vertex '" + id + "' not in graph");
        }
    }
    for (int e : gamma.edge_indices) {
        if (e < 0 || e >= g.edge_count())
            throw GraphError("subgraph edge index out of range");
        if (!kw[g.edge(e).white] || !kb[g.edge(e).black])
            throw GraphError("subgraph edge has unselected endpoint");
        ke[e] = true;
    }

    // Connectivity of the selection itself.
    {
        GraphBuilder b;
        for (int i = 0; i < g.white_count(); ++i)
            if (kw[i]) b.add_white(g.white(i).id, g.white(i).genus);
        for (int i = 0; i < g.black_count(); ++i)
            if (kb[i]) b.add_black(g.black(i).id);
        for (int i = 0; i < g.edge_count(); ++i)
            if (ke[i])
                b.add_edge(g.white(g.edge(i).white).id, g.black(g.edge(i).black).id,
                           g.edge(i).label);
        StratifoldGraph sel = b.build();
        if (sel.empty() || !is_connected(sel))
            throw GraphError("subgraph selection is not a nonempty connected subgraph");
    }

    GraphBuilder out;
    for (int i = 0; i < g.white_count(); ++i)
        if (kw[i]) out.add_white(g.white(i).id, g.white(i).genus);
    for (int i = 0; i < g.black_count(); ++i)
        if (kb[i]) out.add_black(g.black(i).id);
    for (int i = 0; i < g.edge_count(); ++i)
        if (ke[i])
            out.add_edge(g.white(g.edge(i).white).id, g.black(g.edge(i).black).id,
                         g.edge(i).label);

    // Fringe edges at selected blacks get fresh capping whites.
    std::vector<int> fringe;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!ke[i] && kb[g.edge(i).black]) fringe.push_back(i);

    const std::vector<std::string> stems{"pw"};
    std::vector<std::string> used;
    for (int idx : fringe) {
        const Edge& e = g.edge(idx);
        std::string name = "pw" + std::to_string(fresh_counter(g, stems, used));
        used.push_back(name);
        out.add_white(name, 0);
        out.add_edge(name, g.black(e.black).id, e.label);
    }
    return out.build();
}

// --- serialization -------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

std::vector<StratifoldGraph> parse_graph_stream(std::string_view text) {
    std::vector<StratifoldGraph> out;
    GraphBuilder cur;
    bool has_content = false;
    int line_no = 0;
    int label_line = 0;

    auto flush = [&]() {
        if (!has_content) return;
        try {
            out.push_back(cur.build());
        } catch (const GraphError& e) {
            throw ParseError(label_line, e.what());
        }
        cur = GraphBuilder();
        has_content = false;
    };

    std::istringstream ss{std::string(text)};
    std::string raw;
    while (std::getline(ss, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto toks = split_ws(raw);
        if (toks.empty()) {
            flush();
            continue;
        }
        label_line = line_no;
        const std::string& kind = toks[0];
        if (kind == "w") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'w <id> <genus>'");
            cur.add_white(toks[1], parse_int(toks[2], line_no, "genus"));
        } else if (kind == "b") {
            if (toks.size() != 2) throw ParseError(line_no, "expected 'b <id>'");
            cur.add_black(toks[1]);
        } else if (kind == "e") {
            if (toks.size() != 4)
                throw ParseError(line_no, "expected 'e <white-id> <black-id> <label>'");
            int label = parse_int(toks[3], line_no, "label");
            if (label < 1) throw ParseError(line_no, "label < 1");
            cur.add_edge(toks[1], toks[2], label);
        } else {
            throw ParseError(line_no, "unknown directive '" + kind + "'");
        }
        has_content = true;
    }
    flush();
    return out;
}

StratifoldGraph parse_graph(std::string_view text) {
    auto all = parse_graph_stream(text);
    if (all.empty()) throw ParseError(1, "no graph record in input");
    if (all.size() > 1) throw ParseError(1, "expected a single graph record");
    return all[0];
}

std::string serialize(const StratifoldGraph& g) {
    std::string out;
    for (const auto& w : g.whites())
        out += "w " + w.id + " " + std::to_string(w.genus) + "\n";
    for (const auto& b : g.blacks()) out += "b " + b.id + "\n";
    for (const auto& e : g.edges())
        out += "e " + g.white(e.white).id + " " + g.black(e.black).id + " " +
               std::to_string(e.label) + "\n";
    return out;
}

std::string serialize_stream(std::span<const StratifoldGraph> graphs) {
    std::string out;
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (i) out += "\n";
        out += serialize(graphs[i]);
    }
    return out;
}

std::string export_dot(const StratifoldGraph& g) {
    std::string out = "graph stratifold {\n";
    for (const auto& w : g.whites())
        out += "  \"" + w.id + "\" [shape=circle, label=\"" + w.id +
               " g=" + std::to_string(w.genus) + "\"];\n";
    for (const auto& b : g.blacks()) out += "  \"" + b.id + "\" [shape=point];\n";
    for (const auto& e : g.edges())
        out += "  \"" + g.white(e.white).id + "\" -- \"" + g.black(e.black).id +
               "\" [label=\"" + std::to_string(e.label) + "\"];\n";
    out += "}\n";
    return out;
}

int fresh_counter(const StratifoldGraph& g, std::span<const std::string> stems,
                  std::span<const std::string> extra_used) {
    std::set<std::string, std::less<>> used(extra_used.begin(), extra_used.end());
    auto taken = [&](const std::string& id) {
        return g.has_id(id) || used.count(id) != 0;
    };
    for (int n = 0;; ++n) {
        bool free = true;
        for (const auto& stem : stems)
            if (taken(stem + std::to_string(n))) {
                free = false;
                break;
            }
        if (free) return n;
    }
}

}  // namespace strat
