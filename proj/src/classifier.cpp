#include "strat/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strat/canonical.hpp"

namespace strat {

std::string collapsible_rule_name(CollapsibleRule r) {
    switch (r) {
        case CollapsibleRule::BlackDegreeLabels: return "black-degree-labels";
        case CollapsibleRule::WhiteLabelOneCount: return "white-label-one-count";
        case CollapsibleRule::RootMissing: return "root-missing";
        case CollapsibleRule::RootAmbiguous: return "root-ambiguous";
        case CollapsibleRule::ParityMismatch: return "parity-mismatch";
    }
    return "?";
}

CollapsibleResult collapsible_root(const StratifoldGraph& c) {
    if (!is_tree(c)) throw NotATreeError("collapsible_root: not a connected tree");

    CollapsibleResult res;
    if (c.vertex_count() == 1 && c.white_count() == 1) {
        res.root = c.white(0).id;
        return res;
    }

    for (int b = 0; b < c.black_count(); ++b) {
        if (c.black_labels(b) != std::vector<int>{1, 2}) {
            res.rule = CollapsibleRule::BlackDegreeLabels;
            res.vertex = c.black(b).id;
            return res;
        }
    }

    std::vector<int> label1(c.white_count(), 0);
    for (const Edge& e : c.edges())
        if (e.label == 1) ++label1[e.white];
    for (int w = 0; w < c.white_count(); ++w) {
        if (label1[w] > 1) {
            res.rule = CollapsibleRule::WhiteLabelOneCount;
            res.vertex = c.white(w).id;
            return res;
        }
    }

    int root = -1;
    for (int w = 0; w < c.white_count(); ++w) {
        if (label1[w] != 0) continue;
        if (root >= 0) {
            res.rule = CollapsibleRule::RootAmbiguous;
            res.vertex = c.white(w).id;
            return res;
        }
        root = w;
    }
    if (root < 0) {
        res.rule = CollapsibleRule::RootMissing;
        res.vertex = c.white(0).id;
        return res;
    }

    // Parity sweep: an edge at even distance from the root must carry
    // label 2, at odd distance label 1.
    {
        int whites = c.white_count();
        std::vector<std::vector<std::pair<int, int>>> nbr(c.vertex_count());
        for (int i = 0; i < c.edge_count(); ++i) {
            const Edge& e = c.edge(i);
            nbr[e.white].push_back({whites + e.black, i});
            nbr[whites + e.black].push_back({e.white, i});
        }
        std::vector<int> depth(c.vertex_count(), -1);
        std::vector<int> queue{root};
        depth[root] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [u, ei] : nbr[v]) {
                if (depth[u] != -1) continue;
                depth[u] = depth[v] + 1;
                int want = depth[v] % 2 == 0 ? 2 : 1;
                if (c.edge(ei).label != want) {
                    res.rule = CollapsibleRule::ParityMismatch;
                    res.vertex = u < whites ? c.white(u).id : c.black(u - whites).id;
                    return res;
                }
                queue.push_back(u);
            }
        }
    }

    res.root = c.white(root).id;
    return res;
}

std::variant<Decomposition, NonCollapsible> decompose(const StratifoldGraph& g) {
    if (!is_tree(g)) throw PreconditionError("decompose: graph is not a tree");
    for (const auto& w : g.whites())
        if (w.genus != 0)
            throw PreconditionError("decompose: white '" + w.id + "' has nonzero genus");
    for (int b = 0; b < g.black_count(); ++b)
        if (g.black_degree(b) <= 1)
            throw PreconditionError("decompose: terminal black '" + g.black(b).id + "'");
    if (auto bad = nontrivalent_blacks(g); !bad.empty())
        throw NotTrivalentError("decompose: black '" + bad.front() + "' is not trivalent");

    Decomposition d;
    for (int b = 0; b < g.black_count(); ++b)
        if (g.black_degree(b) == 3) d.degree3_blacks.push_back(g.black(b).id);

    auto comps = delete_open_star(g, d.degree3_blacks);
    std::map<std::string, std::string> root_of_white;  // white id -> its component root
    for (auto& comp : comps) {
        CollapsibleResult res = collapsible_root(comp);
        if (!res.ok())
            return NonCollapsible{res.rule, res.vertex, std::move(comp)};
        for (const auto& w : comp.whites()) root_of_white[w.id] = *res.root;
        d.components.push_back({std::move(comp), *res.root});
    }

    std::set<int> b3;
    for (const auto& id : d.degree3_blacks) b3.insert(*g.find_black(id));
    std::map<std::string, StarWhite> star;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (!b3.count(e.black)) continue;
        auto& entry = star[g.white(e.white).id];
        entry.white = g.white(e.white).id;
        entry.star_edges.push_back(i);
    }
    for (auto& [id, entry] : star) {
        entry.is_root = root_of_white.at(id) == id;
        d.star_map.push_back(entry);
    }
    return d;
}

StratifoldGraph reduced_graph(const StratifoldGraph& g, const Decomposition& d) {
    GraphBuilder b;
    std::set<std::string> star_whites;
    for (const auto& sw : d.star_map) star_whites.insert(sw.white);
    for (const auto& id : d.degree3_blacks) b.add_black(id);
    for (const auto& w : g.whites())
        if (star_whites.count(w.id)) b.add_white(w.id, w.genus);
    for (const auto& sw : d.star_map)
        for (int ei : sw.star_edges)
            b.add_edge(sw.white, g.black(g.edge(ei).black).id, g.edge(ei).label);

    const std::vector<std::string> stems{"rb", "rt"};
    std::vector<std::string> used;
    for (const auto& sw : d.star_map) {
        if (sw.is_root) continue;
        int n = fresh_counter(g, stems, used);
        std::string rb = "rb" + std::to_string(n);
        std::string rt = "rt" + std::to_string(n);
        used.push_back(rb);
        used.push_back(rt);
        b.add_black(rb);
        b.add_white(rt, 0);
        b.add_edge(sw.white, rb, 1);
        b.add_edge(rt, rb, 2);
    }
    return b.build();
}

bool verify_horned(const StratifoldGraph& h) {
    if (!is_tree(h)) throw NotATreeError("verify_horned: not a connected tree");

    std::vector<bool> terminal_white(h.white_count());
    for (int w = 0; w < h.white_count(); ++w)
        terminal_white[w] = h.white_degree(w) <= 1;

    // (1) blacks adjacent to a terminal white have degree 2, others degree 3
    for (int b = 0; b < h.black_count(); ++b) {
        bool near_terminal = false;
        for (int e : h.black_edges(b)) near_terminal |= terminal_white[h.edge(e).white];
        if (h.black_degree(b) != (near_terminal ? 2 : 3)) return false;
    }
    // (2) nonterminal whites have degree 2
    for (int w = 0; w < h.white_count(); ++w)
        if (!terminal_white[w] && h.white_degree(w) != 2) return false;
    // (3) terminal edges labeled 2, nonterminal edges labeled 1
    for (const Edge& e : h.edges()) {
        bool term = h.white_degree(e.white) <= 1 || h.black_degree(e.black) <= 1;
        if (e.label != (term ? 2 : 1)) return false;
    }
    // (4) a vertex of degree 3 exists
    for (int b = 0; b < h.black_count(); ++b)
        if (h.black_degree(b) == 3) return true;
    for (int w = 0; w < h.white_count(); ++w)
        if (h.white_degree(w) >= 3) return true;
    return false;
}

namespace {

bool has_degree3_black(const StratifoldGraph& c) {
    for (int b = 0; b < c.black_count(); ++b)
        if (c.black_degree(b) >= 3) return true;
    return false;
}

// Terminal label-1 edge: a leaf white whose unique edge has label 1.
// Returns (white index, edge index) minimizing (white id, black id).
std::optional<std::pair<int, int>> find_strippable(const StratifoldGraph& c) {
    for (int w = 0; w < c.white_count(); ++w) {
        if (c.white_degree(w) != 1) continue;
        int e = c.white_edges(w)[0];
        if (c.edge(e).label == 1) return std::make_pair(w, e);
    }
    return std::nullopt;
}

// Cuts every white of degree >= 3 down to its two branches of smallest
// canonical code.
StratifoldGraph extract_horned(StratifoldGraph c) {
    for (;;) {
        int cut = -1;
        for (int w = 0; w < c.white_count(); ++w)
            if (c.white_degree(w) >= 3) {
                cut = w;
                break;
            }
        if (cut < 0) break;

        std::string cut_id = c.white(cut).id;
        const std::vector<std::string> cut_ids{cut_id};
        auto branches = delete_open_star(c, cut_ids);

        // Each branch attaches to the cut white over exactly one edge.
        struct Ranked {
            std::string key;
            int branch;
            int edge;  // edge of c joining cut to this branch
        };
        std::vector<Ranked> ranked;
        for (size_t i = 0; i < branches.size(); ++i) {
            int attach_edge = -1;
            for (int e : c.white_edges(cut)) {
                const std::string& bid = c.black(c.edge(e).black).id;
                if (branches[i].find_black(bid)) {
                    attach_edge = e;
                    break;
                }
            }
            if (attach_edge < 0)
                throw std::logic_error("extract_horned: branch without attachment");
            ranked.push_back(
                {canonical_code(branches[i]).bytes, static_cast<int>(i), attach_edge});
        }
        // ties keep the branch ordering, which is by smallest vertex id
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const Ranked& a, const Ranked& b) { return a.key < b.key; });

        GraphBuilder nb;
        nb.add_white(cut_id, c.white(cut).genus);
        for (int keep = 0; keep < 2; ++keep) {
            const auto& r = ranked[keep];
            const StratifoldGraph& br = branches[r.branch];
            for (const auto& w : br.whites()) nb.add_white(w.id, w.genus);
            for (const auto& bv : br.blacks()) nb.add_black(bv.id);
            for (const auto& e : br.edges())
                nb.add_edge(br.white(e.white).id, br.black(e.black).id, e.label);
            nb.add_edge(cut_id, c.black(c.edge(r.edge).black).id, c.edge(r.edge).label);
        }
        c = nb.build();
    }
    return c;
}

std::optional<StratifoldGraph> search_component(const StratifoldGraph& c) {
    if (!has_degree3_black(c)) return std::nullopt;
    if (auto strip = find_strippable(c)) {
        const std::string black_id = c.black(c.edge(strip->second).black).id;
        const std::vector<std::string> removed{black_id};
        for (const auto& piece : delete_open_star(c, removed))
            if (auto found = search_component(piece)) return found;
        return std::nullopt;
    }
    // All terminal edges carry label 2: a horned tree is present.
    StratifoldGraph horned = extract_horned(c);
    if (!verify_horned(horned))
        throw std::logic_error("horned_search: extraction did not yield a horned tree");
    return horned;
}

}  // namespace

std::optional<HornedWitness> horned_search(const StratifoldGraph& reduced) {
    if (reduced.empty()) return std::nullopt;
    for (const auto& comp : connected_components(reduced)) {
        auto found = search_component(comp);
        if (!found) continue;
        HornedWitness w;
        w.tree = std::move(*found);
        for (const auto& wv : w.tree.whites()) w.host_map.push_back({wv.id, wv.id});
        for (const auto& bv : w.tree.blacks()) w.host_map.push_back({bv.id, bv.id});
        return w;
    }
    return std::nullopt;
}

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::SimplyConnected: return "simply-connected";
        case VerdictKind::NotTree: return "not-tree";
        case VerdictKind::GenusNonzero: return "genus-nonzero";
        case VerdictKind::TerminalBlack: return "terminal-black";
        case VerdictKind::NonCollapsibleComponent: return "non-collapsible";
        case VerdictKind::HornedTree: return "horned-tree";
    }
    return "?";
}

Verdict classify(const StratifoldGraph& g) {
    if (!validate_structure(g).empty())
        throw PreconditionError("classify: graph is not structurally valid");
    if (auto bad = nontrivalent_blacks(g); !bad.empty())
        throw NotTrivalentError("classify: black '" + bad.front() + "' is not trivalent");

    Verdict v;
    if (auto cycle = find_cycle(g)) {
        v.kind = VerdictKind::NotTree;
        v.cycle = std::move(*cycle);
        return v;
    }
    for (const auto& w : g.whites())
        if (w.genus != 0) {
            v.kind = VerdictKind::GenusNonzero;
            v.vertex = w.id;
            return v;
        }
    for (int b = 0; b < g.black_count(); ++b)
        if (g.black_degree(b) <= 1) {
            v.kind = VerdictKind::TerminalBlack;
            v.vertex = g.black(b).id;
            return v;
        }

    auto dec = decompose(g);
    if (auto* fail = std::get_if<NonCollapsible>(&dec)) {
        v.kind = VerdictKind::NonCollapsibleComponent;
        v.non_collapsible = std::move(*fail);
        return v;
    }
    auto& d = std::get<Decomposition>(dec);
    StratifoldGraph r = reduced_graph(g, d);
    if (auto horned = horned_search(r)) {
        v.kind = VerdictKind::HornedTree;
        v.horned = std::move(*horned);
        return v;
    }
    v.kind = VerdictKind::SimplyConnected;
    v.decomposition = std::move(d);
    v.reduced = std::move(r);
    return v;
}

std::string serialize_verdict(const Verdict& v, bool include_witness) {
    if (v.simply_connected()) return "verdict simply-connected\n";
    std::string out = "verdict obstruction " + verdict_kind_name(v.kind) + "\n";
    if (!include_witness) return out;
    switch (v.kind) {
        case VerdictKind::NotTree: {
            out += "cycle";
            for (const auto& id : v.cycle) out += " " + id;
            out += "\n";
            break;
        }
        case VerdictKind::GenusNonzero:
            out += "white " + v.vertex + "\n";
            break;
        case VerdictKind::TerminalBlack:
            out += "black " + v.vertex + "\n";
            break;
        case VerdictKind::NonCollapsibleComponent: {
            out += "rule " + collapsible_rule_name(v.non_collapsible->rule) + "\n";
            out += "vertex " + v.non_collapsible->vertex + "\n";
            out += "component\n" + serialize(v.non_collapsible->component) + "end\n";
            break;
        }
        case VerdictKind::HornedTree: {
            out += "witness\n" + serialize(v.horned->tree) + "end\n";
            for (const auto& [wit, host] : v.horned->host_map)
                out += "map " + wit + " " + host + "\n";
            break;
        }
        case VerdictKind::SimplyConnected:
            break;
    }
    return out;
}

}  // namespace strat
