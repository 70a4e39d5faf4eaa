#include "strat/generator.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "strat/canonical.hpp"

namespace strat {

// --- constructions from plain trees ---------------------------------------

namespace {

void require_simple_tree(const SimpleTree& t) {
    if (t.vertex_count < 1) throw GraphError("tree must have at least one vertex");
    if (static_cast<int>(t.edges.size()) != t.vertex_count - 1)
        throw GraphError("edge count does not match a tree");
    std::vector<int> parent(t.vertex_count);
    for (int i = 0; i < t.vertex_count; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : t.edges) {
        if (u < 0 || v < 0 || u >= t.vertex_count || v >= t.vertex_count)
            throw GraphError("tree edge endpoint out of range");
        int ru = find(u), rv = find(v);
        if (ru == rv) throw GraphError("tree has a cycle");
        parent[ru] = rv;
    }
}

std::vector<int> simple_degrees(const SimpleTree& t) {
    std::vector<int> deg(t.vertex_count, 0);
    for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

}  // namespace

StratifoldGraph horned_tree_from_tree(const SimpleTree& t) {
    require_simple_tree(t);
    auto deg = simple_degrees(t);
    bool any3 = false;
    for (int v = 0; v < t.vertex_count; ++v) {
        if (deg[v] >= 2 && deg[v] != 3)
            throw GraphError("nonterminal vertex " + std::to_string(v) +
                             " must have degree 3");
        any3 |= deg[v] == 3;
    }
    if (!any3) throw GraphError("tree needs at least one degree-3 vertex");

    GraphBuilder b;
    for (int v = 0; v < t.vertex_count; ++v) {
        if (deg[v] == 3)
            b.add_black("c" + std::to_string(v));
        else
            b.add_white("t" + std::to_string(v), 0);
    }
    for (size_t j = 0; j < t.edges.size(); ++j) {
        auto [u, v] = t.edges[j];
        if (deg[u] == 1) std::swap(u, v);  // v is the terminal end if any
        std::string mid = "m" + std::to_string(j);
        b.add_white(mid, 0);
        if (deg[v] == 1) {
            // trisect: black(u) -1- mid -1- near -2- white(v)
            std::string near = "n" + std::to_string(j);
            b.add_black(near);
            b.add_edge(mid, "c" + std::to_string(u), 1);
            b.add_edge(mid, near, 1);
            b.add_edge("t" + std::to_string(v), near, 2);
        } else {
            // bisect: black(u) -1- mid -1- black(v)
            b.add_edge(mid, "c" + std::to_string(u), 1);
            b.add_edge(mid, "c" + std::to_string(v), 1);
        }
    }
    return b.build();
}

StratifoldGraph collapsible_from_rooted_tree(const SimpleTree& t, int root) {
    require_simple_tree(t);
    if (root < 0 || root >= t.vertex_count) throw GraphError("root out of range");

    std::vector<std::vector<std::pair<int, int>>> nbr(t.vertex_count);
    for (size_t j = 0; j < t.edges.size(); ++j) {
        auto [u, v] = t.edges[j];
        nbr[u].push_back({v, static_cast<int>(j)});
        nbr[v].push_back({u, static_cast<int>(j)});
    }
    std::vector<int> depth(t.vertex_count, -1);
    std::vector<int> queue{root};
    depth[root] = 0;

    GraphBuilder b;
    for (int v = 0; v < t.vertex_count; ++v) b.add_white("v" + std::to_string(v), 0);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (auto [u, j] : nbr[v]) {
            if (depth[u] != -1) continue;
            depth[u] = depth[v] + 1;
            std::string mid = "e" + std::to_string(j);
            b.add_black(mid);
            b.add_edge("v" + std::to_string(v), mid, 2);  // root side, even distance
            b.add_edge("v" + std::to_string(u), mid, 1);
            queue.push_back(u);
        }
    }
    return b.build();
}

// --- rewriting operations ---------------------------------------------------

namespace {

int require_white(const StratifoldGraph& g, std::string_view id) {
    auto w = g.find_white(id);
    if (!w) throw GraphError("unknown white vertex '" + std::string(id) + "'");
    return *w;
}

StratifoldGraph op1_with_partition(const StratifoldGraph& g, int w,
                                   const std::vector<int>& part, const Op1Ids& ids) {
    std::set<int> part_set(part.begin(), part.end());
    if (part_set.size() != part.size())
        throw GraphError("op1: repeated edge in partition");
    for (int e : part)
        if (e < 0 || e >= g.edge_count() || g.edge(e).white != w)
            throw GraphError("op1: partition edge not incident to target white");
    if (g.white(w).genus != 0)
        throw PreconditionError("op1: target white has nonzero genus");

    GraphBuilder b;
    for (int i = 0; i < g.white_count(); ++i)
        if (i != w) b.add_white(g.white(i).id, g.white(i).genus);
    for (const auto& bv : g.blacks()) b.add_black(bv.id);
    b.add_white(ids.white_a, 0);
    b.add_white(ids.white_b, 0);
    b.add_white(ids.terminal, 0);
    b.add_black(ids.black);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.white != w) {
            b.add_edge(g.white(e.white).id, g.black(e.black).id, e.label);
        } else {
            const std::string& side = part_set.count(i) ? ids.white_a : ids.white_b;
            b.add_edge(side, g.black(e.black).id, e.label);
        }
    }
    b.add_edge(ids.white_a, ids.black, 1);
    b.add_edge(ids.white_b, ids.black, 1);
    b.add_edge(ids.terminal, ids.black, 1);
    return b.build();
}

}  // namespace

Op1Ids default_op1_ids(const StratifoldGraph& g) {
    const std::vector<std::string> stems{"o1a", "o1b", "o1k", "o1t"};
    int n = fresh_counter(g, stems);
    std::string s = std::to_string(n);
    return {"o1a" + s, "o1b" + s, "o1k" + s, "o1t" + s};
}

PendantIds default_op1_star_ids(const StratifoldGraph& g1, const StratifoldGraph& g2) {
    for (int n = 0;; ++n) {
        std::string jk = "jk" + std::to_string(n), jt = "jt" + std::to_string(n);
        if (!g1.has_id(jk) && !g1.has_id(jt) && !g2.has_id(jk) && !g2.has_id(jt))
            return {jk, jt};
    }
}

PendantIds default_op2_ids(const StratifoldGraph& g) {
    const std::vector<std::string> stems{"pk", "pt"};
    int n = fresh_counter(g, stems);
    return {"pk" + std::to_string(n), "pt" + std::to_string(n)};
}

StratifoldGraph op1(const StratifoldGraph& g, std::string_view white_id, int k) {
    return op1(g, white_id, k, default_op1_ids(g));
}

StratifoldGraph op1(const StratifoldGraph& g, std::string_view white_id, int k,
                    const Op1Ids& ids) {
    int w = require_white(g, white_id);
    int m = g.white_degree(w);
    if (k < 0 || k > m) throw GraphError("op1: k out of range");
    std::vector<int> part(g.white_edges(w).begin(), g.white_edges(w).begin() + k);
    return op1_with_partition(g, w, part, ids);
}

StratifoldGraph op1_star(const StratifoldGraph& g1, std::string_view w1,
                         const StratifoldGraph& g2, std::string_view w2) {
    return op1_star(g1, w1, g2, w2, default_op1_star_ids(g1, g2));
}

StratifoldGraph op1_star(const StratifoldGraph& g1, std::string_view w1,
                         const StratifoldGraph& g2, std::string_view w2,
                         const PendantIds& ids) {
    require_white(g1, w1);
    require_white(g2, w2);
    for (const auto& w : g2.whites())
        if (g1.has_id(w.id))
            throw GraphError("op1_star: graphs share vertex id '" + w.id + "'");
    for (const auto& b : g2.blacks())
        if (g1.has_id(b.id))
            throw GraphError("op1_star: graphs share vertex id '" + b.id + "'");

    GraphBuilder b = builder_from(g1);
    for (const auto& w : g2.whites()) b.add_white(w.id, w.genus);
    for (const auto& bv : g2.blacks()) b.add_black(bv.id);
    for (const auto& e : g2.edges())
        b.add_edge(g2.white(e.white).id, g2.black(e.black).id, e.label);
    b.add_black(ids.black);
    b.add_white(ids.terminal, 0);
    b.add_edge(std::string(w1), ids.black, 1);
    b.add_edge(std::string(w2), ids.black, 1);
    b.add_edge(ids.terminal, ids.black, 1);
    return b.build();
}

StratifoldGraph op2(const StratifoldGraph& g, std::string_view w0) {
    return op2(g, w0, default_op2_ids(g));
}

StratifoldGraph op2(const StratifoldGraph& g, std::string_view w0, const PendantIds& ids) {
    require_white(g, w0);
    GraphBuilder b = builder_from(g);
    b.add_black(ids.black);
    b.add_white(ids.terminal, 0);
    b.add_edge(std::string(w0), ids.black, 2);
    b.add_edge(ids.terminal, ids.black, 1);
    return b.build();
}

// --- build sequences ----------------------------------------------------------

std::string serialize(const BuildSequence& seq) {
    std::string out = "buildseq v1\n";
    std::vector<std::string> init = seq.initial_whites;
    if (init.empty()) init.push_back("w0");
    for (const auto& id : init) out += "init " + id + "\n";
    for (const BuildStep& s : seq.steps) {
        switch (s.kind) {
            case BuildStep::Kind::O1: {
                out += "O1 " + s.target + " " + std::to_string(s.k);
                for (int e : s.part_edges) out += " " + std::to_string(e);
                break;
            }
            case BuildStep::Kind::O1Star:
                out += "O1* " + s.anchor_a + " " + s.anchor_b;
                break;
            case BuildStep::Kind::O2:
                out += "O2 " + s.target;
                break;
        }
        if (!s.fresh.empty()) {
            out += " :";
            for (const auto& id : s.fresh) out += " " + id;
        }
        out += "\n";
    }
    return out;
}

BuildSequence parse_build_sequence(std::string_view text) {
    std::istringstream ss{std::string(text)};
    std::string line;
    int line_no = 0;
    BuildSequence seq;
    bool saw_header = false;
    while (std::getline(ss, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "buildseq" || toks[1] != "v1")
                throw ParseError(line_no, "expected 'buildseq v1' header");
            saw_header = true;
            continue;
        }
        std::vector<std::string> fresh;
        if (auto sep = std::find(toks.begin(), toks.end(), ":"); sep != toks.end()) {
            fresh.assign(sep + 1, toks.end());
            toks.erase(sep, toks.end());
        }
        BuildStep step;
        step.fresh = std::move(fresh);
        if (toks[0] == "init") {
            if (toks.size() != 2 || !step.fresh.empty())
                throw ParseError(line_no, "expected 'init <white-id>'");
            seq.initial_whites.push_back(toks[1]);
            continue;
        }
        if (toks[0] == "O1") {
            if (toks.size() < 3) throw ParseError(line_no, "expected 'O1 <white> <k> ...'");
            step.kind = BuildStep::Kind::O1;
            step.target = toks[1];
            try {
                step.k = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad O1 partition size '" + toks[2] + "'");
            }
            for (size_t i = 3; i < toks.size(); ++i) {
                try {
                    step.part_edges.push_back(std::stoi(toks[i]));
                } catch (const std::exception&) {
                    throw ParseError(line_no, "bad O1 edge index '" + toks[i] + "'");
                }
            }
        } else if (toks[0] == "O1*") {
            if (toks.size() != 3)
                throw ParseError(line_no, "expected 'O1* <anchorA> <anchorB>'");
            step.kind = BuildStep::Kind::O1Star;
            step.anchor_a = toks[1];
            step.anchor_b = toks[2];
        } else if (toks[0] == "O2") {
            if (toks.size() != 2) throw ParseError(line_no, "expected 'O2 <white>'");
            step.kind = BuildStep::Kind::O2;
            step.target = toks[1];
        } else {
            throw ParseError(line_no, "unknown step '" + toks[0] + "'");
        }
        seq.steps.push_back(std::move(step));
    }
    if (!saw_header) throw ParseError(1, "expected 'buildseq v1' header");
    return seq;
}

namespace {

struct Forest {
    std::vector<StratifoldGraph> comps;
    std::vector<int> levels;

    int find_component(std::string_view white_id) const {
        for (size_t i = 0; i < comps.size(); ++i)
            if (comps[i].find_white(white_id)) return static_cast<int>(i);
        return -1;
    }

    bool id_used(const std::string& id) const {
        for (const auto& c : comps)
            if (c.has_id(id)) return true;
        return false;
    }

    int fresh(std::span<const std::string> stems) const {
        for (int n = 0;; ++n) {
            bool free = true;
            for (const auto& stem : stems)
                if (id_used(stem + std::to_string(n))) {
                    free = false;
                    break;
                }
            if (free) return n;
        }
    }

    void check_fresh(std::span<const std::string> ids) const {
        for (const auto& id : ids)
            if (id_used(id))
                throw GraphError("fresh id '" + id + "' already in use");
    }
};

Forest replay_forest(const BuildSequence& seq) {
    Forest f;
    std::vector<std::string> init = seq.initial_whites;
    if (init.empty()) init.push_back("w0");
    for (const auto& id : init) {
        if (f.id_used(id)) throw GraphError("duplicate initial white '" + id + "'");
        f.comps.push_back(GraphBuilder().add_white(id, 0).build());
        f.levels.push_back(0);
    }

    for (const BuildStep& s : seq.steps) {
        switch (s.kind) {
            case BuildStep::Kind::O1: {
                int ci = f.find_component(s.target);
                if (ci < 0) throw GraphError("dangling anchor '" + s.target + "'");
                Op1Ids ids;
                if (s.fresh.empty()) {
                    const std::vector<std::string> stems{"o1a", "o1b", "o1k", "o1t"};
                    std::string n = std::to_string(f.fresh(stems));
                    ids = {"o1a" + n, "o1b" + n, "o1k" + n, "o1t" + n};
                } else if (s.fresh.size() == 4) {
                    ids = {s.fresh[0], s.fresh[1], s.fresh[2], s.fresh[3]};
                } else {
                    throw GraphError("O1 step needs 4 fresh ids");
                }
                const StratifoldGraph& g = f.comps[ci];
                int w = require_white(g, s.target);
                std::vector<int> part = s.part_edges;
                if (part.empty() && s.k > 0)
                    part.assign(g.white_edges(w).begin(), g.white_edges(w).begin() + s.k);
                if (static_cast<int>(part.size()) != s.k)
                    throw GraphError("O1 step partition size disagrees with k");
                // ids may legitimately reuse the replaced white's id
                std::vector<std::string> to_check;
                for (const auto& id :
                     {ids.white_a, ids.white_b, ids.black, ids.terminal})
                    if (id != s.target) to_check.push_back(id);
                f.check_fresh(to_check);
                f.comps[ci] = op1_with_partition(g, w, part, ids);
                break;
            }
            case BuildStep::Kind::O1Star: {
                int ca = f.find_component(s.anchor_a);
                int cb = f.find_component(s.anchor_b);
                if (ca < 0) throw GraphError("dangling anchor '" + s.anchor_a + "'");
                if (cb < 0) throw GraphError("dangling anchor '" + s.anchor_b + "'");
                if (ca == cb)
                    throw GraphError("O1* anchors are in the same component");
                PendantIds ids;
                if (s.fresh.empty()) {
                    const std::vector<std::string> stems{"jk", "jt"};
                    std::string n = std::to_string(f.fresh(stems));
                    ids = {"jk" + n, "jt" + n};
                } else if (s.fresh.size() == 2) {
                    ids = {s.fresh[0], s.fresh[1]};
                } else {
                    throw GraphError("O1* step needs 2 fresh ids");
                }
                f.check_fresh(std::vector<std::string>{ids.black, ids.terminal});
                StratifoldGraph merged =
                    op1_star(f.comps[ca], s.anchor_a, f.comps[cb], s.anchor_b, ids);
                int lvl = 1 + std::max(f.levels[ca], f.levels[cb]);
                int hi = std::max(ca, cb), lo = std::min(ca, cb);
                f.comps.erase(f.comps.begin() + hi);
                f.levels.erase(f.levels.begin() + hi);
                f.comps.erase(f.comps.begin() + lo);
                f.levels.erase(f.levels.begin() + lo);
                f.comps.push_back(std::move(merged));
                f.levels.push_back(lvl);
                break;
            }
            case BuildStep::Kind::O2: {
                int ci = f.find_component(s.target);
                if (ci < 0) throw GraphError("dangling anchor '" + s.target + "'");
                PendantIds ids;
                if (s.fresh.empty()) {
                    const std::vector<std::string> stems{"pk", "pt"};
                    std::string n = std::to_string(f.fresh(stems));
                    ids = {"pk" + n, "pt" + n};
                } else if (s.fresh.size() == 2) {
                    ids = {s.fresh[0], s.fresh[1]};
                } else {
                    throw GraphError("O2 step needs 2 fresh ids");
                }
                f.check_fresh(std::vector<std::string>{ids.black, ids.terminal});
                f.comps[ci] = op2(f.comps[ci], s.target, ids);
                break;
            }
        }
    }
    return f;
}

}  // namespace

StratifoldGraph replay(const BuildSequence& seq) {
    Forest f = replay_forest(seq);
    if (f.comps.size() != 1)
        throw GraphError("sequence leaves " + std::to_string(f.comps.size()) +
                         " components");
    return std::move(f.comps[0]);
}

int level(const BuildSequence& seq) {
    Forest f = replay_forest(seq);
    if (f.comps.size() != 1)
        throw GraphError("sequence leaves " + std::to_string(f.comps.size()) +
                         " components");
    return f.levels[0];
}

// --- deconstruction -----------------------------------------------------------

namespace {

BuildSequence decon_recurse(const StratifoldGraph& g) {
    if (g.black_count() == 0) {
        if (g.white_count() != 1)
            throw std::logic_error("deconstruct: blackless graph is not a single white");
        return BuildSequence{{g.white(0).id}, {}};
    }

    struct Candidate {
        std::string key;
        int white = -1;
        int black = -1;
    };
    std::optional<Candidate> best;
    for (int w = 0; w < g.white_count(); ++w) {
        if (g.white_degree(w) != 1) continue;
        const Edge& e = g.edge(g.white_edges(w)[0]);
        if (e.label != 1) continue;
        int b = e.black;
        const std::vector<std::string> removed{g.white(w).id, g.black(b).id};
        auto pieces = delete_open_star(g, removed);
        std::vector<std::string> codes;
        for (const auto& p : pieces) codes.push_back(canonical_code(p).bytes);
        std::sort(codes.begin(), codes.end());
        std::string key;
        for (const auto& c : codes) key += c + "\x01";
        Candidate cand{std::move(key), w, b};
        if (!best || cand.key < best->key ||
            (cand.key == best->key &&
             std::make_pair(g.white(cand.white).id, g.black(cand.black).id) <
                 std::make_pair(g.white(best->white).id, g.black(best->black).id)))
            best = std::move(cand);
    }
    if (!best)
        throw std::logic_error("deconstruct: no terminal label-1 edge found");

    int w = best->white, b = best->black;
    const std::string wid = g.white(w).id, bid = g.black(b).id;
    const std::vector<std::string> removed{wid, bid};
    auto labels = g.black_labels(b);

    if (labels == std::vector<int>{1, 2}) {
        // pendant tail: the label-2 edge stays at the residual's white
        std::string other;
        for (int ei : g.black_edges(b))
            if (g.edge(ei).white != w) other = g.white(g.edge(ei).white).id;
        auto pieces = delete_open_star(g, removed);
        if (pieces.size() != 1)
            throw std::logic_error("deconstruct: tail removal split the graph");
        BuildSequence seq = decon_recurse(pieces[0]);
        BuildStep step;
        step.kind = BuildStep::Kind::O2;
        step.target = other;
        step.fresh = {bid, wid};
        seq.steps.push_back(std::move(step));
        return seq;
    }

    // b111 star: removing it leaves the two subgraphs joined by the step
    std::vector<std::string> anchors;
    for (int ei : g.black_edges(b))
        if (g.edge(ei).white != w) anchors.push_back(g.white(g.edge(ei).white).id);
    if (anchors.size() != 2)
        throw std::logic_error("deconstruct: unexpected b111 star shape");
    auto pieces = delete_open_star(g, removed);
    if (pieces.size() != 2)
        throw std::logic_error("deconstruct: star removal did not split in two");

    // order the halves by (code, anchor)
    int ia = pieces[0].find_white(anchors[0]) ? 0 : 1;
    const StratifoldGraph& ga = pieces[ia];
    const StratifoldGraph& gb = pieces[1 - ia];
    std::string ca = canonical_code(ga).bytes, cb = canonical_code(gb).bytes;
    std::string anchor_a = anchors[0], anchor_b = anchors[1];
    const StratifoldGraph* first = &ga;
    const StratifoldGraph* second = &gb;
    if (std::make_pair(cb, anchor_b) < std::make_pair(ca, anchor_a)) {
        std::swap(anchor_a, anchor_b);
        std::swap(first, second);
    }

    BuildSequence sa = decon_recurse(*first);
    BuildSequence sb = decon_recurse(*second);
    BuildSequence seq;
    seq.initial_whites = sa.initial_whites;
    seq.initial_whites.insert(seq.initial_whites.end(), sb.initial_whites.begin(),
                              sb.initial_whites.end());
    seq.steps = std::move(sa.steps);
    seq.steps.insert(seq.steps.end(), sb.steps.begin(), sb.steps.end());
    BuildStep step;
    step.kind = BuildStep::Kind::O1Star;
    step.anchor_a = anchor_a;
    step.anchor_b = anchor_b;
    step.fresh = {bid, wid};
    seq.steps.push_back(std::move(step));
    return seq;
}

}  // namespace

BuildSequence deconstruct(const StratifoldGraph& g) {
    Verdict v = classify(g);
    if (!v.simply_connected())
        throw NotSimplyConnectedError(
            "deconstruct: graph is not simply connected (" +
                verdict_kind_name(v.kind) + ")",
            std::move(v));
    return decon_recurse(g);
}

// --- reconstruction of all-label-1 trees ---------------------------------------

namespace {

void rebuild_steps(const StratifoldGraph& g, const std::string& anchor,
                   std::vector<BuildStep>& out) {
    if (g.black_count() == 0) return;
    int w = require_white(g, anchor);
    int b = -1;
    for (int ei : g.white_edges(w)) b = b < 0 ? g.edge(ei).black : std::min(b, g.edge(ei).black);
    if (b < 0) throw std::logic_error("rebuild: anchor is isolated in a graph with blacks");

    std::vector<std::string> others;
    for (int ei : g.black_edges(b))
        if (g.edge(ei).white != w) others.push_back(g.white(g.edge(ei).white).id);
    std::sort(others.begin(), others.end());

    const std::vector<std::string> removed{g.black(b).id};
    auto pieces = delete_open_star(g, removed);
    auto piece_with = [&](const std::string& id) -> const StratifoldGraph& {
        for (const auto& p : pieces)
            if (p.find_white(id)) return p;
        throw std::logic_error("rebuild: lost a component");
    };

    rebuild_steps(piece_with(anchor), anchor, out);
    BuildStep step;
    step.kind = BuildStep::Kind::O1;
    step.target = anchor;
    step.k = 0;
    step.fresh = {others[0], anchor, g.black(b).id, others[1]};
    out.push_back(std::move(step));
    rebuild_steps(piece_with(others[0]), others[0], out);
    rebuild_steps(piece_with(others[1]), others[1], out);
}

}  // namespace

BuildSequence rebuild_all_ones(const StratifoldGraph& g, std::string_view white_id) {
    if (!is_tree(g)) throw PreconditionError("rebuild_all_ones: graph is not a tree");
    for (const auto& e : g.edges())
        if (e.label != 1) throw PreconditionError("rebuild_all_ones: edge label != 1");
    for (const auto& w : g.whites())
        if (w.genus != 0)
            throw PreconditionError("rebuild_all_ones: white '" + w.id +
                                    "' has nonzero genus");
    for (int b = 0; b < g.black_count(); ++b)
        if (g.black_degree(b) != 3)
            throw PreconditionError("rebuild_all_ones: black '" + g.black(b).id +
                                    "' must have degree 3");
    std::string anchor(white_id);
    require_white(g, anchor);
    BuildSequence seq;
    seq.initial_whites = {anchor};
    rebuild_steps(g, anchor, seq.steps);
    return seq;
}

// --- random generation ----------------------------------------------------------

namespace {

struct Rng {
    std::mt19937_64 eng;
    std::uint64_t next() { return eng(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

GeneratedGraph random_simply_connected(std::uint64_t seed, int steps,
                                       const OpWeights& weights) {
    if (steps < 0) throw GraphError("random_simply_connected: negative step count");
    double total = weights.o1 + weights.o1_star + weights.o2;
    if (!(weights.o1 >= 0 && weights.o1_star >= 0 && weights.o2 >= 0) || !(total > 0))
        throw GraphError("random_simply_connected: bad weights");

    Rng rng{std::mt19937_64(seed)};
    Forest f;
    BuildSequence seq;
    int spawn_counter = 0;
    auto spawn = [&]() {
        std::string id;
        do {
            id = "g" + std::to_string(spawn_counter++);
        } while (f.id_used(id));
        f.comps.push_back(GraphBuilder().add_white(id, 0).build());
        f.levels.push_back(0);
        seq.initial_whites.push_back(id);
        return static_cast<int>(f.comps.size()) - 1;
    };
    auto random_white = [&](int ci) {
        return f.comps[ci].white(rng.below(f.comps[ci].white_count())).id;
    };
    auto join = [&](int ca, int cb) {
        std::string wa = random_white(ca), wb = random_white(cb);
        const std::vector<std::string> stems{"jk", "jt"};
        std::string n = std::to_string(f.fresh(stems));
        PendantIds ids{"jk" + n, "jt" + n};
        StratifoldGraph merged = op1_star(f.comps[ca], wa, f.comps[cb], wb, ids);
        int lvl = 1 + std::max(f.levels[ca], f.levels[cb]);
        int hi = std::max(ca, cb), lo = std::min(ca, cb);
        f.comps.erase(f.comps.begin() + hi);
        f.levels.erase(f.levels.begin() + hi);
        f.comps.erase(f.comps.begin() + lo);
        f.levels.erase(f.levels.begin() + lo);
        f.comps.push_back(std::move(merged));
        f.levels.push_back(lvl);
        BuildStep step;
        step.kind = BuildStep::Kind::O1Star;
        step.anchor_a = wa;
        step.anchor_b = wb;
        step.fresh = {ids.black, ids.terminal};
        seq.steps.push_back(std::move(step));
    };

    spawn();
    for (int i = 0; i < steps; ++i) {
        double r = rng.unit() * total;
        if (r < weights.o1) {
            int ci = rng.below(static_cast<int>(f.comps.size()));
            const StratifoldGraph& g = f.comps[ci];
            int w = rng.below(g.white_count());
            int k = rng.below(g.white_degree(w) + 1);
            const std::vector<std::string> stems{"o1a", "o1b", "o1k", "o1t"};
            std::string n = std::to_string(f.fresh(stems));
            Op1Ids ids{"o1a" + n, "o1b" + n, "o1k" + n, "o1t" + n};
            BuildStep step;
            step.kind = BuildStep::Kind::O1;
            step.target = g.white(w).id;
            step.k = k;
            step.part_edges.assign(g.white_edges(w).begin(), g.white_edges(w).begin() + k);
            step.fresh = {ids.white_a, ids.white_b, ids.black, ids.terminal};
            f.comps[ci] = op1(g, step.target, k, ids);
            seq.steps.push_back(std::move(step));
        } else if (r < weights.o1 + weights.o1_star) {
            bool join_existing =
                f.comps.size() >= 2 && (f.comps.size() >= 4 || rng.below(2) == 0);
            if (join_existing) {
                int ca = rng.below(static_cast<int>(f.comps.size()));
                int cb = rng.below(static_cast<int>(f.comps.size()) - 1);
                if (cb >= ca) ++cb;
                join(ca, cb);
            } else {
                int ca = rng.below(static_cast<int>(f.comps.size()));
                int cb = spawn();
                join(ca, cb);
            }
        } else {
            int ci = rng.below(static_cast<int>(f.comps.size()));
            const StratifoldGraph& g = f.comps[ci];
            std::string target = g.white(rng.below(g.white_count())).id;
            const std::vector<std::string> stems{"pk", "pt"};
            std::string n = std::to_string(f.fresh(stems));
            PendantIds ids{"pk" + n, "pt" + n};
            BuildStep step;
            step.kind = BuildStep::Kind::O2;
            step.target = target;
            step.fresh = {ids.black, ids.terminal};
            f.comps[ci] = op2(g, target, ids);
            seq.steps.push_back(std::move(step));
        }
    }
    while (f.comps.size() > 1) join(0, 1);
    return {std::move(f.comps[0]), std::move(seq)};
}

}  // namespace strat
