#include "strat/homology.hpp"

namespace strat {

GfMatrix relation_matrix(const StratifoldGraph& g, int modulus) {
    if (!is_forest(g))
        throw PreconditionError("relation_matrix: graph has a cycle or multi-edge");
    for (const auto& w : g.whites())
        if (w.genus != 0)
            throw PreconditionError("relation_matrix: white '" + w.id +
                                    "' has nonzero genus");
    GfMatrix m(modulus, g.white_count(), g.black_count());
    for (const Edge& e : g.edges()) m.add(e.white, e.black, e.label);
    return m;
}

int h1_dim(const StratifoldGraph& g, int modulus) {
    return g.black_count() - relation_matrix(g, modulus).rank();
}

OracleReason oracle_precheck(const StratifoldGraph& g, std::string* offending) {
    if (!is_tree(g)) return OracleReason::NotTree;
    for (int w = 0; w < g.white_count(); ++w)
        if (g.white(w).genus != 0) {
            if (offending) *offending = g.white(w).id;
            return OracleReason::GenusNonzero;
        }
    for (int b = 0; b < g.black_count(); ++b)
        if (g.black_degree(b) <= 1) {
            if (offending) *offending = g.black(b).id;
            return OracleReason::TerminalBlack;
        }
    return OracleReason::WhiteTerminalOnlyOk;
}

OracleVerdict oracle_simply_connected(const StratifoldGraph& g) {
    if (!validate_structure(g).empty())
        throw PreconditionError("oracle: graph is not structurally valid");
    if (auto bad = nontrivalent_blacks(g); !bad.empty())
        throw NotTrivalentError("oracle: black '" + bad.front() + "' is not trivalent");

    OracleVerdict v;
    v.reason = oracle_precheck(g, &v.vertex);
    if (v.reason != OracleReason::WhiteTerminalOnlyOk) {
        v.simply_connected = false;
        return v;
    }

    GfMatrix m = relation_matrix(g, 2);
    int dim = g.black_count() - m.rank();
    if (dim == 0) {
        v.simply_connected = true;
        v.reason = OracleReason::Yes;
        v.vertex.clear();
        return v;
    }
    v.simply_connected = false;
    v.reason = OracleReason::H1Z2Nonzero;
    v.vertex.clear();
    v.h1_dimension = dim;
    auto x = m.kernel_vector();
    if (x) {
        for (int b = 0; b < g.black_count(); ++b)
            if ((*x)[b]) v.kernel_witness.push_back(g.black(b).id);
    }
    return v;
}

std::string oracle_reason_name(OracleReason r) {
    switch (r) {
        case OracleReason::Yes: return "yes";
        case OracleReason::NotTree: return "not-tree";
        case OracleReason::GenusNonzero: return "genus-nonzero";
        case OracleReason::TerminalBlack: return "terminal-black";
        case OracleReason::WhiteTerminalOnlyOk: return "prechecks-ok";
        case OracleReason::H1Z2Nonzero: return "h1z2-nonzero";
    }
    return "?";
}

std::string pi1_presentation(const StratifoldGraph& g) {
    if (!is_tree(g)) throw PreconditionError("pi1_presentation: graph is not a tree");
    for (const auto& w : g.whites())
        if (w.genus != 0)
            throw PreconditionError("pi1_presentation: white '" + w.id +
                                    "' has nonzero genus");

    std::string gens;
    for (int b = 0; b < g.black_count(); ++b) {
        if (b) gens += ", ";
        gens += g.black(b).id;
    }
    std::string rels;
    for (int w = 0; w < g.white_count(); ++w) {
        if (w) rels += ", ";
        if (g.white_degree(w) == 0) {
            rels += "1";
            continue;
        }
        bool first = true;
        for (int e : g.white_edges(w)) {
            if (!first) rels += " ";
            first = false;
            rels += g.black(g.edge(e).black).id;
            if (g.edge(e).label != 1) rels += "^" + std::to_string(g.edge(e).label);
        }
    }
    return "< " + gens + " | " + rels + " >";
}

}  // namespace strat
