#include "strat/census.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "strat/canonical.hpp"
#include "strat/generator.hpp"

namespace strat {

// --- enumeration -------------------------------------------------------------

namespace {

// One new black attached to an existing white; all other new vertices are
// fresh leaf whites. Every trivalent tree arises this way: a deepest black
// from any root has only leaf whites below it.
struct Attachment {
    int variant;         // 0: {1,1,1}; 1: {1,2} label 1 at host; 2: {1,2} label 2 at host; 3: {3}
    int genus1 = 0;      // genus for the first fresh white, if any
    int genus2 = 0;      // genus for the second fresh white (variant 0)
};

std::vector<Attachment> attachment_variants(const EnumOptions& opt) {
    std::vector<Attachment> out;
    for (int g1 : opt.genus_choices)
        for (int g2 : opt.genus_choices) out.push_back({0, g1, g2});
    for (int g1 : opt.genus_choices) {
        out.push_back({1, g1, 0});
        out.push_back({2, g1, 0});
    }
    if (opt.allow_terminal_blacks) out.push_back({3, 0, 0});
    return out;
}

StratifoldGraph attach(const StratifoldGraph& g, int white, const Attachment& a) {
    GraphBuilder b = builder_from(g);
    const std::vector<std::string> stems{"zb", "zw", "zx"};
    int n = fresh_counter(g, stems);
    std::string nb = "zb" + std::to_string(n);
    std::string f1 = "zw" + std::to_string(n);
    std::string f2 = "zx" + std::to_string(n);
    const std::string& host = g.white(white).id;
    b.add_black(nb);
    switch (a.variant) {
        case 0:
            b.add_white(f1, a.genus1);
            b.add_white(f2, a.genus2);
            b.add_edge(host, nb, 1);
            b.add_edge(f1, nb, 1);
            b.add_edge(f2, nb, 1);
            break;
        case 1:
            b.add_white(f1, a.genus1);
            b.add_edge(host, nb, 1);
            b.add_edge(f1, nb, 2);
            break;
        case 2:
            b.add_white(f1, a.genus1);
            b.add_edge(host, nb, 2);
            b.add_edge(f1, nb, 1);
            break;
        case 3:
            b.add_edge(host, nb, 3);
            break;
        default:
            throw std::logic_error("bad attachment variant");
    }
    return b.build();
}

std::string white_orbit_key(const StratifoldGraph& g, int white) {
    MarkMap marks{{VertexRef{true, white}, "a"}};
    return canonical_code(g, marks).bytes;
}

// Undoing an attachment removes a black with its leaf neighbors and keeps
// one host white. The token names the (black, host) pair up to isomorphism;
// a child is accepted only for the smallest token, which makes the
// reduction it inverts unique.
std::string reduction_token(const StratifoldGraph& g, int black, int host_white) {
    MarkMap marks{{VertexRef{false, black}, "x"}, {VertexRef{true, host_white}, "h"}};
    return canonical_code(g, marks).bytes;
}

std::vector<std::pair<int, int>> reduction_pairs(const StratifoldGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < g.black_count(); ++b) {
        std::vector<int> non_leaf, all;
        for (int e : g.black_edges(b)) {
            all.push_back(g.edge(e).white);
            if (g.white_degree(g.edge(e).white) > 1) non_leaf.push_back(g.edge(e).white);
        }
        if (non_leaf.size() > 1) continue;
        if (non_leaf.size() == 1) {
            out.push_back({b, non_leaf[0]});
        } else {
            for (int w : all) out.push_back({b, w});
        }
    }
    return out;
}

std::vector<StratifoldGraph> level_zero(const EnumOptions& opt) {
    std::map<std::string, StratifoldGraph> dedup;
    for (int genus : opt.genus_choices) {
        StratifoldGraph dot = GraphBuilder().add_white("w0", genus).build();
        dedup.emplace(canonical_code(dot).bytes, std::move(dot));
    }
    std::vector<StratifoldGraph> out;
    for (auto& [code, g] : dedup) out.push_back(std::move(g));
    return out;
}

std::vector<StratifoldGraph> next_level_dedup(const std::vector<StratifoldGraph>& prev,
                                              const EnumOptions& opt) {
    auto variants = attachment_variants(opt);
    std::map<std::string, StratifoldGraph> dedup;
    for (const auto& g : prev) {
        for (int w = 0; w < g.white_count(); ++w) {
            for (const auto& a : variants) {
                StratifoldGraph child = attach(g, w, a);
                std::string code = canonical_code(child).bytes;
                dedup.emplace(std::move(code), std::move(child));
            }
        }
    }
    std::vector<StratifoldGraph> out;
    for (auto& [code, g] : dedup) out.push_back(std::move(g));
    return out;
}

std::vector<StratifoldGraph> next_level_augment(const std::vector<StratifoldGraph>& prev,
                                                const EnumOptions& opt) {
    auto variants = attachment_variants(opt);
    std::vector<std::pair<std::string, StratifoldGraph>> accepted;
    for (const auto& g : prev) {
        // attachment sites up to the parent's automorphisms
        std::set<std::string> seen_sites;
        for (int w = 0; w < g.white_count(); ++w) {
            std::string wkey = white_orbit_key(g, w);
            for (const auto& a : variants) {
                std::string site = wkey + "#" + std::to_string(a.variant);
                if (!seen_sites.insert(site).second) continue;
                StratifoldGraph child = attach(g, w, a);
                int added = *child.find_black(
                    "zb" + std::to_string(fresh_counter(g, std::vector<std::string>{
                                                               "zb", "zw", "zx"})));
                int host = *child.find_white(g.white(w).id);
                std::string my_token = reduction_token(child, added, host);
                bool canonical = true;
                for (auto [rb, rh] : reduction_pairs(child)) {
                    if (rb == added && rh == host) continue;
                    if (reduction_token(child, rb, rh) < my_token) {
                        canonical = false;
                        break;
                    }
                }
                if (!canonical) continue;
                accepted.emplace_back(canonical_code(child).bytes, std::move(child));
            }
        }
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<StratifoldGraph> out;
    for (auto& [code, g] : accepted) out.push_back(std::move(g));
    return out;
}

}  // namespace

void enumerate_trivalent_trees(int max_blacks, const EnumOptions& options,
                               const std::function<void(const StratifoldGraph&)>& sink) {
    if (max_blacks < 0) throw GraphError("enumerate: negative size bound");
    if (options.genus_choices.empty())
        throw GraphError("enumerate: empty genus choice set");
    if (options.mode == EnumMode::CanonicalAugmentation &&
        options.genus_choices != std::vector<int>{0})
        throw GraphError("canonical augmentation supports genus 0 only");

    std::vector<StratifoldGraph> level = level_zero(options);
    if (max_blacks == 0) {
        for (const auto& g : level) sink(g);
        return;
    }
    for (int b = 1; b <= max_blacks; ++b) {
        level = options.mode == EnumMode::GenerateAndDedup
                    ? next_level_dedup(level, options)
                    : next_level_augment(level, options);
        for (const auto& g : level) sink(g);
    }
}

std::vector<StratifoldGraph> all_trivalent_trees(int max_blacks, const EnumOptions& options) {
    std::vector<StratifoldGraph> out;
    enumerate_trivalent_trees(max_blacks, options,
                              [&](const StratifoldGraph& g) { out.push_back(g); });
    return out;
}

// --- cross-check ----------------------------------------------------------------

namespace {

CensusRecord check_one(const StratifoldGraph& g) {
    Verdict v = classify(g);
    OracleVerdict o = oracle_simply_connected(g);
    if (v.simply_connected() != (o.reason == OracleReason::Yes))
        throw CensusDisagreement("classifier and oracle disagree: classifier says " +
                                     verdict_kind_name(v.kind) + ", oracle says " +
                                     oracle_reason_name(o.reason),
                                 serialize(g));
    CensusRecord r;
    r.code = canonical_code(g).bytes;
    r.blacks = g.black_count();
    r.whites = g.white_count();
    r.verdict = v.kind;
    r.oracle = o.reason;
    bool genus_ok = true;
    for (const auto& w : g.whites()) genus_ok &= w.genus == 0;
    if (is_forest(g) && genus_ok) {
        r.h1z2 = h1_dim(g, 2);
        r.h1z3 = h1_dim(g, 3);
    }
    if (v.simply_connected())
        r.sequence_length = static_cast<int>(deconstruct(g).steps.size());
    return r;
}

}  // namespace

CensusReport census_crosscheck(std::span<const StratifoldGraph> graphs,
                               std::vector<CensusRecord>* records, int threads) {
    if (threads < 1) threads = 1;
    const size_t n = graphs.size();
    std::vector<CensusRecord> recs(n);

    if (threads == 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) recs[i] = check_one(graphs[i]);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<size_t> error_index(threads, n);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < n; i += threads) {
                    try {
                        recs[i] = check_one(graphs[i]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                        error_index[t] = i;
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        int first = -1;
        for (int t = 0; t < threads; ++t)
            if (errors[t] && (first < 0 || error_index[t] < error_index[first])) first = t;
        if (first >= 0) std::rethrow_exception(errors[first]);
    }

    CensusReport report;
    std::map<int, CensusReport::Row> rows;
    for (const auto& r : recs) {
        auto& row = rows[r.blacks];
        row.blacks = r.blacks;
        ++row.total;
        ++report.total;
        switch (r.verdict) {
            case VerdictKind::SimplyConnected:
                ++row.simply_connected;
                ++report.simply_connected;
                break;
            case VerdictKind::NotTree: ++row.not_tree; break;
            case VerdictKind::GenusNonzero: ++row.genus_nonzero; break;
            case VerdictKind::TerminalBlack: ++row.terminal_black; break;
            case VerdictKind::NonCollapsibleComponent: ++row.non_collapsible; break;
            case VerdictKind::HornedTree: ++row.horned_tree; break;
        }
    }
    for (auto& [b, row] : rows) report.rows.push_back(row);
    if (records) *records = std::move(recs);
    return report;
}

std::string CensusReport::to_text() const {
    std::string out =
        "blacks      total         sc   not-tree      genus  term-black  non-collapsible  horned\n";
    char buf[160];
    long horned = 0, noncol = 0, term = 0, genus = 0, nottree = 0;
    for (const Row& r : rows) {
        std::snprintf(buf, sizeof buf, "%6d %10ld %10ld %10ld %10ld %11ld %16ld %7ld\n",
                      r.blacks, r.total, r.simply_connected, r.not_tree, r.genus_nonzero,
                      r.terminal_black, r.non_collapsible, r.horned_tree);
        out += buf;
        horned += r.horned_tree;
        noncol += r.non_collapsible;
        term += r.terminal_black;
        genus += r.genus_nonzero;
        nottree += r.not_tree;
    }
    out += "total=" + std::to_string(total) + "\n";
    out += "simply_connected=" + std::to_string(simply_connected) + "\n";
    out += "horned_tree=" + std::to_string(horned) + "\n";
    out += "non_collapsible=" + std::to_string(noncol) + "\n";
    out += "terminal_black=" + std::to_string(term) + "\n";
    out += "genus_nonzero=" + std::to_string(genus) + "\n";
    out += "not_tree=" + std::to_string(nottree) + "\n";
    out += "disagreements=0\n";
    return out;
}

// --- census files -----------------------------------------------------------------

namespace {

const char* kHeader = "stratacensus v1";

std::string opt_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "-";
}

std::optional<int> parse_opt_int(const std::string& tok, size_t record, const char* what) {
    if (tok == "-") return std::nullopt;
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw std::runtime_error("record " + std::to_string(record) + ": bad " + what +
                                 " '" + tok + "'");
    }
}

VerdictKind verdict_from_name(const std::string& name, size_t record) {
    for (VerdictKind k :
         {VerdictKind::SimplyConnected, VerdictKind::NotTree, VerdictKind::GenusNonzero,
          VerdictKind::TerminalBlack, VerdictKind::NonCollapsibleComponent,
          VerdictKind::HornedTree})
        if (verdict_kind_name(k) == name) return k;
    throw std::runtime_error("record " + std::to_string(record) + ": unknown verdict '" +
                             name + "'");
}

OracleReason oracle_from_name(const std::string& name, size_t record) {
    for (OracleReason r :
         {OracleReason::Yes, OracleReason::NotTree, OracleReason::GenusNonzero,
          OracleReason::TerminalBlack, OracleReason::WhiteTerminalOnlyOk,
          OracleReason::H1Z2Nonzero})
        if (oracle_reason_name(r) == name) return r;
    throw std::runtime_error("record " + std::to_string(record) + ": unknown oracle verdict '" +
                             name + "'");
}

bool record_order(const CensusRecord& a, const CensusRecord& b) {
    return std::make_pair(a.blacks, a.code) < std::make_pair(b.blacks, b.code);
}

}  // namespace

std::string census_write(std::span<const CensusRecord> records) {
    std::vector<CensusRecord> sorted(records.begin(), records.end());
    std::stable_sort(sorted.begin(), sorted.end(), record_order);
    std::string out = std::string(kHeader) + "\n";
    for (const auto& r : sorted) {
        out += r.code + " " + std::to_string(r.blacks) + " " + std::to_string(r.whites) +
               " " + verdict_kind_name(r.verdict) + " " + oracle_reason_name(r.oracle) +
               " " + opt_int(r.h1z2) + " " + opt_int(r.h1z3) + " " +
               opt_int(r.sequence_length) + "\n";
    }
    return out;
}

std::vector<CensusRecord> census_read(std::string_view text) {
    std::istringstream ss{std::string(text)};
    std::string line;
    if (!std::getline(ss, line)) throw std::runtime_error("empty census file");
    if (line != kHeader) {
        if (line.rfind("stratacensus", 0) == 0)
            throw std::runtime_error("census format-version mismatch: '" + line + "'");
        throw std::runtime_error("missing census header");
    }
    std::vector<CensusRecord> out;
    size_t record = 0;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        ++record;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.size() != 8)
            throw std::runtime_error("record " + std::to_string(record) +
                                     ": expected 8 fields, got " +
                                     std::to_string(toks.size()));
        CensusRecord r;
        r.code = toks[0];
        r.blacks = *parse_opt_int(toks[1], record, "black count");
        r.whites = *parse_opt_int(toks[2], record, "white count");
        r.verdict = verdict_from_name(toks[3], record);
        r.oracle = oracle_from_name(toks[4], record);
        r.h1z2 = parse_opt_int(toks[5], record, "h1z2");
        r.h1z3 = parse_opt_int(toks[6], record, "h1z3");
        r.sequence_length = parse_opt_int(toks[7], record, "sequence length");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CensusRecord> merge_records(std::span<const CensusRecord> a,
                                        std::span<const CensusRecord> b) {
    std::vector<CensusRecord> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               record_order);
    return out;
}

}  // namespace strat
