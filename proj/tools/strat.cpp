// Command-line front end: classification, generation, deconstruction,
// replay, census and DOT export for stratifold graphs.
//
// Exit codes: 0 success / simply connected, 1 not simply connected,
// 2 input error, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "strat/census.hpp"
#include "strat/classifier.hpp"
#include "strat/generator.hpp"
#include "strat/graph.hpp"
#include "strat/homology.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNotSimplyConnected = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << data;
}

struct CheckOptions {
    std::string path;
    bool oracle = false;
    bool witness = false;
    bool certificate = false;
    std::string dot_path;
};

int run_check(const CheckOptions& opt) {
    auto graphs = strat::parse_graph_stream(read_file(opt.path));
    if (graphs.empty()) throw strat::ParseError(1, "no graph record in input");

    std::string dot;
    bool any_obstruction = false;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        if (auto violations = strat::validate_structure(g); !violations.empty())
            throw std::runtime_error("graph " + std::to_string(i + 1) + ": " +
                                     violations.front().detail);
        if (auto bad = strat::nontrivalent_blacks(g); !bad.empty())
            throw std::runtime_error("graph " + std::to_string(i + 1) +
                                     ": black '" + bad.front() + "' is not trivalent");

        strat::Verdict v = strat::classify(g);
        any_obstruction |= !v.simply_connected();
        if (graphs.size() > 1) std::cout << "graph " << i + 1 << "\n";
        std::cout << strat::serialize_verdict(v, opt.witness);

        if (opt.oracle) {
            strat::OracleVerdict o = strat::oracle_simply_connected(g);
            std::cout << "oracle " << strat::oracle_reason_name(o.reason) << "\n";
            if (o.simply_connected != v.simply_connected()) {
                std::cerr << "internal error: classifier and oracle disagree\n"
                          << strat::serialize(g);
                return kInternalError;
            }
        }
        if (opt.certificate && v.simply_connected())
            std::cout << strat::serialize(strat::deconstruct(g));
        if (graphs.size() > 1 && i + 1 < graphs.size()) std::cout << "\n";
        if (!opt.dot_path.empty()) dot += strat::export_dot(g);
    }
    if (!opt.dot_path.empty()) write_output(opt.dot_path, dot);
    return any_obstruction ? kNotSimplyConnected : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simply-connected trivalent 2-stratifold graph toolkit"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* cmd_check = app.add_subcommand("check", "decide simple connectivity");
    cmd_check->add_option("path", check.path, "graph file")->required();
    cmd_check->add_flag("--oracle", check.oracle, "also run the homology oracle");
    cmd_check->add_flag("--witness", check.witness, "print obstruction witnesses");
    cmd_check->add_flag("--certificate", check.certificate, "print a build sequence");
    cmd_check->add_option("--dot", check.dot_path, "write DOT export here");

    std::uint64_t seed = 0;
    int steps = 0;
    std::string out_path;
    auto* cmd_gen = app.add_subcommand("gen", "generate a random simply-connected graph");
    cmd_gen->add_option("--seed", seed, "random seed")->required();
    cmd_gen->add_option("--steps", steps, "number of operations")->required();
    cmd_gen->add_option("--out", out_path, "output file (default stdout)");

    std::string dec_path, dec_out;
    auto* cmd_dec = app.add_subcommand("deconstruct", "emit a build sequence");
    cmd_dec->add_option("path", dec_path, "graph file")->required();
    cmd_dec->add_option("--out", dec_out, "output file (default stdout)");

    std::string rep_path, rep_out;
    auto* cmd_rep = app.add_subcommand("replay", "rebuild a graph from a sequence");
    cmd_rep->add_option("path", rep_path, "sequence file")->required();
    cmd_rep->add_option("--out", rep_out, "output file (default stdout)");

    int max_blacks = 0, shards = 1;
    std::string census_out;
    auto* cmd_census = app.add_subcommand("census", "enumerate and cross-check");
    cmd_census->add_option("--max-blacks", max_blacks, "size bound")->required();
    cmd_census->add_option("--shards", shards, "parallel workers");
    cmd_census->add_option("--out", census_out, "records file (report goes to stdout)");

    std::string exp_path, exp_out;
    auto* cmd_exp = app.add_subcommand("export", "DOT export");
    cmd_exp->add_option("path", exp_path, "graph file")->required();
    cmd_exp->add_option("--dot", exp_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (cmd_check->parsed()) return run_check(check);

        if (cmd_gen->parsed()) {
            auto generated = strat::random_simply_connected(seed, steps);
            write_output(out_path, strat::serialize(generated.graph));
            return kOk;
        }

        if (cmd_dec->parsed()) {
            auto g = strat::parse_graph(read_file(dec_path));
            try {
                write_output(dec_out, strat::serialize(strat::deconstruct(g)));
            } catch (const strat::NotSimplyConnectedError& e) {
                std::cerr << e.what() << "\n";
                std::cout << strat::serialize_verdict(e.verdict, true);
                return kNotSimplyConnected;
            }
            return kOk;
        }

        if (cmd_rep->parsed()) {
            auto seq = strat::parse_build_sequence(read_file(rep_path));
            write_output(rep_out, strat::serialize(strat::replay(seq)));
            return kOk;
        }

        if (cmd_census->parsed()) {
            auto graphs = strat::all_trivalent_trees(max_blacks);
            std::vector<strat::CensusRecord> records;
            strat::CensusReport report =
                strat::census_crosscheck(graphs, &records, shards);
            if (!census_out.empty())
                write_output(census_out, strat::census_write(records));
            std::cout << report.to_text();
            return kOk;
        }

        if (cmd_exp->parsed()) {
            std::string dot;
            for (const auto& g : strat::parse_graph_stream(read_file(exp_path)))
                dot += strat::export_dot(g);
            write_output(exp_out, dot);
            return kOk;
        }
    } catch (const strat::CensusDisagreement& e) {
        std::cerr << "internal error: " << e.what() << "\n" << e.graph_dump;
        return kInternalError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
