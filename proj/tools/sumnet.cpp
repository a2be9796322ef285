#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumnet/solver.hpp"
#include "sumnet/suite.hpp"
#include "sumnet/transfer.hpp"

namespace {

using namespace sumnet;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// accepts "p", "p^k", or a prime-power order such as "4" or "9"
FieldPtr parse_field_arg(const std::string& s) {
    if (s.find('^') != std::string::npos) return Fq::parse(s);
    unsigned long q = 0;
    try {
        std::size_t used = 0;
        q = std::stoul(s, &used);
        if (used != s.size()) throw ParseError("bad field '" + s + "'");
    } catch (const std::exception&) {
        throw ParseError("bad field '" + s + "'");
    }
    if (q < 2) throw ParseError("bad field '" + s + "'");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    unsigned long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw NotPrime(s + " is not a prime power");
    return Fq::make(p, k);
}

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field()->coeffs(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json verdict_json(const SolvabilityVerdict& v) {
    nlohmann::json j;
    j["network"] = v.network_id;
    j["field"] = v.field_spec;
    j["N"] = v.block_len;
    j["status"] = to_string(v.status);
    j["evidence"] = v.evidence;
    j["assignments_tried"] = v.stats.assignments_tried;
    j["solutions_found"] = v.stats.solutions_found;
    j["elapsed_seconds"] = v.stats.elapsed_seconds;
    j["has_witness"] = v.witness.has_value();
    return j;
}

void print_verdict(const SolvabilityVerdict& v, bool as_json) {
    if (as_json) {
        std::cout << verdict_json(v).dump(2) << "\n";
        return;
    }
    std::cout << v.network_id << " over GF(" << v.field_spec << "), N=" << v.block_len << ": "
              << to_string(v.status) << "\n  " << v.evidence << "\n";
    if (v.stats.assignments_tried)
        std::cout << "  assignments tried: " << v.stats.assignments_tried
                  << ", solutions found: " << v.stats.solutions_found << "\n";
}

int exit_code(const SolvabilityVerdict& v) {
    switch (v.status) {
        case Solvability::SolvableWithWitness: return 0;
        case Solvability::UnsolvableExhaustive:
        case Solvability::UnsolvableStructural: return 1;
        case Solvability::Unknown: return 2;
    }
    return 2;
}

void emit_network(const SumNetwork& net, const std::string& out, const std::string& dot) {
    if (!out.empty())
        write_file(out, network_to_json(net));
    else
        std::cout << network_to_json(net);
    if (!dot.empty()) write_file(dot, network_to_dot(net));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-network linear network coding toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a network as JSON (and optionally DOT)");
    gen->require_subcommand(1);
    int gen_m = 4;
    std::string gen_out, gen_dot;
    auto* gen_smstar_cmd = gen->add_subcommand("smstar", "four-layer family with m-1 sources, m terminals");
    gen_smstar_cmd->add_option("--m", gen_m, "family parameter (>= 3)")->required();
    gen_smstar_cmd->add_option("--out", gen_out, "output JSON path (default: stdout)");
    gen_smstar_cmd->add_option("--dot", gen_dot, "also write DOT to this path");
    gen_smstar_cmd->callback([&] { emit_network(gen_smstar(gen_m), gen_out, gen_dot); });
    auto* gen_g1_cmd = gen->add_subcommand("g1", "the 3-source, 3-terminal network solvable except over GF(2)");
    gen_g1_cmd->add_option("--out", gen_out, "output JSON path (default: stdout)");
    gen_g1_cmd->add_option("--dot", gen_dot, "also write DOT to this path");
    gen_g1_cmd->callback([&] { emit_network(gen_g1(), gen_out, gen_dot); });

    // ---- solve ---------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "decide solvability over a field");
    std::string solve_net, solve_field, solve_out, solve_mode = "auto";
    SolveOptions sopts;
    bool solve_json = false;
    solve_cmd->add_option("--net", solve_net, "network JSON file")->required();
    solve_cmd->add_option("--field", solve_field, "field: p, p^k, or prime-power order")->required();
    solve_cmd->add_option("--block", sopts.block_len, "block length N (default 1)");
    solve_cmd->add_option("--mode", solve_mode, "auto | brute | structured")
        ->check(CLI::IsMember({"auto", "brute", "structured"}));
    solve_cmd->add_flag("--wlog", sopts.wlog_reduce, "pin source/relay coefficients to 1 during search");
    solve_cmd->add_option("--limit", sopts.limit, "max assignments to enumerate")
        ->envname("SUMNET_SEARCH_LIMIT");
    solve_cmd->add_option("--threads", sopts.workers, "search worker threads");
    solve_cmd->add_option("--out", solve_out, "write the witness code JSON here");
    solve_cmd->add_flag("--json", solve_json, "machine-readable verdict on stdout");
    solve_cmd->callback([&] {
        sopts.mode = solve_mode == "brute"        ? SolveMode::Brute
                     : solve_mode == "structured" ? SolveMode::Structured
                                                  : SolveMode::Auto;
        const SumNetwork net = network_from_json(read_file(solve_net));
        const SolvabilityVerdict v = solve(net, parse_field_arg(solve_field), sopts);
        print_verdict(v, solve_json);
        if (!solve_out.empty() && v.witness) write_file(solve_out, code_to_json(*v.witness));
        rc = exit_code(v);
    });

    // ---- verify --------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check that a code file solves a network");
    std::string verify_net, verify_code;
    verify_cmd->add_option("--net", verify_net, "network JSON file")->required();
    verify_cmd->add_option("--code", verify_code, "code JSON file")->required();
    verify_cmd->callback([&] {
        const SumNetwork net = network_from_json(read_file(verify_net));
        const LinearCode code = code_from_json(read_file(verify_code));
        const bool ok = is_solution(net, code);
        std::cout << (ok ? "solution: every terminal recovers the source sum\n"
                         : "not a solution\n");
        rc = ok ? 0 : 1;
    });

    // ---- transfer ------------------------------------------------------
    auto* transfer_cmd = app.add_subcommand("transfer", "print the source-to-terminal transfer blocks");
    std::string tr_net, tr_code;
    bool tr_via_paths = false, tr_json = false;
    transfer_cmd->add_option("--net", tr_net, "network JSON file")->required();
    transfer_cmd->add_option("--code", tr_code, "code JSON file")->required();
    transfer_cmd->add_flag("--via-paths", tr_via_paths, "compute by path-gain summation instead of propagation");
    transfer_cmd->add_flag("--json", tr_json, "machine-readable blocks on stdout");
    transfer_cmd->callback([&] {
        const SumNetwork net = network_from_json(read_file(tr_net));
        const LinearCode code = code_from_json(read_file(tr_code));
        const TransferMatrix t = tr_via_paths ? transfer_via_paths(net, code) : transfer_matrix(net, code);
        if (tr_json) {
            nlohmann::json j;
            j["sources"] = t.source_count;
            j["terminals"] = t.terminal_count;
            j["N"] = t.block_len;
            j["all_identity"] = t.all_identity();
            j["blocks"] = nlohmann::json::array();
            for (std::size_t i = 0; i < t.source_count; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t jj = 0; jj < t.terminal_count; ++jj) row.push_back(matrix_json(t.block(i, jj)));
                j["blocks"].push_back(std::move(row));
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < t.source_count; ++i) {
                for (std::size_t jj = 0; jj < t.terminal_count; ++jj) {
                    std::cout << "block(" << net.name(net.sources()[i]) << " -> "
                              << net.name(net.terminals()[jj]) << ") =\n"
                              << t.block(i, jj).to_string() << "\n";
                }
            }
            std::cout << (t.all_identity() ? "all blocks are the identity\n" : "not all blocks are the identity\n");
        }
        rc = t.all_identity() ? 0 : 1;
    });

    // ---- reverse -------------------------------------------------------
    auto* reverse_cmd = app.add_subcommand("reverse", "reverse a network (and optionally a code for it)");
    std::string rev_net, rev_out, rev_code, rev_code_out, rev_dot;
    reverse_cmd->add_option("--net", rev_net, "network JSON file")->required();
    reverse_cmd->add_option("--out", rev_out, "reversed network JSON path (default: stdout)");
    reverse_cmd->add_option("--code", rev_code, "code JSON for the forward network");
    reverse_cmd->add_option("--code-out", rev_code_out, "reversed code JSON path");
    reverse_cmd->add_option("--dot", rev_dot, "also write DOT of the reversed network");
    reverse_cmd->callback([&] {
        const SumNetwork net = network_from_json(read_file(rev_net));
        const SumNetwork rnet = reverse_network(net);
        emit_network(rnet, rev_out, rev_dot);
        if (!rev_code.empty()) {
            const LinearCode rcode = reverse_code(net, code_from_json(read_file(rev_code)));
            if (rev_code_out.empty()) throw Error("--code requires --code-out");
            write_file(rev_code_out, code_to_json(rcode));
        }
    });

    // ---- probe ---------------------------------------------------------
    auto* probe_cmd = app.add_subcommand("probe", "solvability table for a network family");
    probe_cmd->require_subcommand(1);
    auto* probe_smstar_cmd = probe_cmd->add_subcommand("smstar", "solvable iff the characteristic does not divide m-2");
    int probe_m = 4;
    std::string probe_fields = "2,3,4,5,7,9";
    bool probe_json = false;
    probe_smstar_cmd->add_option("--m", probe_m, "family parameter (>= 3)")->required();
    probe_smstar_cmd->add_option("--fields", probe_fields, "comma-separated fields (p, p^k or prime powers)");
    probe_smstar_cmd->add_flag("--json", probe_json, "machine-readable table on stdout");
    probe_smstar_cmd->callback([&] {
        std::vector<FieldPtr> fields;
        std::stringstream ss(probe_fields);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) fields.push_back(parse_field_arg(item));
        const auto table = characteristic_set_probe(probe_m, fields);
        if (probe_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& v : table) j.push_back(verdict_json(v));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& v : table)
                std::cout << v.network_id << " over GF(" << v.field_spec << "): " << to_string(v.status)
                          << "  [" << v.evidence << "]\n";
        }
        for (const auto& v : table)
            if (!v.solvable() && v.status == Solvability::Unknown) rc = 2;
    });

    // ---- paper-suite ---------------------------------------------------
    auto* suite_cmd = app.add_subcommand("paper-suite", "run the full claims suite");
    std::string suite_filter = "*", suite_out;
    bool suite_json = false;
    suite_cmd->add_option("--filter", suite_filter, "claim id pattern, e.g. 'g1*'");
    suite_cmd->add_flag("--json", suite_json, "JSON report on stdout instead of the table");
    suite_cmd->add_option("--out", suite_out, "also write the JSON report to this path");
    suite_cmd->callback([&] {
        const SuiteReport report = run_paper_suite(suite_filter);
        std::cout << (suite_json ? report_to_json(report) : report_to_table(report));
        if (!suite_out.empty()) write_file(suite_out, report_to_json(report));
        rc = report.all_pass() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
