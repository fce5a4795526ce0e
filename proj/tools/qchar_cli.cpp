// qchar: q-characters of fundamental modules of quantum loop algebras of classical type.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qchar/io.hpp"
#include "qchar/qcharacter.hpp"
#include "qchar/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string type;
    int rank = 0;
    int node = 0;
    int base = 0;
    std::string format = "json";
    std::string out;
    std::string notation = "omega";
};

void add_common(CLI::App* cmd, Common& c, bool with_base) {
    cmd->add_option("--type", c.type, "A, B, C or D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd->add_option("--rank", c.rank, "rank n")->required();
    cmd->add_option("--node", c.node, "fundamental node i")->required();
    if (with_base) cmd->add_option("--base-exp", c.base, "highest l-weight is w[i;K]");
    cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", c.out, "write to FILE instead of stdout");
    cmd->add_option("--notation", c.notation, "text monomials as omega (w[i;k]) or y (Y_{i,k})")
        ->check(CLI::IsMember({"omega", "y"}));
}

qchar::RootSystem make_system(const Common& c) {
    const qchar::Kind kind = qchar::kind_from_char(c.type.at(0));
    if (kind == qchar::Kind::D && c.rank < 4)
        throw UsageError("type D needs rank >= 4 (D3 coincides with A3; use --type A --rank 3)");
    try {
        qchar::RootSystem rs(kind, c.rank);
        if (c.node < 1 || c.node > c.rank)
            throw UsageError("node must satisfy 1 <= i <= " + std::to_string(c.rank));
        return rs;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_partition_node(const qchar::RootSystem& rs, int i) {
    if (!qchar::has_partition_formula(rs, i))
        throw UsageError("node " + std::to_string(i) + " of " + rs.name() +
                         " has no partition formula; valid nodes: " + qchar::partition_node_range(rs.kind()) +
                         " (other nodes are minuscule, see `compute`)");
}

std::optional<int> checked_r(const qchar::RootSystem& rs, int i, const std::optional<int>& r) {
    if (!r) return r;
    const auto I = qchar::index_set(rs, i);
    if (std::find(I.begin(), I.end(), *r) == I.end()) {
        std::string msg = "r=" + std::to_string(*r) + " is not in I_" + std::to_string(i) + " = {";
        for (std::size_t a = 0; a < I.size(); ++a) msg += (a ? "," : "") + std::to_string(I[a]);
        msg += "}";
        if (rs.kind() != qchar::Kind::B) msg += " (r must have the parity of i)";
        throw UsageError(msg);
    }
    return r;
}

void emit(const Common& c, const std::string& body) {
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + c.out + " for writing");
    f << body;
}

std::string dump(const qchar::io::json& doc) { return doc.dump(2) + "\n"; }

qchar::Notation notation_of(const Common& c) { return c.notation == "y" ? qchar::Notation::Y : qchar::Notation::Omega; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-characters of fundamental modules of quantum loop algebras of classical type"};
    app.require_subcommand(1);

    Common cc;
    unsigned threads = 0;
    auto* compute = app.add_subcommand("compute", "full q-character of the fundamental module at a node");
    add_common(compute, cc, true);
    compute->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    Common cd;
    std::optional<int> dom_r;
    auto* dominant = app.add_subcommand("dominant", "dominant l-weights with their partitions");
    add_common(dominant, cd, true);
    dominant->add_option("--r", dom_r, "restrict to the weight omega_r");

    Common cp;
    std::optional<int> part_r;
    auto* partitions = app.add_subcommand("partitions", "the partition families J_r");
    add_common(partitions, cp, false);
    partitions->add_option("--r", part_r, "restrict to one r");

    std::string suite;
    qchar::VerifyOptions vo;
    std::string vformat = "text";
    std::string vout;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", suite, "counts, dims, proj, braid, classes or all")->required();
    verify->add_option("--max-rank", vo.max_rank, "largest rank checked (default 5)");
    verify->add_option("--samples", vo.samples, "random samples per relation (default 100)");
    verify->add_option("--seed", vo.seed, "random seed (default 0)");
    verify->add_option("--format", vformat, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", vout, "write to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*compute) {
            const auto rs = make_system(cc);
            const auto ch = qchar::full_character(rs, cc.node, cc.base, threads);
            emit(cc, cc.format == "json" ? dump(qchar::io::character_document(rs, ch))
                                         : qchar::io::character_text(rs, ch, notation_of(cc)));
            return exit_ok;
        }
        if (*dominant) {
            const auto rs = make_system(cd);
            require_partition_node(rs, cd.node);
            const auto r = checked_r(rs, cd.node, dom_r);
            emit(cd, cd.format == "json" ? dump(qchar::io::dominant_document(rs, cd.node, r, cd.base))
                                         : qchar::io::dominant_text(rs, cd.node, r, cd.base, notation_of(cd)));
            return exit_ok;
        }
        if (*partitions) {
            const auto rs = make_system(cp);
            require_partition_node(rs, cp.node);
            const auto r = checked_r(rs, cp.node, part_r);
            emit(cp, cp.format == "json" ? dump(qchar::io::partitions_document(rs, cp.node, r))
                                         : qchar::io::partitions_text(rs, cp.node, r));
            return exit_ok;
        }
        if (*verify) {
            const auto& names = qchar::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw UsageError("unknown suite '" + suite + "' (counts, dims, proj, braid, classes, all)");
            if (vo.max_rank < 2) throw UsageError("--max-rank must be at least 2");
            if (vo.samples < 0) throw UsageError("--samples must be non-negative");
            const auto rep = qchar::run_suite(suite, vo);
            Common sink;
            sink.out = vout;
            emit(sink, vformat == "json" ? dump(qchar::io::report_json(rep)) : qchar::format_report(rep));
            return rep.passed() ? exit_ok : exit_failed;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
