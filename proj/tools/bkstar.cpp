// Command-line front end: parsing, transition system dumps, bisimilarity,
// normal form predicates, normalization, proof generation and certificate
// checking for 1-free star expressions.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bks/bisim.hpp"
#include "bks/completeness.hpp"
#include "bks/normalizer.hpp"
#include "bks/proof.hpp"
#include "bks/semantics.hpp"
#include "bks/summation.hpp"
#include "bks/term.hpp"

namespace {

// Exit codes: 0 affirmative/success, 1 negative decision, 2 usage or syntax
// error, 3 resource cap exceeded.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bks::Term parse_arg(const std::string& text) { return bks::parse_term(text); }

// Positional term or --file/--file2 alternative; exactly one must be given.
bks::Term term_input(const std::string& positional, const std::string& file,
                     const char* what) {
    if (!positional.empty() && !file.empty())
        throw std::runtime_error(std::string(what) + ": give either a term or a file, not both");
    if (!file.empty()) return bks::parse_term(read_file(file));
    if (positional.empty())
        throw std::runtime_error(std::string(what) + ": missing term");
    return bks::parse_term(positional);
}

// Two terms from up to two positionals, with --file/--file2 overriding the
// respective slot.
std::pair<bks::Term, bks::Term> two_terms(const std::vector<std::string>& pos,
                                          const std::string& f1, const std::string& f2) {
    std::size_t i = 0;
    auto take = [&](const std::string& file, const char* what) {
        if (!file.empty()) return bks::parse_term(read_file(file));
        if (i < pos.size()) return bks::parse_term(pos[i++]);
        throw std::runtime_error(std::string(what) + ": missing term");
    };
    bks::Term a = take(f1, "term1");
    bks::Term b = take(f2, "term2");
    if (i != pos.size()) throw std::runtime_error("too many term arguments");
    return {a, b};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bisimilarity, normal forms and equational proof certificates "
                 "for 1-free star expressions"};
    app.require_subcommand(1);

    std::size_t max_states = 100000;
    std::uint64_t max_cert_nodes = 1'000'000;
    app.add_option("--max-states", max_states, "state cap for reachability closures");
    app.add_option("--max-cert-nodes", max_cert_nodes, "node cap for generated certificates");

    std::string t1, ctx, certfile, outfile, lhs, rhs, file1, file2;
    std::vector<std::string> terms;
    bool witness = false, check_nf = false, stats = false;

    auto add_term1 = [&](CLI::App* cmd, const char* name) {
        cmd->add_option(name, t1, "term (or use --file)");
        cmd->add_option("--file", file1, "read the term from a file");
    };
    auto add_term_pair = [&](CLI::App* cmd) {
        cmd->add_option("terms", terms, "the two terms")->expected(0, 2);
        cmd->add_option("--file", file1, "read the first term from a file");
        cmd->add_option("--file2", file2, "read the second term from a file");
    };

    auto* cmd_parse = app.add_subcommand("parse", "parse a term and print it back");
    add_term1(cmd_parse, "term");

    auto* cmd_lts = app.add_subcommand("lts", "dump the reachable transition system");
    add_term1(cmd_lts, "term");

    auto* cmd_bisim = app.add_subcommand("bisim", "decide bisimilarity of two terms");
    add_term_pair(cmd_bisim);
    cmd_bisim->add_flag("--witness", witness, "print the witness relation");

    auto* cmd_nf = app.add_subcommand("nf", "decide the normal form predicate");
    add_term1(cmd_nf, "term");

    auto* cmd_nfmult = app.add_subcommand("nfmult", "decide the context-relative normal form predicate");
    add_term1(cmd_nfmult, "term");
    cmd_nfmult->add_option("context", ctx)->required();

    auto* cmd_congr = app.add_subcommand("congr", "decide the congruence predicate");
    add_term1(cmd_congr, "term");
    cmd_congr->add_option("context", ctx)->required();

    auto* cmd_normalize = app.add_subcommand("normalize", "compute a bisimilar normal form");
    add_term1(cmd_normalize, "term");
    cmd_normalize->add_flag("--check", check_nf, "re-verify the normalization contract");

    auto* cmd_expand = app.add_subcommand("expand", "expand a term into summation form");
    add_term1(cmd_expand, "term");

    auto* cmd_prove = app.add_subcommand("prove", "produce an equational certificate for a bisimilar pair");
    add_term_pair(cmd_prove);
    cmd_prove->add_option("-o,--output", outfile, "write the certificate to a file");
    cmd_prove->add_flag("--stats", stats, "print certificate size and recursion depth");

    auto* cmd_check = app.add_subcommand("check", "check a certificate against a claimed conclusion");
    cmd_check->add_option("certfile", certfile)->required();
    cmd_check->add_option("--lhs", lhs)->required();
    cmd_check->add_option("--rhs", rhs)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kUsage;
    }

    bks::set_state_cap(max_states);

    try {
        if (cmd_parse->parsed()) {
            std::cout << bks::render(term_input(t1, file1, "term")) << "\n";
            return kOk;
        }
        if (cmd_lts->parsed()) {
            std::cout << bks::dump_lts(bks::build_lts(term_input(t1, file1, "term")));
            return kOk;
        }
        if (cmd_bisim->parsed()) {
            auto [a, b] = two_terms(terms, file1, file2);
            if (witness) {
                auto w = bks::bisim_witness(a, b);
                if (!w) {
                    std::cout << "not-bisimilar\n";
                    return kNegative;
                }
                std::cout << "bisimilar\n";
                for (const auto& [x, y] : w->pairs)
                    std::cout << bks::render(x) << " ~ " << bks::render(y) << "\n";
                return kOk;
            }
            if (bks::bisimilar(a, b)) {
                std::cout << "bisimilar\n";
                return kOk;
            }
            std::cout << "not-bisimilar\n";
            return kNegative;
        }
        if (cmd_nf->parsed()) {
            bool v = bks::is_nf(term_input(t1, file1, "term"));
            std::cout << (v ? "true" : "false") << "\n";
            return v ? kOk : kNegative;
        }
        if (cmd_nfmult->parsed()) {
            bool v = bks::is_nfmult(term_input(t1, file1, "term"), parse_arg(ctx));
            std::cout << (v ? "true" : "false") << "\n";
            return v ? kOk : kNegative;
        }
        if (cmd_congr->parsed()) {
            bool v = bks::congr(term_input(t1, file1, "term"), parse_arg(ctx));
            std::cout << (v ? "true" : "false") << "\n";
            return v ? kOk : kNegative;
        }
        if (cmd_normalize->parsed()) {
            bks::Term p = term_input(t1, file1, "term");
            bks::Term q = bks::normalize(p);
            std::cout << bks::render(q) << "\n";
            if (check_nf) {
                bool ok = bks::bisimilar(p, q) && bks::is_nf(q) &&
                          bks::star_depth(q) <= bks::star_depth(p);
                if (!ok) {
                    std::cerr << "normalization contract violated\n";
                    return kNegative;
                }
            }
            return kOk;
        }
        if (cmd_expand->parsed()) {
            bks::Expansion e = bks::expand(term_input(t1, file1, "term"));
            for (const auto& s : e.summands.entries())
                std::cout << s.label.name << " " << bks::render(s.target) << "\n";
            std::cout << "certificate: " << bks::serialize(e.proof) << "\n";
            return kOk;
        }
        if (cmd_prove->parsed()) {
            std::pair<bks::Term, bks::Term> pair = two_terms(terms, file1, file2);
            const bks::Term& a = pair.first;
            const bks::Term& b = pair.second;
            bks::Prover prover({max_cert_nodes});
            bks::Proof pf = [&] {
                try {
                    return prover.prove_equal(a, b);
                } catch (const bks::NotBisimilar&) {
                    std::cout << "not-bisimilar\n";
                    std::exit(kNegative);
                }
            }();
            std::string text = bks::serialize(pf);
            if (outfile.empty())
                std::cout << text << "\n";
            else {
                std::ofstream out(outfile, std::ios::binary);
                out << text << "\n";
            }
            if (stats)
                std::cerr << "nodes=" << pf.node_count()
                          << " depth=" << prover.stats().max_recursion_depth << "\n";
            return kOk;
        }
        if (cmd_check->parsed()) {
            bks::Proof pf = bks::parse_proof(read_file(certfile));
            bks::Term a = parse_arg(lhs), b = parse_arg(rhs);
            try {
                bks::Conclusion c = bks::conclusion(pf);
                if (c.lhs == a && c.rhs == b) {
                    std::cout << "ok\n";
                    return kOk;
                }
                std::cout << "not-verified\n";
                std::cerr << "conclusion mismatch: certificate concludes "
                          << bks::render(c.lhs) << " = " << bks::render(c.rhs) << "\n";
                return kNegative;
            } catch (const bks::IllFormed& e) {
                std::cout << "not-verified\n";
                std::cerr << "ill-formed certificate: " << e.what() << "\n";
                return kNegative;
            }
        }
    } catch (const bks::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kUsage;
    } catch (const bks::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const bks::CertTooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
