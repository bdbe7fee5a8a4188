#include "termcheck/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "termcheck/render.hpp"

namespace termcheck {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decides whether a logic program is terminating for the given queries, or reports a "
                 "derivation that most likely loops forever.",
                 "termcheck"};
    std::string program_file;
    std::vector<std::string> query_texts;
    std::size_t depth_bound = 2;
    std::size_t max_nodes = 1'000'000;
    std::string occurs_check = "on";
    std::string ev_mode = "subterm";
    std::string format = "text";

    app.add_option("program", program_file, "Program file")->required();
    app.add_option("-q,--query", query_texts, "Query atom (repeatable, run in order)")->required();
    app.add_option("-d,--depth-bound", depth_bound, "Chain length d (at least 2)")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    app.add_option("--max-nodes", max_nodes, "Node budget per query")
        ->check(CLI::PositiveNumber);
    app.add_option("--occurs-check", occurs_check, "Unify with the occurs check")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--ev-mode", ev_mode, "Growth rule of the expanded-variant test")
        ->check(CLI::IsMember({"subterm", "direct-arg"}));
    app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitTerminating;
    } catch (const CLI::ParseError& e) {
        err << "termcheck: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    std::ifstream in(program_file);
    if (!in) {
        err << "termcheck: cannot read " << program_file << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    Program program;
    try {
        program = parse_program(buf.str());
    } catch (const ParseError& e) {
        err << program_file << ": " << e.what() << "\n";
        return kExitUsage;
    }
    std::vector<Literal> queries;
    for (const std::string& q : query_texts) {
        try {
            queries.push_back(parse_query(q));
        } catch (const ParseError& e) {
            err << "query \"" << q << "\": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    AnalysisConfig config;
    config.depth_bound = depth_bound;
    config.engine.max_nodes = max_nodes;
    config.engine.occurs_check = occurs_check == "on";
    config.rule = ev_mode == "subterm" ? GrowthRule::Subterm : GrowthRule::DirectArgument;

    const Verdict verdict = test(program, queries, config);
    if (format == "json")
        out << render_json(verdict);
    else if (format == "dot")
        out << render_dot(verdict);
    else
        out << render_text(verdict);

    switch (verdict.kind) {
        case Verdict::Kind::Terminating: return kExitTerminating;
        case Verdict::Kind::MostLikelyNonTerminating: return kExitNonTerminating;
        case Verdict::Kind::Fault:
            if (format != "text")
                err << "termcheck: " << to_string(verdict.fault->kind) << ": " << verdict.fault->message << "\n";
            return kExitFault;
    }
    return kExitFault;
}

}  // namespace termcheck
