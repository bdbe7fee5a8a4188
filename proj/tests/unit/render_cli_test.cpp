#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "termcheck/cli.hpp"
#include "termcheck/evariant.hpp"
#include "termcheck/render.hpp"

using namespace termcheck;
using testkit::analyse;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "termcheck");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(RenderText, VariantLoopListing) {
    const std::string text = render_text(analyse("p2", {"q"}));
    EXPECT_NE(text.find("* N0: <- q  --C3-->\n"), std::string::npos) << text;
    EXPECT_NE(text.find("* N1: <- q  --C3-->\n"), std::string::npos);
    EXPECT_NE(text.find("* N2: <- q\n"), std::string::npos);
    EXPECT_NE(text.find("all-equal-size"), std::string::npos);
}

TEST(RenderText, NegationEdges) {
    const std::string text = render_text(analyse("p1", {"p(a)"}));
    EXPECT_NE(text.find("N1: <- \\+p(f(a))  --neg-->"), std::string::npos) << text;
    EXPECT_NE(text.find("* N4: <- p(f(f(a)))"), std::string::npos);
}

TEST(RenderText, TerminatingSummary) {
    const std::string text = render_text(analyse("p2", {"p"}));
    EXPECT_EQ(text, "terminating w.r.t. all 1 queries\n  p: 5 nodes\n");
}

TEST(RenderText, VariablesAreRenumbered) {
    const std::string text = render_text(analyse("p3", {"append(L1,[1,2],L3)"}));
    EXPECT_NE(text.find("N0: <- append(V1,[1,2],V2)"), std::string::npos) << text;
    EXPECT_EQ(text.find("_#"), std::string::npos);
}

TEST(RenderText, Floundering) {
    const Program p = parse_program("p(X) :- \\+ q(X).\nq(a).");
    const std::string text = render_text(test(p, {parse_query("p(Y)")}));
    EXPECT_NE(text.find("floundering at N1: \\+q(V1)"), std::string::npos) << text;
}

TEST(RenderJson, SchemaAndKeyOrder) {
    const auto j = nlohmann::ordered_json::parse(render_json(analyse("p3", {"append([X|Y],Y,[Z|Y])"})));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"result", "queries", "derivation", "chain", "stats"}));
    EXPECT_EQ(j["result"], "most-likely-non-terminating");
    EXPECT_EQ(j["chain"]["regime"], "strictly-increasing-size");
    EXPECT_EQ(j["chain"]["clause_set"], nlohmann::json::array({2}));
    EXPECT_EQ(j["derivation"].size(), 4u);
    EXPECT_EQ(j["stats"]["nodes"], j["queries"][0]["nodes"]);
}

TEST(RenderJson, TerminatingAndResourceLimit) {
    const auto t = nlohmann::json::parse(render_json(analyse("p5", {"win(a)", "win(X)"})));
    EXPECT_EQ(t["result"], "terminating");
    EXPECT_EQ(t["queries"].size(), 2u);
    EXPECT_TRUE(t["chain"].is_null());

    AnalysisConfig cfg;
    cfg.engine.max_nodes = 10;
    const auto f = nlohmann::json::parse(render_json(test(testkit::load_fixture("p5"), {parse_query("win(X)")}, cfg)));
    EXPECT_EQ(f["result"], "fault");
    EXPECT_EQ(f["fault"]["code"], "resource-limit");
}

// Re-checks a rendered chain from the JSON text alone.
TEST(RenderJson, ChainRevalidatesFromTheDocument) {
    for (const auto& f : testkit::fixtures()) {
        for (const auto& q : f.queries) {
            const auto j = nlohmann::json::parse(render_json(analyse(f.name, {q})));
            if (j["chain"].is_null()) continue;
            std::map<NodeId, std::size_t> step_of;
            for (const auto& s : j["derivation"]) step_of[s["node"].get<NodeId>()] = s["step"].get<std::size_t>();
            const auto& nodes = j["chain"]["nodes"];
            const auto& atoms = j["chain"]["atoms"];
            std::set<ClauseId> expected;
            for (ClauseId c : j["chain"]["clause_set"]) expected.insert(c);
            for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
                const Term a = parse_term(atoms[k].get<std::string>());
                const Term b = parse_term(atoms[k + 1].get<std::string>());
                EXPECT_TRUE(is_expanded_variant(b, a)) << f.name << " " << q;
                if (j["chain"]["regime"] == "all-equal-size")
                    EXPECT_EQ(a.size(), b.size());
                else
                    EXPECT_LT(a.size(), b.size());
                std::set<ClauseId> seg;
                for (std::size_t s = step_of.at(nodes[k]) + 1; s <= step_of.at(nodes[k + 1]); ++s) {
                    const auto& e = j["derivation"][s]["edge"];
                    if (e["kind"] == "clause") seg.insert(e["clause"].get<ClauseId>());
                }
                EXPECT_EQ(seg, expected) << f.name << " " << q;
            }
            // The chain ends where the derivation ends.
            EXPECT_EQ(nodes.back(), j["derivation"].back()["node"]);
        }
    }
}

TEST(RenderDot, ClustersAndEdgeStyles) {
    const std::string dot = render_dot(analyse("p2", {"p"}));
    EXPECT_NE(dot.find("subgraph cluster_0"), std::string::npos);
    EXPECT_NE(dot.find("subgraph cluster_1"), std::string::npos);
    EXPECT_EQ(dot.find("subgraph cluster_2"), std::string::npos);
    EXPECT_NE(dot.find("N1 -> N2 [style=dashed]"), std::string::npos) << dot;
    EXPECT_NE(dot.find("N0 -> N1 [label=\"C1\"]"), std::string::npos);
    EXPECT_NE(dot.find("□t"), std::string::npos);
    EXPECT_NE(dot.find("□f"), std::string::npos);
}

TEST(RenderDot, ChainNodesAreDoubled) {
    const std::string dot = render_dot(analyse("p1", {"p(a)"}));
    std::size_t doubled = 0;
    for (std::size_t at = dot.find("peripheries=2"); at != std::string::npos; at = dot.find("peripheries=2", at + 1))
        ++doubled;
    EXPECT_EQ(doubled, 3u);
}

TEST(RenderDot, ImmediateFailure) {
    const std::string dot = render_dot(test(parse_program("p(a)."), {parse_query("p(b)")}));
    EXPECT_NE(dot.find("N0 [label="), std::string::npos);
    EXPECT_NE(dot.find("N1 [label=\"N1: □f\"]"), std::string::npos) << dot;
}

TEST(Cli, ExitCodes) {
    const std::string dir = TERMCHECK_FIXTURE_DIR;
    const CliRun ok = run({dir + "/p2.pl", "--query", "p"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("terminating w.r.t. all 1 queries"), std::string::npos);

    const CliRun loop = run({dir + "/p1.pl", "--query", "p(a)"});
    EXPECT_EQ(loop.code, 1);
    EXPECT_NE(loop.out.find("N4"), std::string::npos);

    EXPECT_EQ(run({dir + "/p7.pl", "--query", "p([a],100)", "--depth-bound", "100"}).code, 0);
    EXPECT_EQ(run({dir + "/p7.pl", "--query", "p([a],100)", "--depth-bound", "99"}).code, 1);
    EXPECT_EQ(run({dir + "/p5.pl", "--query", "win(X)", "--max-nodes", "5"}).code, 2);
    EXPECT_EQ(run({dir + "/p2.pl", "--query", "p("}).code, 3);
    EXPECT_EQ(run({dir + "/p2.pl"}).code, 3);
    EXPECT_EQ(run({dir + "/missing.pl", "--query", "p"}).code, 3);
    EXPECT_EQ(run({dir + "/p2.pl", "--query", "q", "--depth-bound", "1"}).code, 3);
    EXPECT_EQ(run({dir + "/p2.pl", "--query", "q", "--format", "xml"}).code, 3);
}

TEST(Cli, FormatsAndFlags) {
    const std::string dir = TERMCHECK_FIXTURE_DIR;
    const CliRun json = run({dir + "/p3.pl", "--query", "append(L1,[1,2],L3)", "--format", "json"});
    EXPECT_EQ(json.code, 1);
    EXPECT_EQ(nlohmann::json::parse(json.out)["result"], "most-likely-non-terminating");
    const CliRun dot = run({dir + "/p2.pl", "--query", "p", "--format", "dot"});
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(run({dir + "/p1.pl", "--query", "p(a)", "--ev-mode", "direct-arg", "--occurs-check", "off"}).code, 1);
    const CliRun multi = run({dir + "/p5.pl", "--query", "win(a)", "--query", "win(X)"});
    EXPECT_EQ(multi.code, 0);
    EXPECT_NE(multi.out.find("all 2 queries"), std::string::npos);
    const CliRun help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("--depth-bound"), std::string::npos);
}

TEST(Cli, ByteIdenticalOutput) {
    const std::string dir = TERMCHECK_FIXTURE_DIR;
    for (const char* fmt : {"text", "json", "dot"}) {
        const auto a = run({dir + "/p4.pl", "--query", "p([a,b])", "--format", fmt});
        const auto b = run({dir + "/p4.pl", "--query", "p([a,b])", "--format", fmt});
        EXPECT_EQ(a.out, b.out) << fmt;
    }
}
