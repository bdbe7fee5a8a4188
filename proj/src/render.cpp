#include "termcheck/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace termcheck {

std::string edge_label(const Edge& edge) {
    switch (edge.kind) {
        case EdgeKind::Root: return "";
        case EdgeKind::Clause: return clause_label(edge.clause);
        case EdgeKind::NegationEntry: return "neg";
        case EdgeKind::NegationExit: return "neg-exit";
        case EdgeKind::Builtin: return "builtin";
        case EdgeKind::Failure: return "fail";
    }
    return "";
}

namespace {

std::string node_name(NodeId id) { return "N" + std::to_string(id); }

std::string join_clauses(const std::set<ClauseId>& s) {
    std::string out = "{";
    for (ClauseId c : s) {
        if (out.size() > 1) out += ", ";
        out += clause_label(c);
    }
    return out + "}";
}

std::string goal_text(const Node& n, VariableNamer& namer) {
    std::string out;
    for (std::size_t i = 0; i < n.goal.size(); ++i) {
        if (i) out += ", ";
        out += to_string(n.goal[i].literal, &namer);
    }
    return out;
}

std::set<NodeId> chain_nodes(const Verdict& v) {
    std::set<NodeId> out;
    if (v.chain)
        for (const ChainLink& l : v.chain->chain) out.insert(l.node);
    return out;
}

std::string fault_line(const Fault& f, const GeneralizedTree* tree, VariableNamer& namer) {
    std::string out = to_string(f.kind);
    if (f.node) {
        out += " at " + node_name(*f.node);
        if (f.kind != FaultKind::ResourceLimit && tree) {
            const Node& n = tree->node(*f.node);
            if (n.selected()) out += ": " + to_string(n.selected()->literal, &namer);
        }
    }
    return out;
}

}  // namespace

std::string render_text(const Verdict& v) {
    std::ostringstream out;
    const QueryRun* run = v.deciding_run();
    VariableNamer namer;
    switch (v.kind) {
        case Verdict::Kind::Terminating:
            out << "terminating w.r.t. all " << v.runs.size() << " queries\n";
            for (const QueryRun& r : v.runs) out << "  " << to_string(r.query.atom) << ": " << r.tree->size() << " nodes\n";
            return out.str();
        case Verdict::Kind::Fault:
            out << "fault[" << to_string(v.fault->kind) << "] in query " << to_string(run->query.atom) << "\n";
            out << fault_line(*v.fault, run->tree.get(), namer) << "\n";
            out << "  " << v.fault->message << "\n";
            return out.str();
        case Verdict::Kind::MostLikelyNonTerminating: break;
    }
    const GeneralizedTree& tree = *run->tree;
    const std::set<NodeId> starred = chain_nodes(v);
    const std::size_t d = v.chain ? v.chain->chain.size() - 1 : 0;
    out << "most-likely non-terminating: query " << to_string(run->query.atom) << ", depth bound " << d << "\n";
    std::vector<std::size_t> chain_steps;
    for (std::size_t k = 0; k < v.derivation.size(); ++k) {
        const NodeId id = v.derivation[k];
        const bool star = starred.contains(id);
        if (star) chain_steps.push_back(k);
        out << (star ? "* " : "  ") << "N" << k << ": " << render_goal(tree.node(id), &namer);
        if (k + 1 < v.derivation.size()) out << "  --" << edge_label(tree.node(v.derivation[k + 1]).edge) << "-->";
        out << "\n";
    }
    if (v.chain) {
        out << "chain:";
        for (std::size_t k : chain_steps) out << " N" << k;
        out << " (" << to_string(v.chain->regime) << ", clauses " << join_clauses(v.chain->clause_set) << ")\n";
    }
    return out.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string outcome_name(BuildResult::Outcome o) {
    switch (o) {
        case BuildResult::Outcome::Completed: return "completed";
        case BuildResult::Outcome::Stopped: return "stopped";
        case BuildResult::Outcome::Faulted: return "faulted";
    }
    return "unknown";
}

ordered_json edge_json(const Edge& e) {
    ordered_json j;
    switch (e.kind) {
        case EdgeKind::Root: j["kind"] = "root"; break;
        case EdgeKind::Clause:
            j["kind"] = "clause";
            j["clause"] = e.clause;
            break;
        default: j["kind"] = edge_label(e); break;
    }
    return j;
}

}  // namespace

std::string render_json(const Verdict& v) {
    ordered_json doc;
    doc["result"] = to_string(v.kind);
    ordered_json queries = ordered_json::array();
    std::size_t total = 0;
    for (const QueryRun& r : v.runs) {
        ordered_json q;
        q["query"] = to_string(r.query.atom);
        q["outcome"] = outcome_name(r.outcome);
        q["nodes"] = r.tree->size();
        total += r.tree->size();
        queries.push_back(std::move(q));
    }
    doc["queries"] = std::move(queries);

    VariableNamer namer;
    ordered_json derivation = ordered_json::array();
    const QueryRun* run = v.deciding_run();
    if (run) {
        for (std::size_t k = 0; k < v.derivation.size(); ++k) {
            const Node& n = run->tree->node(v.derivation[k]);
            ordered_json step;
            step["node"] = n.id;
            step["step"] = k;
            step["goal"] = goal_text(n, namer);
            step["edge"] = edge_json(n.edge);
            derivation.push_back(std::move(step));
        }
    }
    doc["derivation"] = std::move(derivation);

    if (v.chain) {
        ordered_json chain;
        ordered_json nodes = ordered_json::array();
        ordered_json atoms = ordered_json::array();
        for (const ChainLink& l : v.chain->chain) {
            nodes.push_back(l.node);
            atoms.push_back(to_string(l.atom, &namer));
        }
        chain["nodes"] = std::move(nodes);
        chain["atoms"] = std::move(atoms);
        chain["regime"] = to_string(v.chain->regime);
        chain["clause_set"] = std::vector<ClauseId>(v.chain->clause_set.begin(), v.chain->clause_set.end());
        doc["chain"] = std::move(chain);
    } else {
        doc["chain"] = nullptr;
    }
    if (v.fault) {
        ordered_json f;
        f["code"] = to_string(v.fault->kind);
        f["node"] = v.fault->node ? ordered_json(*v.fault->node) : ordered_json(nullptr);
        f["literal"] = v.fault->node && v.fault->kind != FaultKind::ResourceLimit && run
                           && run->tree->node(*v.fault->node).selected()
                           ? ordered_json(to_string(run->tree->node(*v.fault->node).selected()->literal, &namer))
                           : ordered_json(nullptr);
        f["message"] = v.fault->message;
        doc["fault"] = std::move(f);
    }
    doc["stats"] = {{"nodes", total}};
    return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string render_dot(const Verdict& v) {
    std::ostringstream out;
    const std::set<NodeId> starred = chain_nodes(v);
    for (std::size_t q = 0; q < v.runs.size(); ++q) {
        const QueryRun& run = v.runs[q];
        const GeneralizedTree& tree = *run.tree;
        const bool deciding = q + 1 == v.runs.size() && v.kind != Verdict::Kind::Terminating;
        VariableNamer namer;
        out << "digraph \"" << dot_escape(to_string(run.query.atom)) << "\" {\n";
        out << "  node [shape=box, fontname=\"monospace\"];\n";
        for (const TreeContext& t : tree.trees()) {
            out << "  subgraph cluster_" << t.id << " {\n";
            out << "    label=\"" << (t.mode == TreeMode::Top ? "top" : "subsidiary T" + std::to_string(t.id)) << "\";\n";
            for (const Node& n : tree.nodes()) {
                if (n.tree != t.id) continue;
                std::string label = node_name(n.id) + ": " + render_goal(n, &namer);
                out << "    " << node_name(n.id) << " [label=\"" << dot_escape(label) << "\"";
                if (deciding && starred.contains(n.id)) out << ", peripheries=2";
                out << "];\n";
            }
            out << "  }\n";
        }
        for (const Node& n : tree.nodes()) {
            if (!n.parent) continue;
            out << "  " << node_name(*n.parent) << " -> " << node_name(n.id);
            if (n.edge.kind == EdgeKind::NegationEntry)
                out << " [style=dashed]";
            else if (n.edge.kind != EdgeKind::Failure)
                out << " [label=\"" << edge_label(n.edge) << "\"]";
            out << ";\n";
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace termcheck
