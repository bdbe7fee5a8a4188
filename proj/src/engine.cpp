#include "termcheck/engine.hpp"

#include <algorithm>
#include <limits>

#include "termcheck/unify.hpp"

namespace termcheck {

std::vector<const AncestorCell*> ancestors_oldest_first(const AncestorList& list) {
    std::vector<const AncestorCell*> out;
    for (const AncestorCell* c = list.get(); c; c = c->next.get()) out.push_back(c);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<NodeId> GeneralizedTree::path_to(NodeId id) const {
    std::vector<NodeId> path;
    std::optional<NodeId> cur = id;
    while (cur) {
        path.push_back(*cur);
        cur = nodes_.at(*cur).parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool GeneralizedTree::on_path(NodeId ancestor, NodeId id) const {
    std::optional<NodeId> cur = id;
    while (cur) {
        if (*cur == ancestor) return true;
        if (*cur < ancestor) return false;  // parents always have smaller ids
        cur = nodes_.at(*cur).parent;
    }
    return false;
}

std::string to_string(FaultKind kind) {
    switch (kind) {
        case FaultKind::Floundering: return "floundering";
        case FaultKind::Instantiation: return "instantiation";
        case FaultKind::Type: return "type";
        case FaultKind::ResourceLimit: return "resource-limit";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

template <typename Op>
std::int64_t checked(Op op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (op(a, b, &r)) throw EvaluationError(FaultKind::Type, "integer overflow");
    return r;
}

}  // namespace

std::int64_t evaluate_arithmetic(const Term& expr) {
    switch (expr.kind()) {
        case Term::Kind::Integer: return expr.value();
        case Term::Kind::Variable:
            throw EvaluationError(FaultKind::Instantiation,
                                  "unbound variable in arithmetic expression");
        case Term::Kind::Compound: break;
    }
    const std::string& f = expr.name();
    if (f == "size" && expr.arity() == 1) {
        const Term& list = expr.arg(0);
        if (auto n = list_length(list)) return static_cast<std::int64_t>(*n);
        const Term* tail = &list;
        while (is_cons(*tail)) tail = &tail->arg(1);
        if (tail->is_variable())
            throw EvaluationError(FaultKind::Instantiation, "size/1 of a partial list");
        throw EvaluationError(FaultKind::Type, "size/1 expects a proper list, got " + to_string(list));
    }
    if (f == "-" && expr.arity() == 1) {
        const std::int64_t v = evaluate_arithmetic(expr.arg(0));
        if (v == std::numeric_limits<std::int64_t>::min())
            throw EvaluationError(FaultKind::Type, "integer overflow");
        return -v;
    }
    if (expr.arity() == 2 && (f == "+" || f == "-" || f == "*" || f == "//")) {
        const std::int64_t a = evaluate_arithmetic(expr.arg(0));
        const std::int64_t b = evaluate_arithmetic(expr.arg(1));
        using I = std::int64_t;
        if (f == "+") return checked([](I x, I y, I* r) { return __builtin_add_overflow(x, y, r); }, a, b);
        if (f == "-") return checked([](I x, I y, I* r) { return __builtin_sub_overflow(x, y, r); }, a, b);
        if (f == "*") return checked([](I x, I y, I* r) { return __builtin_mul_overflow(x, y, r); }, a, b);
        if (b == 0) throw EvaluationError(FaultKind::Type, "division by zero");
        if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
            throw EvaluationError(FaultKind::Type, "integer overflow");
        return a / b;
    }
    throw EvaluationError(FaultKind::Type, "not an arithmetic expression: " + to_string(expr));
}

std::optional<Substitution> evaluate_builtin(const Term& atom, bool occurs_check) {
    if (!is_builtin(atom)) throw EvaluationError(FaultKind::Type, "not a builtin: " + to_string(atom));
    const std::string& op = atom.name();
    if (op == "is") return mgu(atom.arg(0), Term::integer(evaluate_arithmetic(atom.arg(1))), occurs_check);
    const std::int64_t a = evaluate_arithmetic(atom.arg(0));
    const std::int64_t b = evaluate_arithmetic(atom.arg(1));
    bool holds = false;
    if (op == "<") holds = a < b;
    else if (op == ">") holds = a > b;
    else if (op == "=<") holds = a <= b;
    else if (op == ">=") holds = a >= b;
    else if (op == "=:=") holds = a == b;
    else if (op == "=\\=") holds = a != b;
    if (!holds) return std::nullopt;
    return Substitution();
}

// ---------------------------------------------------------------------------
// Single steps

namespace {

Resolvent failure_resolvent() {
    Resolvent r;
    r.edge.kind = EdgeKind::Failure;
    r.failure_leaf = true;
    return r;
}

// The goal after dropping the selected literal, with `theta` applied.
std::vector<GoalEntry> rest_of_goal(const Node& node, const Substitution& theta) {
    std::vector<GoalEntry> out;
    out.reserve(node.goal.size() - 1);
    for (std::size_t i = 1; i < node.goal.size(); ++i) {
        const GoalEntry& e = node.goal[i];
        out.push_back({Literal{e.literal.negative, apply(theta, e.literal.atom)}, e.ancestors});
    }
    return out;
}

}  // namespace

std::vector<Resolvent> expand(const Node& node, const Program& program, FreshVariables& fresh,
                              const EngineConfig& config) {
    const GoalEntry& sel = node.goal.front();
    const Term& atom = sel.literal.atom;
    std::vector<Resolvent> out;
    AncestorList body_ancestors;
    for (ClauseId id : program.clauses_for(atom.name(), atom.arity())) {
        const Clause& clause = program.clause(id);
        std::map<std::string, std::string, std::less<>> mapping;
        const Term head = fresh.rename(clause.head, mapping);
        auto theta = mgu(atom, head, config.occurs_check);
        if (!theta) continue;
        if (!body_ancestors)
            body_ancestors = std::make_shared<const AncestorCell>(AncestorCell{node.id, atom, sel.ancestors});
        Resolvent r;
        r.edge = Edge{EdgeKind::Clause, id};
        r.goal.reserve(clause.body.size() + node.goal.size() - 1);
        for (const Literal& b : clause.body)
            r.goal.push_back({Literal{b.negative, apply(*theta, fresh.rename(b.atom, mapping))}, body_ancestors});
        std::vector<GoalEntry> rest = rest_of_goal(node, *theta);
        r.goal.insert(r.goal.end(), std::make_move_iterator(rest.begin()),
                      std::make_move_iterator(rest.end()));
        out.push_back(std::move(r));
    }
    if (out.empty()) out.push_back(failure_resolvent());
    return out;
}

Resolvent eval_builtin(const Node& node, const EngineConfig& config) {
    auto theta = evaluate_builtin(node.goal.front().literal.atom, config.occurs_check);
    if (!theta) return failure_resolvent();
    Resolvent r;
    r.edge.kind = EdgeKind::Builtin;
    r.goal = rest_of_goal(node, *theta);
    return r;
}

std::string render_goal(const Node& node, VariableNamer* namer) {
    if (node.status == NodeStatus::FailureLeaf) return "□f";
    if (node.goal.empty()) return "□t";
    std::string out = "<- ";
    for (std::size_t i = 0; i < node.goal.size(); ++i) {
        if (i) out += ", ";
        out += to_string(node.goal[i].literal, namer);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tree construction

class TreeBuilder {
public:
    TreeBuilder(const Program& program, const NodeHook& hook, const EngineConfig& config)
        : program_(program), hook_(hook), config_(config) {}

    BuildResult run(const Literal& query) {
        try {
            TreeContext top;
            top.id = 0;
            top.mode = TreeMode::Top;
            tree().trees_.push_back(top);
            const NodeId root = create(std::nullopt, Edge{}, {GoalEntry{query, nullptr}}, 0, false);
            tree().trees_[0].root = root;
            visit(root);
            loop();
        } catch (const Stop&) {
        } catch (const Fault& f) {
            result_.outcome = BuildResult::Outcome::Faulted;
            result_.fault = f;
        }
        return std::move(result_);
    }

private:
    struct Stop {};

    struct Frame {
        bool negation = false;
        NodeId node = 0;
        std::vector<Resolvent> pending;  // children not yet created
        std::size_t next = 0;
        TreeId sub = 0;  // subsidiary tree of a negation frame
    };

    GeneralizedTree& tree() { return result_.tree; }

    bool pruned(TreeId id) const {
        const TreeContext& t = result_.tree.trees_[id];
        return t.mode == TreeMode::Subsidiary && t.succeeded;
    }

    NodeId create(std::optional<NodeId> parent, Edge edge, std::vector<GoalEntry> goal, TreeId t,
                  bool failure) {
        auto& nodes = tree().nodes_;
        if (nodes.size() >= config_.max_nodes) {
            throw Fault{FaultKind::ResourceLimit, parent, "",
                        "node budget of " + std::to_string(config_.max_nodes) + " exceeded"};
        }
        Node n;
        n.id = static_cast<NodeId>(nodes.size());
        n.goal = std::move(goal);
        n.parent = parent;
        n.edge = edge;
        n.tree = t;
        n.depth = parent ? nodes[*parent].depth + 1 : 0;
        n.status = failure ? NodeStatus::FailureLeaf
                           : n.goal.empty() ? NodeStatus::SuccessLeaf : NodeStatus::Open;
        if (parent) nodes[*parent].status = NodeStatus::Interior;
        nodes.push_back(std::move(n));
        const NodeId id = nodes.back().id;
        if (nodes.back().status == NodeStatus::SuccessLeaf) tree().trees_[t].succeeded = true;
        if (hook_ && hook_(result_.tree, id) == HookAction::Stop) {
            result_.outcome = BuildResult::Outcome::Stopped;
            result_.stopped_at = id;
            throw Stop{};
        }
        return id;
    }

    NodeId create_child(NodeId parent, Resolvent r) {
        const TreeId t = tree().nodes_[parent].tree;
        return create(parent, r.edge, std::move(r.goal), t, r.failure_leaf);
    }

    // Starts work on a freshly created node.
    void visit(NodeId id) {
        const Node& node = tree().nodes_[id];
        if (node.status != NodeStatus::Open) return;
        const Literal& lit = node.goal.front().literal;
        if (lit.negative) {
            if (!lit.atom.ground()) {
                throw Fault{FaultKind::Floundering, id, to_string(lit),
                            "non-ground negative subgoal selected; negation is only evaluated for ground atoms, so the analysis stops here"};
            }
            const TreeId sub = static_cast<TreeId>(tree().trees_.size());
            TreeContext ctx;
            ctx.id = sub;
            ctx.mode = TreeMode::Subsidiary;
            ctx.negation_source = id;
            tree().trees_.push_back(ctx);
            Frame f;
            f.negation = true;
            f.node = id;
            f.sub = sub;
            stack_.push_back(std::move(f));
            GoalEntry entry{Literal{false, lit.atom}, node.goal.front().ancestors};
            const NodeId root = create(id, Edge{EdgeKind::NegationEntry, 0}, {std::move(entry)}, sub, false);
            tree().trees_[sub].root = root;
            visit(root);
            return;
        }
        if (is_builtin(lit.atom)) {
            Resolvent r;
            try {
                r = eval_builtin(node, config_);
            } catch (const EvaluationError& e) {
                throw Fault{e.kind(), id, to_string(lit), e.what()};
            }
            visit(create_child(id, std::move(r)));
            return;
        }
        Frame f;
        f.node = id;
        f.pending = expand(node, program_, fresh_, config_);
        stack_.push_back(std::move(f));
    }

    void loop() {
        while (!stack_.empty()) {
            Frame& top = stack_.back();
            const NodeId id = top.node;
            if (pruned(tree().nodes_[id].tree)) {
                stack_.pop_back();
                continue;
            }
            if (!top.negation) {
                if (top.next == top.pending.size()) {
                    stack_.pop_back();
                    continue;
                }
                Resolvent r = std::move(top.pending[top.next++]);
                visit(create_child(id, std::move(r)));
                continue;
            }
            // Every frame of the subsidiary tree is gone, so it is finished.
            const bool succeeded = tree().trees_[top.sub].succeeded;
            stack_.pop_back();
            Resolvent r;
            if (succeeded) {
                r.edge.kind = EdgeKind::Failure;
                r.failure_leaf = true;
            } else {
                r.edge.kind = EdgeKind::NegationExit;
                r.goal = rest_of_goal(tree().nodes_[id], Substitution());
            }
            visit(create_child(id, std::move(r)));
        }
    }

    const Program& program_;
    const NodeHook& hook_;
    EngineConfig config_;
    BuildResult result_;
    FreshVariables fresh_;
    std::vector<Frame> stack_;
};

BuildResult build_tree(const Program& program, const Literal& query, const NodeHook& hook,
                       const EngineConfig& config) {
    return TreeBuilder(program, hook, config).run(query);
}

}  // namespace termcheck
