#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "termcheck/parser.hpp"
#include "termcheck/term.hpp"

namespace termcheck {

using NodeId = std::uint32_t;
using TreeId = std::uint32_t;

/// One (node, selected atom) pair of an ancestor list. Lists are persistent
/// cons cells, newest first: the tail of the cell recorded at node N is the
/// ancestor list the selected subgoal of N carried, so lists nest by
/// construction.
struct AncestorCell {
    NodeId node;
    Term atom;
    std::shared_ptr<const AncestorCell> next;
};
using AncestorList = std::shared_ptr<const AncestorCell>;

/// Entries oldest first.
std::vector<const AncestorCell*> ancestors_oldest_first(const AncestorList& list);

struct GoalEntry {
    Literal literal;
    AncestorList ancestors;
};

enum class EdgeKind : std::uint8_t {
    Root,           // tree root of the top tree
    Clause,         // resolution with a program clause
    NegationEntry,  // dotted edge into a subsidiary tree
    NegationExit,   // negative subgoal finitely failed and was dropped
    Builtin,        // builtin evaluated to true
    Failure,        // edge into a failure leaf
};

struct Edge {
    EdgeKind kind = EdgeKind::Root;
    ClauseId clause = 0;  // set for EdgeKind::Clause only
};

enum class NodeStatus : std::uint8_t { Open, Interior, SuccessLeaf, FailureLeaf };

struct Node {
    NodeId id = 0;
    std::vector<GoalEntry> goal;
    std::optional<NodeId> parent;
    Edge edge;
    TreeId tree = 0;
    NodeStatus status = NodeStatus::Open;
    std::uint32_t depth = 0;  // edges from the top root

    const GoalEntry* selected() const { return goal.empty() ? nullptr : &goal.front(); }
};

enum class TreeMode : std::uint8_t { Top, Subsidiary };

struct TreeContext {
    TreeId id = 0;
    TreeMode mode = TreeMode::Top;
    std::optional<NodeId> negation_source;
    std::optional<NodeId> root;
    bool succeeded = false;
};

/// Node store of one generalized SLDNF-tree: the top tree plus every
/// subsidiary tree, indexed by node id.
class GeneralizedTree {
public:
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    const std::vector<TreeContext>& trees() const noexcept { return trees_; }
    const TreeContext& tree(TreeId id) const { return trees_.at(id); }
    std::size_t size() const noexcept { return nodes_.size(); }

    /// Node ids from the top root down to `id`, crossing trees through
    /// negation entry edges.
    std::vector<NodeId> path_to(NodeId id) const;

    /// Whether `ancestor` lies on the path from the root to `id`.
    bool on_path(NodeId ancestor, NodeId id) const;

private:
    friend class TreeBuilder;
    std::vector<Node> nodes_;
    std::vector<TreeContext> trees_;
};

struct EngineConfig {
    std::size_t max_nodes = 1'000'000;
    bool occurs_check = true;
};

enum class FaultKind : std::uint8_t { Floundering, Instantiation, Type, ResourceLimit };

std::string to_string(FaultKind kind);

struct Fault {
    FaultKind kind;
    std::optional<NodeId> node;
    std::string literal;  // offending literal, rendered
    std::string message;
};

enum class HookAction : std::uint8_t { Continue, Stop };

/// Called once for every node right after it is created.
using NodeHook = std::function<HookAction(const GeneralizedTree&, NodeId)>;

struct BuildResult {
    enum class Outcome : std::uint8_t { Completed, Stopped, Faulted };

    Outcome outcome = Outcome::Completed;
    GeneralizedTree tree;
    std::optional<NodeId> stopped_at;
    std::optional<Fault> fault;
};

/// Builds the generalized SLDNF-tree for `query` depth-first, left-most.
/// The top tree is explored completely; a subsidiary tree for `\+ A` stops at
/// its first success leaf. `hook` may stop construction at any node.
BuildResult build_tree(const Program& program, const Literal& query, const NodeHook& hook = {},
                       const EngineConfig& config = {});

/// Raised by builtin evaluation; build_tree turns it into a Fault.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(FaultKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    FaultKind kind() const noexcept { return kind_; }

private:
    FaultKind kind_;
};

/// Integer value of an arithmetic expression over +, -, *, // and size/1.
std::int64_t evaluate_arithmetic(const Term& expr);

/// Outcome of a builtin call: nullopt means the call fails, otherwise the
/// bindings it produced (empty for comparisons).
std::optional<Substitution> evaluate_builtin(const Term& atom, bool occurs_check = true);

/// A prospective child of an open node: its incoming edge and goal.
struct Resolvent {
    Edge edge;
    std::vector<GoalEntry> goal;
    bool failure_leaf = false;
};

/// Children of `node` whose selected subgoal is a positive, non-builtin
/// literal: one per clause (in source order) whose renamed head unifies with
/// it, or a single failure leaf when none does. Body literals get the
/// selected subgoal prepended to its ancestor list; the remaining literals
/// keep theirs.
std::vector<Resolvent> expand(const Node& node, const Program& program, FreshVariables& fresh,
                              const EngineConfig& config = {});

/// Child of `node` whose selected subgoal is a builtin: the goal without it
/// (bindings applied) when it holds, a failure leaf when it does not.
/// Throws EvaluationError on instantiation or type faults.
Resolvent eval_builtin(const Node& node, const EngineConfig& config = {});

/// Goal rendered as `<- L1, ..., Ln`, or the leaf marker for leaves.
std::string render_goal(const Node& node, VariableNamer* namer = nullptr);

}  // namespace termcheck
