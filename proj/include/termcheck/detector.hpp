#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "termcheck/engine.hpp"
#include "termcheck/evariant.hpp"

namespace termcheck {

enum class SizeRegime : std::uint8_t { AllEqual, StrictlyIncreasing };

std::string to_string(SizeRegime regime);  // "all-equal-size" / "strictly-increasing-size"

struct ChainLink {
    NodeId node;
    Term atom;
};

/// d+1 selected subgoals g_1 < ... < g_{d+1} along one derivation, each an
/// ancestor and expanded variant of the previous one.
struct ChainReport {
    std::vector<ChainLink> chain;
    SizeRegime regime = SizeRegime::AllEqual;
    std::set<ClauseId> clause_set;
    std::vector<EvWitness> witnesses;  // witnesses[i] relates chain[i+1] to chain[i]
};

/// Clause ids on the clause edges strictly after `from` up to and including
/// the edge into `to`. Throws std::logic_error when `from` is not on the
/// path to `to`.
std::set<ClauseId> segment_clause_set(const GeneralizedTree& tree, NodeId from, NodeId to);

/// Chain search over one tree under construction. Results of the pairwise
/// checks are cached by node ids, so one detector serves one tree.
class ChainDetector {
public:
    ChainDetector(std::size_t depth_bound, GrowthRule rule = GrowthRule::Subterm);

    /// The first chain ending at `node`, in increasing (g_1, ..., g_d)
    /// order, or nullopt. Nodes without a positive selected subgoal never
    /// end a chain.
    std::optional<ChainReport> check_node(const GeneralizedTree& tree, NodeId node);

private:
    struct PairHash {
        std::size_t operator()(const std::pair<NodeId, NodeId>& p) const noexcept {
            return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
        }
    };

    const std::optional<EvWitness>& ev(const GeneralizedTree& tree, NodeId older, const Term& older_atom,
                                       NodeId newer, const Term& newer_atom);
    const std::set<ClauseId>& segment(const GeneralizedTree& tree, NodeId from, NodeId to);

    std::size_t depth_bound_;
    GrowthRule rule_;
    std::unordered_map<std::pair<NodeId, NodeId>, std::optional<EvWitness>, PairHash> ev_cache_;
    std::unordered_map<std::pair<NodeId, NodeId>, std::set<ClauseId>, PairHash> segment_cache_;
};

/// Convenience wrapper with a throwaway cache.
std::optional<ChainReport> check_node(const GeneralizedTree& tree, NodeId node, std::size_t depth_bound,
                                      GrowthRule rule = GrowthRule::Subterm);

/// Recomputes every condition of `report` from scratch. Returns a
/// description of the first violated condition, or nullopt when it holds.
std::optional<std::string> validate_chain(const GeneralizedTree& tree, const ChainReport& report,
                                          std::size_t depth_bound, GrowthRule rule = GrowthRule::Subterm);

struct AnalysisConfig {
    std::size_t depth_bound = 2;
    EngineConfig engine;
    GrowthRule rule = GrowthRule::Subterm;
};

struct QueryRun {
    Literal query;
    std::shared_ptr<const GeneralizedTree> tree;
    BuildResult::Outcome outcome = BuildResult::Outcome::Completed;
};

struct Verdict {
    enum class Kind : std::uint8_t { Terminating, MostLikelyNonTerminating, Fault };

    Kind kind = Kind::Terminating;
    std::vector<QueryRun> runs;  // queries processed, in order; the last one decided a non-Yes verdict
    std::vector<NodeId> derivation;  // root to the detection or fault node
    std::optional<ChainReport> chain;
    std::optional<termcheck::Fault> fault;

    const QueryRun* deciding_run() const { return runs.empty() ? nullptr : &runs.back(); }
};

std::string to_string(Verdict::Kind kind);  // "terminating" / "most-likely-non-terminating" / "fault"

/// Runs every query in order with chain detection at each created node. The
/// first chain anywhere stops the whole analysis.
/// Throws std::invalid_argument when depth_bound < 2.
Verdict test(const Program& program, const std::vector<Literal>& queries, const AnalysisConfig& config = {});

}  // namespace termcheck
