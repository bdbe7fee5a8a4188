#include "termcheck/detector.hpp"

#include <algorithm>
#include <stdexcept>

namespace termcheck {

std::string to_string(SizeRegime regime) {
    return regime == SizeRegime::AllEqual ? "all-equal-size" : "strictly-increasing-size";
}

std::string to_string(Verdict::Kind kind) {
    switch (kind) {
        case Verdict::Kind::Terminating: return "terminating";
        case Verdict::Kind::MostLikelyNonTerminating: return "most-likely-non-terminating";
        case Verdict::Kind::Fault: return "fault";
    }
    return "unknown";
}

std::set<ClauseId> segment_clause_set(const GeneralizedTree& tree, NodeId from, NodeId to) {
    std::set<ClauseId> out;
    NodeId cur = to;
    while (cur != from) {
        const Node& n = tree.node(cur);
        if (!n.parent || cur < from)
            throw std::logic_error("N" + std::to_string(from) + " is not on the path to N" + std::to_string(to));
        if (n.edge.kind == EdgeKind::Clause) out.insert(n.edge.clause);
        cur = *n.parent;
    }
    return out;
}

namespace {

bool size_conforms(SizeRegime regime, std::size_t older, std::size_t newer) {
    return regime == SizeRegime::AllEqual ? older == newer : older < newer;
}

// Fixed-width bit set over chain lengths 0..d.
class Lengths {
public:
    explicit Lengths(std::size_t bits) : words_((bits + 64) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    // this |= other << 1, truncated to the original width.
    void merge_shifted(const Lengths& other) {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= (other.words_[i] << 1) | carry;
            carry = other.words_[i] >> 63;
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace

ChainDetector::ChainDetector(std::size_t depth_bound, GrowthRule rule)
    : depth_bound_(depth_bound), rule_(rule) {
    if (depth_bound_ < 2) throw std::invalid_argument("depth bound must be at least 2");
}

const std::optional<EvWitness>& ChainDetector::ev(const GeneralizedTree&, NodeId older, const Term& older_atom,
                                                  NodeId newer, const Term& newer_atom) {
    auto key = std::make_pair(older, newer);
    auto it = ev_cache_.find(key);
    if (it == ev_cache_.end()) it = ev_cache_.emplace(key, expanded_variant(newer_atom, older_atom, rule_)).first;
    return it->second;
}

const std::set<ClauseId>& ChainDetector::segment(const GeneralizedTree& tree, NodeId from, NodeId to) {
    auto key = std::make_pair(from, to);
    auto it = segment_cache_.find(key);
    if (it == segment_cache_.end()) it = segment_cache_.emplace(key, segment_clause_set(tree, from, to)).first;
    return it->second;
}

std::optional<ChainReport> ChainDetector::check_node(const GeneralizedTree& tree, NodeId node) {
    const Node& current = tree.node(node);
    const GoalEntry* sel = current.selected();
    if (!sel || sel->literal.negative || is_builtin(sel->literal.atom)) return std::nullopt;
    const Term& atom = sel->literal.atom;

    // Candidates x_0 < ... < x_{m-1} < x_m = current. Only ancestors with the
    // same predicate and no larger size can precede the current atom.
    std::vector<ChainLink> xs;
    for (const AncestorCell* cell : ancestors_oldest_first(sel->ancestors)) {
        const Term& a = cell->atom;
        if (a.name() == atom.name() && a.arity() == atom.arity() && a.size() <= atom.size())
            xs.push_back({cell->node, a});
    }
    if (xs.size() < depth_bound_) return std::nullopt;
    xs.push_back({node, atom});
    const std::size_t m = xs.size() - 1;

    auto linked = [&](std::size_t i, std::size_t j, SizeRegime r, const std::set<ClauseId>& s) {
        return size_conforms(r, xs[i].atom.size(), xs[j].atom.size()) &&
               segment(tree, xs[i].node, xs[j].node) == s &&
               ev(tree, xs[i].node, xs[i].atom, xs[j].node, xs[j].atom).has_value();
    };

    // Every chain's last segment fixes the clause set shared by all segments.
    std::vector<std::set<ClauseId>> clause_sets;
    for (std::size_t i = 0; i < m; ++i) {
        if (xs[i].atom.size() > atom.size()) continue;
        const std::set<ClauseId>& s = segment(tree, xs[i].node, node);
        if (std::find(clause_sets.begin(), clause_sets.end(), s) == clause_sets.end()) clause_sets.push_back(s);
    }

    const std::size_t d = depth_bound_;
    std::optional<std::vector<std::size_t>> best;
    std::optional<std::pair<SizeRegime, std::set<ClauseId>>> best_kind;
    for (const auto& s : clause_sets) {
        for (SizeRegime r : {SizeRegime::AllEqual, SizeRegime::StrictlyIncreasing}) {
            // reach[i] holds k when x_i reaches the current node in exactly k links.
            std::vector<Lengths> reach(m + 1, Lengths(d));
            reach[m].set(0);
            for (std::size_t i = m; i-- > 0;) {
                for (std::size_t j = i + 1; j <= m; ++j) {
                    if (!reach[j].any() || !linked(i, j, r, s)) continue;
                    reach[i].merge_shifted(reach[j]);
                }
            }
            std::vector<std::size_t> picks;
            std::size_t from = 0;
            for (std::size_t left = d; left > 0; --left) {
                std::size_t pick = m + 1;
                for (std::size_t j = from; j < m; ++j) {
                    if (!reach[j].test(left)) continue;
                    if (!picks.empty() && !linked(picks.back(), j, r, s)) continue;
                    pick = j;
                    break;
                }
                if (pick > m) break;
                picks.push_back(pick);
                from = pick + 1;
            }
            if (picks.size() != d) continue;
            picks.push_back(m);
            if (!best || picks < *best) {
                best = picks;
                best_kind = std::make_pair(r, s);
            }
        }
    }
    if (!best) return std::nullopt;

    ChainReport report;
    report.regime = best_kind->first;
    report.clause_set = best_kind->second;
    for (std::size_t k = 0; k < best->size(); ++k) {
        const ChainLink& link = xs[(*best)[k]];
        report.chain.push_back(link);
        if (k > 0) {
            const ChainLink& prev = xs[(*best)[k - 1]];
            report.witnesses.push_back(*ev(tree, prev.node, prev.atom, link.node, link.atom));
        }
    }
    return report;
}

std::optional<ChainReport> check_node(const GeneralizedTree& tree, NodeId node, std::size_t depth_bound,
                                      GrowthRule rule) {
    ChainDetector detector(depth_bound, rule);
    return detector.check_node(tree, node);
}

std::optional<std::string> validate_chain(const GeneralizedTree& tree, const ChainReport& report,
                                          std::size_t depth_bound, GrowthRule rule) {
    const auto& chain = report.chain;
    if (chain.size() != depth_bound + 1)
        return "chain has " + std::to_string(chain.size()) + " links, expected " + std::to_string(depth_bound + 1);
    if (report.witnesses.size() != depth_bound) return "witness count does not match the chain";
    const Node& last = tree.node(chain.back().node);
    if (!last.selected() || last.selected()->literal.atom != chain.back().atom)
        return "last chain atom is not the selected subgoal of its node";
    // Earlier links must be recorded ancestors of the last one, atoms as recorded.
    const auto ancestors = ancestors_oldest_first(last.selected()->ancestors);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const auto it = std::find_if(ancestors.begin(), ancestors.end(),
                                     [&](const AncestorCell* c) { return c->node == chain[k].node; });
        if (it == ancestors.end() || (*it)->atom != chain[k].atom)
            return "N" + std::to_string(chain[k].node) + " is not an ancestor of N" + std::to_string(chain.back().node);
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const ChainLink& a = chain[k];
        const ChainLink& b = chain[k + 1];
        const std::string link = "N" + std::to_string(a.node) + " -> N" + std::to_string(b.node);
        if (a.node >= b.node) return "chain nodes out of order at " + link;
        if (!expanded_variant(b.atom, a.atom, rule)) return "not an expanded variant at " + link;
        if (!size_conforms(report.regime, a.atom.size(), b.atom.size())) return "size regime violated at " + link;
        if (segment_clause_set(tree, a.node, b.node) != report.clause_set) return "clause set differs at " + link;
    }
    return std::nullopt;
}

Verdict test(const Program& program, const std::vector<Literal>& queries, const AnalysisConfig& config) {
    if (config.depth_bound < 2) throw std::invalid_argument("depth bound must be at least 2");
    Verdict verdict;
    for (const Literal& query : queries) {
        ChainDetector detector(config.depth_bound, config.rule);
        std::optional<ChainReport> found;
        const NodeHook hook = [&](const GeneralizedTree& tree, NodeId id) {
            found = detector.check_node(tree, id);
            return found ? HookAction::Stop : HookAction::Continue;
        };
        BuildResult built = build_tree(program, query, hook, config.engine);
        auto tree = std::make_shared<const GeneralizedTree>(std::move(built.tree));
        verdict.runs.push_back({query, tree, built.outcome});
        if (built.outcome == BuildResult::Outcome::Stopped) {
            verdict.kind = Verdict::Kind::MostLikelyNonTerminating;
            verdict.derivation = tree->path_to(*built.stopped_at);
            verdict.chain = std::move(found);
            return verdict;
        }
        if (built.outcome == BuildResult::Outcome::Faulted) {
            verdict.kind = Verdict::Kind::Fault;
            if (built.fault->node) verdict.derivation = tree->path_to(*built.fault->node);
            verdict.fault = std::move(built.fault);
            return verdict;
        }
    }
    verdict.kind = Verdict::Kind::Terminating;
    return verdict;
}

}  // namespace termcheck
