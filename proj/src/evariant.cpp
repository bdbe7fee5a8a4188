#include "termcheck/evariant.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace termcheck {

std::string to_string(const Position& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out + "]";
}

std::optional<Term> subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::uint32_t idx : p) {
        if (!cur->is_compound() || idx == 0 || idx > cur->arity()) return std::nullopt;
        cur = &cur->arg(idx - 1);
    }
    return *cur;
}

namespace {

// Depth-first search over renamings and growth choices. Every choice point
// receives the rest of the work as a continuation so later arguments can
// force backtracking into earlier renaming decisions.
class EvSearch {
public:
    using Cont = std::function<bool()>;

    explicit EvSearch(GrowthRule rule) : rule_(rule) {}

    std::optional<EvWitness> run(const Term& larger, const Term& smaller) {
        Position pos;
        std::optional<EvWitness> result;
        match(larger, smaller, pos, /*at_root=*/true, /*allow_growth=*/true, [&] {
            EvWitness w;
            w.renaming.insert(renaming_.begin(), renaming_.end());
            w.growing_positions = growing_;
            result = std::move(w);
            return true;
        });
        return result;
    }

private:
    // `b` comes from the larger term, `a` from the smaller one.
    bool match(const Term& b, const Term& a, Position& pos, bool at_root, bool allow_growth,
               const Cont& k) {
        if (b.size() < a.size()) return false;
        if (!allow_growth && b.size() != a.size()) return false;
        if (b.ground() && a.ground()) return match_ground(b, a, pos, at_root, allow_growth, k);
        if (couple(b, a, pos, allow_growth, k)) return true;
        return allow_growth && !at_root && b.is_compound() && b.size() > a.size() &&
               grow(b, a, pos, k);
    }

    // Ground pairs never touch the renaming, so the first embedding found is
    // as good as any other and the continuation runs exactly once.
    bool match_ground(const Term& b, const Term& a, Position& pos, bool at_root, bool allow_growth,
                      const Cont& k) {
        if (growth_depth_ > 0) return embeds(b, a, at_root, allow_growth) && k();
        std::vector<Position> found;
        if (!first_embedding(b, a, pos, at_root, allow_growth, found)) return false;
        const std::size_t mark = growing_.size();
        growing_.insert(growing_.end(), found.begin(), found.end());
        if (k()) return true;
        growing_.resize(mark);
        return false;
    }

    bool couple(const Term& b, const Term& a, Position& pos, bool allow_growth, const Cont& k) {
        switch (a.kind()) {
            case Term::Kind::Variable: {
                if (!b.is_variable()) return false;
                auto it = renaming_.find(b.name());
                if (it != renaming_.end()) return it->second == a.name() && k();
                if (image_.contains(a.name())) return false;
                renaming_.emplace(b.name(), a.name());
                image_.insert(a.name());
                if (k()) return true;
                renaming_.erase(b.name());
                image_.erase(a.name());
                return false;
            }
            case Term::Kind::Integer:
                return b.is_integer() && b.value() == a.value() && k();
            case Term::Kind::Compound:
                if (!b.is_compound() || b.name() != a.name() || b.arity() != a.arity()) return false;
                return match_args(b, a, 0, pos, allow_growth, k);
        }
        return false;
    }

    bool match_args(const Term& b, const Term& a, std::size_t i, Position& pos, bool allow_growth,
                    const Cont& k) {
        if (i == a.arity()) return k();
        pos.push_back(static_cast<std::uint32_t>(i + 1));
        const bool ok = match(b.arg(i), a.arg(i), pos, false, allow_growth, [&] {
            const std::uint32_t mine = pos.back();
            pos.pop_back();
            const bool rest = match_args(b, a, i + 1, pos, allow_growth, k);
            pos.push_back(mine);
            return rest;
        });
        pos.pop_back();
        return ok;
    }

    bool grow(const Term& b, const Term& a, Position& pos, const Cont& k) {
        const bool outermost = growth_depth_ == 0;
        if (outermost) growing_.push_back(pos);
        ++growth_depth_;
        const bool inner_growth = rule_ == GrowthRule::Subterm;
        bool ok = false;
        for (const Term& inner : b.args()) {
            Position scratch;
            ok = match(inner, a, scratch, false, inner_growth, [&] {
                --growth_depth_;
                const bool rest = k();
                ++growth_depth_;
                return rest;
            });
            if (ok) break;
        }
        --growth_depth_;
        if (outermost && !ok) growing_.pop_back();
        return ok;
    }

    bool embeds(const Term& b, const Term& a, bool at_root, bool allow_growth) {
        const Key key{b.identity(), a.identity(), (at_root ? 1u : 0u) | (allow_growth ? 2u : 0u)};
        if (auto it = ground_memo_.find(key); it != ground_memo_.end()) return it->second;
        std::vector<Position> ignored;
        Position pos;
        const bool ok = first_embedding(b, a, pos, at_root, allow_growth, ignored);
        ground_memo_.emplace(key, ok);
        return ok;
    }

    // Same choice order as match(): couple first, then grow through the
    // arguments left to right.
    bool first_embedding(const Term& b, const Term& a, Position& pos, bool at_root,
                         bool allow_growth, std::vector<Position>& growing) {
        if (b.size() < a.size()) return false;
        if (!allow_growth || b.size() == a.size()) return b == a;
        if (b.is_compound() && a.is_compound() && b.name() == a.name() && b.arity() == a.arity()) {
            const std::size_t mark = growing.size();
            bool all = true;
            for (std::size_t i = 0; i < a.arity() && all; ++i) {
                pos.push_back(static_cast<std::uint32_t>(i + 1));
                all = first_embedding(b.arg(i), a.arg(i), pos, false, true, growing);
                pos.pop_back();
            }
            if (all) return true;
            growing.resize(mark);
        }
        if (at_root || !b.is_compound()) return false;
        const bool inner_growth = rule_ == GrowthRule::Subterm;
        for (const Term& inner : b.args()) {
            if (inner_growth ? embeds(inner, a, false, true) : inner == a) {
                growing.push_back(pos);
                return true;
            }
        }
        return false;
    }

    struct Key {
        const void* b;
        const void* a;
        unsigned flags;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            const std::size_t h = std::hash<const void*>{}(k.b);
            return (h * 1000003u) ^ std::hash<const void*>{}(k.a) ^ k.flags;
        }
    };

    GrowthRule rule_;
    std::unordered_map<std::string, std::string> renaming_;
    std::unordered_set<std::string> image_;
    std::vector<Position> growing_;
    int growth_depth_ = 0;
    std::unordered_map<Key, bool, KeyHash> ground_memo_;
};

}  // namespace

std::optional<EvWitness> expanded_variant(const Term& larger, const Term& smaller, GrowthRule rule) {
    if (larger.size() < smaller.size()) return std::nullopt;
    EvSearch search(rule);
    return search.run(larger, smaller);
}

}  // namespace termcheck
