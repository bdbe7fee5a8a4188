#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "termcheck/term.hpp"

namespace termcheck {

/// Path of 1-based argument indices into a term; {2,1} is A[2][1].
using Position = std::vector<std::uint32_t>;

std::string to_string(const Position& p);
std::optional<Term> subterm_at(const Term& t, const Position& p);

/// How a growing term may sit inside the compound that replaced it.
enum class GrowthRule {
    /// Some proper subterm of the compound is itself an expanded variant of
    /// the growing term. Transitive.
    Subterm,
    /// The growing term appears verbatim as a direct argument of the compound.
    DirectArgument,
};

/// Evidence that one term is an expanded variant of another.
struct EvWitness {
    /// Renaming of the larger term's variables onto the smaller term's.
    /// Variables of the larger term absent here are renamed to fresh names.
    std::map<std::string, std::string> renaming;
    /// Outermost positions in the smaller term whose subterm grew.
    std::vector<Position> growing_positions;
};

/// Tests whether `larger` is an expanded variant of `smaller`: after renaming
/// `larger`'s variables it equals `smaller` except that some subterms of
/// `smaller` (never the whole term) have grown into compounds that contain
/// them. Choices are explored depth-first with backtracking, matching before
/// growing and arguments left to right; the first witness is returned.
std::optional<EvWitness> expanded_variant(const Term& larger, const Term& smaller,
                                          GrowthRule rule = GrowthRule::Subterm);

inline bool is_expanded_variant(const Term& larger, const Term& smaller,
                                GrowthRule rule = GrowthRule::Subterm) {
    return expanded_variant(larger, smaller, rule).has_value();
}

}  // namespace termcheck
