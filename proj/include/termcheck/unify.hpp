#pragma once

#include <optional>

#include "termcheck/term.hpp"

namespace termcheck {

/// Most general unifier of `a` and `b`, or nullopt when none exists.
///
/// The result is idempotent: every binding is fully resolved. With
/// `occurs_check` off, a binding that would make a term cyclic is kept
/// one level deep instead of being expanded forever, since cyclic terms
/// have no finite representation here.
std::optional<Substitution> mgu(const Term& a, const Term& b, bool occurs_check = true);

}  // namespace termcheck
