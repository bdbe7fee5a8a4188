#pragma once

#include <string>

#include "termcheck/detector.hpp"

namespace termcheck {

/// Edge label as shown in derivations: `C<n>`, `neg`, `neg-exit`,
/// `builtin`, `fail`, or empty for the root.
std::string edge_label(const Edge& edge);

/// Derivation listing, one `N<k>: <- G  --<label>-->` line per node with
/// chain nodes starred, or a per-query summary / fault diagnostic. Nodes of
/// a derivation are numbered by their position along it.
std::string render_text(const Verdict& verdict);

/// Stable JSON document; see README for the schema.
std::string render_json(const Verdict& verdict);

/// Graphviz description of every tree built, one digraph per query and one
/// cluster per SLDNF*-tree.
std::string render_dot(const Verdict& verdict);

}  // namespace termcheck
