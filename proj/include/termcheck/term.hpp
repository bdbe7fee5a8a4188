#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace termcheck {

/// Immutable first-order term: a variable, an integer, or a compound
/// `f(t1, ..., tn)`. Constants are zero-arity compounds and lists use the
/// binary functor "." with the constant "[]" as terminator.
///
/// Terms are cheap handles onto shared, never-mutated nodes, so copies are
/// O(1) and sharing is safe across threads.
class Term {
public:
    enum class Kind : std::uint8_t { Variable, Integer, Compound };

    Term();  // the constant "[]"

    static Term variable(std::string name);
    static Term integer(std::int64_t value);
    static Term compound(std::string functor, std::vector<Term> args);
    static Term constant(std::string name) { return compound(std::move(name), {}); }

    Kind kind() const noexcept;
    bool is_variable() const noexcept { return kind() == Kind::Variable; }
    bool is_integer() const noexcept { return kind() == Kind::Integer; }
    bool is_compound() const noexcept { return kind() == Kind::Compound; }
    bool is_constant() const noexcept { return is_compound() && arity() == 0; }

    /// Variable name or functor symbol. Empty for integers.
    const std::string& name() const noexcept;
    std::int64_t value() const noexcept;
    std::span<const Term> args() const noexcept;
    std::size_t arity() const noexcept { return args().size(); }
    const Term& arg(std::size_t i) const { return args()[i]; }

    /// Number of symbol occurrences (functors, constants, variables, integers).
    std::size_t size() const noexcept;
    bool ground() const noexcept;
    std::size_t hash() const noexcept;

    /// True when both handles share the same node.
    bool same_node(const Term& other) const noexcept { return rep_ == other.rep_; }
    const void* identity() const noexcept { return rep_.get(); }

    friend bool operator==(const Term& a, const Term& b) noexcept;
    friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }

private:
    struct Rep;
    explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

/// Total order used only for deterministic containers.
bool term_less(const Term& a, const Term& b);

inline constexpr std::string_view kListFunctor = ".";
inline constexpr std::string_view kNilSymbol = "[]";

Term make_list(std::span<const Term> elements, std::optional<Term> tail = std::nullopt);
bool is_nil(const Term& t) noexcept;
bool is_cons(const Term& t) noexcept;

/// Element count of a proper list; nullopt for partial or improper lists.
std::optional<std::size_t> list_length(const Term& t);

/// Free function form of Term::size, the |A| measure.
inline std::size_t size(const Term& t) noexcept { return t.size(); }

/// Variable names in first-occurrence (left-to-right, depth-first) order.
std::vector<std::string> variables_of(const Term& t);
void collect_variables(const Term& t, std::vector<std::string>& out);
bool occurs_in(std::string_view var, const Term& t);

/// Idempotent mapping from variable names to terms.
class Substitution {
public:
    using Map = std::map<std::string, Term, std::less<>>;

    Substitution() = default;
    explicit Substitution(Map bindings) : bindings_(std::move(bindings)) {}

    bool empty() const noexcept { return bindings_.empty(); }
    std::size_t size() const noexcept { return bindings_.size(); }
    const Map& bindings() const noexcept { return bindings_; }
    const Term* lookup(std::string_view var) const;

    /// Adds a binding. Callers keep the map idempotent.
    void bind(std::string var, Term value);

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    Map bindings_;
};

/// Replaces every bound variable by its binding. Unchanged subterms keep
/// their nodes, so applying an empty substitution returns `t` itself.
Term apply(const Substitution& s, const Term& t);

/// Consistently replaces each variable of `t` by a fresh name `V<n>` that is
/// not in `used`.
Term rename_apart(const Term& t, const std::set<std::string>& used);

/// Renames variables through an explicit mapping; unmapped variables stay.
Term rename(const Term& t, const std::map<std::string, std::string, std::less<>>& mapping);

/// Monotonic generator of variable names that the parser can never produce.
class FreshVariables {
public:
    std::string next();
    std::uint64_t issued() const noexcept { return counter_; }

    /// Renames every variable of `t` to a fresh one. Repeated variables map
    /// to the same fresh name; `mapping` accumulates across calls.
    Term rename(const Term& t, std::map<std::string, std::string, std::less<>>& mapping);

private:
    std::uint64_t counter_ = 0;
};

/// Whether a bijective variable renaming makes `a` and `b` identical.
bool is_variant(const Term& a, const Term& b);

/// Rendering of terms in the program syntax. When `display_names` is given,
/// variables are shown as V1, V2, ... in first-seen order across every call
/// sharing the same namer.
class VariableNamer {
public:
    std::string name_for(const std::string& var);

private:
    std::map<std::string, std::string, std::less<>> names_;
};

std::string to_string(const Term& t, VariableNamer* namer = nullptr);

bool is_arith_functor(const Term& t) noexcept;
bool is_comparison_functor(std::string_view name) noexcept;

}  // namespace termcheck
