#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "termcheck/term.hpp"

namespace termcheck {

struct Literal {
    bool negative = false;
    Term atom;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using ClauseId = int;

struct Clause {
    ClauseId id = 0;  // 1-based source position, shown as C<id>
    Term head;
    std::vector<Literal> body;

    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Clauses in source order; that order is the resolution order.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    const Clause& clause(ClauseId id) const { return clauses_.at(static_cast<std::size_t>(id - 1)); }

    /// Clauses whose head has the given predicate symbol and arity.
    const std::vector<ClauseId>& clauses_for(const std::string& predicate, std::size_t arity) const;

    friend bool operator==(const Program& a, const Program& b) { return a.clauses_ == b.clauses_; }

private:
    std::vector<Clause> clauses_;
    std::map<std::pair<std::string, std::size_t>, std::vector<ClauseId>> index_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses clauses of the form `Head :- L1, ..., Ln.` or `Head.`; negation
/// is `\+ A` or `not(A)`, `%` starts a line comment.
Program parse_program(std::string_view text);

/// Parses a single positive atom, with or without a trailing period.
Literal parse_query(std::string_view text);

/// Parses one term, used by tools and tests. A top-level comparison or
/// `is` is accepted and yields the corresponding builtin atom.
Term parse_term(std::string_view text);

bool is_builtin(const Term& atom) noexcept;

std::string clause_label(ClauseId id);
std::string to_string(const Literal& lit, VariableNamer* namer = nullptr);
std::string to_string(const Clause& clause);
std::string to_string(const Program& program);

}  // namespace termcheck
