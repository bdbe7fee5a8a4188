#include "termcheck/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace termcheck {

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    for (const Clause& c : clauses_) index_[{c.head.name(), c.head.arity()}].push_back(c.id);
}

const std::vector<ClauseId>& Program::clauses_for(const std::string& predicate,
                                                  std::size_t arity) const {
    static const std::vector<ClauseId> none;
    auto it = index_.find({predicate, arity});
    return it == index_.end() ? none : it->second;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool is_builtin(const Term& atom) noexcept {
    return atom.is_compound() && atom.arity() == 2 &&
           (is_comparison_functor(atom.name()) || atom.name() == "is");
}

namespace {

enum class Tok { Atom, Var, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_layout();
            Token t;
            t.line = line_;
            t.column = col_;
            if (at_end()) {
                out.push_back(t);
                return out;
            }
            const char c = peek();
            if (std::islower(static_cast<unsigned char>(c))) {
                t.kind = Tok::Atom;
                t.text = take_word();
            } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Var;
                t.text = take_word();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::Int;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) t.text += advance();
            } else {
                t.kind = Tok::Punct;
                t.text = take_punct(t);
            }
            out.push_back(std::move(t));
        }
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_layout() {
        while (!at_end()) {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                return;
            }
        }
    }

    std::string take_word() {
        std::string w;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            w += advance();
        return w;
    }

    std::string take_punct(const Token& t) {
        static const char* const kMulti[] = {":-", "\\+", "=:=", "=\\=", "=<", ">=", "//"};
        for (const char* m : kMulti) {
            const std::string_view sv(m);
            if (src_.substr(pos_, sv.size()) == sv) {
                for (std::size_t i = 0; i < sv.size(); ++i) advance();
                return std::string(sv);
            }
        }
        const char c = peek();
        if (std::string_view("()[]|,.<>+-*").find(c) != std::string_view::npos) {
            advance();
            if (c == '.') {
                const char n = peek();
                if (!(n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))))
                    throw ParseError("unexpected '.' inside a term", t.line, t.column);
            }
            return std::string(1, c);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

constexpr std::string_view kAnonPrefix = "\x01";

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

    Program program() {
        std::vector<Clause> clauses;
        while (cur().kind != Tok::End) clauses.push_back(clause(static_cast<ClauseId>(clauses.size() + 1)));
        return Program(std::move(clauses));
    }

    Literal query() {
        const Token start = cur();
        Literal lit = literal();
        if (lit.negative)
            throw ParseError("a query must be a single positive atom; negative top goals are not supported",
                             start.line, start.column);
        if (is_punct(","))
            throw ParseError("a query must be a single positive atom; conjunctive top goals are not supported",
                             cur().line, cur().column);
        if (is_punct(".")) ++i_;
        expect_end();
        lit.atom = name_anonymous(lit.atom, variables_of(lit.atom));
        return lit;
    }

    Term single_term() {
        Term t = expr();
        if ((cur().kind == Tok::Punct && is_comparison_functor(cur().text)) ||
            (cur().kind == Tok::Atom && cur().text == "is")) {
            std::string op = cur().text;
            ++i_;
            t = Term::compound(std::move(op), {t, expr()});
        }
        if (is_punct(".")) ++i_;
        expect_end();
        return t;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    bool is_punct(std::string_view p) const { return cur().kind == Tok::Punct && cur().text == p; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = cur();
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(what + ", found " + found, t.line, t.column);
    }

    void expect(std::string_view p) {
        if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
        ++i_;
    }

    void expect_end() {
        if (cur().kind != Tok::End) fail("expected end of input");
    }

    Clause clause(ClauseId id) {
        const Token start = cur();
        Literal head = literal();
        if (head.negative)
            throw ParseError("negative literal cannot be a clause head", start.line, start.column);
        if (is_builtin(head.atom))
            throw ParseError("builtin predicate '" + head.atom.name() + "' cannot be redefined",
                             start.line, start.column);
        Clause c;
        c.id = id;
        c.head = head.atom;
        if (is_punct(":-")) {
            ++i_;
            c.body.push_back(literal());
            while (is_punct(",")) {
                ++i_;
                c.body.push_back(literal());
            }
        }
        expect(".");
        finish_anonymous(c);
        return c;
    }

    Literal literal() {
        const Token start = cur();
        if (is_punct("\\+")) {
            ++i_;
            Literal inner = literal();
            if (inner.negative)
                throw ParseError("nested negation is not supported", start.line, start.column);
            inner.negative = true;
            return inner;
        }
        Term left = expr();
        if (cur().kind == Tok::Punct && is_comparison_functor(cur().text)) {
            std::string op = cur().text;
            ++i_;
            Term right = expr();
            return Literal{false, Term::compound(std::move(op), {left, right})};
        }
        if (cur().kind == Tok::Atom && cur().text == "is") {
            ++i_;
            Term right = expr();
            return Literal{false, Term::compound("is", {left, right})};
        }
        if (left.is_compound() && left.name() == "not" && left.arity() == 1) {
            const Term& inner = left.arg(0);
            if (!inner.is_compound())
                throw ParseError("not/1 expects an atom", start.line, start.column);
            return Literal{true, inner};
        }
        if (!left.is_compound() || is_arith_functor(left) || is_cons(left))
            throw ParseError("expected an atom", start.line, start.column);
        return Literal{false, left};
    }

    Term expr() {
        Term left = term();
        while (is_punct("+") || is_punct("-")) {
            std::string op = cur().text;
            ++i_;
            left = Term::compound(std::move(op), {left, term()});
        }
        return left;
    }

    Term term() {
        Term left = factor();
        while (is_punct("*") || is_punct("//")) {
            std::string op = cur().text;
            ++i_;
            left = Term::compound(std::move(op), {left, factor()});
        }
        return left;
    }

    Term factor() {
        if (is_punct("-")) {
            ++i_;
            if (cur().kind == Tok::Int) return integer(true);
            if (is_punct("(")) {
                ++i_;
                Term inner = expr();
                expect(")");
                return Term::compound("-", {inner});
            }
            return Term::compound("-", {factor()});
        }
        return primary();
    }

    Term integer(bool negative) {
        const Token& t = cur();
        std::int64_t v = 0;
        std::string digits = negative ? "-" + t.text : t.text;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("integer out of range", t.line, t.column);
        ++i_;
        return Term::integer(v);
    }

    Term primary() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Var: {
                std::string name = t.text;
                ++i_;
                if (name == "_") name = std::string(kAnonPrefix) + std::to_string(anon_++);
                return Term::variable(std::move(name));
            }
            case Tok::Int: return integer(false);
            case Tok::Atom: {
                std::string name = t.text;
                ++i_;
                if (!is_punct("(")) return Term::constant(std::move(name));
                ++i_;
                std::vector<Term> args{expr()};
                while (is_punct(",")) {
                    ++i_;
                    args.push_back(expr());
                }
                expect(")");
                return Term::compound(std::move(name), std::move(args));
            }
            case Tok::Punct:
                if (t.text == "[") return list();
                if (t.text == "(") {
                    ++i_;
                    Term inner = expr();
                    expect(")");
                    return inner;
                }
                break;
            case Tok::End: break;
        }
        fail("expected a term");
    }

    Term list() {
        expect("[");
        if (is_punct("]")) {
            ++i_;
            return Term();
        }
        std::vector<Term> items{expr()};
        while (is_punct(",")) {
            ++i_;
            items.push_back(expr());
        }
        std::optional<Term> tail;
        if (is_punct("|")) {
            ++i_;
            tail = expr();
        }
        expect("]");
        return make_list(items, tail);
    }

    Term name_anonymous(const Term& t, const std::vector<std::string>& vars) {
        std::map<std::string, std::string, std::less<>> mapping;
        std::set<std::string> used;
        for (const auto& v : vars)
            if (!v.starts_with(kAnonPrefix)) used.insert(v);
        std::size_t n = 0;
        for (const auto& v : vars) {
            if (!v.starts_with(kAnonPrefix)) continue;
            std::string fresh;
            do {
                fresh = "_" + std::to_string(++n);
            } while (used.contains(fresh));
            used.insert(fresh);
            mapping.emplace(v, std::move(fresh));
        }
        return mapping.empty() ? t : rename(t, mapping);
    }

    void finish_anonymous(Clause& c) {
        std::vector<std::string> vars;
        collect_variables(c.head, vars);
        for (const Literal& l : c.body) collect_variables(l.atom, vars);
        bool any = false;
        for (const auto& v : vars) any = any || v.starts_with(kAnonPrefix);
        if (!any) return;
        // Rename through a wrapper term so every literal shares one mapping.
        std::vector<Term> parts{c.head};
        for (const Literal& l : c.body) parts.push_back(l.atom);
        const Term renamed = name_anonymous(Term::compound("clause", parts), vars);
        c.head = renamed.arg(0);
        for (std::size_t i = 0; i < c.body.size(); ++i) c.body[i].atom = renamed.arg(i + 1);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::size_t anon_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Literal parse_query(std::string_view text) { return Parser(text).query(); }

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

std::string clause_label(ClauseId id) { return "C" + std::to_string(id); }

std::string to_string(const Literal& lit, VariableNamer* namer) {
    return (lit.negative ? "\\+" : "") + to_string(lit.atom, namer);
}

std::string to_string(const Clause& clause) {
    std::string out = to_string(clause.head);
    for (std::size_t i = 0; i < clause.body.size(); ++i) {
        out += i == 0 ? " :- " : ", ";
        out += to_string(clause.body[i]);
    }
    return out + ".";
}

std::string to_string(const Program& program) {
    std::string out;
    for (const Clause& c : program.clauses()) out += to_string(c) + "\n";
    return out;
}

}  // namespace termcheck
