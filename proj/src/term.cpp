#include "termcheck/term.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace termcheck {

struct Term::Rep {
    Kind kind;
    std::string name;
    std::int64_t value = 0;
    std::vector<Term> args;
    std::size_t size = 1;
    bool ground = true;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term()
    : rep_([] {
          static const std::shared_ptr<const Rep> nil = [] {
              auto r = std::make_shared<Rep>();
              r->kind = Kind::Compound;
              r->name = std::string(kNilSymbol);
              r->hash = mix(std::hash<std::string>{}(r->name), 0);
              return r;
          }();
          return nil;
      }()) {}

Term Term::variable(std::string name) {
    auto r = std::make_shared<Rep>();
    r->kind = Kind::Variable;
    r->hash = mix(0x51ed27, std::hash<std::string>{}(name));
    r->name = std::move(name);
    r->ground = false;
    return Term(std::move(r));
}

Term Term::integer(std::int64_t value) {
    auto r = std::make_shared<Rep>();
    r->kind = Kind::Integer;
    r->value = value;
    r->hash = mix(0x1a7e6e, std::hash<std::int64_t>{}(value));
    return Term(std::move(r));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    if (args.empty() && functor == kNilSymbol) return Term();
    auto r = std::make_shared<Rep>();
    r->kind = Kind::Compound;
    std::size_t h = mix(std::hash<std::string>{}(functor), args.size());
    for (const Term& a : args) {
        r->size += a.size();
        r->ground = r->ground && a.ground();
        h = mix(h, a.hash());
    }
    r->hash = h;
    r->name = std::move(functor);
    r->args = std::move(args);
    return Term(std::move(r));
}

Term::Kind Term::kind() const noexcept { return rep_->kind; }
const std::string& Term::name() const noexcept { return rep_->name; }
std::int64_t Term::value() const noexcept { return rep_->value; }
std::span<const Term> Term::args() const noexcept { return rep_->args; }
std::size_t Term::size() const noexcept { return rep_->size; }
bool Term::ground() const noexcept { return rep_->ground; }
std::size_t Term::hash() const noexcept { return rep_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.rep_ == b.rep_) return true;
    const Term::Rep& x = *a.rep_;
    const Term::Rep& y = *b.rep_;
    if (x.kind != y.kind || x.hash != y.hash || x.size != y.size) return false;
    switch (x.kind) {
        case Term::Kind::Variable: return x.name == y.name;
        case Term::Kind::Integer: return x.value == y.value;
        case Term::Kind::Compound:
            if (x.name != y.name || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
                if (x.args[i] != y.args[i]) return false;
            return true;
    }
    return false;
}

bool term_less(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    switch (a.kind()) {
        case Term::Kind::Variable: return a.name() < b.name();
        case Term::Kind::Integer: return a.value() < b.value();
        case Term::Kind::Compound:
            if (a.arity() != b.arity()) return a.arity() < b.arity();
            if (a.name() != b.name()) return a.name() < b.name();
            for (std::size_t i = 0; i < a.arity(); ++i) {
                if (term_less(a.arg(i), b.arg(i))) return true;
                if (term_less(b.arg(i), a.arg(i))) return false;
            }
            return false;
    }
    return false;
}

Term make_list(std::span<const Term> elements, std::optional<Term> tail) {
    Term result = tail ? *tail : Term();
    for (auto it = elements.rbegin(); it != elements.rend(); ++it)
        result = Term::compound(std::string(kListFunctor), {*it, result});
    return result;
}

bool is_nil(const Term& t) noexcept { return t.is_constant() && t.name() == kNilSymbol; }

bool is_cons(const Term& t) noexcept {
    return t.is_compound() && t.arity() == 2 && t.name() == kListFunctor;
}

std::optional<std::size_t> list_length(const Term& t) {
    std::size_t n = 0;
    const Term* cur = &t;
    while (is_cons(*cur)) {
        ++n;
        cur = &cur->arg(1);
    }
    if (!is_nil(*cur)) return std::nullopt;
    return n;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
    if (t.ground()) return;
    if (t.is_variable()) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
        return;
    }
    for (const Term& a : t.args()) collect_variables(a, out);
}

std::vector<std::string> variables_of(const Term& t) {
    std::vector<std::string> out;
    collect_variables(t, out);
    return out;
}

bool occurs_in(std::string_view var, const Term& t) {
    if (t.ground()) return false;
    if (t.is_variable()) return t.name() == var;
    for (const Term& a : t.args())
        if (occurs_in(var, a)) return true;
    return false;
}

const Term* Substitution::lookup(std::string_view var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(std::string var, Term value) {
    if (value.is_variable() && value.name() == var) return;
    bindings_.insert_or_assign(std::move(var), std::move(value));
}

Term apply(const Substitution& s, const Term& t) {
    if (s.empty() || t.ground()) return t;
    if (t.is_variable()) {
        const Term* b = s.lookup(t.name());
        return b ? *b : t;
    }
    std::vector<Term> args;
    bool changed = false;
    args.reserve(t.arity());
    for (const Term& a : t.args()) {
        args.push_back(apply(s, a));
        changed = changed || !args.back().same_node(a);
    }
    if (!changed) return t;
    return Term::compound(t.name(), std::move(args));
}

Term rename(const Term& t, const std::map<std::string, std::string, std::less<>>& mapping) {
    if (t.ground()) return t;
    if (t.is_variable()) {
        auto it = mapping.find(t.name());
        return it == mapping.end() ? t : Term::variable(it->second);
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const Term& a : t.args()) args.push_back(rename(a, mapping));
    return Term::compound(t.name(), std::move(args));
}

Term rename_apart(const Term& t, const std::set<std::string>& used) {
    std::map<std::string, std::string, std::less<>> mapping;
    std::size_t counter = 0;
    for (const std::string& v : variables_of(t)) {
        std::string candidate;
        do {
            candidate = "V" + std::to_string(++counter);
        } while (used.contains(candidate));
        mapping.emplace(v, std::move(candidate));
    }
    return rename(t, mapping);
}

std::string FreshVariables::next() { return "_#" + std::to_string(++counter_); }

Term FreshVariables::rename(const Term& t, std::map<std::string, std::string, std::less<>>& mapping) {
    if (t.ground()) return t;
    if (t.is_variable()) {
        auto it = mapping.find(t.name());
        if (it == mapping.end()) it = mapping.emplace(t.name(), next()).first;
        return Term::variable(it->second);
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const Term& a : t.args()) args.push_back(rename(a, mapping));
    return Term::compound(t.name(), std::move(args));
}

namespace {

using NameMap = std::unordered_map<std::string, std::string>;

bool variant_walk(const Term& a, const Term& b, NameMap& fwd, NameMap& back) {
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
        case Term::Kind::Variable: {
            auto [f, fnew] = fwd.emplace(a.name(), b.name());
            if (!fnew && f->second != b.name()) return false;
            auto [r, rnew] = back.emplace(b.name(), a.name());
            return rnew || r->second == a.name();
        }
        case Term::Kind::Integer: return a.value() == b.value();
        case Term::Kind::Compound:
            if (a.name() != b.name() || a.arity() != b.arity()) return false;
            for (std::size_t i = 0; i < a.arity(); ++i)
                if (!variant_walk(a.arg(i), b.arg(i), fwd, back)) return false;
            return true;
    }
    return false;
}

}  // namespace

bool is_variant(const Term& a, const Term& b) {
    if (a.ground() || b.ground()) return a == b;
    NameMap fwd, back;
    return variant_walk(a, b, fwd, back);
}

std::string VariableNamer::name_for(const std::string& var) {
    auto it = names_.find(var);
    if (it == names_.end())
        it = names_.emplace(var, "V" + std::to_string(names_.size() + 1)).first;
    return it->second;
}

namespace {

struct OpInfo {
    int priority;
    bool left_assoc;  // yfx when true, xfx otherwise
};

std::optional<OpInfo> infix_op(const Term& t) {
    if (!t.is_compound() || t.arity() != 2) return std::nullopt;
    const std::string& n = t.name();
    if (n == "+" || n == "-") return OpInfo{500, true};
    if (n == "*" || n == "//") return OpInfo{400, true};
    if (is_comparison_functor(n) || n == "is") return OpInfo{700, false};
    return std::nullopt;
}

void print(const Term& t, int max_priority, VariableNamer* namer, std::string& out);

void print_list(const Term& t, VariableNamer* namer, std::string& out) {
    out += '[';
    const Term* cur = &t;
    bool first = true;
    while (is_cons(*cur)) {
        if (!first) out += ',';
        first = false;
        print(cur->arg(0), 999, namer, out);
        cur = &cur->arg(1);
    }
    if (!is_nil(*cur)) {
        out += '|';
        print(*cur, 999, namer, out);
    }
    out += ']';
}

void print(const Term& t, int max_priority, VariableNamer* namer, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Variable:
            out += namer ? namer->name_for(t.name()) : t.name();
            return;
        case Term::Kind::Integer:
            if (t.value() < 0 && max_priority < 999) {
                out += '(' + std::to_string(t.value()) + ')';
            } else {
                out += std::to_string(t.value());
            }
            return;
        case Term::Kind::Compound: break;
    }
    if (is_cons(t)) {
        print_list(t, namer, out);
        return;
    }
    if (auto op = infix_op(t)) {
        const bool paren = op->priority > max_priority;
        if (paren) out += '(';
        print(t.arg(0), op->left_assoc ? op->priority : op->priority - 1, namer, out);
        out += t.name() == "is" ? " is " : t.name();
        print(t.arg(1), op->priority - 1, namer, out);
        if (paren) out += ')';
        return;
    }
    out += t.name();
    if (t.arity() == 0) return;
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ',';
        print(t.arg(i), 999, namer, out);
    }
    out += ')';
}

}  // namespace

std::string to_string(const Term& t, VariableNamer* namer) {
    std::string out;
    print(t, 1200, namer, out);
    return out;
}

bool is_comparison_functor(std::string_view name) noexcept {
    return name == "<" || name == ">" || name == "=<" || name == ">=" || name == "=:=" ||
           name == "=\\=";
}

bool is_arith_functor(const Term& t) noexcept {
    if (!t.is_compound()) return false;
    const std::string& n = t.name();
    if (t.arity() == 2) return n == "+" || n == "-" || n == "*" || n == "//";
    if (t.arity() == 1) return n == "-" || n == "size";
    return false;
}

}  // namespace termcheck
