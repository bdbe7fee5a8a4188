#include "termcheck/unify.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace termcheck {

namespace {

class Unifier {
public:
    explicit Unifier(bool occurs_check) : occurs_check_(occurs_check) {}

    bool unify(const Term& a, const Term& b) {
        std::vector<std::pair<Term, Term>> work{{a, b}};
        while (!work.empty()) {
            auto [x, y] = std::move(work.back());
            work.pop_back();
            x = deref(x);
            y = deref(y);
            if (x.same_node(y)) continue;
            if (x.is_variable() && y.is_variable() && x.name() == y.name()) continue;
            if (x.is_variable()) {
                if (!bind(x.name(), y)) return false;
                continue;
            }
            if (y.is_variable()) {
                if (!bind(y.name(), x)) return false;
                continue;
            }
            if (x.kind() != y.kind()) return false;
            if (x.is_integer()) {
                if (x.value() != y.value()) return false;
                continue;
            }
            if (x.name() != y.name() || x.arity() != y.arity()) return false;
            if (x.ground() && y.ground()) {
                if (x != y) return false;
                continue;
            }
            for (std::size_t i = x.arity(); i-- > 0;) work.emplace_back(x.arg(i), y.arg(i));
        }
        return true;
    }

    Substitution solved() {
        Substitution::Map out;
        for (const auto& [var, _] : raw_) {
            Term v = resolve(Term::variable(var));
            if (!(v.is_variable() && v.name() == var)) out.emplace(var, std::move(v));
        }
        return Substitution(std::move(out));
    }

private:
    Term deref(Term t) const {
        while (t.is_variable()) {
            auto it = raw_.find(t.name());
            if (it == raw_.end()) break;
            t = it->second;
        }
        return t;
    }

    bool occurs(const std::string& var, const Term& t) const {
        std::vector<Term> stack{t};
        while (!stack.empty()) {
            Term cur = deref(stack.back());
            stack.pop_back();
            if (cur.ground()) continue;
            if (cur.is_variable()) {
                if (cur.name() == var) return true;
                continue;
            }
            for (const Term& a : cur.args()) stack.push_back(a);
        }
        return false;
    }

    bool bind(const std::string& var, const Term& value) {
        if (occurs_check_ && occurs(var, value)) return false;
        raw_.emplace(var, value);
        return true;
    }

    Term resolve(const Term& t) {
        if (t.ground()) return t;
        if (t.is_variable()) {
            if (auto done = resolved_.find(t.name()); done != resolved_.end()) return done->second;
            auto it = raw_.find(t.name());
            if (it == raw_.end()) return t;
            if (!in_progress_.insert(t.name()).second) return t;  // cyclic binding
            Term r = resolve(it->second);
            in_progress_.erase(t.name());
            resolved_.emplace(t.name(), r);
            return r;
        }
        std::vector<Term> args;
        args.reserve(t.arity());
        bool changed = false;
        for (const Term& a : t.args()) {
            args.push_back(resolve(a));
            changed = changed || !args.back().same_node(a);
        }
        return changed ? Term::compound(t.name(), std::move(args)) : t;
    }

    bool occurs_check_;
    std::unordered_map<std::string, Term> raw_;
    std::unordered_map<std::string, Term> resolved_;
    std::unordered_set<std::string> in_progress_;
};

}  // namespace

std::optional<Substitution> mgu(const Term& a, const Term& b, bool occurs_check) {
    Unifier u(occurs_check);
    if (!u.unify(a, b)) return std::nullopt;
    return u.solved();
}

}  // namespace termcheck
