#pragma once

// Capture-free simultaneous substitution. Formulas are quantifier-free,
// so this is plain structural recursion; sort preservation is checked
// when the map is built.

#include "reacsynth/expr.hpp"

#include <map>

namespace reacsynth {

class Substitution {
public:
    Substitution() = default;

    void map_term(const Var& v, Term t) {
        if (v.sort == Sort::Bool) throw SortMismatch("term image for boolean variable " + v.name);
        if (t->sort != v.sort)
            throw SortMismatch("substituting " + std::string(sort_name(t->sort)) + " term for " +
                               v.name + " : " + sort_name(v.sort));
        terms_[v.name] = std::move(t);
    }

    void map_formula(const Var& v, Formula f) {
        if (v.sort != Sort::Bool)
            throw SortMismatch("formula image for arithmetic variable " + v.name);
        formulas_[v.name] = std::move(f);
    }

    // v := w, for both arithmetic and boolean variables
    void map_var(const Var& v, const Var& w) {
        if (v.sort != w.sort) throw SortMismatch("renaming " + v.name + " to " + w.name);
        if (v.sort == Sort::Bool)
            map_formula(v, mk_boolvar(w));
        else
            map_term(v, mk_var(w));
    }

    bool empty() const { return terms_.empty() && formulas_.empty(); }

    const Term* term_for(const std::string& name) const {
        auto it = terms_.find(name);
        return it == terms_.end() ? nullptr : &it->second;
    }
    const Formula* formula_for(const std::string& name) const {
        auto it = formulas_.find(name);
        return it == formulas_.end() ? nullptr : &it->second;
    }

private:
    std::map<std::string, Term> terms_;
    std::map<std::string, Formula> formulas_;
};

inline Term substitute(const Term& t, const Substitution& s);
inline Formula substitute(const Formula& f, const Substitution& s);

inline Term substitute(const Term& t, const Substitution& s) {
    return std::visit(
        [&](const auto& n) -> Term {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermConst>) {
                return t;
            } else if constexpr (std::is_same_v<T, TermVar>) {
                if (const Term* img = s.term_for(n.var.name)) return *img;
                if (s.formula_for(n.var.name))
                    throw SortMismatch("formula image for arithmetic use of " + n.var.name);
                return t;
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                return mk_neg(substitute(n.arg, s));
            } else if constexpr (std::is_same_v<T, TermSum>) {
                std::vector<Term> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(substitute(a, s));
                return mk_sum(std::move(args));
            } else if constexpr (std::is_same_v<T, TermScale>) {
                return mk_scale(n.factor, substitute(n.arg, s));
            } else {
                return mk_ite(substitute(n.cond, s), substitute(n.then_branch, s),
                              substitute(n.else_branch, s));
            }
        },
        t->node);
}

inline Formula substitute(const Formula& f, const Substitution& s) {
    return std::visit(
        [&](const auto& n) -> Formula {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
                return f;
            } else if constexpr (std::is_same_v<T, FAtom>) {
                return mk_atom(n.op, substitute(n.lhs, s), substitute(n.rhs, s));
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                if (const Formula* img = s.formula_for(n.var.name)) return *img;
                if (s.term_for(n.var.name))
                    throw SortMismatch("term image for boolean use of " + n.var.name);
                return f;
            } else if constexpr (std::is_same_v<T, FDivides>) {
                return mk_divides(n.divisor, substitute(n.arg, s));
            } else if constexpr (std::is_same_v<T, FNot>) {
                return mk_not(substitute(n.arg, s));
            } else if constexpr (std::is_same_v<T, FAnd>) {
                std::vector<Formula> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(substitute(a, s));
                return mk_and(std::move(args));
            } else if constexpr (std::is_same_v<T, FOr>) {
                std::vector<Formula> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(substitute(a, s));
                return mk_or(std::move(args));
            } else if constexpr (std::is_same_v<T, FImplies>) {
                return mk_implies(substitute(n.lhs, s), substitute(n.rhs, s));
            } else {
                return mk_iff(substitute(n.lhs, s), substitute(n.rhs, s));
            }
        },
        f->node);
}

// Renames every state variable to its primed image (or back).
inline Substitution renaming(const std::vector<Var>& from, const std::vector<Var>& to) {
    if (from.size() != to.size()) throw Error("renaming: length mismatch");
    Substitution s;
    for (std::size_t i = 0; i < from.size(); ++i) s.map_var(from[i], to[i]);
    return s;
}

} // namespace reacsynth
