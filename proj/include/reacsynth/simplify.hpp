#pragma once

// Equivalence-preserving simplification: constant folding, canonical
// linear atoms, and/or flattening with deduplication and complement
// detection, one-level boolean unit propagation. Used to keep the
// fixpoint candidate F = F ∧ ¬W from growing without bound across
// refinements. Idempotent (iterates to a syntactic fixpoint).

#include "reacsynth/eval.hpp"
#include "reacsynth/expr.hpp"
#include "reacsynth/linear.hpp"
#include "reacsynth/subst.hpp"

#include <set>

namespace reacsynth {

namespace detail {

// Σ coeffs ⋈ rhs over the variables in `vars`, normalized:
//  - Real: leading (lexicographically least) coefficient becomes +1.
//  - Int: integer coprime coefficients, strict ops tightened to non-strict.
inline Formula atom_from_linear(Relop op, LinearTerm lt, const std::map<std::string, Var>& vars) {
    if (lt.is_constant()) return mk_bool(eval_relop(op, lt.constant, 0));

    Rational rhs = -lt.constant;
    lt.constant = 0;

    if (lt.sort == Sort::Int) {
        BigInt d = lt.denominator_lcm();
        d = big_lcm(d, den(rhs));
        if (d != 1) {
            lt.scale(Rational(d));
            rhs *= Rational(d);
        }
        BigInt g = 0;
        for (const auto& [n, c] : lt.coeffs) g = big_gcd(g, num(c));
        if (lt.coeffs.begin()->second < 0) {
            g = -g;
            op = flip_relop(op); // scaling by a negative mirrors the relation
        }
        if (g != 1) {
            lt.scale(Rational(1) / Rational(g));
            rhs /= Rational(g);
        }
        switch (op) {
            case Relop::Lt: op = Relop::Le; rhs = Rational(rat_ceil(rhs) - 1); break;
            case Relop::Le: rhs = Rational(rat_floor(rhs)); break;
            case Relop::Gt: op = Relop::Ge; rhs = Rational(rat_floor(rhs) + 1); break;
            case Relop::Ge: rhs = Rational(rat_ceil(rhs)); break;
            case Relop::Eq:
                if (!is_integer(rhs)) return mk_false();
                break;
            case Relop::Ne:
                if (!is_integer(rhs)) return mk_true();
                break;
        }
    } else {
        Rational lead = lt.coeffs.begin()->second;
        if (lead < 0) op = flip_relop(op);
        lt.scale(Rational(1) / lead);
        rhs /= lead;
    }
    return mk_atom(op, to_term(lt, vars), mk_const(rhs, lt.sort));
}

inline Formula simplify_divides(const BigInt& divisor, const Term& arg) {
    std::map<std::string, Var> vars;
    LinearTerm lt;
    try {
        lt = linearize(arg, &vars);
    } catch (const NonLinearError&) {
        return mk_divides(divisor, arg);
    }
    BigInt d = divisor;
    BigInt dl = lt.denominator_lcm();
    if (dl != 1) { // (k | t/q)  ==  (k*q | t)
        lt.scale(Rational(dl));
        d *= dl;
    }
    // reduce coefficients into [0, d)
    LinearTerm red;
    red.sort = Sort::Int;
    for (const auto& [n, c] : lt.coeffs) red.add(n, Rational(mod_euclid(num(c), d)));
    red.constant = Rational(mod_euclid(num(lt.constant), d));
    if (red.is_constant()) return mk_bool(red.constant == 0);
    if (d == 1) return mk_true();
    return mk_divides(d, to_term(red, vars));
}

inline Formula simplify_pass(const Formula& f);

inline Term simplify_term_pass(const Term& t) {
    // linear subtrees collapse to canonical form; ite is simplified
    // recursively and folded when the condition is constant
    std::map<std::string, Var> vars;
    try {
        LinearTerm lt = linearize(t, &vars);
        return to_term(lt, vars);
    } catch (const NonLinearError&) {
    }
    return std::visit(
        [&](const auto& n) -> Term {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermIte>) {
                Formula c = simplify_pass(n.cond);
                Term a = simplify_term_pass(n.then_branch);
                Term b = simplify_term_pass(n.else_branch);
                if (is_true(c)) return a;
                if (is_false(c)) return b;
                if (equal(a, b)) return a;
                return mk_ite(std::move(c), std::move(a), std::move(b));
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                return mk_neg(simplify_term_pass(n.arg));
            } else if constexpr (std::is_same_v<T, TermSum>) {
                std::vector<Term> args;
                for (const auto& a : n.args) args.push_back(simplify_term_pass(a));
                return mk_sum(std::move(args));
            } else if constexpr (std::is_same_v<T, TermScale>) {
                return mk_scale(n.factor, simplify_term_pass(n.arg));
            } else {
                return t;
            }
        },
        t->node);
}

// literal complement in canonical form, for x ∧ ¬x pruning
inline Formula complement_of(const Formula& f) {
    if (auto* a = std::get_if<FAtom>(&f->node)) {
        std::map<std::string, Var> vars;
        try {
            LinearTerm l = linearize(a->lhs, &vars);
            l += linearize(a->rhs, &vars).negated();
            return atom_from_linear(negate_relop(a->op), std::move(l), vars);
        } catch (const NonLinearError&) {
            return mk_not(f);
        }
    }
    if (auto* n = std::get_if<FNot>(&f->node)) return n->arg;
    return mk_not(f);
}

enum class Polarity { Conj, Disj };

// One flattening pass over an and/or spine with unit propagation of
// boolean variables into the remaining siblings.
inline Formula flatten_junction(std::vector<Formula> args, Polarity pol) {
    const bool conj = pol == Polarity::Conj;
    std::vector<Formula> flat;
    for (auto& a : args) {
        Formula sa = simplify_pass(a);
        if (conj ? is_true(sa) : is_false(sa)) continue;
        if (conj ? is_false(sa) : is_true(sa)) return mk_bool(!conj);
        auto nested = conj ? conjuncts(sa) : disjuncts(sa);
        if (nested.size() == 1 && equal(nested.front(), sa)) {
            flat.push_back(std::move(sa));
        } else {
            for (auto& x : nested) flat.push_back(std::move(x));
        }
    }

    // boolean units: in a conjunction b is true in siblings, in a
    // disjunction b is false in siblings
    Substitution units;
    for (const auto& x : flat) {
        if (auto* bv = std::get_if<FBoolVar>(&x->node))
            units.map_formula(bv->var, mk_bool(conj));
        else if (auto* nt = std::get_if<FNot>(&x->node))
            if (auto* bv2 = std::get_if<FBoolVar>(&nt->arg->node))
                units.map_formula(bv2->var, mk_bool(!conj));
    }

    std::set<Formula, FormulaLess> seen;
    std::vector<Formula> out;
    for (auto& x : flat) {
        Formula y = x;
        if (!units.empty() && !std::holds_alternative<FBoolVar>(x->node) &&
            !(std::holds_alternative<FNot>(x->node) &&
              std::holds_alternative<FBoolVar>(std::get<FNot>(x->node).arg->node))) {
            y = simplify_pass(substitute(x, units));
            if (conj ? is_true(y) : is_false(y)) continue;
            if (conj ? is_false(y) : is_true(y)) return mk_bool(!conj);
        }
        if (seen.count(complement_of(y))) return mk_bool(!conj);
        if (seen.insert(y).second) out.push_back(std::move(y));
    }
    return conj ? mk_and(std::move(out)) : mk_or(std::move(out));
}

inline Formula simplify_pass(const Formula& f) {
    return std::visit(
        [&](const auto& n) -> Formula {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
                return f;
            } else if constexpr (std::is_same_v<T, FAtom>) {
                std::map<std::string, Var> vars;
                try {
                    LinearTerm l = linearize(n.lhs, &vars);
                    l += linearize(n.rhs, &vars).negated();
                    return atom_from_linear(n.op, std::move(l), vars);
                } catch (const NonLinearError&) {
                    return mk_atom(n.op, simplify_term_pass(n.lhs), simplify_term_pass(n.rhs));
                }
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                return f;
            } else if constexpr (std::is_same_v<T, FDivides>) {
                return simplify_divides(n.divisor, simplify_term_pass(n.arg));
            } else if constexpr (std::is_same_v<T, FNot>) {
                Formula a = simplify_pass(n.arg);
                if (is_true(a)) return mk_false();
                if (is_false(a)) return mk_true();
                if (auto* at = std::get_if<FAtom>(&a->node))
                    return simplify_pass(mk_atom(negate_relop(at->op), at->lhs, at->rhs));
                if (auto* nn = std::get_if<FNot>(&a->node)) return nn->arg;
                return mk_not(std::move(a));
            } else if constexpr (std::is_same_v<T, FAnd>) {
                return flatten_junction(n.args, Polarity::Conj);
            } else if constexpr (std::is_same_v<T, FOr>) {
                return flatten_junction(n.args, Polarity::Disj);
            } else if constexpr (std::is_same_v<T, FImplies>) {
                Formula a = simplify_pass(n.lhs), b = simplify_pass(n.rhs);
                if (is_false(a) || is_true(b)) return mk_true();
                if (is_true(a)) return b;
                if (is_false(b)) return simplify_pass(mk_not(a));
                if (equal(a, b)) return mk_true();
                return mk_implies(std::move(a), std::move(b));
            } else { // FIff
                Formula a = simplify_pass(n.lhs), b = simplify_pass(n.rhs);
                if (is_true(a)) return b;
                if (is_true(b)) return a;
                if (is_false(a)) return simplify_pass(mk_not(b));
                if (is_false(b)) return simplify_pass(mk_not(a));
                if (equal(a, b)) return mk_true();
                return mk_iff(std::move(a), std::move(b));
            }
        },
        f->node);
}

} // namespace detail

inline Formula simplify(const Formula& f) {
    Formula cur = f;
    for (int i = 0; i < 8; ++i) {
        Formula next = detail::simplify_pass(cur);
        if (equal(next, cur)) return next;
        cur = std::move(next);
    }
    return cur;
}

inline Term simplify_term(const Term& t) { return detail::simplify_term_pass(t); }

} // namespace reacsynth
