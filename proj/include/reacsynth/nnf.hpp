#pragma once

// Negation normal form: implications and equivalences eliminated,
// negation pushed onto atoms. Disequalities are split into < / > here,
// so downstream projection only ever sees ordered atoms, equalities,
// boolean literals and (possibly negated) divisibility literals.

#include "reacsynth/expr.hpp"

namespace reacsynth {

inline Formula nnf(const Formula& f, bool negated = false) {
    return std::visit(
        [&](const auto& n) -> Formula {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
                return mk_bool(negated ? !n.value : n.value);
            } else if constexpr (std::is_same_v<T, FAtom>) {
                Relop op = negated ? negate_relop(n.op) : n.op;
                if (op == Relop::Ne)
                    return mk_or(mk_atom(Relop::Lt, n.lhs, n.rhs),
                                 mk_atom(Relop::Gt, n.lhs, n.rhs));
                return mk_atom(op, n.lhs, n.rhs);
            } else if constexpr (std::is_same_v<T, FBoolVar> || std::is_same_v<T, FDivides>) {
                return negated ? mk_not(f) : f;
            } else if constexpr (std::is_same_v<T, FNot>) {
                return nnf(n.arg, !negated);
            } else if constexpr (std::is_same_v<T, FAnd>) {
                std::vector<Formula> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(nnf(a, negated));
                return negated ? mk_or(std::move(args)) : mk_and(std::move(args));
            } else if constexpr (std::is_same_v<T, FOr>) {
                std::vector<Formula> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(nnf(a, negated));
                return negated ? mk_and(std::move(args)) : mk_or(std::move(args));
            } else if constexpr (std::is_same_v<T, FImplies>) {
                if (negated) return mk_and(nnf(n.lhs), nnf(n.rhs, true));
                return mk_or(nnf(n.lhs, true), nnf(n.rhs));
            } else { // FIff
                if (negated)
                    return mk_or(mk_and(nnf(n.lhs), nnf(n.rhs, true)),
                                 mk_and(nnf(n.lhs, true), nnf(n.rhs)));
                return mk_or(mk_and(nnf(n.lhs), nnf(n.rhs)),
                             mk_and(nnf(n.lhs, true), nnf(n.rhs, true)));
            }
        },
        f->node);
}

// True iff f is an NNF literal: atom, boolean variable, divisibility, or
// a negation of the latter two.
inline bool is_literal(const Formula& f) {
    if (std::holds_alternative<FAtom>(f->node) || std::holds_alternative<FBoolVar>(f->node) ||
        std::holds_alternative<FDivides>(f->node) || std::holds_alternative<FConst>(f->node))
        return true;
    if (auto* n = std::get_if<FNot>(&f->node))
        return std::holds_alternative<FBoolVar>(n->arg->node) ||
               std::holds_alternative<FDivides>(n->arg->node);
    return false;
}

} // namespace reacsynth
