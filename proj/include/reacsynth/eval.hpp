#pragma once

// Exact evaluation of terms and formulas under a model. Total on
// well-scoped input: every atom decides, never "unknown".

#include "reacsynth/expr.hpp"
#include "reacsynth/model.hpp"

namespace reacsynth {

inline Rational eval_term(const Term& t, const Model& m);
inline bool eval(const Formula& f, const Model& m);

inline Rational eval_term(const Term& t, const Model& m) {
    return std::visit(
        [&](const auto& n) -> Rational {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermConst>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, TermVar>) {
                return m.get_rational(n.var.name);
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                return -eval_term(n.arg, m);
            } else if constexpr (std::is_same_v<T, TermSum>) {
                Rational acc = 0;
                for (const auto& a : n.args) acc += eval_term(a, m);
                return acc;
            } else if constexpr (std::is_same_v<T, TermScale>) {
                return n.factor * eval_term(n.arg, m);
            } else {
                return eval(n.cond, m) ? eval_term(n.then_branch, m)
                                       : eval_term(n.else_branch, m);
            }
        },
        t->node);
}

inline bool eval_relop(Relop op, const Rational& l, const Rational& r) {
    switch (op) {
        case Relop::Lt: return l < r;
        case Relop::Le: return l <= r;
        case Relop::Eq: return l == r;
        case Relop::Ne: return l != r;
        case Relop::Ge: return l >= r;
        case Relop::Gt: return l > r;
    }
    return false;
}

inline bool eval(const Formula& f, const Model& m) {
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, FAtom>) {
                return eval_relop(n.op, eval_term(n.lhs, m), eval_term(n.rhs, m));
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                return m.get_bool(n.var.name);
            } else if constexpr (std::is_same_v<T, FDivides>) {
                Rational v = eval_term(n.arg, m);
                if (!is_integer(v))
                    throw SortMismatch("divisibility over non-integral value " + to_string(v));
                return mod_euclid(num(v), n.divisor) == 0;
            } else if constexpr (std::is_same_v<T, FNot>) {
                return !eval(n.arg, m);
            } else if constexpr (std::is_same_v<T, FAnd>) {
                for (const auto& a : n.args)
                    if (!eval(a, m)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, FOr>) {
                for (const auto& a : n.args)
                    if (eval(a, m)) return true;
                return false;
            } else if constexpr (std::is_same_v<T, FImplies>) {
                return !eval(n.lhs, m) || eval(n.rhs, m);
            } else {
                return eval(n.lhs, m) == eval(n.rhs, m);
            }
        },
        f->node);
}

} // namespace reacsynth
