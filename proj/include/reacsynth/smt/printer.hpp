#pragma once

// SMT-LIB 2 printing. Output is canonical: stable traversal order,
// rationals rendered per sort, atoms over integer variables rewritten
// with cleared denominators so the solver never sees fractional
// coefficients on Int terms.

#include "reacsynth/expr.hpp"
#include "reacsynth/linear.hpp"

#include <sstream>
#include <string>

namespace reacsynth::smt {

inline const char* smt_sort(Sort s) {
    switch (s) {
        case Sort::Bool: return "Bool";
        case Sort::Int: return "Int";
        case Sort::Real: return "Real";
    }
    return "?";
}

inline std::string smt_rational(const Rational& r, Sort sort) {
    if (sort == Sort::Int) {
        if (!is_integer(r)) throw SortMismatch("fractional Int literal " + to_string(r));
        BigInt n = num(r);
        if (n < 0) return "(- " + (-n).str() + ")";
        return n.str();
    }
    BigInt n = num(r), d = den(r);
    bool negative = n < 0;
    if (negative) n = -n;
    std::string body = d == 1 ? n.str() + ".0" : "(/ " + n.str() + ".0 " + d.str() + ".0)";
    return negative ? "(- " + body + ")" : body;
}

inline std::string smt_relop(Relop op) {
    switch (op) {
        case Relop::Lt: return "<";
        case Relop::Le: return "<=";
        case Relop::Eq: return "=";
        case Relop::Ge: return ">=";
        case Relop::Gt: return ">";
        case Relop::Ne: return "distinct";
    }
    return "?";
}

std::string smt_term(const Term& t);
std::string smt_formula(const Formula& f);

inline std::string smt_term(const Term& t) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermConst>) {
                return smt_rational(n.value, t->sort);
            } else if constexpr (std::is_same_v<T, TermVar>) {
                return n.var.name;
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                return "(- " + smt_term(n.arg) + ")";
            } else if constexpr (std::is_same_v<T, TermSum>) {
                std::string s = "(+";
                for (const auto& a : n.args) s += " " + smt_term(a);
                return s + ")";
            } else if constexpr (std::is_same_v<T, TermScale>) {
                if (n.factor == 1) return smt_term(n.arg);
                if (n.factor == -1) return "(- " + smt_term(n.arg) + ")";
                if (t->sort == Sort::Int && !is_integer(n.factor)) {
                    // p/q * t over Int: exact under the divisibility guard
                    // emitted alongside such witnesses
                    BigInt p = num(n.factor), q = den(n.factor);
                    std::string inner = p == 1 ? smt_term(n.arg)
                                               : "(* " + smt_rational(Rational(p), Sort::Int) +
                                                     " " + smt_term(n.arg) + ")";
                    return "(div " + inner + " " + q.str() + ")";
                }
                return "(* " + smt_rational(n.factor, t->sort) + " " + smt_term(n.arg) + ")";
            } else {
                return "(ite " + smt_formula(n.cond) + " " + smt_term(n.then_branch) + " " +
                       smt_term(n.else_branch) + ")";
            }
        },
        t->node);
}

namespace detail {

inline bool relop_holds(Relop op, const Rational& lhs, const Rational& rhs) {
    switch (op) {
        case Relop::Lt: return lhs < rhs;
        case Relop::Le: return lhs <= rhs;
        case Relop::Eq: return lhs == rhs;
        case Relop::Ne: return lhs != rhs;
        case Relop::Ge: return lhs >= rhs;
        case Relop::Gt: return lhs > rhs;
    }
    return false;
}

// (relop Σ c_i·x_i k); integer atoms get integral coefficients
inline std::string smt_linear_atom(Relop op, const FAtom& a) {
    std::map<std::string, Var> vars;
    LinearTerm l = linearize(a.lhs, &vars);
    l += linearize(a.rhs, &vars).negated();
    Rational rhs = -l.constant;
    l.constant = 0;
    if (l.coeffs.empty()) return relop_holds(op, Rational(0), rhs) ? "true" : "false";
    if (l.sort == Sort::Int) {
        BigInt d = big_lcm(l.denominator_lcm(), den(rhs));
        if (d != 1) {
            l.scale(Rational(d));
            rhs *= Rational(d);
        }
    }
    std::string lhs;
    if (l.coeffs.size() == 1 && l.coeffs.begin()->second == 1) {
        lhs = l.coeffs.begin()->first;
    } else {
        lhs = "(+";
        for (const auto& [name, c] : l.coeffs) {
            if (c == 1)
                lhs += " " + name;
            else
                lhs += " (* " + smt_rational(c, l.sort) + " " + name + ")";
        }
        lhs += ")";
    }
    if (op == Relop::Ne)
        return "(not (= " + lhs + " " + smt_rational(rhs, l.sort) + "))";
    return "(" + smt_relop(op) + " " + lhs + " " + smt_rational(rhs, l.sort) + ")";
}

} // namespace detail

inline std::string smt_formula(const Formula& f) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
                return n.value ? "true" : "false";
            } else if constexpr (std::is_same_v<T, FAtom>) {
                Relop op = n.op;
                std::string body;
                try {
                    return detail::smt_linear_atom(op, n);
                } catch (const NonLinearError&) {
                    // ite below an atom: print structurally
                }
                if (op == Relop::Ne)
                    return "(not (= " + smt_term(n.lhs) + " " + smt_term(n.rhs) + "))";
                return "(" + smt_relop(op) + " " + smt_term(n.lhs) + " " + smt_term(n.rhs) + ")";
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                return n.var.name;
            } else if constexpr (std::is_same_v<T, FDivides>) {
                return "(= (mod " + smt_term(n.arg) + " " + n.divisor.str() + ") 0)";
            } else if constexpr (std::is_same_v<T, FNot>) {
                return "(not " + smt_formula(n.arg) + ")";
            } else if constexpr (std::is_same_v<T, FAnd>) {
                std::string s = "(and";
                for (const auto& a : n.args) s += " " + smt_formula(a);
                return s + ")";
            } else if constexpr (std::is_same_v<T, FOr>) {
                std::string s = "(or";
                for (const auto& a : n.args) s += " " + smt_formula(a);
                return s + ")";
            } else if constexpr (std::is_same_v<T, FImplies>) {
                return "(=> " + smt_formula(n.lhs) + " " + smt_formula(n.rhs) + ")";
            } else {
                return "(= " + smt_formula(n.lhs) + " " + smt_formula(n.rhs) + ")";
            }
        },
        f->node);
}

inline std::string smt_declare(const Var& v) {
    return "(declare-const " + v.name + " " + smt_sort(v.sort) + ")";
}

} // namespace reacsynth::smt
