#pragma once

// Quantifier-free LIRA terms and formulas. Nodes are immutable and
// shared; a Term/Formula is a shared_ptr to a const node, so values can
// be copied and handed across threads freely.
//
// Terms are linear by construction: the only multiplication is by a
// rational constant. if-then-else appears in terms (Skolem witnesses);
// specification streams are lowered to case splits before reaching the
// projection machinery.

#include "reacsynth/errors.hpp"
#include "reacsynth/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace reacsynth {

enum class Sort { Bool, Int, Real };

inline const char* sort_name(Sort s) {
    switch (s) {
        case Sort::Bool: return "Bool";
        case Sort::Int: return "Int";
        case Sort::Real: return "Real";
    }
    return "?";
}

enum class VarKind { State, Input, Next, Local };

struct Var {
    std::string name;
    Sort sort = Sort::Real;
    VarKind kind = VarKind::Local;

    bool operator==(const Var& o) const { return name == o.name; }
    bool operator<(const Var& o) const { return name < o.name; }
};

struct TermNode;
struct FormulaNode;
using Term = std::shared_ptr<const TermNode>;
using Formula = std::shared_ptr<const FormulaNode>;

// ---------------------------------------------------------------- terms

struct TermConst { Rational value; };
struct TermVar { Var var; };
struct TermNeg { Term arg; };
struct TermSum { std::vector<Term> args; };
struct TermScale { Rational factor; Term arg; };
struct TermIte { Formula cond; Term then_branch; Term else_branch; };

struct TermNode {
    std::variant<TermConst, TermVar, TermNeg, TermSum, TermScale, TermIte> node;
    Sort sort;
};

// ------------------------------------------------------------- formulas

enum class Relop { Lt, Le, Eq, Ne, Ge, Gt };

inline Relop flip_relop(Relop op) { // mirror: a op b  <=>  b (flip op) a
    switch (op) {
        case Relop::Lt: return Relop::Gt;
        case Relop::Le: return Relop::Ge;
        case Relop::Gt: return Relop::Lt;
        case Relop::Ge: return Relop::Le;
        default: return op;
    }
}

inline Relop negate_relop(Relop op) {
    switch (op) {
        case Relop::Lt: return Relop::Ge;
        case Relop::Le: return Relop::Gt;
        case Relop::Eq: return Relop::Ne;
        case Relop::Ne: return Relop::Eq;
        case Relop::Ge: return Relop::Lt;
        case Relop::Gt: return Relop::Le;
    }
    return op;
}

struct FConst { bool value; };
struct FAtom { Relop op; Term lhs; Term rhs; };
struct FBoolVar { Var var; };
struct FDivides { BigInt divisor; Term arg; }; // divisor >= 2, arg integer-sorted
struct FNot { Formula arg; };
struct FAnd { std::vector<Formula> args; };
struct FOr { std::vector<Formula> args; };
struct FImplies { Formula lhs; Formula rhs; };
struct FIff { Formula lhs; Formula rhs; };

struct FormulaNode {
    std::variant<FConst, FAtom, FBoolVar, FDivides, FNot, FAnd, FOr, FImplies, FIff> node;
};

// ------------------------------------------------------------- builders

inline Term mk_const(Rational v, Sort s) {
    if (s == Sort::Bool) throw SortMismatch("numeric constant with Bool sort");
    if (s == Sort::Int && !is_integer(v))
        throw SortMismatch("non-integral Int constant " + to_string(v));
    return std::make_shared<TermNode>(TermNode{TermConst{std::move(v)}, s});
}

inline Term mk_int(BigInt v) { return mk_const(Rational(std::move(v)), Sort::Int); }
inline Term mk_real(Rational v) { return mk_const(std::move(v), Sort::Real); }

inline Term mk_var(const Var& v) {
    if (v.sort == Sort::Bool)
        throw SortMismatch("boolean variable " + v.name + " used as arithmetic term");
    return std::make_shared<TermNode>(TermNode{TermVar{v}, v.sort});
}

inline Term mk_neg(Term t) {
    Sort s = t->sort;
    return std::make_shared<TermNode>(TermNode{TermNeg{std::move(t)}, s});
}

inline Term mk_sum(std::vector<Term> ts) {
    if (ts.empty()) throw Error("mk_sum: empty");
    Sort s = ts.front()->sort;
    for (const auto& t : ts)
        if (t->sort != s) throw SortMismatch("sum of mixed sorts");
    if (ts.size() == 1) return ts.front();
    return std::make_shared<TermNode>(TermNode{TermSum{std::move(ts)}, s});
}

inline Term mk_add(Term a, Term b) { return mk_sum({std::move(a), std::move(b)}); }
inline Term mk_sub(Term a, Term b) { return mk_add(std::move(a), mk_neg(std::move(b))); }

// Note: scaling an Int term by a non-integer factor is permitted; it is
// produced by integer projection under a divisibility guard that makes
// the result integral on every relevant model.
inline Term mk_scale(Rational factor, Term t) {
    Sort s = t->sort;
    return std::make_shared<TermNode>(TermNode{TermScale{std::move(factor), std::move(t)}, s});
}

inline Term mk_ite(Formula c, Term a, Term b) {
    if (a->sort != b->sort) throw SortMismatch("ite branches of different sorts");
    Sort s = a->sort;
    return std::make_shared<TermNode>(TermNode{TermIte{std::move(c), std::move(a), std::move(b)}, s});
}

inline Formula mk_bool(bool v) {
    static const Formula t = std::make_shared<FormulaNode>(FormulaNode{FConst{true}});
    static const Formula f = std::make_shared<FormulaNode>(FormulaNode{FConst{false}});
    return v ? t : f;
}
inline Formula mk_true() { return mk_bool(true); }
inline Formula mk_false() { return mk_bool(false); }

inline Formula mk_atom(Relop op, Term lhs, Term rhs) {
    if (lhs->sort != rhs->sort)
        throw SortMismatch("atom relates " + std::string(sort_name(lhs->sort)) + " and " +
                           sort_name(rhs->sort));
    return std::make_shared<FormulaNode>(FormulaNode{FAtom{op, std::move(lhs), std::move(rhs)}});
}

inline Formula mk_boolvar(const Var& v) {
    if (v.sort != Sort::Bool)
        throw SortMismatch("variable " + v.name + " is not boolean");
    return std::make_shared<FormulaNode>(FormulaNode{FBoolVar{v}});
}

inline Formula mk_divides(BigInt divisor, Term t) {
    if (divisor <= 0) throw Error("mk_divides: divisor must be positive");
    if (t->sort != Sort::Int) throw SortMismatch("divisibility over non-Int term");
    return std::make_shared<FormulaNode>(FormulaNode{FDivides{std::move(divisor), std::move(t)}});
}

inline Formula mk_not(Formula f) {
    return std::make_shared<FormulaNode>(FormulaNode{FNot{std::move(f)}});
}

inline Formula mk_and(std::vector<Formula> fs) {
    if (fs.empty()) return mk_true();
    if (fs.size() == 1) return fs.front();
    return std::make_shared<FormulaNode>(FormulaNode{FAnd{std::move(fs)}});
}
inline Formula mk_and(Formula a, Formula b) { return mk_and(std::vector<Formula>{std::move(a), std::move(b)}); }

inline Formula mk_or(std::vector<Formula> fs) {
    if (fs.empty()) return mk_false();
    if (fs.size() == 1) return fs.front();
    return std::make_shared<FormulaNode>(FormulaNode{FOr{std::move(fs)}});
}
inline Formula mk_or(Formula a, Formula b) { return mk_or(std::vector<Formula>{std::move(a), std::move(b)}); }

inline Formula mk_implies(Formula a, Formula b) {
    return std::make_shared<FormulaNode>(FormulaNode{FImplies{std::move(a), std::move(b)}});
}

inline Formula mk_iff(Formula a, Formula b) {
    return std::make_shared<FormulaNode>(FormulaNode{FIff{std::move(a), std::move(b)}});
}

// ------------------------------------------------------------ utilities

inline bool is_true(const Formula& f) {
    auto* c = std::get_if<FConst>(&f->node);
    return c && c->value;
}
inline bool is_false(const Formula& f) {
    auto* c = std::get_if<FConst>(&f->node);
    return c && !c->value;
}

void free_vars(const Term& t, std::map<std::string, Var>& out);
void free_vars(const Formula& f, std::map<std::string, Var>& out);

inline void free_vars(const Term& t, std::map<std::string, Var>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermConst>) {
            } else if constexpr (std::is_same_v<T, TermVar>) {
                out.emplace(n.var.name, n.var);
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                free_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, TermSum>) {
                for (const auto& a : n.args) free_vars(a, out);
            } else if constexpr (std::is_same_v<T, TermScale>) {
                free_vars(n.arg, out);
            } else {
                free_vars(n.cond, out);
                free_vars(n.then_branch, out);
                free_vars(n.else_branch, out);
            }
        },
        t->node);
}

inline void free_vars(const Formula& f, std::map<std::string, Var>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FConst>) {
            } else if constexpr (std::is_same_v<T, FAtom>) {
                free_vars(n.lhs, out);
                free_vars(n.rhs, out);
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                out.emplace(n.var.name, n.var);
            } else if constexpr (std::is_same_v<T, FDivides>) {
                free_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, FNot>) {
                free_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, FAnd> || std::is_same_v<T, FOr>) {
                for (const auto& a : n.args) free_vars(a, out);
            } else {
                free_vars(n.lhs, out);
                free_vars(n.rhs, out);
            }
        },
        f->node);
}

inline std::map<std::string, Var> free_vars(const Formula& f) {
    std::map<std::string, Var> out;
    free_vars(f, out);
    return out;
}

// Total deterministic order on terms/formulas; used for canonical
// tie-breaking and set containers.
int compare(const Term& a, const Term& b);
int compare(const Formula& a, const Formula& b);

namespace detail {
inline int cmp3(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline int cmp3(const BigInt& a, const BigInt& b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline int cmp3(const std::string& a, const std::string& b) { return a.compare(b); }
} // namespace detail

inline int compare(const Term& a, const Term& b) {
    if (a.get() == b.get()) return 0;
    if (a->node.index() != b->node.index())
        return a->node.index() < b->node.index() ? -1 : 1;
    if (a->sort != b->sort) return a->sort < b->sort ? -1 : 1;
    return std::visit(
        [&](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, TermConst>) {
                return detail::cmp3(x.value, y.value);
            } else if constexpr (std::is_same_v<T, TermVar>) {
                return detail::cmp3(x.var.name, y.var.name);
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                return compare(x.arg, y.arg);
            } else if constexpr (std::is_same_v<T, TermSum>) {
                if (x.args.size() != y.args.size()) return x.args.size() < y.args.size() ? -1 : 1;
                for (std::size_t i = 0; i < x.args.size(); ++i)
                    if (int c = compare(x.args[i], y.args[i])) return c;
                return 0;
            } else if constexpr (std::is_same_v<T, TermScale>) {
                if (int c = detail::cmp3(x.factor, y.factor)) return c;
                return compare(x.arg, y.arg);
            } else {
                if (int c = compare(x.cond, y.cond)) return c;
                if (int c = compare(x.then_branch, y.then_branch)) return c;
                return compare(x.else_branch, y.else_branch);
            }
        },
        a->node);
}

inline int compare(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return 0;
    if (a->node.index() != b->node.index())
        return a->node.index() < b->node.index() ? -1 : 1;
    return std::visit(
        [&](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, FConst>) {
                return x.value == y.value ? 0 : (x.value ? 1 : -1);
            } else if constexpr (std::is_same_v<T, FAtom>) {
                if (x.op != y.op) return x.op < y.op ? -1 : 1;
                if (int c = compare(x.lhs, y.lhs)) return c;
                return compare(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, FBoolVar>) {
                return detail::cmp3(x.var.name, y.var.name);
            } else if constexpr (std::is_same_v<T, FDivides>) {
                if (int c = detail::cmp3(x.divisor, y.divisor)) return c;
                return compare(x.arg, y.arg);
            } else if constexpr (std::is_same_v<T, FNot>) {
                return compare(x.arg, y.arg);
            } else if constexpr (std::is_same_v<T, FAnd> || std::is_same_v<T, FOr>) {
                if (x.args.size() != y.args.size()) return x.args.size() < y.args.size() ? -1 : 1;
                for (std::size_t i = 0; i < x.args.size(); ++i)
                    if (int c = compare(x.args[i], y.args[i])) return c;
                return 0;
            } else {
                if (int c = compare(x.lhs, y.lhs)) return c;
                return compare(x.rhs, y.rhs);
            }
        },
        a->node);
}

inline bool equal(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

struct FormulaLess {
    bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};
struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

// Flattened conjuncts/disjuncts of one level.
inline std::vector<Formula> conjuncts(const Formula& f) {
    if (auto* a = std::get_if<FAnd>(&f->node)) return a->args;
    if (is_true(f)) return {};
    return {f};
}
inline std::vector<Formula> disjuncts(const Formula& f) {
    if (auto* o = std::get_if<FOr>(&f->node)) return o->args;
    if (is_false(f)) return {};
    return {f};
}

} // namespace reacsynth
