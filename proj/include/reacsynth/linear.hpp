#pragma once

// Canonical linear form: sum of coefficient * variable plus a constant.
// Extraction fails on if-then-else, which is the only source of
// non-linearity the term language admits.

#include "reacsynth/expr.hpp"

#include <map>
#include <string>

namespace reacsynth {

struct LinearTerm {
    std::map<std::string, Rational> coeffs; // var name -> non-zero coefficient
    Rational constant = 0;
    Sort sort = Sort::Real; // sort of the originating term

    bool is_constant() const { return coeffs.empty(); }

    Rational coeff(const std::string& name) const {
        auto it = coeffs.find(name);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    void add(const std::string& name, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(name, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    LinearTerm& operator+=(const LinearTerm& o) {
        for (const auto& [n, c] : o.coeffs) add(n, c);
        constant += o.constant;
        return *this;
    }

    LinearTerm& scale(const Rational& q) {
        if (q == 0) {
            coeffs.clear();
            constant = 0;
            return *this;
        }
        for (auto& [n, c] : coeffs) c *= q;
        constant *= q;
        return *this;
    }

    LinearTerm negated() const {
        LinearTerm r = *this;
        r.scale(-1);
        return r;
    }

    // lcm of coefficient and constant denominators
    BigInt denominator_lcm() const {
        BigInt l = den(constant);
        for (const auto& [n, c] : coeffs) l = big_lcm(l, den(c));
        return l;
    }
};

namespace detail {
inline void linearize_into(const Term& t, const Rational& mul, LinearTerm& out,
                           std::map<std::string, Var>* vars) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, TermConst>) {
                out.constant += mul * n.value;
            } else if constexpr (std::is_same_v<T, TermVar>) {
                out.add(n.var.name, mul);
                if (vars) vars->emplace(n.var.name, n.var);
            } else if constexpr (std::is_same_v<T, TermNeg>) {
                linearize_into(n.arg, -mul, out, vars);
            } else if constexpr (std::is_same_v<T, TermSum>) {
                for (const auto& a : n.args) linearize_into(a, mul, out, vars);
            } else if constexpr (std::is_same_v<T, TermScale>) {
                linearize_into(n.arg, mul * n.factor, out, vars);
            } else {
                throw NonLinearError("if-then-else inside a linear context");
            }
        },
        t->node);
}
} // namespace detail

inline LinearTerm linearize(const Term& t, std::map<std::string, Var>* vars = nullptr) {
    LinearTerm out;
    out.sort = t->sort;
    detail::linearize_into(t, Rational(1), out, vars);
    return out;
}

// Rebuilds a term from linear form; variable sorts come from `vars`.
inline Term to_term(const LinearTerm& lt, const std::map<std::string, Var>& vars) {
    std::vector<Term> parts;
    for (const auto& [name, c] : lt.coeffs) {
        auto it = vars.find(name);
        if (it == vars.end()) throw UnboundVariable(name);
        Term v = mk_var(it->second);
        parts.push_back(c == 1 ? v : mk_scale(c, std::move(v)));
    }
    if (lt.constant != 0 || parts.empty())
        parts.push_back(mk_const(lt.constant, lt.sort));
    return mk_sum(std::move(parts));
}

} // namespace reacsynth
