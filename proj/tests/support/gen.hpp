#pragma once

// Seeded random generators for property tests: linear terms, formulas,
// models, and ∀∃ queries. Deterministic for a fixed seed.

#include "reacsynth/expr.hpp"
#include "reacsynth/model.hpp"

#include <random>
#include <vector>

namespace reacsynth::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int range(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(rng_) < p; }

    Rational small_rational(bool integral = false) {
        int n = range(-8, 8);
        int d = integral ? 1 : range(1, 4);
        return Rational(n, d);
    }

    const Var& pick(const std::vector<Var>& vars) { return vars[range(0, int(vars.size()) - 1)]; }

    std::vector<Var> filter_sort(const std::vector<Var>& vars, Sort s) {
        std::vector<Var> out;
        for (const auto& v : vars)
            if (v.sort == s) out.push_back(v);
        return out;
    }

    // linear term over vars of one arithmetic sort
    Term linear_term(const std::vector<Var>& vars, Sort sort, int max_vars = 3) {
        std::vector<Term> parts;
        int n = range(0, max_vars);
        for (int i = 0; i < n && !vars.empty(); ++i) {
            Rational c = small_rational(sort == Sort::Int);
            if (c == 0) c = 1;
            parts.push_back(mk_scale(c, mk_var(pick(vars))));
        }
        parts.push_back(mk_const(small_rational(sort == Sort::Int), sort));
        return mk_sum(std::move(parts));
    }

    Formula atom(const std::vector<Var>& scope) {
        std::vector<Var> ints = filter_sort(scope, Sort::Int);
        std::vector<Var> reals = filter_sort(scope, Sort::Real);
        Sort sort = (!ints.empty() && (reals.empty() || chance(0.5))) ? Sort::Int : Sort::Real;
        const auto& pool = sort == Sort::Int ? ints : reals;
        if (pool.empty()) return mk_bool(chance(0.5));
        static const Relop ops[] = {Relop::Lt, Relop::Le, Relop::Eq,
                                    Relop::Ne, Relop::Ge, Relop::Gt};
        return mk_atom(ops[range(0, 5)], linear_term(pool, sort), linear_term(pool, sort));
    }

    Formula formula(const std::vector<Var>& scope, int depth) {
        std::vector<Var> bools = filter_sort(scope, Sort::Bool);
        if (depth <= 0) {
            if (!bools.empty() && chance(0.3)) return mk_boolvar(pick(bools));
            return atom(scope);
        }
        switch (range(0, 6)) {
            case 0: return mk_not(formula(scope, depth - 1));
            case 1:
                return mk_and(formula(scope, depth - 1), formula(scope, depth - 1));
            case 2:
                return mk_or(formula(scope, depth - 1), formula(scope, depth - 1));
            case 3:
                return mk_implies(formula(scope, depth - 1), formula(scope, depth - 1));
            case 4:
                return mk_iff(formula(scope, depth - 1), formula(scope, depth - 1));
            default: return formula(scope, 0);
        }
    }

    Model model(const std::vector<Var>& scope) {
        Model m;
        for (const auto& v : scope) {
            if (v.sort == Sort::Bool)
                m.set(v, chance(0.5));
            else
                m.set(v, small_rational(v.sort == Sort::Int));
        }
        return m;
    }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Var> mixed_scope() {
    return {
        {"x", Sort::Real, VarKind::Local}, {"y", Sort::Real, VarKind::Local},
        {"z", Sort::Real, VarKind::Local}, {"m", Sort::Int, VarKind::Local},
        {"n", Sort::Int, VarKind::Local},  {"p", Sort::Bool, VarKind::Local},
        {"q", Sort::Bool, VarKind::Local},
    };
}

} // namespace reacsynth::test
