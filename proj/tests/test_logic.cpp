#include "reacsynth/eval.hpp"
#include "reacsynth/expr.hpp"
#include "reacsynth/nnf.hpp"
#include "reacsynth/simplify.hpp"
#include "reacsynth/subst.hpp"

#include "support/gen.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace reacsynth;

namespace {
const Var rx{"x", Sort::Real, VarKind::Local};
const Var ry{"y", Sort::Real, VarKind::Local};
const Var rb1{"b1", Sort::Real, VarKind::Local};
const Var ba{"a", Sort::Bool, VarKind::Local};
const Var bb{"b", Sort::Bool, VarKind::Local};
} // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(num(a + b) == 1);
    CHECK(den(a + b) == 2);
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK(parse_rational("7/21") == Rational(1, 3));
    CHECK(rat_floor(Rational(-1, 2)) == -1);
    CHECK(rat_ceil(Rational(-1, 2)) == 0);
    CHECK(mod_euclid(BigInt(-7), BigInt(3)) == 2);
}

TEST_CASE("eval on non-strict boundary") {
    Formula f = mk_atom(Relop::Le, mk_var(rx), mk_real(5));
    Model m;
    m.set(rx, Rational(5));
    CHECK(eval(f, m));
}

TEST_CASE("eval initial bucket equation") {
    // b1 = 0 and b1 <= 2 at b1 = 0
    Formula f = mk_and(mk_atom(Relop::Eq, mk_var(rb1), mk_real(0)),
                       mk_atom(Relop::Le, mk_var(rb1), mk_real(2)));
    Model m;
    m.set(rb1, Rational(0));
    CHECK(eval(f, m));
}

TEST_CASE("eval exact fraction") {
    // 2x + 3y < 1 at x = 1/3, y = 0
    Formula f = mk_atom(Relop::Lt,
                        mk_add(mk_scale(2, mk_var(rx)), mk_scale(3, mk_var(ry))), mk_real(1));
    Model m;
    m.set(rx, Rational(1, 3));
    m.set(ry, Rational(0));
    CHECK(eval(f, m));
    m.set(rx, Rational(1, 2));
    CHECK(!eval(f, m));
}

TEST_CASE("eval rejects unbound and ill-sorted input") {
    Formula f = mk_atom(Relop::Le, mk_var(rx), mk_real(0));
    Model empty;
    CHECK_THROWS_AS(eval(f, empty), UnboundVariable);
    CHECK_THROWS_AS(mk_atom(Relop::Le, mk_var(rx), mk_int(0)), SortMismatch);
    CHECK_THROWS_AS(mk_var(ba), SortMismatch);
}

TEST_CASE("substitute is capture-free and sort-checked") {
    Formula f = mk_atom(Relop::Le, mk_var(rx), mk_var(ry));
    Substitution s;
    s.map_term(ry, mk_add(mk_var(rx), mk_real(1)));
    Formula g = substitute(f, s);
    // x <= x + 1: valid everywhere
    test::Gen gen(1);
    for (int i = 0; i < 50; ++i) CHECK(eval(g, gen.model({rx})));

    Substitution bad;
    CHECK_THROWS_AS(bad.map_term(ry, mk_int(1)), SortMismatch);
}

TEST_CASE("substitution commutes with evaluation") {
    test::Gen gen(7);
    auto scope = test::mixed_scope();
    for (int i = 0; i < 300; ++i) {
        Formula f = gen.formula(scope, 3);
        Substitution s;
        s.map_term(Var{"x", Sort::Real, VarKind::Local},
                   gen.linear_term(gen.filter_sort(scope, Sort::Real), Sort::Real));
        s.map_formula(Var{"p", Sort::Bool, VarKind::Local},
                      gen.formula(scope, 1));
        Formula g = substitute(f, s);
        Model m = gen.model(scope);
        // evaluate the images under m, then f under the patched model
        Model patched = m;
        patched.set(Var{"x", Sort::Real, VarKind::Local},
                    eval_term(*s.term_for("x"), m));
        patched.set(Var{"p", Sort::Bool, VarKind::Local}, eval(*s.formula_for("p"), m));
        CHECK(eval(g, m) == eval(f, patched));
    }
}

TEST_CASE("nnf pushes negation to atoms") {
    Formula f = mk_not(mk_and(mk_atom(Relop::Lt, mk_var(rx), mk_real(1)),
                              mk_atom(Relop::Eq, mk_var(ry), mk_real(0))));
    Formula g = nnf(f);
    auto ds = disjuncts(g);
    REQUIRE(ds.size() == 2);
    // first disjunct: x >= 1
    auto* a0 = std::get_if<FAtom>(&ds[0]->node);
    REQUIRE(a0);
    CHECK(a0->op == Relop::Ge);
    // second disjunct: y != 0 split into y < 0 or y > 0
    auto inner = disjuncts(ds[1]);
    REQUIRE(inner.size() == 2);
    CHECK(std::get<FAtom>(inner[0]->node).op == Relop::Lt);
    CHECK(std::get<FAtom>(inner[1]->node).op == Relop::Gt);
}

TEST_CASE("nnf of negated implication") {
    Formula f = mk_not(mk_implies(mk_boolvar(ba), mk_boolvar(bb)));
    Formula g = nnf(f);
    auto cs = conjuncts(g);
    REQUIRE(cs.size() == 2);
    CHECK(std::holds_alternative<FBoolVar>(cs[0]->node));
    CHECK(std::holds_alternative<FNot>(cs[1]->node));
}

TEST_CASE("nnf output contains only and/or over literals") {
    test::Gen gen(11);
    auto scope = test::mixed_scope();
    std::function<bool(const Formula&)> check_shape = [&](const Formula& f) -> bool {
        if (is_literal(f)) {
            if (auto* a = std::get_if<FAtom>(&f->node))
                if (a->op == Relop::Ne) return false;
            return true;
        }
        if (auto* a = std::get_if<FAnd>(&f->node)) {
            for (const auto& x : a->args)
                if (!check_shape(x)) return false;
            return true;
        }
        if (auto* o = std::get_if<FOr>(&f->node)) {
            for (const auto& x : o->args)
                if (!check_shape(x)) return false;
            return true;
        }
        return false;
    };
    for (int i = 0; i < 200; ++i) CHECK(check_shape(nnf(gen.formula(scope, 4))));
}

TEST_CASE("nnf preserves semantics on random formulas") {
    test::Gen gen(13);
    auto scope = test::mixed_scope();
    for (int i = 0; i < 1000; ++i) {
        Formula f = gen.formula(scope, 4);
        Formula g = nnf(f);
        Model m = gen.model(scope);
        CHECK(eval(g, m) == eval(f, m));
    }
}

TEST_CASE("simplify folds trivia") {
    Formula f = mk_and(mk_atom(Relop::Le, mk_var(rx), mk_real(5)), mk_true());
    Formula g = simplify(f);
    auto* a = std::get_if<FAtom>(&g->node);
    REQUIRE(a);
    CHECK(a->op == Relop::Le);

    CHECK(is_true(simplify(mk_atom(Relop::Lt, mk_real(1), mk_real(2)))));
    CHECK(is_false(simplify(mk_atom(Relop::Lt, mk_var(rx), mk_var(rx)))));
    // complementary literals collapse a conjunction
    Formula h = mk_and(mk_atom(Relop::Lt, mk_var(rx), mk_real(1)),
                       mk_atom(Relop::Ge, mk_var(rx), mk_real(1)));
    CHECK(is_false(simplify(h)));
}

TEST_CASE("simplify tightens integer atoms") {
    Var n{"n", Sort::Int, VarKind::Local};
    // 2n < 3  ==>  n <= 1
    Formula f = mk_atom(Relop::Lt, mk_scale(2, mk_var(n)), mk_int(3));
    Formula g = simplify(f);
    auto* a = std::get_if<FAtom>(&g->node);
    REQUIRE(a);
    CHECK(a->op == Relop::Le);
    Model m;
    m.set(n, Rational(1));
    CHECK(eval(g, m));
    m.set(n, Rational(2));
    CHECK(!eval(g, m));
    // 2n = 5 is unsatisfiable over Int
    CHECK(is_false(simplify(mk_atom(Relop::Eq, mk_scale(2, mk_var(n)), mk_int(5)))));
}

TEST_CASE("simplify is equivalence-preserving and idempotent") {
    test::Gen gen(17);
    auto scope = test::mixed_scope();
    for (int i = 0; i < 1000; ++i) {
        Formula f = gen.formula(scope, 4);
        Formula g = simplify(f);
        Model m = gen.model(scope);
        CHECK(eval(g, m) == eval(f, m));
        if (i % 10 == 0) CHECK(equal(simplify(g), g));
    }
}

TEST_CASE("divisibility atoms evaluate and simplify") {
    Var n{"n", Sort::Int, VarKind::Local};
    Formula f = mk_divides(3, mk_add(mk_var(n), mk_int(1)));
    Model m;
    m.set(n, Rational(2));
    CHECK(eval(f, m));
    m.set(n, Rational(3));
    CHECK(!eval(f, m));
    CHECK(is_true(simplify(mk_divides(1, mk_var(n)))));
    test::Gen gen(23);
    for (int i = 0; i < 200; ++i) {
        Formula d = mk_divides(BigInt(gen.range(2, 6)),
                               gen.linear_term({n}, Sort::Int, 2));
        Formula s = simplify(d);
        Model rm = gen.model({n});
        CHECK(eval(s, rm) == eval(d, rm));
    }
}
