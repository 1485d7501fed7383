#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <finlogic/formula.hpp>

#include <functional>
#include <random>

using namespace finlogic;

namespace {
    auto random_formula(std::mt19937 & gen, int d, int vars, bool modal) -> Formula
    {
        if (d == 0 || gen() % 5 == 0)
            return gen() % 7 == 0 ? bot() : var(static_cast<int>(gen() % vars));
        switch (gen() % (modal ? 6 : 5)) {
        case 0: return conj(random_formula(gen, d - 1, vars, modal), random_formula(gen, d - 1, vars, modal));
        case 1: return disj(random_formula(gen, d - 1, vars, modal), random_formula(gen, d - 1, vars, modal));
        case 2: return imp(random_formula(gen, d - 1, vars, modal), random_formula(gen, d - 1, vars, modal));
        case 3: return neg(random_formula(gen, d - 1, vars, modal));
        case 4: return imp(random_formula(gen, d - 1, vars, modal), bot());
        default: return box(random_formula(gen, d - 1, vars, modal));
        }
    }
}

TEST_CASE("parse")
{
    auto f = parse("p0 -> (p1 | p2)");
    CHECK(f->op == Op::imp);
    CHECK(f->rhs->op == Op::disj);

    auto kc = parse("~p | ~~p");
    CHECK(equal(kc, disj(neg(var(0)), neg(neg(var(0))))));

    CHECK(equal(parse("[](p -> []p)"), box(imp(var(0), box(var(0))))));
    CHECK(equal(parse("p -> q -> r"), imp(var(0), imp(var(1), var(2)))));
    CHECK(equal(parse("p & q | r"), disj(conj(var(0), var(1)), var(2))));
    CHECK(equal(parse("~p & q"), conj(neg(var(0)), var(1))));
    CHECK(equal(parse("p → q ∨ ¬r ∧ □⊥"), imp(var(0), disj(var(1), conj(neg(var(2)), box(bot()))))));
    CHECK(equal(parse("p12"), var(12)));
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(parse("p0 ->"), SyntaxError);
    CHECK_THROWS_AS(parse("(p0"), SyntaxError);
    CHECK_THROWS_AS(parse("p0 p1"), SyntaxError);
    CHECK_THROWS_AS(parse("x"), SyntaxError);
    CHECK_THROWS_AS(parse("p64"), SyntaxError);
    CHECK_THROWS_AS(parse("p0 # p1"), SyntaxError);
    try {
        parse("p0 & )");
        FAIL("expected a syntax error");
    }
    catch (const SyntaxError & e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
}

TEST_CASE("printing")
{
    CHECK(to_string(parse("p0 -> (p1 | p2)")) == "p0 -> p1 | p2");
    CHECK(to_string(parse("(p -> q) -> r")) == "(p0 -> p1) -> p2");
    CHECK(to_string(parse("~p | ~~p")) == "~p0 | ~~p0");
    CHECK(to_string(parse("p & (q & r)")) == "p0 & (p1 & p2)");
    CHECK(to_string(parse("~(p | q)")) == "~(p0 | p1)");
    CHECK(to_string(grz_axiom()) == "[]([](p0 -> []p0) -> p0) -> []p0");
}

TEST_CASE("print then parse is the identity")
{
    std::mt19937 gen(7);
    for (int i = 0; i < 2000; ++i) {
        auto f = random_formula(gen, 6, 3, i % 2 == 0);
        auto text = to_string(f);
        CHECK_MESSAGE(equal(parse(text), f), text);
        CHECK(to_string(parse(text)) == text);
    }
}

TEST_CASE("bw")
{
    CHECK(equal(bw(1), parse("(p0 -> p1) | (p1 -> p0)")));
    CHECK(equal(bw(0), neg(var(0))));
    auto f = bw(2);
    CHECK(count_op(f, Op::disj) == 2 + 3);
    CHECK(count_op(f, Op::imp) == 3);
    CHECK(equal(f, parse("(p0 -> p1 | p2) | (p1 -> p0 | p2) | (p2 -> p0 | p1)")));
    for (int n = 0; n <= 6; ++n)
        CHECK(variables(bw(n)) == (std::uint64_t{1} << (n + 1)) - 1);
    CHECK_THROWS_AS(bw(-1), ParameterOutOfRange);
}

TEST_CASE("goedel translation")
{
    CHECK(equal(godel_translate(var(0)), box(var(0))));
    CHECK(equal(godel_translate(bot()), bot()));
    CHECK(equal(godel_translate(parse("p -> q")), parse("[]([]p -> []q)")));
    CHECK_THROWS_AS(godel_translate(parse("[]p")), NotIntuitionistic);

    std::mt19937 gen(11);
    for (int i = 0; i < 500; ++i) {
        auto f = random_formula(gen, 5, 3, false);
        auto t = godel_translate(f);
        CHECK(is_intuitionistic(f));
        CHECK_FALSE((is_intuitionistic(t) && count_op(f, Op::var) + count_op(f, Op::imp) > 0));
        CHECK(node_count(t) == node_count(f) + count_op(f, Op::var) + count_op(f, Op::imp));
        CHECK(count_op(t, Op::box) == count_op(f, Op::var) + count_op(f, Op::imp));
    }
}

TEST_CASE("grz axiom shape")
{
    auto g = grz_axiom();
    CHECK(g->op == Op::imp);
    CHECK(count_op(g->lhs, Op::box) == 3);
    CHECK(count_op(g->rhs, Op::box) == 1);
    CHECK(variables(g) == 1);
}

TEST_CASE("queries")
{
    auto f = parse("(p0 & p3) -> ~p1");
    CHECK(variables(f) == 0b1011);
    CHECK(depth(f) == 2);
    CHECK(node_count(f) == 7);
    CHECK(is_intuitionistic(f));
    CHECK_FALSE(is_intuitionistic(parse("[]p")));
}
