#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <finlogic/axiomatics.hpp>
#include <finlogic/catalog.hpp>
#include <finlogic/semantics.hpp>

using namespace finlogic;

namespace {
    auto rooted_upto(int max) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int n = 1; n <= max; ++n)
            for (auto & p : enumerate_rooted(n))
                out.push_back(p);
        return out;
    }

    auto all_upto(int max) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int n = 0; n <= max; ++n)
            for (auto & p : enumerate_posets(n))
                out.push_back(p);
        return out;
    }

    auto family(const std::string & name, int count) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int i = 1; i <= count; ++i)
            out.push_back(catalog_get(name + "(" + std::to_string(i) + ")"));
        return out;
    }
}

TEST_CASE("validates_jankov")
{
    for (auto & x : rooted_upto(4))
        CHECK_FALSE(validates_jankov(x, x));
    CHECK(validates_jankov(chain(4), catalog_get("F(2)")));
    CHECK(validates_jankov(catalog_get("F(2)"), chain(3)));
    CHECK_THROWS_AS(validates_jankov(chain(2), antichain(2)), ParameterOutOfRange);
}

TEST_CASE("jankov formula of a point")
{
    auto j = jankov_syntactic(chain(1));
    CHECK(is_valid(Poset{}, j));
    for (auto & h : all_upto(4))
        if (h.size() > 0)
            CHECK_FALSE(is_valid(h, j));
}

TEST_CASE("jankov formula is refuted on its own frame")
{
    for (auto & x : rooted_upto(5))
        CHECK_FALSE(is_valid(x, jankov_syntactic(x)));
    for (auto key : {"K(1)", "G(1)", "P(2)"}) {
        auto x = catalog_get(key);
        CHECK_FALSE(is_valid(x, jankov_syntactic(x)));
    }
}

TEST_CASE("jankov formula uses one variable per point")
{
    for (auto & x : rooted_upto(5)) {
        auto f = jankov_syntactic(x);
        CHECK(variables(f) == full_mask(x.size()));
        CHECK(is_intuitionistic(f));
    }
}

TEST_CASE("syntactic and semantic jankov agree")
{
    // the brute-force upset oracle keeps this independent of the search
    for (auto & x : rooted_upto(3)) {
        auto f = jankov_syntactic(x);
        for (auto & h : all_upto(4)) {
            bool valid = is_valid(h, f);
            CHECK(valid == validates_jankov(h, x));
            CHECK(valid == ! oracle::image_of_upset(x, h));
        }
    }
    for (auto & x : rooted_upto(4)) {
        auto f = jankov_syntactic(x);
        for (auto & h : all_upto(5))
            CHECK(is_valid(h, f) == validates_jankov(h, x));
    }
}

TEST_CASE("validates_subframe")
{
    auto p2 = catalog_get("P(2)");
    for (auto & k : family("K", 7))
        CHECK_FALSE(validates_subframe(k, p2));
    auto p3 = catalog_get("P(3)");
    for (auto & g : family("G", 6))
        CHECK_FALSE(validates_subframe(g, p3));
    CHECK(validates_subframe(chain(3), catalog_get("F(2)")));
}

TEST_CASE("G posets validate the subframe formula of P2")
{
    auto p2 = catalog_get("P(2)");
    for (auto & g : family("G", 6))
        CHECK(validates_subframe(g, p2));
}

TEST_CASE("antitonicity")
{
    std::vector<Poset> targets = rooted_upto(3);
    for (auto key : {"P(1)", "P(2)", "P(3)", "K(1)", "G(1)"})
        targets.push_back(catalog_get(key));
    std::vector<Poset> hosts = rooted_upto(5);
    for (auto key : {"K(2)", "K(3)", "K(5)", "G(2)", "G(5)", "Z_G(1)"})
        hosts.push_back(catalog_get(key));
    for (auto & h : hosts)
        for (auto & x : targets) {
            bool jv = validates_jankov(h, x);
            bool sv = validates_subframe(h, x);
            for (auto u : upsets(h))
                if (jv)
                    CHECK(validates_jankov(h.restrict(u), x));
            if (sv)
                for (Mask s = 0; s <= h.all(); s += 1 + s / 7)
                    CHECK(validates_subframe(h.restrict(s), x));
        }
}

TEST_CASE("decompose_kg examples")
{
    auto three = decompose_kg(chain(3));
    REQUIRE(three);
    REQUIRE(three->size() == 2);
    CHECK((*three)[0].size() == 1);
    CHECK((*three)[1].size() == 1);

    auto l4 = decompose_kg(ladder_upset(4));
    REQUIRE(l4);
    REQUIRE(l4->size() == 1);
    CHECK((*l4)[0].elements() == std::vector<std::string>{"w0", "w1", "w2"});

    CHECK_FALSE(decompose_kg(catalog_get("F(3)")));
    auto point = decompose_kg(chain(1));
    REQUIRE(point);
    CHECK(point->empty());
    CHECK_FALSE(decompose_kg(antichain(2)));
}

TEST_CASE("decompose_kg factors rebuild the poset")
{
    for (auto & x : rooted_upto(7)) {
        auto d = decompose_kg(x);
        if (! d)
            continue;
        auto factors = *d;
        factors.push_back(chain(1));
        CHECK(are_isomorphic(sum(factors), x));
        for (auto & f : *d) {
            bool ladder = false;
            for (int k = 0; k <= 10 && ! ladder; ++k) {
                auto up = ladder_upset(k);
                ladder = are_isomorphic(f, up);
                // initial segments w0..wk are upsets too
                auto seg = ladder_segment(k + 1);
                ladder = ladder || are_isomorphic(f, seg);
            }
            CHECK(ladder);
        }
    }
}

TEST_CASE("KG equivalence")
{
    auto ps = family("P", 3);
    for (auto & x : rooted_upto(7)) {
        bool all = true;
        for (auto & p : ps)
            all = all && validates_subframe(x, p);
        CHECK(decompose_kg(x).has_value() == all);
    }
}

TEST_CASE("sum components")
{
    auto parts = sum_components(sum({chain(1), antichain(2), chain(1)}));
    CHECK(parts == std::vector<Mask>{0b0001, 0b0110, 0b1000});
    CHECK(sum_components(catalog_get("K(1)")).size() == 2);
    CHECK(sum_components(Poset{}).empty());
}

TEST_CASE("axiom kinds")
{
    auto j = jankov(catalog_get("F(2)"));
    auto s = subframe(catalog_get("F(2)"));
    CHECK(validates(chain(3), j));
    CHECK(validates(chain(3), s));
    CHECK_FALSE(validates(catalog_get("F(3)"), s));
    CHECK_THROWS_AS(jankov(antichain(2)), ParameterOutOfRange);
}
