#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <finlogic/catalog.hpp>
#include <finlogic/heyting.hpp>
#include <finlogic/morphism.hpp>

using namespace finlogic;

namespace {
    auto three_chain_algebra()
    {
        return HeytingAlgebra::from_order({"0", "m", "1"}, {0b111, 0b110, 0b100});
    }

    auto element_of(const UpsetAlgebra & u, Mask m) -> int
    {
        auto it = std::find(u.carrier.begin(), u.carrier.end(), m);
        REQUIRE(it != u.carrier.end());
        return static_cast<int>(it - u.carrier.begin());
    }
}

TEST_CASE("construction validates the tables")
{
    auto b = boolean2();
    CHECK(b.size() == 2);
    CHECK(b.imp(b.top(), b.bottom()) == b.bottom());

    // pentagon is not distributive, no residuation
    CHECK_THROWS_AS(HeytingAlgebra::from_order({"0", "a", "b", "c", "1"}, {0b11111, 0b10110, 0b10100, 0b11000, 0b10000}),
        InvalidAlgebra);
    // no meet for a, b
    CHECK_THROWS_AS(HeytingAlgebra::from_order({"a", "b"}, {0b01, 0b10}), InvalidAlgebra);

    auto bad_imp = std::vector<std::uint8_t>{1, 1, 1, 1};
    CHECK_THROWS_AS(HeytingAlgebra({"0", "1"}, {0b11, 0b10}, {0, 0, 0, 1}, {0, 1, 1, 1}, bad_imp), InvalidAlgebra);
}

TEST_CASE("upset algebras")
{
    auto up1 = upset_algebra(chain(1));
    CHECK(up1.size() == 2);
    CHECK(algebras_isomorphic(up1, boolean2()));

    auto up2 = upset_algebra(chain(2));
    CHECK(up2.size() == 3);
    CHECK(algebras_isomorphic(up2, three_chain_algebra()));

    auto u = upset_algebra_with_carrier(antichain(2));
    int a = element_of(u, 0b01), b = element_of(u, 0b10), empty = element_of(u, 0);
    CHECK(u.algebra.imp(a, empty) == b);
}

TEST_CASE("implication agrees with the pointwise definition")
{
    for (int n = 0; n <= 4; ++n)
        for (auto & p : enumerate_posets(n)) {
            auto u = upset_algebra_with_carrier(p);
            for (int i = 0; i < u.algebra.size(); ++i)
                for (int j = 0; j < u.algebra.size(); ++j) {
                    Mask want = 0;
                    for (int x = 0; x < p.size(); ++x)
                        if ((p.up(x) & u.carrier[i] & ~u.carrier[j]) == 0)
                            want |= bit(x);
                    CHECK(u.carrier[u.algebra.imp(i, j)] == want);
                    CHECK(u.carrier[u.algebra.meet(i, j)] == (u.carrier[i] & u.carrier[j]));
                    CHECK(u.carrier[u.algebra.join(i, j)] == (u.carrier[i] | u.carrier[j]));
                }
        }
}

TEST_CASE("is_si")
{
    CHECK(is_si(upset_algebra(catalog_get("F(2)"))));
    CHECK_FALSE(is_si(upset_algebra(antichain(2))));
    CHECK(is_si(boolean2()));
    for (int n = 0; n <= 6; ++n)
        for (auto & p : enumerate_posets(n))
            CHECK(is_si(upset_algebra(p)) == root(p).has_value());
}

TEST_CASE("algebra sum")
{
    auto b = boolean2();
    auto bb = algebra_sum(b, b);
    CHECK(bb.size() == 3);
    CHECK(algebras_isomorphic(bb, three_chain_algebra()));
    CHECK(algebras_isomorphic(bb, upset_algebra(chain(2))));
    CHECK(algebra_sum(bb, b).size() == 4);

    auto one = chain(1);
    CHECK(algebras_isomorphic(upset_algebra(sum(one, one)), algebra_sum(upset_algebra(one), upset_algebra(one))));

    // upsets inside the upper summand form the lower part of the algebra
    for (int n = 1; n <= 4; ++n)
        for (auto & p : enumerate_rooted(n))
            for (int m = 1; m <= 4; ++m)
                for (auto & q : enumerate_rooted(m))
                    CHECK(algebras_isomorphic(upset_algebra(sum(p, q)), algebra_sum(upset_algebra(p), upset_algebra(q))));
}

TEST_CASE("dual poset")
{
    CHECK(are_isomorphic(dual_poset(upset_algebra(chain(3))), chain(3)));
    CHECK(are_isomorphic(dual_poset(boolean2()), chain(1)));
    CHECK(are_isomorphic(dual_poset(upset_algebra(catalog_get("F(2)"))), catalog_get("F(2)")));
    for (int n = 0; n <= 6; ++n)
        for (auto & p : enumerate_posets(n))
            CHECK(oracle::isomorphic(dual_poset(upset_algebra(p)), p));
}

TEST_CASE("subalgebra and quotient counts")
{
    CHECK(count_subalgebras(upset_algebra(chain(2))) == 2);
    CHECK(count_subalgebras(upset_algebra(antichain(2))) == 2);
    CHECK(count_subalgebras(boolean2()) == 1);
    CHECK(count_quotients(upset_algebra(chain(2))) == 3);
    CHECK(count_quotients(upset_algebra(catalog_get("F(2)"))) == 5);
    CHECK(count_quotients(boolean2()) == 2);

    for (int n = 0; n <= 4; ++n)
        for (auto & p : enumerate_posets(n)) {
            auto a = upset_algebra(p);
            CHECK(count_subalgebras(a) == static_cast<std::uint64_t>(oracle::subalgebras(a)));
            CHECK(count_quotients(a) == static_cast<std::uint64_t>(oracle::filters(a)));
            CHECK(count_quotients(a) == upsets(p).size());
            CHECK(count_subalgebras(a) == epartitions(p).size());
        }
}

TEST_CASE("isomorphism of upset algebras tracks the posets")
{
    std::vector<Poset> all;
    for (int n = 1; n <= 4; ++n)
        for (auto & p : enumerate_posets(n))
            all.push_back(p);
    for (auto & p : all)
        for (auto & q : all)
            CHECK(algebras_isomorphic(upset_algebra(p), upset_algebra(q)) == oracle::isomorphic(p, q));
    CHECK(algebras_isomorphic(algebra_sum(boolean2(), boolean2()), upset_algebra(chain(2))));
    CHECK_FALSE(algebras_isomorphic(upset_algebra(catalog_get("F(2)")), upset_algebra(chain(3))));
}
