#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <finlogic/axiomatics.hpp>
#include <finlogic/catalog.hpp>
#include <finlogic/morphism.hpp>

#include <map>

using namespace finlogic;

namespace {
    // sorted (down-degree, up-degree) pairs over the cover graph
    auto degrees(const Poset & p) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> d(p.size(), {0, 0});
        for (auto [a, b] : p.covers()) {
            ++d[a].second;
            ++d[b].first;
        }
        std::sort(d.begin(), d.end());
        return d;
    }

    auto cover_count(const Poset & p) { return p.covers().size(); }
}

TEST_CASE("keys")
{
    auto k = CatalogKey::parse("Gn_trunc(2, 12)");
    CHECK(k.family == "Gn_trunc");
    CHECK(k.params == std::vector<int>{2, 12});
    CHECK(k.to_string() == "Gn_trunc(2,12)");
    CHECK(CatalogKey::parse("K3").to_string() == "K(3)");
    CHECK(CatalogKey::parse("BW2_5").to_string() == "BW2(5)");
    CHECK(CatalogKey::parse("Z_K(2)").to_string() == "Z_K(2)");

    CHECK_THROWS_AS(catalog_get("Q(1)"), UnknownKey);
    CHECK_THROWS_AS(catalog_get("K(1,2)"), UnknownKey);
    CHECK_THROWS_AS(catalog_get("K(x)"), UnknownKey);
    CHECK_THROWS_AS(catalog_get("K(8)"), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog_get("P(0)"), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog_get("Xm_trunc(1,2,3)"), ParameterOutOfRange);
    CHECK_THROWS_AS(ladder_upset(limits().ladder_depth + 1), ParameterOutOfRange);
}

TEST_CASE("named posets")
{
    auto p2 = catalog_get("P(2)");
    CHECK(p2.size() == 5);
    CHECK(p2.leq(*p2.index_of("bot"), *p2.index_of("a")));
    CHECK(p2.less(*p2.index_of("c"), *p2.index_of("a")));
    CHECK(p2.less(*p2.index_of("d"), *p2.index_of("b")));
    CHECK_FALSE(p2.leq(*p2.index_of("c"), *p2.index_of("b")));

    auto f3 = catalog_get("F(3)");
    CHECK(f3.size() == 4);
    CHECK(popcount(f3.maximal()) == 3);
    CHECK(root(f3));

    auto y1 = catalog_get("Y(1)");
    CHECK(y1.size() == 13);
    auto d = *y1.index_of("d");
    CHECK(y1.maximal() == bit(d));
    for (auto e : {"bot", "r1", "r2", "r3", "p1", "q1", "e+", "e-", "f+", "f-", "g+", "g-", "d"})
        CHECK(y1.index_of(e));
}

TEST_CASE("transcription sizes and degrees")
{
    std::map<std::string, int> sizes = {
        {"P(1)", 4}, {"P(2)", 5}, {"P(3)", 5}, {"K(1)", 5}, {"K(2)", 6}, {"K(3)", 6}, {"K(4)", 7}, {"K(5)", 6},
        {"K(6)", 7}, {"K(7)", 7}, {"G(1)", 5}, {"G(2)", 6}, {"G(3)", 7}, {"G(4)", 6}, {"G(5)", 6}, {"G(6)", 7},
        {"BW1(1)", 3}, {"BW1(2)", 4}, {"Z_K(1)", 7}, {"Z_K(2)", 8}, {"Z_K(3)", 9}, {"Z_K(4)", 8}, {"Z_G(1)", 6},
        {"Z_G(2)", 7}, {"Z_G(3)", 7}};
    int bw2_sizes[] = {4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7};
    for (int i = 1; i <= 11; ++i)
        sizes["BW2(" + std::to_string(i) + ")"] = bw2_sizes[i - 1];
    for (auto & [key, n] : sizes) {
        auto p = catalog_get(key);
        CHECK_MESSAGE(p.size() == n, key);
        CHECK_MESSAGE(root(p).has_value(), key);
    }

    std::map<std::string, std::size_t> covers = {
        {"K(1)", 4}, {"K(2)", 6}, {"K(3)", 6}, {"K(4)", 8}, {"K(5)", 6}, {"K(6)", 8}, {"K(7)", 8},
        {"G(1)", 4}, {"G(2)", 6}, {"G(3)", 8}, {"G(4)", 6}, {"G(5)", 6}, {"G(6)", 8},
        {"Z_K(1)", 8}, {"Z_K(3)", 11}, {"Z_G(1)", 6}};
    for (auto & [key, n] : covers)
        CHECK_MESSAGE(cover_count(catalog_get(key)) == n, key);

    CHECK(degrees(catalog_get("K(1)")) == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}, {1, 0}, {1, 1}, {1, 1}});
    CHECK(degrees(catalog_get("BW2(8)")) == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}, {1, 0}, {1, 2}, {1, 2}, {2, 0}});
}

TEST_CASE("width two frames")
{
    for (int i = 1; i <= 11; ++i) {
        auto p = catalog_get("BW2(" + std::to_string(i) + ")");
        CHECK(width(p) == 3);
        // every proper principal upset already has width two
        for (int x = 0; x < p.size(); ++x)
            if (x != *root(p))
                CHECK(width(p.restrict(p.up(x))) <= 2);
    }
    CHECK(width(catalog_get("BW1(1)")) == 2);
    CHECK(width(catalog_get("BW1(2)")) == 2);
}

TEST_CASE("adding a top")
{
    auto top_over = [](const Poset & p) {
        std::vector<std::string> e = p.elements();
        std::vector<std::pair<std::string, std::string>> c;
        for (auto [a, b] : p.covers())
            c.emplace_back(p.element(a), p.element(b));
        e.push_back("T");
        for_each_bit(p.maximal(), [&](int m) { c.emplace_back(p.element(m), "T"); });
        return build_poset(e, c);
    };
    CHECK(are_isomorphic(catalog_get("K(3)"), top_over(catalog_get("K(1)"))));
    CHECK(are_isomorphic(catalog_get("K(4)"), top_over(catalog_get("K(2)"))));
    CHECK(are_isomorphic(catalog_get("G(3)"), top_over(catalog_get("G(2)"))));
    CHECK(are_isomorphic(catalog_get("G(4)"), top_over(catalog_get("G(1)"))));
    CHECK(are_isomorphic(catalog_get("Z_K(2)"), top_over(catalog_get("Z_K(1)"))));
    CHECK(are_isomorphic(catalog_get("Z_G(2)"), top_over(catalog_get("Z_G(1)"))));
}

TEST_CASE("ladder")
{
    CHECK(ladder_upset(0).size() == 1);
    CHECK(are_isomorphic(ladder_upset(2), chain(2)));
    auto l4 = ladder_upset(4);
    CHECK(l4.size() == 4);
    CHECK(l4.elements() == std::vector<std::string>{"w0", "w1", "w2", "w4"});
    auto w4 = *l4.index_of("w4");
    CHECK(root(l4) == w4);
    CHECK(popcount(l4.maximal()) == 2);
    for (int k = 3; k <= 20; ++k) {
        CHECK(ladder_upset(k).size() == k);
        CHECK(width(ladder_upset(k)) == 2);
    }
    // w_k covers: w_(k-2) and w_(k-3)
    auto seg = ladder_segment(8);
    CHECK(seg.covers().size() == 1 + 2 * 5);
}

TEST_CASE("simple spaces")
{
    CHECK(simple_space({1}).size() == 1);
    auto two = simple_space({2});
    CHECK(two.size() == 2);
    CHECK(width(two) == 1);
    CHECK(width(sum(two, chain(1))) == 2);
    auto diamond = simple_space({1, 2, 1});
    CHECK(diamond.size() == 4);
    CHECK(upsets(diamond).size() == 6);
    CHECK(root(diamond));
    CHECK(popcount(diamond.maximal()) == 1);
    CHECK(simple_space({}).size() == 0);
    CHECK_THROWS_AS(simple_space({3}), ParameterOutOfRange);
}

TEST_CASE("rn members")
{
    auto base = rn_member({RnShape::Kind::ladder, {}, 0, 0, false});
    CHECK(are_isomorphic(base, chain(2)));
    auto t = rn_member({RnShape::Kind::tail, {2}, 0, 1, false});
    CHECK(t.size() == 1 + 2 + 1 + 4 + 1);
    CHECK(are_isomorphic(t, sum({chain(1), antichain(2), chain(1), ladder_upset(4), chain(1)})));
    CHECK_THROWS_AS(rn_member({RnShape::Kind::tail, {1}, 0, 1, true}), ParameterOutOfRange);

    auto ps = std::vector<Poset>{catalog_get("P(1)"), catalog_get("P(2)"), catalog_get("P(3)")};
    for (int n = 1; n <= 3; ++n)
        for (auto & s : rn_family(n, 12)) {
            auto p = rn_member(s);
            CHECK(p.size() <= 12);
            CHECK(root(p).has_value());
            CHECK(decompose_kg(p).has_value());
            if (p.size() <= 9)
                for (auto & x : ps)
                    CHECK_MESSAGE(validates_subframe(p, x), s.to_string());
        }
}

TEST_CASE("Gn truncations")
{
    auto g = gn_trunc(2, 12);
    CHECK(g.size() == 1 + 12 + 1 + 4 + 2);
    CHECK(is_truncation(g));
    CHECK(root(g) == *g.index_of("a2"));
    CHECK(width(g) == 2);
    auto omega = *g.index_of("omega");
    for (int k = 0; k < 12; ++k)
        CHECK(g.less(omega, *g.index_of("w" + std::to_string(k))));
    CHECK(g.less(*g.index_of("l0"), omega));
    CHECK_FALSE(g.leq(*g.index_of("l1"), *g.index_of("l2")));
    auto head = build_poset({"top"}, {});
    CHECK(are_isomorphic(g, sum({head, sum(ladder_segment(12), chain(1)), ladder_upset(4), chain(2)})));
}

TEST_CASE("Xm truncations")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 3; n <= 5; ++n)
            for (int N = 1; N <= 6; ++N) {
                auto x = xm_trunc(m, n, N);
                CHECK(x.size() == 3 * N + 1 + (n - 2) + 1 + 6 + 2 * m + 4);
                CHECK(width(x) == n + 1);
                CHECK(root(x) == *x.index_of("bot"));
            }
    for (int m = 1; m <= 4; ++m) {
        auto y = y_space(m);
        CHECK(y.size() == 11 + 2 * m);
        CHECK(root(y));
        auto x = xm_trunc(m, 3, 8);
        auto d = *x.index_of("d");
        auto q = quotient(x, collapse_upset(x, x.up(d)));
        CHECK(are_isomorphic(q.poset, y));
    }
}

TEST_CASE("every family builds")
{
    for (auto & f : catalog_families())
        CHECK_FALSE(f.empty());
    CHECK(catalog_get("L(5)").size() == 5);
    CHECK(catalog_get("C(3)").size() == 3);
    CHECK(catalog_get("C(0)").size() == 0);
    CHECK(catalog_get("Xm_trunc(1,3,2)").name() == "Xm_trunc(1,3,2)");
}
