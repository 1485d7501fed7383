#include <finlogic/axiomatics.hpp>

#include <finlogic/catalog.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace finlogic {

namespace {
    auto require_rooted(const Poset & x) -> int
    {
        auto r = root(x);
        if (! r)
            throw ParameterOutOfRange("frame " + (x.name().empty() ? std::string("x") : x.name()) + " is not rooted");
        return *r;
    }
}

auto jankov(const Poset & x) -> AxiomKind
{
    require_rooted(x);
    return {AxiomKind::Tag::jankov, x, std::nullopt};
}

auto subframe(const Poset & x) -> AxiomKind
{
    require_rooted(x);
    return {AxiomKind::Tag::subframe, x, std::nullopt};
}

auto validates(const Poset & host, const AxiomKind & axiom, Budget & budget) -> bool
{
    if (axiom.tag == AxiomKind::Tag::jankov)
        return validates_jankov(host, axiom.frame, budget);
    return validates_subframe(host, axiom.frame, budget);
}

auto validates_jankov(const Poset & host, const Poset & x, Budget & budget) -> bool
{
    require_rooted(x);
    return ! image_of_upset(x, host, budget);
}

auto validates_subframe(const Poset & host, const Poset & x, Budget & budget) -> bool
{
    require_rooted(x);
    return ! image_of_subposet(x, host, budget);
}

auto jankov_syntactic(const Poset & x) -> Formula
{
    int r = require_rooted(x);
    int n = x.size();
    Mask all = x.all();

    // g[w] = X minus down(w); every upset is the meet of the g[w] with w outside it
    std::vector<Mask> g(n);
    for (int w = 0; w < n; ++w)
        g[w] = all & ~x.down(w);
    auto term = [&](Mask a) -> Formula {
        Formula t;
        for_each_bit(all & ~a, [&](int w) { t = t ? conj(t, var(w)) : var(w); });
        return t ? t : top();
    };
    auto arrow = [&](Mask u, Mask v) {
        Mask out = 0;
        for (int y = 0; y < n; ++y)
            if ((x.up(y) & u & ~v) == 0)
                out |= bit(y);
        return out;
    };
    auto iff = [](Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); };

    Formula delta = neg(term(0));
    for (int w = 0; w < n; ++w)
        for (int v = w + 1; v < n; ++v)
            if (! x.leq(w, v) && ! x.leq(v, w))
                delta = conj(delta, iff(term(g[w] | g[v]), disj(term(g[w]), term(g[v]))));
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v)
            if (w != v)
                delta = conj(delta, iff(term(arrow(g[w], g[v])), imp(term(g[w]), term(g[v]))));
    return imp(delta, term(g[r]));
}

auto sum_components(const Poset & p) -> std::vector<Mask>
{
    std::vector<Mask> parts;
    Mask rest = p.all();
    while (rest) {
        Mask top = rest & p.maximal();
        if (top == 0) {
            // maximal within the remaining part
            for_each_bit(rest, [&](int x) {
                if ((p.up(x) & rest) == bit(x))
                    top |= bit(x);
            });
        }
        while (true) {
            Mask below_all = rest & ~top;
            for_each_bit(top, [&](int u) { below_all &= p.down(u); });
            Mask stray = rest & ~top & ~below_all;
            if (stray == 0)
                break;
            top = p.up_closure(top | stray) & rest;
        }
        parts.push_back(top);
        rest &= ~top;
    }
    return parts;
}

namespace {
    auto ladder_codes(int max_size) -> const std::map<CanonicalCode, int> &
    {
        static std::mutex lock;
        static std::map<int, std::map<CanonicalCode, int>> cache;
        std::lock_guard guard(lock);
        auto it = cache.find(max_size);
        if (it != cache.end())
            return it->second;
        std::map<CanonicalCode, int> codes;
        int depth = std::min(max_size + 2, limits().ladder_depth);
        for (int k = 0; k <= depth; ++k) {
            auto up = ladder_upset(k);
            if (up.size() <= max_size)
                codes.emplace(canonical_code(up), k);
        }
        // initial segments {w0..wk}
        auto deep = ladder_upset(depth);
        for (int k = 0; k < max_size && k <= depth; ++k) {
            Mask seg = 0;
            for (int i = 0; i <= k; ++i)
                seg |= bit(*deep.index_of("w" + std::to_string(i)));
            codes.emplace(canonical_code(deep.restrict(seg)), -1 - k);
        }
        return cache.emplace(max_size, std::move(codes)).first->second;
    }
}

auto decompose_kg(const Poset & x) -> std::optional<std::vector<Poset>>
{
    auto r = root(x);
    if (! r)
        return std::nullopt;
    Mask rest = x.all() & ~bit(*r);
    auto above = x.restrict(rest);
    auto parts = sum_components(above);
    int m = static_cast<int>(parts.size());
    auto & codes = ladder_codes(above.size());

    // best[i]: most factors covering parts i..m-1, -1 when impossible
    std::vector<int> best(m + 1, -1), cut(m + 1, -1);
    best[m] = 0;
    for (int i = m - 1; i >= 0; --i) {
        Mask span = 0;
        for (int j = i; j < m; ++j) {
            span |= parts[j];
            if (best[j + 1] < 0 || ! codes.count(canonical_code(above.restrict(span))))
                continue;
            if (best[j + 1] + 1 > best[i]) {
                best[i] = best[j + 1] + 1;
                cut[i] = j + 1;
            }
        }
    }
    if (best[0] < 0)
        return std::nullopt;
    std::vector<Poset> factors;
    for (int i = 0; i < m; i = cut[i]) {
        Mask span = 0;
        for (int j = i; j < cut[i]; ++j)
            span |= parts[j];
        factors.push_back(above.restrict(span));
    }
    return factors;
}

}
