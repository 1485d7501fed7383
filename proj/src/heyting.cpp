#include <finlogic/heyting.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace finlogic {

namespace {
    auto check_carrier(int n) -> void
    {
        if (n > limits().algebra_size || n > 64)
            throw BudgetExceeded("algebra carrier of " + std::to_string(n) + " exceeds cap " + std::to_string(limits().algebra_size));
    }
}

HeytingAlgebra::HeytingAlgebra(std::vector<std::string> labels, std::vector<Mask> above, std::vector<std::uint8_t> meet_table,
    std::vector<std::uint8_t> join_table, std::vector<std::uint8_t> imp_table) :
    labels_(std::move(labels)),
    above_(std::move(above)),
    meet_(std::move(meet_table)),
    join_(std::move(join_table)),
    imp_(std::move(imp_table))
{
    int n = size();
    check_carrier(n);
    if (n == 0)
        throw InvalidAlgebra("empty carrier");
    std::size_t cells = static_cast<std::size_t>(n) * n;
    if (above_.size() != static_cast<std::size_t>(n) || meet_.size() != cells || join_.size() != cells || imp_.size() != cells)
        throw InvalidAlgebra("table sizes do not match the carrier");
    for (std::size_t i = 0; i < cells; ++i)
        if (meet_[i] >= n || join_[i] >= n || imp_[i] >= n)
            throw InvalidAlgebra("table entry outside the carrier");
    bottom_ = top_ = -1;
    for (int a = 0; a < n; ++a) {
        if (above_[a] == full_mask(n))
            bottom_ = a;
        if (above_[a] == bit(a))
            top_ = -1 == top_ ? a : -2;
    }
    if (bottom_ < 0 || top_ < 0)
        throw InvalidAlgebra("no bounds");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int m = meet(a, b), j = join(a, b);
            if (! leq(m, a) || ! leq(m, b) || ! leq(a, j) || ! leq(b, j))
                throw InvalidAlgebra("meet or join table is not a bound");
            for (int c = 0; c < n; ++c) {
                if (leq(c, a) && leq(c, b) && ! leq(c, m))
                    throw InvalidAlgebra("meet is not greatest");
                if (leq(a, c) && leq(b, c) && ! leq(j, c))
                    throw InvalidAlgebra("join is not least");
                // residuation: a & b <= c iff a <= b -> c
                if (leq(meet(a, b), c) != leq(a, imp(b, c)))
                    throw InvalidAlgebra("residuation fails at " + label(a) + ", " + label(b) + ", " + label(c));
            }
        }
}

auto HeytingAlgebra::from_order(std::vector<std::string> labels, std::vector<Mask> above) -> HeytingAlgebra
{
    int n = static_cast<int>(labels.size());
    check_carrier(n);
    std::vector<Mask> below(n, 0);
    for (int a = 0; a < n; ++a)
        for_each_bit(above[a], [&](int b) { below[b] |= bit(a); });

    auto pick_max = [&](Mask s) {
        int r = -1;
        for_each_bit(s, [&](int c) {
            if ((s & ~below[c]) == 0)
                r = c;
        });
        return r;
    };
    auto pick_min = [&](Mask s) {
        int r = -1;
        for_each_bit(s, [&](int c) {
            if ((s & ~above[c]) == 0)
                r = c;
        });
        return r;
    };

    std::vector<std::uint8_t> meet(n * n), join(n * n), imp(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int m = pick_max(below[a] & below[b]);
            int j = pick_min(above[a] & above[b]);
            if (m < 0 || j < 0)
                throw InvalidAlgebra("order is not a lattice");
            meet[a * n + b] = static_cast<std::uint8_t>(m);
            join[a * n + b] = static_cast<std::uint8_t>(j);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mask ok = 0;
            for (int c = 0; c < n; ++c)
                if ((below[b] >> meet[c * n + a]) & 1)
                    ok |= bit(c);
            int r = pick_max(ok);
            if (r < 0)
                throw InvalidAlgebra("relative pseudocomplement missing");
            imp[a * n + b] = static_cast<std::uint8_t>(r);
        }
    return HeytingAlgebra(std::move(labels), std::move(above), std::move(meet), std::move(join), std::move(imp));
}

auto boolean2() -> HeytingAlgebra
{
    return HeytingAlgebra::from_order({"0", "1"}, {0b11, 0b10});
}

auto upset_algebra_with_carrier(const Poset & p) -> UpsetAlgebra
{
    auto ups = upsets(p);
    int n = static_cast<int>(ups.size());
    check_carrier(n);

    std::vector<std::string> labels;
    for (Mask u : ups) {
        std::string s = "{";
        bool first = true;
        for_each_bit(u, [&](int i) {
            s += (first ? "" : ",") + p.element(i);
            first = false;
        });
        labels.push_back(s + "}");
    }

    auto index = [&](Mask u) {
        return static_cast<std::uint8_t>(std::lower_bound(ups.begin(), ups.end(), u) - ups.begin());
    };

    std::vector<Mask> above(n, 0);
    std::vector<std::uint8_t> meet(n * n), join(n * n), imp(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if ((ups[a] & ~ups[b]) == 0)
                above[a] |= bit(b);
            meet[a * n + b] = index(ups[a] & ups[b]);
            join[a * n + b] = index(ups[a] | ups[b]);
            // U -> V = { x : up(x) & U is inside V }
            Mask r = 0;
            for (int x = 0; x < p.size(); ++x)
                if ((p.up(x) & ups[a] & ~ups[b]) == 0)
                    r |= bit(x);
            imp[a * n + b] = index(r);
        }
    return {HeytingAlgebra(std::move(labels), std::move(above), std::move(meet), std::move(join), std::move(imp)), ups};
}

auto upset_algebra(const Poset & p) -> HeytingAlgebra
{
    return upset_algebra_with_carrier(p).algebra;
}

auto is_si(const HeytingAlgebra & a) -> bool
{
    int coatoms = 0;
    for (int x = 0; x < a.size(); ++x)
        if (x != a.top() && a.above(x) == (bit(x) | bit(a.top())))
            ++coatoms;
    return coatoms == 1;
}

auto algebra_sum(const HeytingAlgebra & lower, const HeytingAlgebra & upper) -> HeytingAlgebra
{
    int l = lower.size();
    int n = l + upper.size() - 1;
    check_carrier(n);
    // upper element u sits at index l + rank among the non-bottom elements of upper
    std::vector<int> where(upper.size());
    std::vector<std::string> labels;
    for (int a = 0; a < l; ++a)
        labels.push_back("A:" + lower.label(a));
    int next = l;
    for (int u = 0; u < upper.size(); ++u) {
        if (u == upper.bottom()) {
            where[u] = lower.top();
            continue;
        }
        where[u] = next++;
        labels.push_back("B:" + upper.label(u));
    }
    std::vector<Mask> above(n, 0);
    Mask upper_part = 0;
    for (int u = 0; u < upper.size(); ++u)
        upper_part |= bit(where[u]);
    for (int a = 0; a < l; ++a)
        above[a] = lower.above(a) | upper_part;
    for (int u = 0; u < upper.size(); ++u)
        for_each_bit(upper.above(u), [&](int v) { above[where[u]] |= bit(where[v]); });
    return HeytingAlgebra::from_order(std::move(labels), std::move(above));
}

auto dual_poset(const HeytingAlgebra & a) -> Poset
{
    int n = a.size();
    std::vector<Mask> filters;
    std::vector<std::string> names;
    for (int g = 0; g < n; ++g) {
        Mask f = a.above(g);
        if ((f >> a.bottom()) & 1)
            continue;
        bool prime = true;
        for (int x = 0; x < n && prime; ++x)
            for (int y = 0; y < n && prime; ++y)
                if (((f >> a.join(x, y)) & 1) && ! ((f >> x) & 1) && ! ((f >> y) & 1))
                    prime = false;
        if (prime) {
            filters.push_back(f);
            names.push_back("F" + std::to_string(g));
        }
    }
    int k = static_cast<int>(filters.size());
    std::vector<Mask> rows(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if ((filters[i] & ~filters[j]) == 0)
                rows[i] |= bit(j);
    return poset_from_rows(std::move(names), std::move(rows));
}

namespace {
    template <typename Close>
    auto count_closed_sets(int n, Mask seed, Close close) -> std::uint64_t
    {
        std::set<Mask> seen;
        std::deque<Mask> work;
        Mask start = close(seed);
        seen.insert(start);
        work.push_back(start);
        while (! work.empty()) {
            Mask s = work.front();
            work.pop_front();
            for (int e = 0; e < n; ++e) {
                if ((s >> e) & 1)
                    continue;
                Mask t = close(s | bit(e));
                if (seen.insert(t).second)
                    work.push_back(t);
            }
        }
        return seen.size();
    }
}

auto count_subalgebras(const HeytingAlgebra & a) -> std::uint64_t
{
    int n = a.size();
    if (n > limits().subalgebra_size)
        throw BudgetExceeded("subalgebra enumeration is capped at " + std::to_string(limits().subalgebra_size));
    auto close = [&](Mask s) {
        s |= bit(a.bottom()) | bit(a.top());
        while (true) {
            Mask t = s;
            for_each_bit(s, [&](int x) {
                for_each_bit(s, [&](int y) {
                    t |= bit(a.meet(x, y)) | bit(a.join(x, y)) | bit(a.imp(x, y));
                });
            });
            if (t == s)
                return s;
            s = t;
        }
    };
    return count_closed_sets(n, 0, close);
}

auto count_quotients(const HeytingAlgebra & a) -> std::uint64_t
{
    int n = a.size();
    check_carrier(n);
    // congruences correspond to filters: nonempty, upward closed, closed under meet
    auto close = [&](Mask s) {
        s |= bit(a.top());
        while (true) {
            Mask t = s;
            for_each_bit(s, [&](int x) {
                t |= a.above(x);
                for_each_bit(s, [&](int y) { t |= bit(a.meet(x, y)); });
            });
            if (t == s)
                return s;
            s = t;
        }
    };
    return count_closed_sets(n, 0, close);
}

auto algebras_isomorphic(const HeytingAlgebra & a, const HeytingAlgebra & b) -> bool
{
    if (a.size() != b.size())
        return false;
    return canonical_code(dual_poset(a)) == canonical_code(dual_poset(b));
}

}
