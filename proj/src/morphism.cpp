#include <finlogic/morphism.hpp>

#include <algorithm>
#include <numeric>

namespace finlogic {

auto is_pmorphism(const Poset & source, const Poset & target, const std::vector<int> & map) -> bool
{
    if (static_cast<int>(map.size()) != source.size())
        return false;
    for (int x = 0; x < source.size(); ++x)
        if (map[x] < 0 || map[x] >= target.size())
            return false;
    for (int x = 0; x < source.size(); ++x) {
        Mask image = 0;
        for_each_bit(source.up(x), [&](int y) { image |= bit(map[y]); });
        // image inside up(map x) is monotonicity, equality is the back condition
        if (image != target.up(map[x]))
            return false;
    }
    return true;
}

auto is_surjective(const Poset & target, const std::vector<int> & map) -> bool
{
    Mask hit = 0;
    for (int v : map)
        if (v >= 0)
            hit |= bit(v);
    return hit == target.all();
}

auto validate(const PMorphism & m) -> bool
{
    return is_pmorphism(m.source, m.target, m.map);
}

auto compose(const PMorphism & first, const PMorphism & second) -> PMorphism
{
    PMorphism r{first.source, second.target, {}};
    for (int v : first.map)
        r.map.push_back(second.map.at(v));
    return r;
}

namespace {
    struct Search {
        const Poset & s;
        const Poset & t;
        Domain domain;
        bool surjective;
        Budget & budget;
        std::vector<int> order;
        std::vector<int> f;
        std::vector<int> hits;
        Mask dom = 0, covered = 0;

        Search(const Poset & src, const Poset & tgt, Domain d, bool surj, Budget & b) :
            s(src), t(tgt), domain(d), surjective(surj), budget(b), f(src.size(), -1), hits(tgt.size(), 0)
        {
            order.resize(s.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return popcount(s.up(a)) < popcount(s.up(c)); });
        }

        auto assign(int z, int x) -> void
        {
            f[z] = x;
            dom |= bit(z);
            if (hits[x]++ == 0)
                covered |= bit(x);
        }

        auto unassign(int z) -> void
        {
            int x = f[z];
            f[z] = -1;
            dom &= ~bit(z);
            if (--hits[x] == 0)
                covered &= ~bit(x);
        }

        auto run(std::size_t at) -> bool
        {
            budget.charge();
            if (surjective && popcount(t.all() & ~covered) > static_cast<int>(order.size() - at))
                return false;
            if (at == order.size())
                return ! surjective || covered == t.all();

            int z = order[at];
            Mask strict = s.up(z) & ~bit(z);
            if (domain != Domain::upset || (strict & ~dom) == 0) {
                // every point above z is decided, so the image of up(z) must be exactly up(f z)
                Mask image = 0;
                for_each_bit(strict & dom, [&](int y) { image |= bit(f[y]); });
                for (int x = 0; x < t.size(); ++x) {
                    bool fits = ((image >> x) & 1) ? t.up(x) == image : (t.up(x) & ~bit(x)) == image;
                    if (! fits)
                        continue;
                    assign(z, x);
                    if (run(at + 1))
                        return true;
                    unassign(z);
                }
            }
            if (domain != Domain::total)
                return run(at + 1);
            return false;
        }
    };
}

auto search_pmorphism(const Poset & source, const Poset & target, Domain domain, bool surjective, Budget & budget)
    -> std::optional<std::vector<int>>
{
    Search search(source, target, domain, surjective, budget);
    if (search.run(0))
        return search.f;
    return std::nullopt;
}

auto find_pmorphism(const Poset & source, const Poset & target, bool surjective, Budget & budget) -> std::optional<PMorphism>
{
    auto map = search_pmorphism(source, target, Domain::total, surjective, budget);
    if (! map)
        return std::nullopt;
    return PMorphism{source, target, *map};
}

auto image_of_upset(const Poset & target, const Poset & host, Budget & budget) -> bool
{
    return search_pmorphism(host, target, Domain::upset, true, budget).has_value();
}

auto image_of_subposet(const Poset & target, const Poset & host, Budget & budget) -> bool
{
    return search_pmorphism(host, target, Domain::subset, true, budget).has_value();
}

auto EPartition::block_count() const -> int
{
    return block.empty() ? 0 : 1 + *std::max_element(block.begin(), block.end());
}

auto normalize_blocks(std::vector<int> block) -> std::vector<int>
{
    std::vector<int> renumber;
    std::vector<int> seen;
    for (int & b : block) {
        auto it = std::find(seen.begin(), seen.end(), b);
        if (it == seen.end()) {
            seen.push_back(b);
            b = static_cast<int>(seen.size()) - 1;
        }
        else
            b = static_cast<int>(it - seen.begin());
    }
    return block;
}

auto kernel(const std::vector<int> & map) -> std::vector<int>
{
    return normalize_blocks(map);
}

namespace {
    auto block_masks(const std::vector<int> & block) -> std::vector<Mask>
    {
        int count = block.empty() ? 0 : 1 + *std::max_element(block.begin(), block.end());
        std::vector<Mask> masks(count, 0);
        for (std::size_t x = 0; x < block.size(); ++x)
            masks[block[x]] |= bit(static_cast<int>(x));
        return masks;
    }
}

auto is_epartition(const Poset & p, const std::vector<int> & block) -> bool
{
    int n = p.size();
    if (static_cast<int>(block.size()) != n)
        return false;
    auto masks = block_masks(block);
    auto same = [&](int x) { return masks[block[x]]; };

    // (a) x R y and x <= z give u >= y with z R u
    for (int x = 0; x < n; ++x) {
        Mask mates = same(x);
        bool ok = true;
        for_each_bit(mates, [&](int y) {
            for_each_bit(p.up(x), [&](int z) {
                if ((p.up(y) & same(z)) == 0)
                    ok = false;
            });
        });
        if (! ok)
            return false;
    }

    // (b') distinct classes are separated by a saturated upset
    auto saturate = [&](Mask m) {
        Mask r = 0;
        for_each_bit(m, [&](int x) { r |= same(x); });
        return r;
    };
    std::vector<Mask> closure(n);
    for (int x = 0; x < n; ++x) {
        Mask m = p.up(x);
        while (true) {
            Mask next = p.up_closure(saturate(m));
            if (next == m)
                break;
            m = next;
        }
        closure[x] = m;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (block[x] != block[y] && ((closure[x] >> y) & 1) && ((closure[y] >> x) & 1))
                return false;
    return true;
}

auto epartitions(const Poset & p, Budget & budget) -> std::vector<EPartition>
{
    int n = p.size();
    if (n > limits().epartition_size)
        throw BudgetExceeded("E-partition enumeration is capped at " + std::to_string(limits().epartition_size) + " elements");
    std::vector<EPartition> result;
    if (n == 0) {
        result.push_back({p, {}});
        return result;
    }
    // restricted growth strings give every set partition once, blocks numbered by first element
    std::vector<int> block(n, 0);
    auto walk = [&](auto && self, int at, int used) -> void {
        if (at == n) {
            budget.charge();
            if (is_epartition(p, block))
                result.push_back({p, block});
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[at] = b;
            self(self, at + 1, std::max(used, b + 1));
        }
    };
    block[0] = 0;
    walk(walk, 1, 1);
    return result;
}

auto quotient(const Poset & p, const std::vector<int> & given) -> Quotient
{
    if (! is_epartition(p, given))
        throw NotAnEPartition("relation fails the E-partition conditions");
    auto block = normalize_blocks(given);
    auto masks = block_masks(block);
    int k = static_cast<int>(masks.size());
    std::vector<std::string> names;
    for (Mask m : masks) {
        std::string name;
        for_each_bit(m, [&](int x) { name += (name.empty() ? "" : "~") + p.element(x); });
        names.push_back(name);
    }
    std::vector<Mask> rows(k, 0);
    for (int x = 0; x < p.size(); ++x)
        for_each_bit(p.up(x), [&](int y) { rows[block[x]] |= bit(block[y]); });
    auto q = poset_from_rows(std::move(names), std::move(rows));
    PMorphism proj{p, q, block};
    if (! validate(proj))
        throw NotAnEPartition("projection is not a p-morphism");
    return {q, proj};
}

auto quotient(const Poset & p, const EPartition & r) -> Quotient
{
    return quotient(p, r.block);
}

auto collapse_upset(const Poset & p, Mask upset) -> std::vector<int>
{
    std::vector<int> block(p.size());
    int next = 1;
    for (int x = 0; x < p.size(); ++x)
        block[x] = ((upset >> x) & 1) ? 0 : next++;
    return normalize_blocks(block);
}

}
