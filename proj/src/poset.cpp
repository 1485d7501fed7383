#include <finlogic/poset.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace finlogic {

auto limits() -> Limits &
{
    static Limits l;
    return l;
}

auto scratch_budget() -> Budget &
{
    thread_local Budget b;
    return b;
}

auto Poset::index_of(std::string_view name) const -> std::optional<int>
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

auto Poset::up_closure(Mask m) const -> Mask
{
    Mask r = 0;
    for_each_bit(m, [&](int i) { r |= up_[i]; });
    return r;
}

auto Poset::down_closure(Mask m) const -> Mask
{
    Mask r = 0;
    for_each_bit(m, [&](int i) { r |= down_[i]; });
    return r;
}

auto Poset::maximal() const -> Mask
{
    Mask r = 0;
    for (int i = 0; i < size(); ++i)
        if (up_[i] == bit(i))
            r |= bit(i);
    return r;
}

auto Poset::minimal() const -> Mask
{
    Mask r = 0;
    for (int i = 0; i < size(); ++i)
        if (down_[i] == bit(i))
            r |= bit(i);
    return r;
}

auto Poset::covers() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int a = 0; a < size(); ++a) {
        Mask above = up_[a] & ~bit(a);
        for_each_bit(above, [&](int b) {
            // b covers a when nothing strictly between
            if ((above & down_[b] & ~bit(b)) == 0)
                result.emplace_back(a, b);
        });
    }
    return result;
}

auto Poset::height() const -> int
{
    // longest chain, counted in elements
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return popcount(down_[a]) < popcount(down_[b]); });
    std::vector<int> level(size(), 1);
    int best = 0;
    for (int v : order) {
        for_each_bit(down_[v] & ~bit(v), [&](int u) { level[v] = std::max(level[v], level[u] + 1); });
        best = std::max(best, level[v]);
    }
    return best;
}

auto Poset::restrict(Mask m) const -> Poset
{
    std::vector<int> keep;
    for_each_bit(m & all(), [&](int i) { keep.push_back(i); });
    std::vector<std::string> names;
    std::vector<Mask> rows;
    for (int i : keep) {
        names.push_back(names_[i]);
        Mask row = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (leq(i, keep[j]))
                row |= bit(static_cast<int>(j));
        rows.push_back(row);
    }
    auto result = poset_from_rows(std::move(names), std::move(rows));
    result.name_ = name_;
    return result;
}

auto Poset::relabel(const std::string & prefix) const -> Poset
{
    Poset result = *this;
    for (int i = 0; i < size(); ++i)
        result.names_[i] = prefix + std::to_string(i);
    return result;
}

auto Poset::permute(const std::vector<int> & perm) const -> Poset
{
    std::vector<int> inverse(size());
    for (int i = 0; i < size(); ++i)
        inverse[perm[i]] = i;
    std::vector<std::string> names;
    std::vector<Mask> rows;
    for (int i = 0; i < size(); ++i) {
        names.push_back(names_[perm[i]]);
        Mask row = 0;
        for_each_bit(up_[perm[i]], [&](int j) { row |= bit(inverse[j]); });
        rows.push_back(row);
    }
    auto result = poset_from_rows(std::move(names), std::move(rows));
    result.name_ = name_;
    return result;
}

auto Poset::with_name(std::string n) const -> Poset
{
    Poset result = *this;
    result.name_ = std::move(n);
    return result;
}

auto poset_from_rows(std::vector<std::string> names, std::vector<Mask> up) -> Poset
{
    Poset p;
    int n = static_cast<int>(names.size());
    p.names_ = std::move(names);
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for_each_bit(p.up_[a], [&](int b) { p.down_[b] |= bit(a); });
    return p;
}

auto build_poset(const std::vector<std::string> & elements,
    const std::vector<std::pair<std::string, std::string>> & pairs, PairMode mode) -> Poset
{
    int n = static_cast<int>(elements.size());
    if (n > max_poset_size)
        throw BudgetExceeded("posets are limited to " + std::to_string(max_poset_size) + " elements");

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (! index.emplace(elements[i], i).second)
            throw DuplicateElement(elements[i]);

    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i)
        up[i] = bit(i);
    for (auto & [a, b] : pairs) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end())
            throw UnknownElement(a);
        if (ib == index.end())
            throw UnknownElement(b);
        up[ia->second] |= bit(ib->second);
    }

    if (mode == PairMode::cover) {
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if ((up[i] >> k) & 1)
                    up[i] |= up[k];
    }
    else {
        for (int i = 0; i < n; ++i)
            for_each_bit(up[i], [&](int k) {
                if ((up[k] & ~up[i]) != 0)
                    throw NotPartialOrder("relation is not transitive at " + elements[i] + " <= " + elements[k]);
            });
    }

    for (int i = 0; i < n; ++i)
        for_each_bit(up[i] & ~bit(i), [&](int j) {
            if ((up[j] >> i) & 1)
                throw CycleDetected(elements[i] + " and " + elements[j] + " lie on a cycle");
        });

    return poset_from_rows(elements, std::move(up));
}

auto chain(int n, const std::string & prefix) -> Poset
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i) {
        names.push_back(prefix + std::to_string(i));
        if (i > 0)
            covers.emplace_back(names[i - 1], names[i]);
    }
    return build_poset(names, covers);
}

auto antichain(int n, const std::string & prefix) -> Poset
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i));
    return build_poset(names, {});
}

namespace {
    // Dilworth: maximum antichain = |S| - maximum matching on the strict order.
    auto antichain_number(const Poset & p, Mask s) -> int
    {
        int n = p.size();
        std::vector<int> match_right(n, -1);
        std::vector<char> seen;
        std::function<bool(int)> augment = [&](int u) -> bool {
            bool found = false;
            for_each_bit(p.up(u) & s & ~bit(u), [&](int v) {
                if (found || seen[v])
                    return;
                seen[v] = 1;
                if (match_right[v] < 0 || augment(match_right[v])) {
                    match_right[v] = u;
                    found = true;
                }
            });
            return found;
        };
        int matching = 0;
        for_each_bit(s, [&](int u) {
            seen.assign(n, 0);
            if (augment(u))
                ++matching;
        });
        return popcount(s) - matching;
    }
}

auto width(const Poset & p) -> int
{
    int best = 0;
    for_each_bit(p.minimal(), [&](int x) { best = std::max(best, antichain_number(p, p.up(x))); });
    return best;
}

auto root(const Poset & p) -> std::optional<int>
{
    for (int i = 0; i < p.size(); ++i)
        if (p.up(i) == p.all())
            return i;
    return std::nullopt;
}

auto sum(const Poset & upper, const Poset & lower) -> Poset
{
    if (upper.size() + lower.size() > max_poset_size)
        throw BudgetExceeded("sum exceeds " + std::to_string(max_poset_size) + " elements");

    std::vector<std::string> names = upper.elements();
    std::set<std::string> used(names.begin(), names.end());
    for (auto name : lower.elements()) {
        while (used.count(name))
            name += "'";
        used.insert(name);
        names.push_back(name);
    }

    int u = upper.size();
    std::vector<Mask> rows;
    for (int i = 0; i < u; ++i)
        rows.push_back(upper.up(i));
    for (int i = 0; i < lower.size(); ++i)
        rows.push_back((lower.up(i) << u) | upper.all());
    return poset_from_rows(std::move(names), std::move(rows));
}

auto sum(const std::vector<Poset> & factors) -> Poset
{
    Poset result;
    for (auto & f : factors)
        result = sum(result, f);
    return result;
}

namespace {
    auto top_down_order(const Poset & p) -> std::vector<int>
    {
        std::vector<int> order(p.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return popcount(p.up(a)) < popcount(p.up(b)); });
        return order;
    }

    template <typename F>
    auto walk_upsets(const Poset & p, const std::vector<int> & order, std::size_t at, Mask chosen, F && f) -> void
    {
        if (at == order.size()) {
            f(chosen);
            return;
        }
        int v = order[at];
        walk_upsets(p, order, at + 1, chosen, f);
        if ((p.up(v) & ~bit(v) & ~chosen) == 0)
            walk_upsets(p, order, at + 1, chosen | bit(v), f);
    }
}

auto upsets(const Poset & p) -> std::vector<Mask>
{
    if (p.size() > limits().upset_size)
        throw BudgetExceeded("upset enumeration is capped at " + std::to_string(limits().upset_size) + " elements");
    std::vector<Mask> result;
    walk_upsets(p, top_down_order(p), 0, 0, [&](Mask m) { result.push_back(m); });
    std::sort(result.begin(), result.end());
    return result;
}

auto upset_count(const Poset & p) -> std::uint64_t
{
    return upsets(p).size();
}

namespace {
    struct Refiner {
        const Poset & p;
        int n;
        std::vector<int> level;

        explicit Refiner(const Poset & q) : p(q), n(q.size()), level(q.size(), 0)
        {
            auto order = top_down_order(p);
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                for_each_bit(p.down(*it) & ~bit(*it), [&](int u) { level[*it] = std::max(level[*it], level[u] + 1); });
        }

        // cells given as cell index per element; returns refined cell index per element
        auto refine(std::vector<int> cell) const -> std::vector<int>
        {
            int count = 1 + *std::max_element(cell.begin(), cell.end());
            while (true) {
                std::vector<std::vector<int>> sig(n);
                for (int v = 0; v < n; ++v) {
                    auto & s = sig[v];
                    s.push_back(cell[v]);
                    std::vector<int> ups, downs;
                    for_each_bit(p.up(v) & ~bit(v), [&](int u) { ups.push_back(cell[u]); });
                    for_each_bit(p.down(v) & ~bit(v), [&](int u) { downs.push_back(cell[u]); });
                    std::sort(ups.begin(), ups.end());
                    std::sort(downs.begin(), downs.end());
                    s.push_back(static_cast<int>(ups.size()));
                    s.insert(s.end(), ups.begin(), ups.end());
                    s.push_back(-1);
                    s.insert(s.end(), downs.begin(), downs.end());
                }
                std::vector<int> order(n);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
                std::vector<int> next(n);
                int c = 0;
                for (int i = 0; i < n; ++i) {
                    if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                        ++c;
                    next[order[i]] = c;
                }
                cell = std::move(next);
                if (c + 1 == count)
                    return cell;
                count = c + 1;
            }
        }

        auto code_for(const std::vector<int> & order) const -> CanonicalCode
        {
            CanonicalCode code;
            code.push_back(static_cast<char>(n));
            unsigned char acc = 0;
            int bits = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j)
                        continue;
                    acc = static_cast<unsigned char>((acc << 1) | (p.leq(order[i], order[j]) ? 1 : 0));
                    if (++bits == 8) {
                        code.push_back(static_cast<char>(acc));
                        acc = 0;
                        bits = 0;
                    }
                }
            if (bits)
                code.push_back(static_cast<char>(acc << (8 - bits)));
            return code;
        }

        auto twins(int a, int b) const -> bool
        {
            return (p.up(a) & ~bit(a)) == (p.up(b) & ~bit(b)) && (p.down(a) & ~bit(a)) == (p.down(b) & ~bit(b));
        }

        auto search(std::vector<int> cell, CanonicalForm & best, bool & have) const -> void
        {
            cell = refine(std::move(cell));
            int cells = 1 + *std::max_element(cell.begin(), cell.end());
            if (cells == n) {
                std::vector<int> order(n);
                for (int v = 0; v < n; ++v)
                    order[cell[v]] = v;
                auto code = code_for(order);
                if (! have || code < best.code) {
                    best.code = std::move(code);
                    best.order = std::move(order);
                    have = true;
                }
                return;
            }
            std::vector<int> size(cells, 0);
            for (int v = 0; v < n; ++v)
                ++size[cell[v]];
            int target = 0;
            while (size[target] == 1)
                ++target;
            std::vector<int> tried;
            for (int v = 0; v < n; ++v) {
                if (cell[v] != target)
                    continue;
                if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); }))
                    continue;
                tried.push_back(v);
                auto next = cell;
                for (int u = 0; u < n; ++u)
                    if (next[u] > target || (next[u] == target && u != v))
                        ++next[u];
                search(std::move(next), best, have);
            }
        }
    };
}

auto canonical_form(const Poset & p) -> CanonicalForm
{
    int n = p.size();
    if (n == 0)
        return {CanonicalCode(1, '\0'), {}};
    Refiner r(p);
    std::vector<std::tuple<int, int, int>> keys(n);
    for (int v = 0; v < n; ++v)
        keys[v] = {r.level[v], popcount(p.up(v)), popcount(p.down(v))};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cell(n);
    for (int v = 0; v < n; ++v)
        cell[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    CanonicalForm best;
    bool have = false;
    r.search(std::move(cell), best, have);
    return best;
}

auto canonical_code(const Poset & p) -> CanonicalCode
{
    return canonical_form(p).code;
}

auto code_hex(const CanonicalCode & code) -> std::string
{
    static const char * digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : code) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

auto are_isomorphic(const Poset & a, const Poset & b) -> bool
{
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

namespace {
    auto canonical_representative(const Poset & p, CanonicalCode * code_out) -> Poset
    {
        auto form = canonical_form(p);
        if (code_out)
            *code_out = form.code;
        return p.permute(form.order).relabel("x");
    }

    std::mutex enumeration_mutex;
}

auto enumerate_posets(int size) -> const std::vector<Poset> &
{
    static std::vector<std::vector<Poset>> cache;
    if (size < 0)
        throw ParameterOutOfRange("size must be non-negative");
    if (size > limits().enumeration_size)
        throw BudgetExceeded("enumeration is capped at size " + std::to_string(limits().enumeration_size));

    std::lock_guard<std::mutex> lock(enumeration_mutex);
    if (cache.empty())
        cache.push_back({Poset{}});
    while (static_cast<int>(cache.size()) <= size) {
        int k = static_cast<int>(cache.size());
        std::map<CanonicalCode, Poset> found;
        for (auto & base : cache[k - 1]) {
            for (Mask u : upsets(base)) {
                Mask below = base.all() & ~u;
                std::vector<std::string> names = base.elements();
                names.push_back("new");
                std::vector<Mask> rows;
                for (int i = 0; i < base.size(); ++i)
                    rows.push_back(base.up(i) | (((below >> i) & 1) ? bit(k - 1) : 0));
                rows.push_back(bit(k - 1));
                CanonicalCode code;
                auto rep = canonical_representative(poset_from_rows(std::move(names), std::move(rows)), &code);
                found.emplace(std::move(code), std::move(rep));
            }
        }
        std::vector<Poset> level;
        for (auto & [code, p] : found)
            level.push_back(p);
        cache.push_back(std::move(level));
    }
    return cache[size];
}

auto enumerate_rooted(int size, std::optional<int> max_width) -> std::vector<Poset>
{
    if (size < 1)
        throw ParameterOutOfRange("rooted enumeration needs size >= 1");
    if (size > limits().enumeration_size)
        throw BudgetExceeded("enumeration is capped at size " + std::to_string(limits().enumeration_size));

    std::map<CanonicalCode, Poset> found;
    for (auto & base : enumerate_posets(size - 1)) {
        std::vector<std::string> names = base.elements();
        names.push_back("r");
        std::vector<Mask> rows;
        for (int i = 0; i < base.size(); ++i)
            rows.push_back(base.up(i));
        rows.push_back(full_mask(size));
        auto rooted = poset_from_rows(std::move(names), std::move(rows));
        if (max_width && width(rooted) > *max_width)
            continue;
        CanonicalCode code;
        auto rep = canonical_representative(rooted, &code);
        found.emplace(std::move(code), std::move(rep));
    }
    std::vector<Poset> result;
    for (auto & [code, p] : found)
        result.push_back(p);
    return result;
}

}
