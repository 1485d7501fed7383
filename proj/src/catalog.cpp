#include <finlogic/catalog.hpp>

#include <cctype>
#include <map>
#include <functional>

namespace finlogic {

namespace {
    using Pairs = std::vector<std::pair<std::string, std::string>>;

    auto make(const std::string & name, std::vector<std::string> elements, const Pairs & below) -> Poset
    {
        return build_poset(elements, below).with_name(name);
    }

    auto range(const std::string & key, int value, int lo, int hi) -> void
    {
        if (value < lo || value > hi)
            throw ParameterOutOfRange(key + " needs " + std::to_string(lo) + " <= parameter <= " + std::to_string(hi)
                + ", got " + std::to_string(value));
    }

    // P1 = F3
    auto p_poset(int i) -> Poset
    {
        switch (i) {
        case 1: return make("P(1)", {"bot", "a", "b", "c"}, {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}});
        case 2: return make("P(2)", {"bot", "a", "b", "c", "d"}, {{"bot", "c"}, {"c", "a"}, {"bot", "d"}, {"d", "b"}});
        default: return make("P(3)", {"bot", "a", "b", "c", "d"}, {{"bot", "a"}, {"bot", "d"}, {"d", "c"}, {"c", "b"}});
        }
    }

    auto names(int n) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int i = 1; i <= n; ++i)
            out.push_back(std::to_string(i));
        return out;
    }

    auto k_poset(int i) -> Poset
    {
        Pairs k1 = {{"1", "2"}, {"2", "4"}, {"1", "3"}, {"3", "5"}};
        auto with = [&](Pairs extra) {
            Pairs all = k1;
            all.insert(all.end(), extra.begin(), extra.end());
            return all;
        };
        std::string name = "K(" + std::to_string(i) + ")";
        switch (i) {
        case 1: return make(name, names(5), k1);
        case 2: return make(name, names(6), with({{"5", "6"}, {"3", "4"}}));
        case 3: return make(name, names(6), with({{"4", "6"}, {"5", "6"}}));
        case 4: return make(name, names(7), with({{"5", "6"}, {"3", "4"}, {"6", "7"}, {"4", "7"}}));
        case 5: return make(name, names(6), with({{"5", "6"}, {"2", "6"}}));
        case 6:
            return make(name, names(7), {{"1", "2"}, {"2", "4"}, {"4", "7"}, {"1", "3"}, {"3", "5"}, {"2", "5"}, {"5", "6"}, {"4", "6"}});
        default:
            return make(name, names(7), {{"1", "2"}, {"2", "4"}, {"1", "3"}, {"3", "5"}, {"5", "6"}, {"6", "7"}, {"2", "7"}, {"3", "4"}});
        }
    }

    auto g_poset(int i) -> Poset
    {
        Pairs g1 = {{"1", "2"}, {"1", "3"}, {"3", "5"}, {"5", "6"}};
        Pairs g2 = {{"1", "2"}, {"2", "4"}, {"1", "3"}, {"3", "5"}, {"5", "6"}, {"2", "5"}};
        auto with = [](Pairs base, Pairs extra) {
            base.insert(base.end(), extra.begin(), extra.end());
            return base;
        };
        std::string name = "G(" + std::to_string(i) + ")";
        switch (i) {
        case 1: return make(name, {"1", "2", "3", "5", "6"}, g1);
        case 2: return make(name, names(6), g2);
        case 3: return make(name, names(7), with(g2, {{"6", "7"}, {"4", "7"}}));
        case 4: return make(name, {"1", "2", "3", "5", "6", "7"}, with(g1, {{"2", "7"}, {"6", "7"}}));
        case 5: return make(name, names(6), {{"1", "2"}, {"2", "4"}, {"1", "3"}, {"3", "5"}, {"5", "4"}, {"5", "6"}});
        default:
            return make(name, names(7), {{"1", "2"}, {"2", "7"}, {"7", "4"}, {"2", "5"}, {"1", "3"}, {"3", "5"}, {"5", "4"}, {"5", "6"}});
        }
    }

    // the eleven rooted width-2 frames a..m
    auto bw2_poset(int i) -> Poset
    {
        Pairs a = {{"0", "1"}, {"0", "2"}, {"0", "3"}};
        Pairs d = {{"0", "4"}, {"4", "1"}, {"4", "2"}, {"0", "3"}};
        Pairs h = {{"0", "4"}, {"4", "1"}, {"4", "2"}, {"0", "9"}, {"9", "3"}, {"9", "2"}};
        auto with = [](Pairs base, Pairs extra) {
            base.insert(base.end(), extra.begin(), extra.end());
            return base;
        };
        std::vector<std::string> four = {"0", "1", "2", "3"};
        std::vector<std::string> five = {"0", "1", "2", "3", "4"};
        std::vector<std::string> six = {"0", "1", "2", "3", "4", "5"};
        std::vector<std::string> hs = {"0", "1", "2", "3", "4", "9"};
        std::vector<std::string> hs5 = {"0", "1", "2", "3", "4", "5", "9"};
        std::string name = "BW2(" + std::to_string(i) + ")";
        switch (i) {
        case 1: return make(name, four, a);
        case 2: return make(name, five, with(a, {{"1", "4"}, {"2", "4"}}));
        case 3: return make(name, five, with(a, {{"1", "4"}, {"2", "4"}, {"3", "4"}}));
        case 4: return make(name, five, d);
        case 5: return make(name, six, with(d, {{"2", "5"}, {"1", "5"}}));
        case 6: return make(name, six, with(d, {{"1", "5"}, {"3", "5"}}));
        case 7: return make(name, six, with(d, {{"1", "5"}, {"3", "5"}, {"2", "5"}}));
        case 8: return make(name, hs, h);
        case 9: return make(name, hs5, with(h, {{"2", "5"}, {"1", "5"}}));
        case 10: return make(name, hs5, with(h, {{"1", "5"}, {"3", "5"}}));
        default: return make(name, hs5, with(h, {{"1", "5"}, {"3", "5"}, {"2", "5"}}));
        }
    }

    auto bw1_poset(int i) -> Poset
    {
        if (i == 1)
            return make("BW1(1)", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
        return make("BW1(2)", {"0", "2", "4", "9"}, {{"0", "4"}, {"0", "9"}, {"4", "2"}, {"9", "2"}});
    }

    auto zk_poset(int i) -> Poset
    {
        Pairs z1 = {{"bot", "x"}, {"x", "c"}, {"c", "a"}, {"bot", "y"}, {"y", "d"}, {"d", "b"}, {"x", "b"}, {"y", "a"}};
        std::vector<std::string> e1 = {"bot", "x", "y", "c", "d", "a", "b"};
        std::string name = "Z_K(" + std::to_string(i) + ")";
        switch (i) {
        case 1: return make(name, e1, z1);
        case 2: {
            auto e = e1;
            e.push_back("top");
            z1.push_back({"a", "top"});
            z1.push_back({"b", "top"});
            return make(name, e, z1);
        }
        case 3:
            return make(name, {"bot", "x", "y", "z", "c", "d", "a", "b", "top"},
                {{"bot", "y"}, {"y", "x"}, {"x", "c"}, {"c", "a"}, {"bot", "z"}, {"z", "d"}, {"d", "b"}, {"b", "top"},
                    {"y", "b"}, {"x", "top"}, {"z", "a"}});
        default:
            return make(name, {"bot", "x", "y", "c", "d", "a", "b", "top"},
                {{"bot", "x"}, {"x", "c"}, {"c", "a"}, {"c", "top"}, {"bot", "y"}, {"y", "d"}, {"d", "b"}, {"b", "top"},
                    {"y", "a"}, {"x", "b"}});
        }
    }

    auto zg_poset(int i) -> Poset
    {
        Pairs z1 = {{"bot", "x"}, {"x", "a"}, {"bot", "d"}, {"d", "c"}, {"c", "b"}, {"x", "c"}};
        std::vector<std::string> e1 = {"bot", "x", "d", "c", "a", "b"};
        std::string name = "Z_G(" + std::to_string(i) + ")";
        switch (i) {
        case 1: return make(name, e1, z1);
        case 2: {
            auto e = e1;
            e.push_back("top");
            z1.push_back({"a", "top"});
            z1.push_back({"b", "top"});
            return make(name, e, z1);
        }
        default: {
            auto e = e1;
            e.push_back("top");
            z1.push_back({"a", "top"});
            z1.push_back({"c", "top"});
            return make(name, e, z1);
        }
        }
    }

    auto ladder_pairs(int depth) -> Pairs
    {
        Pairs out;
        for (int k = 2; k <= depth; ++k) {
            out.push_back({"w" + std::to_string(k), "w" + std::to_string(k - 2)});
            if (k >= 3)
                out.push_back({"w" + std::to_string(k), "w" + std::to_string(k - 3)});
        }
        return out;
    }

    auto ladder_names(int depth) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int k = 0; k <= depth; ++k)
            out.push_back("w" + std::to_string(k));
        return out;
    }

    using Builder = std::function<Poset(const std::vector<int> &)>;

    struct Family {
        int arity;
        Builder build;
    };

    auto families() -> const std::map<std::string, Family> &
    {
        static const std::map<std::string, Family> table = {
            {"P", {1, [](auto & a) { range("P", a[0], 1, 3); return p_poset(a[0]); }}},
            {"K", {1, [](auto & a) { range("K", a[0], 1, 7); return k_poset(a[0]); }}},
            {"G", {1, [](auto & a) { range("G", a[0], 1, 6); return g_poset(a[0]); }}},
            {"F", {1, [](auto & a) {
                 range("F", a[0], 1, max_poset_size - 1);
                 std::vector<std::string> e = {"r"};
                 Pairs c;
                 for (int i = 1; i <= a[0]; ++i) {
                     e.push_back("m" + std::to_string(i));
                     c.push_back({"r", e.back()});
                 }
                 return make("F(" + std::to_string(a[0]) + ")", e, c);
             }}},
            {"L", {1, [](auto & a) { return ladder_upset(a[0]).with_name("L(" + std::to_string(a[0]) + ")"); }}},
            {"C", {1, [](auto & a) {
                 range("C", a[0], 0, max_poset_size);
                 return top_chain(a[0]).with_name("C(" + std::to_string(a[0]) + ")");
             }}},
            {"Gn_trunc", {2, [](auto & a) { return gn_trunc(a[0], a[1]); }}},
            {"Xm_trunc", {3, [](auto & a) { return xm_trunc(a[0], a[1], a[2]); }}},
            {"Y", {1, [](auto & a) { return y_space(a[0]); }}},
            {"BW2", {1, [](auto & a) { range("BW2", a[0], 1, 11); return bw2_poset(a[0]); }}},
            {"BW1", {1, [](auto & a) { range("BW1", a[0], 1, 2); return bw1_poset(a[0]); }}},
            {"Z_K", {1, [](auto & a) { range("Z_K", a[0], 1, 4); return zk_poset(a[0]); }}},
            {"Z_G", {1, [](auto & a) { range("Z_G", a[0], 1, 3); return zg_poset(a[0]); }}},
        };
        return table;
    }
}

auto CatalogKey::parse(std::string_view text) -> CatalogKey
{
    CatalogKey key;
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') {
        // K3, BW2_5 style
        std::size_t cut = text.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(text[cut - 1])))
            --cut;
        if (cut == 0 || cut == text.size())
            throw UnknownKey(std::string(text));
        key.family = std::string(text.substr(0, cut));
        if (key.family.back() == '_' && ! families().count(key.family))
            key.family.pop_back();
        key.params.push_back(std::stoi(std::string(text.substr(cut))));
        return key;
    }
    key.family = std::string(text.substr(0, open));
    auto inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t at = 0;
    while (at <= inner.size()) {
        auto comma = inner.find(',', at);
        auto piece = inner.substr(at, comma == std::string_view::npos ? std::string_view::npos : comma - at);
        while (! piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (! piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        if (piece.empty() || ! std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })
            || piece.size() > 6)
            throw UnknownKey(std::string(text));
        key.params.push_back(std::stoi(std::string(piece)));
        if (comma == std::string_view::npos)
            break;
        at = comma + 1;
    }
    return key;
}

auto CatalogKey::to_string() const -> std::string
{
    std::string out = family + "(";
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : "") + std::to_string(params[i]);
    return out + ")";
}

auto catalog_get(const CatalogKey & key) -> Poset
{
    auto it = families().find(key.family);
    if (it == families().end())
        throw UnknownKey(key.to_string());
    if (static_cast<int>(key.params.size()) != it->second.arity)
        throw UnknownKey(key.to_string() + " expects " + std::to_string(it->second.arity) + " parameter(s)");
    return it->second.build(key.params);
}

auto catalog_get(std::string_view key) -> Poset
{
    return catalog_get(CatalogKey::parse(key));
}

auto catalog_families() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto & [name, f] : families())
        out.push_back(name);
    return out;
}

auto is_truncation(const Poset & p) -> bool
{
    return p.name().rfind("Gn_trunc", 0) == 0 || p.name().rfind("Xm_trunc", 0) == 0;
}

auto ladder_upset(int k) -> Poset
{
    range("L", k, 0, limits().ladder_depth);
    auto full = build_poset(ladder_names(k), ladder_pairs(k));
    return full.restrict(full.up(k)).with_name("L(" + std::to_string(k) + ")");
}

auto ladder_segment(int n) -> Poset
{
    range("ladder segment", n, 0, limits().ladder_depth + 1);
    if (n == 0)
        return {};
    return build_poset(ladder_names(n - 1), ladder_pairs(n - 1));
}

auto simple_space(const std::vector<int> & word) -> Poset
{
    std::vector<Poset> blocks;
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::string base = "s" + std::to_string(i + 1);
        if (word[i] == 1)
            blocks.push_back(build_poset({base}, {}));
        else if (word[i] == 2)
            blocks.push_back(build_poset({base + "a", base + "b"}, {}));
        else
            throw ParameterOutOfRange("simple space blocks are 1 or 2");
    }
    return sum(blocks);
}

auto top_chain(int m, const std::string & prefix) -> Poset
{
    std::vector<std::string> e;
    Pairs c;
    for (int i = 1; i <= m; ++i) {
        e.push_back(prefix + std::to_string(i));
        if (i > 1)
            c.push_back({e.back(), e[i - 2]});
    }
    return build_poset(e, c);
}

auto RnShape::to_string() const -> std::string
{
    std::string w;
    for (int b : word)
        w += std::to_string(b);
    if (kind == Kind::ladder)
        return bare ? "L" + std::to_string(k) : "1+S[" + w + "]+L" + std::to_string(k);
    return bare ? "1+L4+c" + std::to_string(m) : "1+S[" + w + "]+1+L4+c" + std::to_string(m);
}

auto rn_member(const RnShape & shape) -> Poset
{
    if (shape.bare && ! shape.word.empty())
        throw ParameterOutOfRange("bare shapes carry no simple part");
    if (shape.kind == RnShape::Kind::ladder)
        range("ladder index", shape.k, 0, limits().ladder_depth);
    else
        range("tail length", shape.m, 0, max_poset_size);
    auto one = [](const std::string & n) { return build_poset({n}, {}); };
    std::vector<Poset> parts;
    if (! shape.bare) {
        parts.push_back(one("t"));
        parts.push_back(simple_space(shape.word));
    }
    if (shape.kind == RnShape::Kind::ladder)
        parts.push_back(ladder_upset(shape.k));
    else {
        parts.push_back(one("u"));
        parts.push_back(ladder_upset(4));
        parts.push_back(top_chain(shape.m));
    }
    return sum(parts).with_name(shape.to_string());
}

auto rn_family(int n, int max_size, bool with_bare) -> std::vector<RnShape>
{
    std::vector<RnShape> out;
    std::vector<std::vector<int>> words = {{}};
    std::vector<int> word_size = {0};
    for (std::size_t i = 0; i < words.size(); ++i)
        for (int b : {1, 2})
            if (word_size[i] + b <= max_size) {
                auto w = words[i];
                w.push_back(b);
                words.push_back(w);
                word_size.push_back(word_size[i] + b);
            }
    auto ladder_size = [](int k) { return std::max(1, k); };
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (int k = 0; 1 + word_size[i] + ladder_size(k) <= max_size && k <= limits().ladder_depth; ++k)
            out.push_back({RnShape::Kind::ladder, words[i], k, 0, false});
        for (int m = 0; m <= n && 1 + word_size[i] + 5 + m <= max_size; ++m)
            out.push_back({RnShape::Kind::tail, words[i], 0, m, false});
    }
    if (with_bare) {
        for (int k = 0; k <= 1 && k <= max_size; ++k)
            out.push_back({RnShape::Kind::ladder, {}, k, 0, true});
        for (int m = 0; m <= n && 5 + m <= max_size; ++m)
            out.push_back({RnShape::Kind::tail, {}, 0, m, true});
    }
    return out;
}

auto gn_trunc(int n, int N) -> Poset
{
    range("Gn_trunc n", n, 1, 32);
    range("Gn_trunc N", N, 1, limits().ladder_depth + 1);
    if (N + n + 6 > max_poset_size)
        throw ParameterOutOfRange("Gn_trunc exceeds " + std::to_string(max_poset_size) + " points");
    auto one = [](const std::string & x) { return build_poset({x}, {}); };
    auto l4 = build_poset({"l0", "l1", "l2", "l4"}, {{"l4", "l2"}, {"l2", "l0"}, {"l4", "l1"}});
    auto head = sum(ladder_segment(N), one("omega"));
    return sum({one("top"), head, l4, top_chain(n)})
        .with_name("Gn_trunc(" + std::to_string(n) + "," + std::to_string(N) + ")");
}

auto xm_trunc(int m, int n, int N) -> Poset
{
    range("Xm_trunc m", m, 1, 16);
    range("Xm_trunc n", n, 3, 16);
    range("Xm_trunc N", N, 1, limits().ladder_depth);
    int count = 3 * N + 1 + (n - 2) + 1 + 6 + 2 * m + 4;
    if (count > max_poset_size)
        throw ParameterOutOfRange("Xm_trunc exceeds " + std::to_string(max_poset_size) + " points");
    std::vector<std::string> e;
    Pairs c;
    auto lvl = [](char letter, int k) { return std::string(1, letter) + std::to_string(k); };
    for (int k = 1; k <= N; ++k)
        for (char letter : {'a', 'b', 'c'})
            e.push_back(lvl(letter, k));
    for (int k = 1; k < N; ++k) {
        c.push_back({lvl('a', k + 1), lvl('a', k)});
        c.push_back({lvl('a', k + 1), lvl('b', k)});
        c.push_back({lvl('b', k + 1), lvl('a', k)});
        c.push_back({lvl('b', k + 1), lvl('c', k)});
        c.push_back({lvl('c', k + 1), lvl('b', k)});
        c.push_back({lvl('c', k + 1), lvl('c', k)});
    }
    e.push_back("bw");
    for (char letter : {'a', 'b', 'c'})
        c.push_back({"bw", lvl(letter, N)});
    e.push_back("d");
    c.push_back({"d", "bw"});
    for (int i = 1; i <= n - 2; ++i) {
        e.push_back("top" + std::to_string(i));
        c.push_back({"d", e.back()});
    }
    for (std::string s : {"e", "f", "g"}) {
        e.push_back(s + "+");
        e.push_back(s + "-");
        c.push_back({s + "+", "d"});
        c.push_back({s + "-", s + "+"});
        c.push_back({"p1", s + "-"});
        c.push_back({"q1", s + "-"});
    }
    for (int i = 1; i <= m; ++i) {
        e.push_back("p" + std::to_string(i));
        e.push_back("q" + std::to_string(i));
        if (i > 1)
            for (char lo : {'p', 'q'})
                for (char hi : {'p', 'q'})
                    c.push_back({lvl(lo, i), lvl(hi, i - 1)});
    }
    for (int i = 1; i <= 3; ++i) {
        e.push_back("r" + std::to_string(i));
        c.push_back({"bot", e.back()});
        c.push_back({e.back(), lvl('p', m)});
        c.push_back({e.back(), lvl('q', m)});
    }
    e.push_back("bot");
    return build_poset(e, c).with_name(
        "Xm_trunc(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(N) + ")");
}

auto y_space(int m) -> Poset
{
    auto x = xm_trunc(m, 3, 1);
    auto d = *x.index_of("d");
    return x.restrict(x.down(d)).with_name("Y(" + std::to_string(m) + ")");
}

}
