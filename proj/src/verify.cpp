#include <finlogic/verify.hpp>

#include <finlogic/axiomatics.hpp>
#include <finlogic/catalog.hpp>
#include <finlogic/heyting.hpp>
#include <finlogic/morphism.hpp>
#include <finlogic/semantics.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace finlogic {

namespace {
    using ordered_json = nlohmann::ordered_json;

    struct Outcome {
        std::uint64_t instances = 0;
        std::vector<Counterexample> found;
        std::uint64_t work = 0;
        bool tripped = false;
    };

    struct Collector {
        Outcome & out;

        auto check(bool ok, const Poset & p, const std::string & detail) -> void
        {
            ++out.instances;
            if (! ok)
                out.found.push_back({p, code_hex(canonical_code(p)), detail});
        }
    };

    using Task = std::function<void(Collector &, Budget &)>;

    struct Scenario {
        Params defaults;
        std::function<std::vector<Task>(const Params &)> tasks;
    };

    auto yes(bool b) -> std::string { return b ? "true" : "false"; }

    auto rooted_upto(int size, std::optional<int> max_width = std::nullopt) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int n = 1; n <= size; ++n)
            for (auto & p : enumerate_rooted(n, max_width))
                out.push_back(p);
        return out;
    }

    auto all_upto(int size) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int n = 0; n <= size; ++n)
            for (auto & p : enumerate_posets(n))
                out.push_back(p);
        return out;
    }

    auto keys(const std::string & family, int count) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (int i = 1; i <= count; ++i)
            out.push_back(catalog_get(family + "(" + std::to_string(i) + ")"));
        return out;
    }

    auto sizes_in(std::int64_t n, int lo, int hi) -> std::vector<int>
    {
        std::vector<int> out;
        if (n == 0)
            for (int i = lo; i <= hi; ++i)
                out.push_back(i);
        else
            out.push_back(static_cast<int>(n));
        return out;
    }

    auto sobolev(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        auto ns = sizes_in(a.at("n"), 1, 3);
        for (auto & p : rooted_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p, ns](Collector & c, Budget & b) {
                for (int n : ns) {
                    bool valid = is_valid(p, bw(n), b);
                    int w = width(p);
                    c.check(valid == (w <= n), p, "n=" + std::to_string(n) + " bw valid=" + yes(valid) + " width=" + std::to_string(w));
                }
            });
        return tasks;
    }

    auto triangle(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        auto ns = sizes_in(a.at("n"), 1, 2);
        for (auto & p : rooted_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p, ns](Collector & c, Budget & b) {
                for (int n : ns) {
                    bool valid = is_valid(p, bw(n), b);
                    bool sub = validates_subframe(p, catalog_get("F(" + std::to_string(n + 1) + ")"), b);
                    c.check(valid == sub, p, "n=" + std::to_string(n) + " bw valid=" + yes(valid) + " subframe F valid=" + yes(sub));
                }
            });
        return tasks;
    }

    auto kracht(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        auto frames = keys("BW2", 11);
        for (auto & p : rooted_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p, frames](Collector & c, Budget & b) {
                std::string refuted;
                for (std::size_t i = 0; i < frames.size(); ++i)
                    if (! validates_jankov(p, frames[i], b))
                        refuted += (refuted.empty() ? "" : ",") + std::to_string(i + 1);
                int w = width(p);
                c.check((w <= 2) == refuted.empty(), p, "width=" + std::to_string(w) + " refuted BW2 jankov=[" + refuted + "]");
            });
        return tasks;
    }

    auto appendix(const std::string & family, int count, bool need_p2, const std::string & subframe_key)
    {
        return [=](const Params & a) {
            std::vector<Task> tasks;
            auto frames = keys(family, count);
            auto target = catalog_get(subframe_key);
            auto p2 = catalog_get("P(2)");
            for (auto & p : rooted_upto(static_cast<int>(a.at("size")), 2))
                tasks.push_back([=](Collector & c, Budget & b) {
                    if (need_p2 && ! validates_subframe(p, p2, b))
                        return;
                    bool sub = validates_subframe(p, target, b);
                    std::string refuted;
                    for (std::size_t i = 0; i < frames.size(); ++i)
                        if (! validates_jankov(p, frames[i], b))
                            refuted += (refuted.empty() ? "" : ",") + std::to_string(i + 1);
                    c.check(sub == refuted.empty(), p,
                        "subframe " + subframe_key + " valid=" + yes(sub) + " refuted " + family + " jankov=[" + refuted + "]");
                });
            return tasks;
        };
    }

    auto duality(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        for (auto & p : all_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p](Collector & c, Budget & b) {
                auto up = upset_algebra(p);
                auto ups = upset_count(p);
                auto quotients = count_quotients(up);
                c.check(ups == quotients, p, "upsets=" + std::to_string(ups) + " quotients=" + std::to_string(quotients));
                auto parts = epartitions(p, b).size();
                auto subs = count_subalgebras(up);
                c.check(parts == subs, p, "epartitions=" + std::to_string(parts) + " subalgebras=" + std::to_string(subs));
            });
        for (auto & p : all_upto(static_cast<int>(a.at("dual_size"))))
            tasks.push_back([p](Collector & c, Budget &) {
                auto back = dual_poset(upset_algebra(p));
                c.check(are_isomorphic(back, p), p, "dual of Up(p) is not isomorphic to p");
            });
        return tasks;
    }

    auto godel(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        auto suite = godel_suite();
        auto grz = grz_axiom();
        for (auto & p : all_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p, suite, grz](Collector & c, Budget & b) {
                for (auto & f : suite) {
                    bool i = is_valid(p, f, b);
                    bool m = is_valid_modal(p, godel_translate(f), b);
                    c.check(i == m, p, to_string(f) + ": intuitionistic=" + yes(i) + " translated=" + yes(m));
                }
                c.check(is_valid_modal(p, grz, b), p, "Grz refuted");
            });
        return tasks;
    }

    auto jankov_oracle(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        int hosts = static_cast<int>(a.at("host_size"));
        for (auto & x : rooted_upto(static_cast<int>(a.at("size")))) {
            auto f = jankov_syntactic(x);
            for (int h = 0; h <= hosts; ++h)
                tasks.push_back([x, f, h](Collector & c, Budget & b) {
                    auto code = code_hex(canonical_code(x));
                    for (auto & host : enumerate_posets(h)) {
                        bool syntactic = is_valid(host, f, b);
                        bool semantic = validates_jankov(host, x, b);
                        c.check(syntactic == semantic, host,
                            "target " + code + " formula valid=" + yes(syntactic) + " criterion=" + yes(semantic));
                    }
                });
        }
        return tasks;
    }

    auto ym(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        int top = static_cast<int>(a.at("size"));
        int depth = static_cast<int>(a.at("N"));
        for (int k = 1; k <= top; ++k)
            for (int m = 1; m <= top; ++m)
                tasks.push_back([k, m](Collector & c, Budget & b) {
                    auto src = y_space(k);
                    auto dst = y_space(m);
                    auto found = find_pmorphism(src, dst, true, b);
                    c.check(found.has_value() == (k == m), src,
                        "Y(" + std::to_string(k) + ") onto Y(" + std::to_string(m) + ") exists=" + yes(found.has_value()));
                });
        for (int m = 1; m <= top; ++m)
            tasks.push_back([m, depth](Collector & c, Budget &) {
                auto x = xm_trunc(m, 3, depth);
                int d = *x.index_of("d");
                auto q = quotient(x, collapse_upset(x, x.up(d)));
                c.check(validate(q.projection) && are_isomorphic(q.poset, y_space(m)), x,
                    "collapse of the upset of d is not Y(" + std::to_string(m) + ")");
            });
        return tasks;
    }

    auto rn_closure(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        int size = static_cast<int>(a.at("size"));
        for (int n : sizes_in(a.at("n"), 1, 2)) {
            std::set<CanonicalCode> family;
            for (auto & s : rn_family(n, size))
                family.insert(canonical_code(rn_member(s)));
            auto outsider = rn_member({RnShape::Kind::tail, {}, 0, n + 1, true});
            for (auto & s : rn_family(n, size))
                tasks.push_back([=](Collector & c, Budget & b) {
                    auto p = rn_member(s);
                    for (int x = 0; x < p.size(); ++x) {
                        auto u = p.restrict(p.up(x));
                        for (auto & e : epartitions(u, b)) {
                            auto q = quotient(u, e).poset;
                            c.check(family.count(canonical_code(q)) > 0, p,
                                "n=" + std::to_string(n) + " " + s.to_string() + " has an image outside the family: "
                                    + code_hex(canonical_code(q)));
                        }
                    }
                    bool hit = image_of_upset(outsider, p, b);
                    c.check(! hit, p, "n=" + std::to_string(n) + " " + s.to_string() + " maps an upset onto " + outsider.name());
                });
        }
        return tasks;
    }

    auto kg(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        auto ps = keys("P", 3);
        for (auto & p : rooted_upto(static_cast<int>(a.at("size"))))
            tasks.push_back([p, ps](Collector & c, Budget & b) {
                bool dec = decompose_kg(p).has_value();
                std::string refuted;
                for (std::size_t i = 0; i < ps.size(); ++i)
                    if (! validates_subframe(p, ps[i], b))
                        refuted += (refuted.empty() ? "" : ",") + std::to_string(i + 1);
                c.check(dec == refuted.empty(), p, "decomposes=" + yes(dec) + " refuted P subframe=[" + refuted + "]");
            });
        return tasks;
    }

    auto map_by_name(const Poset & src, const Poset & dst, const std::function<std::string(const std::string &)> & f) -> std::vector<int>
    {
        std::vector<int> map;
        for (auto & e : src.elements()) {
            auto at = dst.index_of(f(e));
            map.push_back(at ? *at : -1);
        }
        return map;
    }

    auto is_ladder_point(const std::string & e) -> bool
    {
        return e == "top" || e == "omega" || (e.size() > 1 && e[0] == 'w' && std::isdigit(static_cast<unsigned char>(e[1])));
    }

    auto pm_constructions(const Params & a) -> std::vector<Task>
    {
        std::vector<Task> tasks;
        int max_n = static_cast<int>(a.at("n"));
        int max_N = static_cast<int>(a.at("N"));
        for (int N = 1; N <= max_N; ++N)
            for (int n = 1; n <= max_n; ++n)
                tasks.push_back([N, n](Collector & c, Budget &) {
                    auto g = gn_trunc(n, N);
                    // least n-m points go to the new root a_m
                    for (int m = 1; m <= n; ++m) {
                        auto h = gn_trunc(m, N);
                        auto map = map_by_name(g, h, [m](const std::string & e) {
                            if (e[0] == 'a' && std::stoi(e.substr(1)) > m)
                                return "a" + std::to_string(m);
                            return e;
                        });
                        PMorphism f{g, h, map};
                        c.check(validate(f) && is_surjective(h, map), g, "least points onto a" + std::to_string(m) + " fails");
                    }
                    // top, ladder and omega go to the top of 1 + L_4 + c_n
                    auto tail = rn_member({RnShape::Kind::tail, {}, 0, n, true});
                    auto map = map_by_name(g, tail, [](const std::string & e) -> std::string {
                        if (is_ladder_point(e))
                            return "u";
                        if (e[0] == 'l')
                            return "w" + e.substr(1);
                        return e;
                    });
                    PMorphism f{g, tail, map};
                    c.check(validate(f) && is_surjective(tail, map), g, "collapse onto " + tail.name() + " fails");

                    // X + L(N) + Y + Z onto X + L(N) + Z, Y to omega
                    auto one = build_poset({"top"}, {});
                    auto head = sum(ladder_segment(N), build_poset({"omega"}, {}));
                    auto z = top_chain(n, "z");
                    auto small = sum({one, head, z});
                    std::vector<Poset> middles;
                    for (int s = 1; s <= 3; ++s)
                        for (auto & y : enumerate_posets(s))
                            middles.push_back(y.relabel("y"));
                    middles.push_back(ladder_upset(4).relabel("y"));
                    for (auto & y : middles) {
                        auto big = sum({one, head, y, z});
                        auto m = map_by_name(big, small, [](const std::string & e) -> std::string {
                            return e[0] == 'y' ? "omega" : e;
                        });
                        PMorphism h{big, small, m};
                        c.check(validate(h) && is_surjective(small, m), big, "middle collapse fails");
                    }
                });
        return tasks;
    }

    auto registry() -> const std::map<std::string, Scenario> &
    {
        static const std::map<std::string, Scenario> table = {
            {"sobolev-width", {{{"size", 6}, {"n", 0}}, sobolev}},
            {"bw-subframe-triangle", {{{"size", 6}, {"n", 0}}, triangle}},
            {"kracht-bw2", {{{"size", 7}}, kracht}},
            {"appendix-K", {{{"size", 8}}, appendix("K", 7, false, "P(2)")}},
            {"appendix-G", {{{"size", 8}}, appendix("G", 6, true, "P(3)")}},
            {"duality-counts", {{{"size", 4}, {"dual_size", 6}}, duality}},
            {"godel-transfer", {{{"size", 5}}, godel}},
            {"jankov-oracle", {{{"size", 4}, {"host_size", 5}}, jankov_oracle}},
            {"ym-rigidity", {{{"size", 4}, {"N", 8}}, ym}},
            {"rn-closure", {{{"size", 8}, {"n", 0}}, rn_closure}},
            {"kg-structure", {{{"size", 8}}, kg}},
            {"pm-constructions", {{{"N", 12}, {"n", 3}}, pm_constructions}},
        };
        return table;
    }

    auto lookup(const std::string & name) -> const Scenario &
    {
        auto it = registry().find(name);
        if (it == registry().end())
            throw UnknownScenario(name);
        return it->second;
    }
}

auto scenario_names() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto & [name, s] : registry())
        out.push_back(name);
    return out;
}

auto scenario_defaults(const std::string & name) -> Params
{
    return lookup(name).defaults;
}

auto run_scenario(const std::string & name, const Params & given, const RunOptions & options) -> VerificationReport
{
    auto & scenario = lookup(name);
    Params params = scenario.defaults;
    for (auto & [k, v] : given) {
        if (! params.count(k))
            throw ParameterOutOfRange(name + " has no parameter '" + k + "'");
        if (v < 0)
            throw ParameterOutOfRange(k + " must be non-negative");
        params[k] = v;
    }

    VerificationReport report;
    report.scenario = name;
    report.params = params;
    report.budget = options.budget;

    std::vector<Task> tasks;
    try {
        tasks = scenario.tasks(params);
    }
    catch (const BudgetExceeded &) {
        report.status = Status::budget;
        return report;
    }

    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    // tasks past the first trip cannot affect the report
    std::atomic<std::size_t> first_trip{tasks.size()};
    auto worker = [&] {
        while (true) {
            std::size_t i = next++;
            if (i >= tasks.size() || i > first_trip.load())
                return;
            Budget budget(options.budget);
            Outcome & out = outcomes[i];
            Collector c{out};
            try {
                tasks[i](c, budget);
            }
            catch (const BudgetExceeded &) {
                out.tripped = true;
                std::size_t seen = first_trip.load();
                while (i < seen && ! first_trip.compare_exchange_weak(seen, i)) {}
            }
            out.work = budget.used();
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }

    std::vector<Counterexample> found;
    for (auto & out : outcomes) {
        report.work_units += out.work;
        if (out.tripped || report.work_units > options.budget) {
            report.work_units = std::min(report.work_units, options.budget);
            report.status = Status::budget;
            break;
        }
        report.instances_checked += out.instances;
        for (auto & ce : out.found)
            found.push_back(ce);
    }
    std::stable_sort(found.begin(), found.end(), [](auto & x, auto & y) {
        return std::tie(x.code, x.detail) < std::tie(y.code, y.detail);
    });
    report.counterexamples_total = found.size();
    if (static_cast<int>(found.size()) > options.max_counterexamples)
        found.resize(std::max(0, options.max_counterexamples));
    report.counterexamples = std::move(found);
    if (report.counterexamples_total > 0)
        report.status = Status::fail;
    return report;
}

auto status_name(Status s) -> std::string
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::budget: return "budget";
    }
    return "fail";
}

namespace {
    auto poset_json(const Poset & p) -> ordered_json
    {
        ordered_json j;
        if (! p.name().empty())
            j["name"] = p.name();
        j["elements"] = p.elements();
        auto cover = ordered_json::array();
        for (auto [a, b] : p.covers())
            cover.push_back({p.element(a), p.element(b)});
        j["cover"] = cover;
        return j;
    }
}

auto render_report(const VerificationReport & r, const std::string & format) -> std::string
{
    if (format == "json") {
        ordered_json j;
        j["scenario"] = r.scenario;
        ordered_json params = ordered_json::object();
        for (auto & [k, v] : r.params)
            params[k] = v;
        j["params"] = params;
        j["status"] = status_name(r.status);
        j["instances_checked"] = r.instances_checked;
        j["work_units"] = r.work_units;
        j["budget"] = r.budget;
        j["counterexamples_total"] = r.counterexamples_total;
        auto list = ordered_json::array();
        for (auto & ce : r.counterexamples) {
            ordered_json e;
            e["code"] = ce.code;
            e["detail"] = ce.detail;
            e["poset"] = poset_json(ce.poset);
            list.push_back(e);
        }
        j["counterexamples"] = list;
        return j.dump(2) + "\n";
    }
    if (format != "text")
        throw ParameterOutOfRange("report format must be json or text");
    std::ostringstream out;
    out << "scenario: " << r.scenario << "\n";
    out << "params:";
    for (auto & [k, v] : r.params)
        out << " " << k << "=" << v;
    out << "\n";
    out << "status: " << status_name(r.status) << "\n";
    out << "instances checked: " << r.instances_checked << "\n";
    out << "work units: " << r.work_units << " of " << r.budget << "\n";
    out << "counterexamples: " << r.counterexamples_total << "\n";
    for (auto & ce : r.counterexamples) {
        out << "  [" << ce.code << "] " << ce.detail << "\n";
        out << "    " << poset_json(ce.poset).dump() << "\n";
    }
    return out.str();
}

auto godel_suite() -> std::vector<Formula>
{
    std::vector<Formula> suite = {bw(1), bw(2), disj(neg(var(0)), neg(neg(var(0))))};
    std::set<std::string> seen;
    for (auto & f : suite)
        seen.insert(to_string(f));
    std::mt19937 gen(20241016u);
    std::function<Formula(int)> grow = [&](int d) -> Formula {
        auto r = gen();
        if (d == 0 || r % 4 == 0) {
            auto leaf = gen() % 9;
            return leaf == 0 ? bot() : var(leaf % 2);
        }
        switch (gen() % 4) {
        case 0: return conj(grow(d - 1), grow(d - 1));
        case 1: return disj(grow(d - 1), grow(d - 1));
        case 2: return imp(grow(d - 1), grow(d - 1));
        default: return neg(grow(d - 1));
        }
    };
    while (suite.size() < 200) {
        // neg adds a level of its own
        auto f = grow(3);
        if (depth(f) > 4 || ! seen.insert(to_string(f)).second)
            continue;
        suite.push_back(f);
    }
    return suite;
}

auto poset_to_json(const Poset & p) -> std::string
{
    return poset_json(p).dump(2) + "\n";
}

auto poset_from_json(const std::string & text) -> Poset
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception & e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (! j.is_object() || ! j.contains("elements") || ! j["elements"].is_array())
        throw SchemaError("expected an object with an \"elements\" array");
    std::vector<std::string> elements;
    for (auto & e : j["elements"]) {
        if (! e.is_string())
            throw SchemaError("element names must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("cover")) {
        if (! j["cover"].is_array())
            throw SchemaError("\"cover\" must be an array");
        for (auto & c : j["cover"]) {
            if (! c.is_array() || c.size() != 2 || ! c[0].is_string() || ! c[1].is_string())
                throw SchemaError("cover entries are [lower, upper] string pairs");
            pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    Poset p;
    try {
        p = build_poset(elements, pairs);
    }
    catch (const Error & e) {
        throw SchemaError(e.what());
    }
    if (j.contains("name")) {
        if (! j["name"].is_string())
            throw SchemaError("\"name\" must be a string");
        p.set_name(j["name"].get<std::string>());
    }
    return p;
}

auto poset_to_dot(const Poset & p) -> std::string
{
    std::ostringstream out;
    out << "digraph \"" << (p.name().empty() ? "poset" : p.name()) << "\" {\n";
    out << "  rankdir=BT;\n";
    std::vector<int> level(p.size(), 0);
    // longest chain from below
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
    for (int x : order)
        for_each_bit(p.down(x) & ~bit(x), [&](int y) { level[x] = std::max(level[x], level[y] + 1); });
    for (int i = 0; i < p.size(); ++i)
        out << "  \"" << p.element(i) << "\";\n";
    int top = p.empty() ? -1 : *std::max_element(level.begin(), level.end());
    for (int l = 0; l <= top; ++l) {
        out << "  { rank=same;";
        for (int i = 0; i < p.size(); ++i)
            if (level[i] == l)
                out << " \"" << p.element(i) << "\";";
        out << " }\n";
    }
    for (auto [a, b] : p.covers())
        out << "  \"" << p.element(a) << "\" -> \"" << p.element(b) << "\";\n";
    out << "}\n";
    return out.str();
}

auto import_poset(const std::string & path) -> Poset
{
    std::ifstream in(path);
    if (! in)
        throw IoError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return poset_from_json(buffer.str());
}

auto export_poset(const Poset & p, const std::string & format, const std::string & path) -> void
{
    std::string text;
    if (format == "json")
        text = poset_to_json(p);
    else if (format == "dot")
        text = poset_to_dot(p);
    else
        throw ParameterOutOfRange("export format must be json or dot");
    std::ofstream out(path);
    if (! out || ! (out << text))
        throw IoError("cannot write " + path);
}

}
