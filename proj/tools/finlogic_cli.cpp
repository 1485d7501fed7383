#include <finlogic/axiomatics.hpp>
#include <finlogic/catalog.hpp>
#include <finlogic/morphism.hpp>
#include <finlogic/semantics.hpp>
#include <finlogic/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace finlogic;

namespace {
    constexpr int exit_pass = 0;
    constexpr int exit_fail = 1;
    constexpr int exit_usage = 2;
    constexpr int exit_budget = 3;

    auto verdict(bool ok, const std::string & yes, const std::string & no) -> int
    {
        std::cout << (ok ? yes : no) << "\n";
        return ok ? exit_pass : exit_fail;
    }

    auto print_valuation(const Poset & p, const Valuation & v) -> void
    {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (! v[i])
                continue;
            std::cout << "  p" << i << " = {";
            bool first = true;
            for_each_bit(*v[i], [&](int x) {
                std::cout << (first ? "" : ", ") << p.element(x);
                first = false;
            });
            std::cout << "}\n";
        }
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Finite frames and Heyting algebras: validity, p-morphisms and verification scenarios"};
    app.require_subcommand(1);

    std::uint64_t budget = Budget::unlimited;
    std::string poset_path, formula_text, host_path, target_path, src_path, dst_path, key, scenario, format = "json";
    bool surjective = false, rooted = false, show_formula = false;
    int size = 0, jobs = 1, max_ce = 10;
    std::optional<int> max_width;
    std::optional<std::int64_t> verify_size;
    std::vector<std::string> extra;
    std::uint64_t verify_budget = RunOptions{}.budget;

    auto check = app.add_subcommand("check", "Intuitionistic validity of a formula on a frame");
    check->add_option("poset", poset_path, "Poset JSON file")->required();
    check->add_option("formula", formula_text, "Formula")->required();
    check->add_option("--budget", budget, "Work unit limit");

    auto modal = app.add_subcommand("modal-check", "Modal validity of a formula on a frame");
    modal->add_option("poset", poset_path, "Poset JSON file")->required();
    modal->add_option("formula", formula_text, "Formula")->required();
    modal->add_option("--budget", budget, "Work unit limit");

    auto jank = app.add_subcommand("jankov", "Does the host validate the Jankov formula of the target");
    jank->add_option("host", host_path, "Host poset JSON")->required();
    jank->add_option("target", target_path, "Rooted target poset JSON")->required();
    jank->add_flag("--formula", show_formula, "Also print the Jankov formula");
    jank->add_option("--budget", budget, "Work unit limit");

    auto sub = app.add_subcommand("subframe", "Does the host validate the subframe formula of the target");
    sub->add_option("host", host_path, "Host poset JSON")->required();
    sub->add_option("target", target_path, "Rooted target poset JSON")->required();
    sub->add_option("--budget", budget, "Work unit limit");

    auto pm = app.add_subcommand("pmorphism", "Search for a p-morphism between two frames");
    pm->add_option("source", src_path, "Source poset JSON")->required();
    pm->add_option("target", dst_path, "Target poset JSON")->required();
    pm->add_flag("--surjective", surjective, "Require the map to be onto");
    pm->add_option("--budget", budget, "Work unit limit");

    auto en = app.add_subcommand("enumerate", "List posets of a size up to isomorphism");
    en->add_option("--size", size, "Number of elements")->required()->check(CLI::Range(0, 8));
    en->add_option("--max-width", max_width, "Width bound (rooted posets only)");
    en->add_flag("--rooted", rooted, "Only rooted posets");

    auto cat = app.add_subcommand("catalog", "Print a named poset");
    cat->add_option("key", key, "Key such as K(3), Gn_trunc(2,12) or Y(1)")->required();
    cat->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto tr = app.add_subcommand("translate", "Goedel translation of an intuitionistic formula");
    tr->add_option("formula", formula_text, "Formula")->required();

    auto ver = app.add_subcommand("verify", "Run a verification scenario");
    ver->add_option("scenario", scenario, "Scenario name")->required();
    ver->add_option("--size", verify_size, "Instance size bound");
    ver->add_option("--budget", verify_budget, "Work unit limit");
    ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    ver->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    ver->add_option("--param", extra, "Extra scenario parameter key=value");
    ver->add_option("--max-counterexamples", max_ce, "Counterexamples kept in the report");

    auto list = app.add_subcommand("scenarios", "List verification scenarios with their defaults");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        Budget work(budget);
        if (*check) {
            auto p = import_poset(poset_path);
            Valuation witness;
            bool ok = is_valid(p, parse(formula_text), work, &witness);
            int code = verdict(ok, "valid", "refuted");
            if (! ok)
                print_valuation(p, witness);
            return code;
        }
        if (*modal)
            return verdict(is_valid_modal(import_poset(poset_path), parse(formula_text), work), "valid", "refuted");
        if (*jank) {
            auto host = import_poset(host_path);
            auto target = import_poset(target_path);
            if (show_formula)
                std::cout << to_string(jankov_syntactic(target)) << "\n";
            return verdict(validates_jankov(host, target, work), "valid", "refuted");
        }
        if (*sub)
            return verdict(validates_subframe(import_poset(host_path), import_poset(target_path), work), "valid", "refuted");
        if (*pm) {
            auto s = import_poset(src_path);
            auto t = import_poset(dst_path);
            auto found = find_pmorphism(s, t, surjective, work);
            if (! found) {
                std::cout << "none\n";
                return exit_fail;
            }
            nlohmann::ordered_json j = nlohmann::ordered_json::object();
            for (int x = 0; x < s.size(); ++x)
                j[s.element(x)] = t.element(found->map[x]);
            std::cout << j.dump(2) << "\n";
            return exit_pass;
        }
        if (*en) {
            std::vector<Poset> out;
            if (rooted || max_width)
                out = enumerate_rooted(size, max_width);
            else
                out = enumerate_posets(size);
            auto arr = nlohmann::ordered_json::array();
            for (auto & p : out)
                arr.push_back(nlohmann::ordered_json::parse(poset_to_json(p)));
            std::cout << arr.dump(2) << "\n";
            return exit_pass;
        }
        if (*cat) {
            auto p = catalog_get(key);
            std::cout << (format == "dot" ? poset_to_dot(p) : poset_to_json(p));
            return exit_pass;
        }
        if (*tr) {
            std::cout << to_string(godel_translate(parse(formula_text))) << "\n";
            return exit_pass;
        }
        if (*list) {
            for (auto & name : scenario_names()) {
                std::cout << name;
                for (auto & [k, v] : scenario_defaults(name))
                    std::cout << " " << k << "=" << v;
                std::cout << "\n";
            }
            return exit_pass;
        }
        if (*ver) {
            Params params;
            if (verify_size)
                params["size"] = *verify_size;
            for (auto & kv : extra) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "--param expects key=value\n";
                    return exit_usage;
                }
                params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
            RunOptions options{verify_budget, jobs, max_ce};
            auto report = run_scenario(scenario, params, options);
            std::cout << render_report(report, format);
            switch (report.status) {
            case Status::pass: return exit_pass;
            case Status::fail: return exit_fail;
            case Status::budget: return exit_budget;
            }
        }
    }
    catch (const BudgetExceeded & e) {
        std::cerr << e.what() << "\n";
        return exit_budget;
    }
    catch (const Error & e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
