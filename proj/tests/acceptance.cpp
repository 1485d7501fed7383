#include <finlogic/verify.hpp>

#include <cstdio>
#include <string>
#include <vector>

using namespace finlogic;

namespace {
    struct Criterion {
        std::string scenario;
        Params params;
    };
}

int main()
{
    std::vector<Criterion> criteria = {
        {"sobolev-width", {{"size", 6}, {"n", 0}}},
        {"bw-subframe-triangle", {{"size", 6}, {"n", 0}}},
        {"kracht-bw2", {{"size", 7}}},
        {"appendix-K", {{"size", 8}}},
        {"appendix-G", {{"size", 8}}},
        {"duality-counts", {{"size", 4}, {"dual_size", 6}}},
        {"godel-transfer", {{"size", 5}}},
        {"jankov-oracle", {{"size", 4}, {"host_size", 5}}},
        {"ym-rigidity", {{"size", 4}, {"N", 8}}},
        {"rn-closure", {{"size", 8}, {"n", 0}}},
        {"kg-structure", {{"size", 8}}},
        {"pm-constructions", {{"N", 12}, {"n", 3}}},
    };

    RunOptions options;
    int failures = 0;
    std::vector<std::string> first;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto & c = criteria[i];
        auto r = run_scenario(c.scenario, c.params, options);
        first.push_back(render_report(r, "json"));
        bool ok = r.status == Status::pass;
        failures += ! ok;
        std::printf("%s criterion %zu: %s (%llu instances, %llu counterexamples, %s)\n", ok ? "PASS" : "FAIL", i + 1,
            c.scenario.c_str(), static_cast<unsigned long long>(r.instances_checked),
            static_cast<unsigned long long>(r.counterexamples_total), status_name(r.status).c_str());
        std::fflush(stdout);
    }

    bool same = true;
    for (std::size_t i = 0; i < criteria.size(); ++i)
        same = same && render_report(run_scenario(criteria[i].scenario, criteria[i].params, options), "json") == first[i];
    failures += ! same;
    std::printf("%s criterion 13: determinism (12 scenarios rerun, JSON reports %s)\n", same ? "PASS" : "FAIL",
        same ? "byte-identical" : "differ");
    return failures == 0 ? 0 : 1;
}
