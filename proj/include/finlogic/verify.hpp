#pragma once

#include <finlogic/formula.hpp>
#include <finlogic/poset.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace finlogic {

using Params = std::map<std::string, std::int64_t>;

struct Counterexample {
    Poset poset;
    std::string code;   // hex canonical code
    std::string detail;
};

enum class Status { pass, fail, budget };

struct VerificationReport {
    std::string scenario;
    Params params;
    std::uint64_t instances_checked = 0;
    std::uint64_t counterexamples_total = 0;
    std::vector<Counterexample> counterexamples;
    Status status = Status::pass;
    std::uint64_t work_units = 0;
    std::uint64_t budget = 0;
};

struct RunOptions {
    std::uint64_t budget = 2'000'000'000;
    int jobs = 1;
    int max_counterexamples = 10;
};

auto scenario_names() -> std::vector<std::string>;
auto scenario_defaults(const std::string & name) -> Params;
// Unknown names throw UnknownScenario; budget trips show up in the status.
auto run_scenario(const std::string & name, const Params & params, const RunOptions & options = {}) -> VerificationReport;

auto status_name(Status s) -> std::string;
auto render_report(const VerificationReport & r, const std::string & format) -> std::string;

// The fixed formula suite used by godel-transfer.
auto godel_suite() -> std::vector<Formula>;

auto poset_to_json(const Poset & p) -> std::string;
auto poset_from_json(const std::string & text) -> Poset;
auto poset_to_dot(const Poset & p) -> std::string;
auto import_poset(const std::string & path) -> Poset;
auto export_poset(const Poset & p, const std::string & format, const std::string & path) -> void;

}
