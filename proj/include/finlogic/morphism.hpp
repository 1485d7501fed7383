#pragma once

#include <finlogic/poset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace finlogic {

struct PMorphism {
    Poset source;
    Poset target;
    std::vector<int> map;   // source index -> target index
};

// Checks monotonicity and up(map(x)) = map(up(x)) for every x.
auto is_pmorphism(const Poset & source, const Poset & target, const std::vector<int> & map) -> bool;
auto is_surjective(const Poset & target, const std::vector<int> & map) -> bool;
auto validate(const PMorphism & m) -> bool;
auto compose(const PMorphism & first, const PMorphism & second) -> PMorphism;

enum class Domain { total, upset, subset };

// Partial map witness: -1 marks source points left out of the domain.
auto search_pmorphism(const Poset & source, const Poset & target, Domain domain, bool surjective,
    Budget & budget = scratch_budget()) -> std::optional<std::vector<int>>;

auto find_pmorphism(const Poset & source, const Poset & target, bool surjective,
    Budget & budget = scratch_budget()) -> std::optional<PMorphism>;

auto image_of_upset(const Poset & target, const Poset & host, Budget & budget = scratch_budget()) -> bool;
auto image_of_subposet(const Poset & target, const Poset & host, Budget & budget = scratch_budget()) -> bool;

struct EPartition {
    Poset base;
    std::vector<int> block;   // block index per element, blocks numbered by first element
    auto block_count() const -> int;
};

auto normalize_blocks(std::vector<int> block) -> std::vector<int>;
auto is_epartition(const Poset & p, const std::vector<int> & block) -> bool;
auto epartitions(const Poset & p, Budget & budget = scratch_budget()) -> std::vector<EPartition>;
auto kernel(const std::vector<int> & map) -> std::vector<int>;

struct Quotient {
    Poset poset;
    PMorphism projection;
};

auto quotient(const Poset & p, const std::vector<int> & block) -> Quotient;
auto quotient(const Poset & p, const EPartition & r) -> Quotient;
// Identify the given upset into one point.
auto collapse_upset(const Poset & p, Mask upset) -> std::vector<int>;

}
