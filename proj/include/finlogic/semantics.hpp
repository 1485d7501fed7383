#pragma once

#include <finlogic/formula.hpp>
#include <finlogic/heyting.hpp>
#include <finlogic/poset.hpp>

#include <optional>
#include <vector>

namespace finlogic {

// Valuation[i] is the truth set of variable pi. Intuitionistic use requires upsets.
using Valuation = std::vector<std::optional<Mask>>;

// Formula flattened into a shared-subterm program.
class Program {
public:
    explicit Program(const Formula & f);

    auto eval_poset(const Poset & p, const Mask * values, bool modal) const -> Mask;
    auto eval_algebra(const HeytingAlgebra & a, const int * values) const -> int;
    auto variables() const -> const std::vector<int> & { return vars_; }
    auto has_box() const -> bool { return has_box_; }

private:
    struct Instr {
        Op op;
        int a = 0, b = 0;
    };
    std::vector<Instr> code_;
    std::vector<int> vars_;
    bool has_box_ = false;
};

auto truth_set(const Poset & p, const Valuation & v, const Formula & f) -> Mask;
auto eval_at(const Poset & p, const Valuation & v, int x, const Formula & f) -> bool;

// Any refuting valuation found is written to witness when given.
auto is_valid(const Poset & p, const Formula & f, Budget & budget = scratch_budget(), Valuation * witness = nullptr) -> bool;
auto is_valid_algebra(const HeytingAlgebra & a, const Formula & f, Budget & budget = scratch_budget()) -> bool;
auto is_valid_modal(const Poset & p, const Formula & f, Budget & budget = scratch_budget()) -> bool;

}
