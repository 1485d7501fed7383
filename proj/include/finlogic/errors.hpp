#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finlogic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FINLOGIC_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string & what) : Error(#Name ": " + what) {}  \
    }

FINLOGIC_ERROR(CycleDetected);
FINLOGIC_ERROR(UnknownElement);
FINLOGIC_ERROR(DuplicateElement);
FINLOGIC_ERROR(NotPartialOrder);
FINLOGIC_ERROR(BudgetExceeded);
FINLOGIC_ERROR(InvalidAlgebra);
FINLOGIC_ERROR(SyntaxError);
FINLOGIC_ERROR(NotIntuitionistic);
FINLOGIC_ERROR(VariableUnassigned);
FINLOGIC_ERROR(InvalidValuation);
FINLOGIC_ERROR(NotAnEPartition);
FINLOGIC_ERROR(UnknownKey);
FINLOGIC_ERROR(ParameterOutOfRange);
FINLOGIC_ERROR(UnknownScenario);
FINLOGIC_ERROR(SchemaError);
FINLOGIC_ERROR(IoError);

#undef FINLOGIC_ERROR

// Size caps shared by the whole library. The CLI may raise them.
struct Limits {
    int upset_size = 12;
    int enumeration_size = 8;
    int algebra_size = 64;
    int subalgebra_size = 16;
    int epartition_size = 8;
    int ladder_depth = 24;
    int truncation = 12;
};

auto limits() -> Limits &;

// Deterministic work counter. One backtracking node or one valuation row is one unit.
class Budget {
public:
    static constexpr std::uint64_t unlimited = ~std::uint64_t{0};

    explicit Budget(std::uint64_t limit = unlimited) : limit_(limit) {}

    auto charge(std::uint64_t units = 1) -> void
    {
        used_ += units;
        if (used_ > limit_)
            throw BudgetExceeded("work budget of " + std::to_string(limit_) + " units exhausted");
    }

    auto used() const -> std::uint64_t { return used_; }
    auto limit() const -> std::uint64_t { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Used when the caller does not care about accounting.
auto scratch_budget() -> Budget &;

}
