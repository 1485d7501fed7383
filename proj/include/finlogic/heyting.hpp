#pragma once

#include <finlogic/poset.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace finlogic {

// Finite Heyting algebra with explicit operation tables. Elements are indices.
class HeytingAlgebra {
public:
    HeytingAlgebra() = default;

    // Tables are row-major size x size. Validates lattice laws and residuation.
    HeytingAlgebra(std::vector<std::string> labels, std::vector<Mask> above, std::vector<std::uint8_t> meet,
        std::vector<std::uint8_t> join, std::vector<std::uint8_t> imp);

    // Lattice order given as rows: above[a] is the set of b with a <= b.
    static auto from_order(std::vector<std::string> labels, std::vector<Mask> above) -> HeytingAlgebra;

    auto size() const -> int { return static_cast<int>(labels_.size()); }
    auto label(int a) const -> const std::string & { return labels_.at(a); }
    auto leq(int a, int b) const -> bool { return (above_[a] >> b) & 1; }
    auto above(int a) const -> Mask { return above_[a]; }
    auto meet(int a, int b) const -> int { return meet_[a * size() + b]; }
    auto join(int a, int b) const -> int { return join_[a * size() + b]; }
    auto imp(int a, int b) const -> int { return imp_[a * size() + b]; }
    auto bottom() const -> int { return bottom_; }
    auto top() const -> int { return top_; }

private:
    std::vector<std::string> labels_;
    std::vector<Mask> above_;
    std::vector<std::uint8_t> meet_, join_, imp_;
    int bottom_ = 0, top_ = 0;
};

auto boolean2() -> HeytingAlgebra;

struct UpsetAlgebra {
    HeytingAlgebra algebra;
    std::vector<Mask> carrier;   // the upset behind each algebra element
};

auto upset_algebra_with_carrier(const Poset & p) -> UpsetAlgebra;
auto upset_algebra(const Poset & p) -> HeytingAlgebra;

auto is_si(const HeytingAlgebra & a) -> bool;
auto algebra_sum(const HeytingAlgebra & lower, const HeytingAlgebra & upper) -> HeytingAlgebra;
auto dual_poset(const HeytingAlgebra & a) -> Poset;
auto count_subalgebras(const HeytingAlgebra & a) -> std::uint64_t;
auto count_quotients(const HeytingAlgebra & a) -> std::uint64_t;
auto algebras_isomorphic(const HeytingAlgebra & a, const HeytingAlgebra & b) -> bool;

}
