#pragma once

#include <finlogic/errors.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace finlogic {

enum class Op { bot, var, conj, disj, imp, box };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Op op;
    int var = 0;
    Formula lhs, rhs;
};

auto bot() -> Formula;
auto var(int index) -> Formula;
auto conj(Formula a, Formula b) -> Formula;
auto disj(Formula a, Formula b) -> Formula;
auto imp(Formula a, Formula b) -> Formula;
auto box(Formula a) -> Formula;
auto neg(Formula a) -> Formula;
auto top() -> Formula;

auto equal(const Formula & a, const Formula & b) -> bool;
auto is_intuitionistic(const Formula & f) -> bool;
auto variables(const Formula & f) -> std::uint64_t;
auto node_count(const Formula & f) -> int;
auto depth(const Formula & f) -> int;
auto count_op(const Formula & f, Op op) -> int;

// ASCII surface syntax; a -> bot prints as ~a.
auto to_string(const Formula & f) -> std::string;
// Accepts the ASCII syntax and the aliases ⊥ ∧ ∨ → ¬ □, and p q r s for p0..p3.
auto parse(std::string_view text) -> Formula;

auto bw(int n) -> Formula;
auto godel_translate(const Formula & f) -> Formula;
auto grz_axiom() -> Formula;

}
