#pragma once

#include <finlogic/formula.hpp>
#include <finlogic/morphism.hpp>
#include <finlogic/poset.hpp>

#include <optional>
#include <vector>

namespace finlogic {

struct AxiomKind {
    enum class Tag { jankov, subframe };
    Tag tag;
    Poset frame;
    std::optional<Formula> formula;
};

auto jankov(const Poset & x) -> AxiomKind;
auto subframe(const Poset & x) -> AxiomKind;
auto validates(const Poset & host, const AxiomKind & axiom, Budget & budget = scratch_budget()) -> bool;

// True when x is not a p-morphic image of an upset of host.
auto validates_jankov(const Poset & host, const Poset & x, Budget & budget = scratch_budget()) -> bool;
// One variable per point of x; refuted on a finite frame exactly when validates_jankov fails.
auto jankov_syntactic(const Poset & x) -> Formula;
// True when x is not a p-morphic image of a subposet of host.
auto validates_subframe(const Poset & host, const Poset & x, Budget & budget = scratch_budget()) -> bool;

// Factors X1..Xn of x = X1 + ... + Xn + 1, top first, each a finite ladder upset.
auto decompose_kg(const Poset & x) -> std::optional<std::vector<Poset>>;
// The (+)-irreducible summands of p, top first.
auto sum_components(const Poset & p) -> std::vector<Mask>;

}
