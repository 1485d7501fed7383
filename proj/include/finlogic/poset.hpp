#pragma once

#include <finlogic/errors.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace finlogic {

using Mask = std::uint64_t;
constexpr int max_poset_size = 64;

inline auto bit(int i) -> Mask { return Mask{1} << i; }
inline auto popcount(Mask m) -> int { return std::popcount(m); }
inline auto lowest(Mask m) -> int { return std::countr_zero(m); }
inline auto full_mask(int n) -> Mask { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

template <typename F>
auto for_each_bit(Mask m, F && f) -> void
{
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

enum class PairMode { cover, full };

class Poset {
public:
    Poset() = default;

    auto size() const -> int { return static_cast<int>(names_.size()); }
    auto empty() const -> bool { return names_.empty(); }
    auto elements() const -> const std::vector<std::string> & { return names_; }
    auto element(int i) const -> const std::string & { return names_.at(i); }
    auto index_of(std::string_view name) const -> std::optional<int>;

    auto leq(int a, int b) const -> bool { return (up_[a] >> b) & 1; }
    auto less(int a, int b) const -> bool { return a != b && leq(a, b); }
    auto up(int a) const -> Mask { return up_[a]; }
    auto down(int a) const -> Mask { return down_[a]; }
    auto all() const -> Mask { return full_mask(size()); }

    auto up_closure(Mask m) const -> Mask;
    auto down_closure(Mask m) const -> Mask;
    auto is_upset(Mask m) const -> bool { return up_closure(m) == m; }
    auto maximal() const -> Mask;
    auto minimal() const -> Mask;
    auto covers() const -> std::vector<std::pair<int, int>>;
    auto height() const -> int;

    // Induced subposet on the selected elements, original order of elements kept.
    auto restrict(Mask m) const -> Poset;
    // Same order, elements renamed prefix0, prefix1, ...
    auto relabel(const std::string & prefix) const -> Poset;
    // Element i of the result is element perm[i] of this poset.
    auto permute(const std::vector<int> & perm) const -> Poset;

    auto name() const -> const std::string & { return name_; }
    auto set_name(std::string n) -> void { name_ = std::move(n); }
    auto with_name(std::string n) const -> Poset;

    friend auto build_poset(const std::vector<std::string> & elements,
        const std::vector<std::pair<std::string, std::string>> & pairs, PairMode mode) -> Poset;
    friend auto poset_from_rows(std::vector<std::string> names, std::vector<Mask> up) -> Poset;

    friend auto operator==(const Poset & a, const Poset & b) -> bool
    {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Mask> up_, down_;
    std::string name_;
};

auto build_poset(const std::vector<std::string> & elements,
    const std::vector<std::pair<std::string, std::string>> & pairs, PairMode mode = PairMode::cover) -> Poset;

// up[i] must already be a reflexive, transitive, antisymmetric relation.
auto poset_from_rows(std::vector<std::string> names, std::vector<Mask> up) -> Poset;

auto chain(int n, const std::string & prefix = "c") -> Poset;
auto antichain(int n, const std::string & prefix = "a") -> Poset;

auto width(const Poset & p) -> int;
auto root(const Poset & p) -> std::optional<int>;

// upper (+) lower: lower is pasted below upper.
auto sum(const Poset & upper, const Poset & lower) -> Poset;
auto sum(const std::vector<Poset> & factors) -> Poset;

auto upsets(const Poset & p) -> std::vector<Mask>;
auto upset_count(const Poset & p) -> std::uint64_t;

using CanonicalCode = std::string;

struct CanonicalForm {
    CanonicalCode code;
    std::vector<int> order;
};

auto canonical_form(const Poset & p) -> CanonicalForm;
auto canonical_code(const Poset & p) -> CanonicalCode;
auto code_hex(const CanonicalCode & code) -> std::string;
auto are_isomorphic(const Poset & a, const Poset & b) -> bool;

// All posets of the given size up to isomorphism, canonically labelled, ordered by code.
auto enumerate_posets(int size) -> const std::vector<Poset> &;
auto enumerate_rooted(int size, std::optional<int> max_width = std::nullopt) -> std::vector<Poset>;

}
