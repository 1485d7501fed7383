#pragma once

#include <finlogic/poset.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace finlogic {

struct CatalogKey {
    std::string family;
    std::vector<int> params;

    static auto parse(std::string_view text) -> CatalogKey;
    auto to_string() const -> std::string;
};

auto catalog_get(const CatalogKey & key) -> Poset;
auto catalog_get(std::string_view key) -> Poset;
auto catalog_families() -> std::vector<std::string>;

// Finite truncations of infinite spaces are flagged by name.
auto is_truncation(const Poset & p) -> bool;

// The upset of w_k in the ladder, elements named w0, w1, ...
auto ladder_upset(int k) -> Poset;
// Top-N segment w0..w(N-1) of the ladder.
auto ladder_segment(int n) -> Poset;
// Sum of one-point (1) and two-antichain (2) blocks, first block on top.
auto simple_space(const std::vector<int> & word) -> Poset;
// m-element chain, a1 on top.
auto top_chain(int m, const std::string & prefix = "a") -> Poset;

struct RnShape {
    enum class Kind { ladder, tail };
    Kind kind = Kind::ladder;
    std::vector<int> word;
    int k = 0;   // ladder kind: 1 + S + L_k
    int m = 0;   // tail kind: 1 + S + 1 + L_4 + c_m
    // drop the leading 1 + S, leaving L_k or 1 + L_4 + c_m
    bool bare = false;

    auto to_string() const -> std::string;
};

auto rn_member(const RnShape & shape) -> Poset;
// Every shape with parameter n (tail length m <= n) of at most max_size points.
auto rn_family(int n, int max_size, bool with_bare = true) -> std::vector<RnShape>;

// Gn truncation: 1 + (top N ladder points plus a bottom omega) + L_4 + c_n.
auto gn_trunc(int n, int N) -> Poset;
// Xm truncation with ladder levels 1..N and the lower part below d.
auto xm_trunc(int m, int n, int N) -> Poset;
auto y_space(int m) -> Poset;

}
