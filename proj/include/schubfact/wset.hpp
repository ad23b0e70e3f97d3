#pragma once

#include "schubfact/composition.hpp"
#include "schubfact/permutation.hpp"

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubfact {

enum class WFamily { orthogonal, symplectic };

std::string to_string(WFamily family);
// "orthogonal" / "symplectic"; throws std::invalid_argument otherwise.
WFamily parse_family(std::string_view text);

// W-set of the closed orbit attached to (family, mu); members are sorted by
// one-line notation and all have size mu.total().
struct WSet {
    WFamily family;
    Composition mu;
    std::vector<Permutation> members;
};

// Permutations w of S_n built by choosing, for i = 1..floor(n/2), an adjacent
// pair a < b of the letters still unused and setting w(i) = b,
// w(n+1-i) = a; for odd n the last unused letter goes in the middle.
std::vector<Permutation> w_set_full_orthogonal(int n);

// The i-th mu-string: w(nu_i + 1) ... w(nu_{i+1}).
std::vector<int> mu_string(const Permutation& w, const Composition& mu, int block);

// Order-preserving relabelling of `word` over the letter set `letters`: the
// k-th smallest letter becomes k. Throws std::invalid_argument unless word
// uses each letter exactly once.
Permutation standardize(std::span<const int> word, std::span<const int> letters);

// Letters carried by block i of a W_mu member: n - nu_{i+1} + 1 .. n - nu_i.
std::vector<int> block_letters(const Composition& mu, int block);

WSet w_set_orthogonal(const Composition& mu);

// phi(u) = [2u(1)-1, ..., 2u(n)-1, 2u(n), ..., 2u(1)] in S_{2n}.
Permutation phi(const Permutation& u);

// { phi(u) : u in S_n } for two_n = 2n. Throws on odd input.
std::vector<Permutation> w_set_full_symplectic(int two_n);

// Block assembly with per-block membership in W'_{mu_i}; letter sets descend
// across blocks exactly as in the orthogonal case. Throws std::invalid_argument
// on an odd part.
WSet w_set_symplectic(const Composition& mu);

WSet w_set(const Composition& mu, WFamily family);

} // namespace schubfact
