#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubfact {

// A composition mu = (mu_1, ..., mu_s) of n with its partial sums
// nu_1 = 0, nu_{i+1} = nu_i + mu_i. Block indices and positions are 1-based.
class Composition {
public:
    Composition() = default;

    // Throws std::invalid_argument on an empty list or a part < 1.
    explicit Composition(std::vector<int> parts);

    // "3,4"
    static Composition parse(std::string_view text);

    int blocks() const { return static_cast<int>(parts_.size()); }
    int total() const { return nu_.empty() ? 0 : nu_.back(); }
    std::span<const int> parts() const { return parts_; }
    int part(int b) const;

    // nu(b) for 1 <= b <= s+1; block b covers positions nu(b)+1 .. nu(b+1).
    int nu(int b) const;

    // B(mu, i): the block containing position i.
    int block_of(int i) const;

    // R(mu, i): combined size of the blocks strictly right of i's block.
    int right_mass(int i) const;

    // delta(mu, i): 1 iff i lies in the first floor(mu_b / 2) positions of its block.
    int first_half_flag(int i) const;

    // d(mu) = sum of floor(mu_i / 2).
    int half_weight() const;

    bool all_parts_even() const;

    std::string to_string() const;

    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    void check_position(int i) const;

    std::vector<int> parts_;
    std::vector<int> nu_; // nu_[b-1] = nu(b), size s+1
};

// All compositions of n, ordered by number of parts and then reverse
// lexicographically: (3), (2,1), (1,2), (1,1,1). With even_parts_only, the
// compositions of n into even parts; n must then be even.
std::vector<Composition> enumerate_compositions(int n, bool even_parts_only = false);

} // namespace schubfact
