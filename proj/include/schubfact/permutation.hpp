#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubfact {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based throughout, matching the usual w(1) w(2) ... w(n) reading.
//
// Permutations of different sizes never compare equal; S_n is not implicitly
// embedded in S_m.
class Permutation {
public:
    Permutation() = default;

    // Throws std::invalid_argument unless word is a bijection on {1..n}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n);

    // Inverse of code(): the unique w in S_n whose Lehmer code is c.
    // Throws std::invalid_argument if some c_i > n - i.
    static Permutation from_code(std::span<const int> code);

    // "2431" (n <= 9 only) or "2,4,3,1".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> word() const { return word_; }

    // Number of inversion pairs.
    int length() const;

    // Lehmer code c_i = #{ j > i : w(j) < w(i) }.
    std::vector<int> code() const;

    // w * s_i, i.e. swap positions i and i+1. Throws std::out_of_range.
    Permutation right_multiply_simple(int i) const;

    // s_i * w, i.e. swap the values i and i+1. Throws std::out_of_range.
    Permutation left_multiply_simple(int i) const;

    Permutation inverse() const;

    bool has_right_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }

    bool is_identity() const;

    // Digit string for n <= 9, comma separated otherwise.
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

inline Permutation longest_element(int n) { return Permutation::longest(n); }

// (u * v)(i) = u(v(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& u, const Permutation& v);

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const noexcept;
};

} // namespace schubfact
