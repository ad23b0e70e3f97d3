#include "schubfact/wset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schubfact {

std::string to_string(WFamily family)
{
    return family == WFamily::orthogonal ? "orthogonal" : "symplectic";
}

WFamily parse_family(std::string_view text)
{
    if (text == "orthogonal")
        return WFamily::orthogonal;
    if (text == "symplectic")
        return WFamily::symplectic;
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::vector<Permutation> w_set_full_orthogonal(int n)
{
    if (n < 1)
        throw std::invalid_argument("w_set_full_orthogonal needs n >= 1");
    std::vector<Permutation> out;
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        avail[static_cast<std::size_t>(k)] = k + 1;

    std::function<void(int)> fill = [&](int i) {
        if (i > n / 2) {
            if (n % 2 == 1)
                word[static_cast<std::size_t>(n / 2)] = avail.front();
            out.emplace_back(word);
            return;
        }
        // avail is sorted, so adjacent pairs are consecutive entries
        for (std::size_t k = 0; k + 1 < avail.size(); ++k) {
            const int a = avail[k], b = avail[k + 1];
            word[static_cast<std::size_t>(i - 1)] = b;
            word[static_cast<std::size_t>(n - i)] = a;
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(k), avail.begin() + static_cast<std::ptrdiff_t>(k) + 2);
            fill(i + 1);
            avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(k), {a, b});
        }
    };
    fill(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> mu_string(const Permutation& w, const Composition& mu, int block)
{
    if (w.size() != mu.total())
        throw std::invalid_argument("mu_string: permutation size does not match composition");
    if (block < 1 || block > mu.blocks())
        throw std::out_of_range("mu_string: block index out of range");
    auto word = w.word();
    return {word.begin() + mu.nu(block), word.begin() + mu.nu(block + 1)};
}

Permutation standardize(std::span<const int> word, std::span<const int> letters)
{
    std::vector<int> sorted(letters.begin(), letters.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: repeated letter in letter set");
    std::vector<int> check(word.begin(), word.end());
    std::sort(check.begin(), check.end());
    if (check != sorted)
        throw std::invalid_argument("standardize: word does not use each letter exactly once");

    std::vector<int> out;
    out.reserve(word.size());
    for (int letter : word)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), letter) - sorted.begin()) + 1);
    return Permutation(std::move(out));
}

std::vector<int> block_letters(const Composition& mu, int block)
{
    const int n = mu.total();
    std::vector<int> letters;
    for (int j = n - mu.nu(block + 1) + 1; j <= n - mu.nu(block); ++j)
        letters.push_back(j);
    return letters;
}

namespace {

// Cartesian product over blocks: block i takes every member of per_block[i]
// relabelled onto its letter set.
std::vector<Permutation> assemble(const Composition& mu, const std::vector<std::vector<Permutation>>& per_block)
{
    std::vector<std::vector<int>> words{{}};
    for (int b = 1; b <= mu.blocks(); ++b) {
        const auto letters = block_letters(mu, b);
        std::vector<std::vector<int>> next;
        next.reserve(words.size() * per_block[static_cast<std::size_t>(b - 1)].size());
        for (const auto& prefix : words)
            for (const Permutation& u : per_block[static_cast<std::size_t>(b - 1)]) {
                auto word = prefix;
                for (int v : u.word())
                    word.push_back(letters[static_cast<std::size_t>(v - 1)]);
                next.push_back(std::move(word));
            }
        words = std::move(next);
    }
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (auto& word : words)
        out.emplace_back(std::move(word));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

WSet w_set_orthogonal(const Composition& mu)
{
    std::vector<std::vector<Permutation>> per_block;
    for (int p : mu.parts())
        per_block.push_back(w_set_full_orthogonal(p));
    return {WFamily::orthogonal, mu, assemble(mu, per_block)};
}

Permutation phi(const Permutation& u)
{
    const int n = u.size();
    std::vector<int> v(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        v[static_cast<std::size_t>(i - 1)] = 2 * u(i) - 1;
        v[static_cast<std::size_t>(2 * n - i)] = 2 * u(i);
    }
    return Permutation(std::move(v));
}

std::vector<Permutation> w_set_full_symplectic(int two_n)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("w_set_full_symplectic needs a positive even size");
    std::vector<Permutation> out;
    for (const Permutation& u : all_permutations(two_n / 2))
        out.push_back(phi(u));
    std::sort(out.begin(), out.end());
    return out;
}

WSet w_set_symplectic(const Composition& mu)
{
    if (!mu.all_parts_even())
        throw std::invalid_argument("w_set_symplectic: composition " + mu.to_string() + " has an odd part");
    std::vector<std::vector<Permutation>> per_block;
    for (int p : mu.parts())
        per_block.push_back(w_set_full_symplectic(p));
    return {WFamily::symplectic, mu, assemble(mu, per_block)};
}

WSet w_set(const Composition& mu, WFamily family)
{
    return family == WFamily::orthogonal ? w_set_orthogonal(mu) : w_set_symplectic(mu);
}

} // namespace schubfact
