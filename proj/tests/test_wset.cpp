#include "schubfact/wset.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace schubfact;

namespace {

std::set<std::string> strings(const std::vector<Permutation>& ws)
{
    std::set<std::string> out;
    for (const auto& w : ws)
        out.insert(w.to_string());
    return out;
}

// Brute-force reading of the adjacency recursion: filter all of S_n.
bool in_full_orthogonal(const Permutation& w)
{
    const int n = w.size();
    std::set<int> unused;
    for (int k = 1; k <= n; ++k)
        unused.insert(k);
    for (int i = 1; i <= n / 2; ++i) {
        const int b = w(i), a = w(n + 1 - i);
        if (a >= b || !unused.contains(a) || !unused.contains(b))
            return false;
        auto it = unused.find(a);
        if (std::next(it) == unused.end() || *std::next(it) != b)
            return false;
        unused.erase(a);
        unused.erase(b);
    }
    return true;
}

// Members of S_n whose blocks carry the prescribed letters and standardize
// into the W-set of the block size.
std::vector<Permutation> filter_blocks(const Composition& mu, bool symplectic)
{
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(mu.total())) {
        bool ok = true;
        for (int b = 1; b <= mu.blocks() && ok; ++b) {
            auto word = mu_string(w, mu, b);
            auto letters = block_letters(mu, b);
            auto sorted = word;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != letters) {
                ok = false;
                break;
            }
            const Permutation u = standardize(word, letters);
            const auto pool = symplectic ? w_set_full_symplectic(mu.part(b)) : w_set_full_orthogonal(mu.part(b));
            ok = std::find(pool.begin(), pool.end(), u) != pool.end();
        }
        if (ok)
            out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("full orthogonal W-sets")
{
    CHECK(strings(w_set_full_orthogonal(1)) == std::set<std::string>{"1"});
    CHECK(strings(w_set_full_orthogonal(2)) == std::set<std::string>{"21"});
    CHECK(strings(w_set_full_orthogonal(3)) == std::set<std::string>{"231", "312"});
    CHECK(strings(w_set_full_orthogonal(4)) == std::set<std::string>{"2431", "3412", "4213"});
    CHECK(strings(w_set_full_orthogonal(5)) ==
          std::set<std::string>{"24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"});
}

TEST_CASE("full orthogonal W-set matches a brute-force filter of S_n")
{
    for (int n = 1; n <= 7; ++n) {
        std::vector<Permutation> expected;
        for (const auto& w : all_permutations(n))
            if (in_full_orthogonal(w))
                expected.push_back(w);
        CHECK(w_set_full_orthogonal(n) == expected);
    }
}

TEST_CASE("full orthogonal W-set sizes are products of pair counts")
{
    // m letters left offer m - 1 adjacent pairs
    auto expected = [](int n) {
        long p = 1;
        for (int m = n; m >= 2; m -= 2)
            p *= m - 1;
        return p;
    };
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long>(w_set_full_orthogonal(n).size()) == expected(n));
}

TEST_CASE("mu-strings and standardization")
{
    auto word = mu_string(Permutation::parse("3715462"), Composition({2, 4, 1}), 2);
    CHECK(word == std::vector<int>{1, 5, 4, 6});
    CHECK(mu_string(Permutation::parse("465321"), Composition({4, 2}), 1) == std::vector<int>{4, 6, 5, 3});
    CHECK(mu_string(Permutation::parse("6752431"), Composition({3, 4}), 2) == std::vector<int>{2, 4, 3, 1});

    const std::vector<int> w1{1, 5, 4, 6}, a1{1, 4, 5, 6};
    CHECK(standardize(w1, a1).to_string() == "1324");
    const std::vector<int> w2{4, 6, 5, 3}, a2{3, 4, 5, 6};
    CHECK(standardize(w2, a2).to_string() == "2431");
    const std::vector<int> w3{5, 6}, a3{5, 6};
    CHECK(standardize(w3, a3).to_string() == "12");

    const std::vector<int> bad{1, 2}, letters{1, 3};
    CHECK_THROWS_AS(standardize(bad, letters), std::invalid_argument);
}

TEST_CASE("block letters descend")
{
    CHECK(block_letters(Composition({4, 2}), 1) == std::vector<int>{3, 4, 5, 6});
    CHECK(block_letters(Composition({4, 2}), 2) == std::vector<int>{1, 2});
    CHECK(block_letters(Composition({3, 4}), 1) == std::vector<int>{5, 6, 7});
}

TEST_CASE("orthogonal W_mu examples")
{
    CHECK(strings(w_set_orthogonal(Composition({4, 2})).members) ==
          std::set<std::string>{"465321", "563421", "643521"});
    CHECK(strings(w_set_orthogonal(Composition({3, 4})).members) ==
          std::set<std::string>{"6752431", "6753412", "6754213", "7562431", "7563412", "7564213"});
    CHECK(strings(w_set_orthogonal(Composition({1, 1})).members) == std::set<std::string>{"21"});
}

TEST_CASE("phi and the symplectic W-sets")
{
    CHECK(phi(Permutation::parse("1")).to_string() == "12");
    CHECK(phi(Permutation::parse("12")).to_string() == "1342");
    CHECK(phi(Permutation::parse("21")).to_string() == "3124");
    CHECK(strings(w_set_full_symplectic(2)) == std::set<std::string>{"12"});
    CHECK(strings(w_set_full_symplectic(4)) == std::set<std::string>{"1342", "3124"});
    CHECK(strings(w_set_full_symplectic(6)) ==
          std::set<std::string>{"135642", "153462", "315624", "351264", "513426", "531246"});
    CHECK_THROWS_AS(w_set_full_symplectic(5), std::invalid_argument);

    CHECK(strings(w_set_symplectic(Composition({2})).members) == std::set<std::string>{"12"});
    CHECK(strings(w_set_symplectic(Composition({4})).members) == std::set<std::string>{"1342", "3124"});
    CHECK(strings(w_set_symplectic(Composition({2, 4})).members) == std::set<std::string>{"561342", "563124"});
    CHECK_THROWS_AS(w_set_symplectic(Composition({3, 1})), std::invalid_argument);
}

TEST_CASE("block assembly agrees with filtering S_n")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_compositions(n, false))
            CHECK_MESSAGE(w_set_orthogonal(mu).members == filter_blocks(mu, false), mu.to_string());
    for (int n = 2; n <= 6; n += 2)
        for (const auto& mu : enumerate_compositions(n, true))
            CHECK_MESSAGE(w_set_symplectic(mu).members == filter_blocks(mu, true), mu.to_string());
}

TEST_CASE("W_mu size is the product of block sizes and all members share a length")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : enumerate_compositions(n, false)) {
            const WSet ws = w_set(mu, WFamily::orthogonal);
            std::size_t expected = 1;
            for (int p : mu.parts())
                expected *= w_set_full_orthogonal(p).size();
            CHECK(ws.members.size() == expected);
            CHECK(std::is_sorted(ws.members.begin(), ws.members.end()));
            for (const auto& w : ws.members) {
                CHECK(w.size() == n);
                CHECK(w.length() == ws.members.front().length());
            }
        }
}

TEST_CASE("phi is injective and lands in S_2n")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<Permutation> images;
        for (const auto& u : all_permutations(n)) {
            const Permutation w = phi(u);
            CHECK(w.size() == 2 * n);
            images.insert(w);
        }
        CHECK(images.size() == all_permutations(n).size());
    }
}

TEST_CASE("family names")
{
    CHECK(parse_family("orthogonal") == WFamily::orthogonal);
    CHECK(parse_family("symplectic") == WFamily::symplectic);
    CHECK(to_string(WFamily::symplectic) == "symplectic");
    CHECK_THROWS_AS(parse_family("unitary"), std::invalid_argument);
}
