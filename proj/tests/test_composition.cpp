#include "schubfact/composition.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace schubfact;

namespace {
Composition C(std::vector<int> p) { return Composition(std::move(p)); }
}

TEST_CASE("nu offsets")
{
    const Composition mu = C({2, 4, 1});
    CHECK(mu.blocks() == 3);
    CHECK(mu.total() == 7);
    CHECK(mu.nu(1) == 0);
    CHECK(mu.nu(2) == 2);
    CHECK(mu.nu(3) == 6);
    CHECK(mu.nu(4) == 7);
    CHECK_THROWS_AS(C({}), std::invalid_argument);
    CHECK_THROWS_AS(C({2, 0}), std::invalid_argument);
}

TEST_CASE("block_of")
{
    CHECK(C({3, 4}).block_of(4) == 2);
    CHECK(C({3, 4}).block_of(3) == 1);
    CHECK(C({2, 2}).block_of(1) == 1);
    CHECK_THROWS_AS(C({3, 4}).block_of(0), std::out_of_range);
    CHECK_THROWS_AS(C({3, 4}).block_of(8), std::out_of_range);
}

TEST_CASE("right_mass")
{
    CHECK(C({3, 4}).right_mass(1) == 4);
    CHECK(C({3, 4}).right_mass(5) == 0);
    CHECK(C({2, 4}).right_mass(2) == 4);
    CHECK_THROWS_AS(C({3, 4}).right_mass(9), std::out_of_range);
}

TEST_CASE("first_half_flag")
{
    CHECK(C({6, 5}).first_half_flag(3) == 1);
    CHECK(C({6, 5}).first_half_flag(9) == 0); // middle of the odd block
    CHECK(C({6, 5}).first_half_flag(8) == 1);
    CHECK(C({3, 4}).first_half_flag(2) == 0);
    CHECK(C({3, 4}).first_half_flag(1) == 1);
}

TEST_CASE("half_weight")
{
    CHECK(C({3, 4}).half_weight() == 3);
    CHECK(C({2}).half_weight() == 1);
    CHECK(C({6, 5}).half_weight() == 5);
}

TEST_CASE("enumerate_compositions")
{
    const auto three = enumerate_compositions(3);
    REQUIRE(three.size() == 4);
    CHECK(three[0] == C({3}));
    CHECK(three[1] == C({2, 1}));
    CHECK(three[2] == C({1, 2}));
    CHECK(three[3] == C({1, 1, 1}));

    const auto even4 = enumerate_compositions(4, true);
    REQUIRE(even4.size() == 2);
    CHECK(even4[0] == C({4}));
    CHECK(even4[1] == C({2, 2}));

    CHECK(enumerate_compositions(5).size() == 16);
    CHECK_THROWS_AS(enumerate_compositions(5, true), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_compositions(0), std::invalid_argument);

    for (int n = 1; n <= 10; ++n) {
        const auto all = enumerate_compositions(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        std::set<Composition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& mu : all)
            CHECK(mu.total() == n);
        if (n % 2 == 0)
            CHECK(enumerate_compositions(n, true).size() == (std::size_t{1} << (n / 2 - 1)));
    }
}

TEST_CASE("block statistics agree with their definitions")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enumerate_compositions(n))
            for (int i = 1; i <= n; ++i) {
                const int b = mu.block_of(i);
                CHECK(mu.nu(b) < i);
                CHECK(i <= mu.nu(b + 1));
                int tail = 0;
                for (int j = b; j <= mu.blocks(); ++j)
                    tail += mu.part(j);
                CHECK(mu.right_mass(i) + mu.part(b) == tail);
            }
}

TEST_CASE("parse")
{
    CHECK(Composition::parse("3,4") == C({3, 4}));
    CHECK(Composition::parse("5") == C({5}));
    CHECK(C({3, 4}).to_string() == "3,4");
    CHECK_THROWS_AS(Composition::parse("3,,4"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("3,-1"), std::invalid_argument);
}
