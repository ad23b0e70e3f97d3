#include "schubfact/json_io.hpp"
#include "schubfact/cohomology.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace schubfact;
using namespace schubfact::testing;

TEST_CASE("polynomial schema")
{
    SpacePtr s = VariableSpace::make(2);
    const Polynomial f = x(s, 1) * x(s, 1) * x(s, 2) - one(s).scale(3);
    CHECK(to_json(f).dump() ==
          R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[],"coeff":"-3"},{"exp":[["x1",2],["x2",1]],"coeff":"1"}]})");
}

TEST_CASE("other schemas")
{
    CHECK(to_json(Permutation::parse("231")).dump() == "[2,3,1]");
    CHECK(to_json(Composition({3, 4})).dump() == "[3,4]");
    const WSet w = w_set_orthogonal(Composition({1, 1}));
    CHECK(to_json(w).dump() == R"({"family":"orthogonal","mu":[1,1],"members":[[2,1]]})");
    const Json f = to_json(rhs_symplectic_factored(Composition({4})));
    CHECK(f.at("scalar") == "1");
    CHECK(f.at("text") == "(x1 + x2) (x1 + x3)");
    CHECK(f.at("factors").size() == 2);

    const Json r = to_json(verify_identity(Composition({2}), WFamily::orthogonal));
    CHECK(r.at("verdict") == "pass");
    CHECK(r.at("witness").is_null());
    CHECK(!r.contains("ms"));
    CHECK(to_json(verify_identity(Composition({2}), WFamily::orthogonal), true).contains("ms"));
}

TEST_CASE("round trip of random polynomials")
{
    std::mt19937 rng(4);
    for (int t = 0; t < 100; ++t) {
        const Polynomial f = random_x_polynomial(rng, 1 + static_cast<int>(rng() % 6), 6, 7);
        const Json j = to_json(f);
        CHECK(polynomial_from_json(j) == f);
        CHECK(to_json(polynomial_from_json(Json::parse(j.dump()))).dump() == j.dump());
    }
}

TEST_CASE("round trip in an equivariant space")
{
    const Polynomial f = h_mu_xyz(Composition({2, 3})).expand();
    CHECK(polynomial_from_json(to_json(f)) == f);
}

TEST_CASE("numeric variable ids and big coefficients are accepted")
{
    const Json j = Json::parse(
        R"({"space":{"n":3,"s":0,"mu":[]},"terms":[{"exp":[[0,1],[2,2]],"coeff":"123456789012345678901234567890"}]})");
    const Polynomial f = polynomial_from_json(j);
    SpacePtr s = VariableSpace::make(3);
    CHECK(f == (x(s, 1) * x(s, 3) * x(s, 3)).scale(Integer("123456789012345678901234567890")));
}

TEST_CASE("malformed input is rejected")
{
    const char* bad[] = {
        R"({"terms":[]})",
        R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[["w1",1]],"coeff":"1"}]})",
        R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[[9,1]],"coeff":"1"}]})",
        R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[["x1",-1]],"coeff":"1"}]})",
        R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[],"coeff":"abc"}]})",
        R"({"space":{"n":3,"s":1,"mu":[2]},"terms":[]})",
    };
    for (const char* text : bad)
        CHECK_THROWS_AS(polynomial_from_json(Json::parse(text)), std::invalid_argument);
    CHECK_THROWS_AS(permutation_from_json(Json::parse("[1,1]")), std::invalid_argument);
    CHECK_THROWS_AS(permutation_from_json(Json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(composition_from_json(Json::parse("[0]")), std::invalid_argument);
}
