#include "schubfact/cohomology.hpp"
#include "schubfact/verifier.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schubfact;
using namespace schubfact::testing;

namespace {

bool has_flag_containing(const IdentityReport& r, const std::string& needle)
{
    return std::any_of(r.flags.begin(), r.flags.end(),
                       [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("lhs sums")
{
    SpacePtr s2 = VariableSpace::make(2);
    CHECK(lhs_sum(w_set_orthogonal(Composition({2}))) == x(s2, 1));
    SpacePtr s4 = VariableSpace::make(4);
    CHECK(lhs_sum(w_set_symplectic(Composition({4}))) ==
          x(s4, 1) * x(s4, 1) + x(s4, 1) * x(s4, 2) + x(s4, 1) * x(s4, 3) + x(s4, 2) * x(s4, 3));
    CHECK(lhs_sum(w_set_orthogonal(Composition({3, 4}))) == rhs_orthogonal(Composition({3, 4})));
}

TEST_CASE("identity reports")
{
    const IdentityReport r34 = verify_identity(Composition({3, 4}), WFamily::orthogonal);
    CHECK(r34.pass);
    CHECK(r34.degree == 18);
    CHECK(r34.lhs_degree == 18);
    CHECK(r34.lhs_support_size == 6);
    CHECK(!r34.witness);

    const IdentityReport r2 = verify_identity(Composition({2}), WFamily::orthogonal);
    CHECK(r2.pass);
    CHECK(r2.degree == 1);

    const IdentityReport r24 = verify_identity(Composition({2, 4}), WFamily::symplectic);
    CHECK(r24.pass);
    CHECK(has_flag_containing(r24, "123564"));
}

TEST_CASE("printed symplectic (2,4) set fails with a degree witness")
{
    const auto printed = printed_symplectic_2_4();
    CHECK(printed.size() == 2);
    const IdentityReport bad = verify_members(Composition({2, 4}), WFamily::symplectic, printed);
    CHECK(!bad.pass);
    CHECK(bad.lhs_degree == 2);
    CHECK(bad.degree == 10);
    REQUIRE(bad.witness);
    CHECK(bad.witness->lhs != bad.witness->rhs);

    const auto good = w_set_symplectic(Composition({2, 4})).members;
    CHECK(verify_members(Composition({2, 4}), WFamily::symplectic, good).pass);
}

TEST_CASE("a wrong candidate of the right degree is caught")
{
    // drop one member of W_(4,2)
    auto members = w_set_orthogonal(Composition({4, 2})).members;
    members.pop_back();
    const IdentityReport r = verify_members(Composition({4, 2}), WFamily::orthogonal, members);
    CHECK(!r.pass);
    CHECK(r.degree == r.lhs_degree);
    CHECK(r.witness);
}

TEST_CASE("equivariant suite")
{
    const IdentityReport r22 = verify_equivariant_suite(Composition({2, 2}), WFamily::orthogonal);
    CHECK(r22.pass);
    CHECK(r22.kind == "equivariant");
    CHECK(has_flag_containing(r22, "24 restriction points"));

    for (int n = 1; n <= 4; ++n)
        CHECK(verify_equivariant_suite(Composition({n}), WFamily::orthogonal).pass);

    CHECK(verify_equivariant_suite(Composition({2, 3}), WFamily::orthogonal).pass);
    CHECK(verify_equivariant_suite(Composition({2, 4}), WFamily::symplectic).pass);
}

TEST_CASE("sweeps")
{
    const SweepResult o4 = sweep(4, WFamily::orthogonal);
    CHECK(o4.reports.size() == 8);
    CHECK(o4.all_pass());

    const SweepResult s4 = sweep(4, WFamily::symplectic);
    REQUIRE(s4.reports.size() == 2);
    CHECK(s4.reports[0].mu == Composition({4}));
    CHECK(s4.reports[1].mu == Composition({2, 2}));
    CHECK(s4.all_pass());
    REQUIRE(s4.known_discrepancies.size() == 1);
    CHECK(!s4.known_discrepancies[0].pass);

    const SweepResult o1 = sweep(1, WFamily::orthogonal);
    REQUIRE(o1.reports.size() == 1);
    CHECK(o1.reports[0].pass);
}

TEST_CASE("threaded sweep matches the sequential one")
{
    const SweepResult a = sweep(6, WFamily::orthogonal, 1);
    const SweepResult b = sweep(6, WFamily::orthogonal, 4);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t k = 0; k < a.reports.size(); ++k) {
        CHECK(a.reports[k].mu == b.reports[k].mu);
        CHECK(a.reports[k].pass == b.reports[k].pass);
        CHECK(a.reports[k].degree == b.reports[k].degree);
    }
}
