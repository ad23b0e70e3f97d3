#pragma once

#include "schubfact/composition.hpp"
#include "schubfact/schubert.hpp"
#include "schubfact/wset.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schubfact {

// First monomial (largest in the canonical order) where two sides differ.
struct MismatchWitness {
    std::string monomial;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    WFamily family = WFamily::orthogonal;
    Composition mu;
    std::string kind = "identity"; // identity | equivariant | candidate
    std::size_t lhs_support_size = 0;
    int degree = -1;     // total degree of the product side
    int lhs_degree = -1; // total degree of the Schubert sum
    std::size_t checks = 0;
    bool pass = false;
    std::optional<MismatchWitness> witness;
    std::vector<std::string> flags;
    double ms = 0.0;
};

// Sum of the Schubert polynomials of the given permutations (all of size n).
Polynomial lhs_sum(std::span<const Permutation> members, int n, SchubertCache& cache = SchubertCache::shared());
Polynomial lhs_sum(const WSet& wset, SchubertCache& cache = SchubertCache::shared());

// The product side for (mu, family): rhs_orthogonal or rhs_symplectic.
Polynomial product_side(const Composition& mu, WFamily family);

// Checks sum_{w in W-set} S_w = product side as an exact identity, that the
// product side lies in Gamma, and that its Schubert expansion is exactly the
// W-set with unit coefficients.
IdentityReport verify_identity(const Composition& mu, WFamily family);

// Same checks with an arbitrary candidate set in place of the W-set.
IdentityReport verify_members(const Composition& mu, WFamily family, std::span<const Permutation> members);

// The symplectic W-set for (2,4) as it is printed in the literature, with
// ascending letter blocks: {123564, 125346}. It does not satisfy the identity.
std::vector<Permutation> printed_symplectic_2_4();

// Localization of h_mu(x,y) at every w in S_n, torus-coordinate restriction
// against h_mu(x,y,z), base-class factorization for every part, and
// specialization of the equivariant class to the ordinary product side.
IdentityReport verify_equivariant_suite(const Composition& mu, WFamily family);

struct SweepResult {
    WFamily family = WFamily::orthogonal;
    int n = 0;
    std::vector<IdentityReport> reports;
    // Expected failures run alongside symplectic sweeps.
    std::vector<IdentityReport> known_discrepancies;

    bool all_pass() const;
};

// One identity report per composition of n_max (even parts for symplectic),
// in enumerate_compositions order regardless of `threads`.
SweepResult sweep(int n_max, WFamily family, int threads = 1);

} // namespace schubfact
