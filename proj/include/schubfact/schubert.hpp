#pragma once

#include "schubfact/permutation.hpp"
#include "schubfact/polynomial.hpp"

#include <map>
#include <shared_mutex>
#include <unordered_map>

namespace schubfact {

// Schubert polynomials computed top-down from the staircase monomial of w_0
// by divided differences. Entries are materialized only along the descent
// chains actually visited. Safe for concurrent use; returned references stay
// valid for the lifetime of the cache.
class SchubertCache {
public:
    const Polynomial& get(const Permutation& w);
    std::size_t size() const;

    static SchubertCache& shared();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Permutation, Polynomial, PermutationHash> table_;
};

// S_w via S_{w_0} = x_1^{n-1} ... x_{n-1} and S_w = d_i S_{w s_i}, always
// stepping up through the smallest ascent i. Uses the shared cache.
Polynomial schubert_poly(const Permutation& w);

// Independent construction: sum over reduced pipe dreams (RC-graphs) of w of
// the product of x_row over the crossing tiles. No divided differences.
Polynomial schubert_poly_oracle(const Permutation& w);

// True iff every monomial x^c of f has c_i <= n - i. Throws
// std::invalid_argument if f involves a non-x variable.
bool in_gamma(const Polynomial& f, int n);

struct SchubertExpansion {
    int n = 0;
    std::map<Permutation, Integer> coeffs;

    friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;
};

// The unique expansion of f in the Schubert basis of S_n: repeatedly strip
// the leading monomial x^c with the Schubert polynomial whose code is c.
// Throws std::invalid_argument if f is not in Gamma, std::logic_error if a
// residual leading exponent is not a Lehmer code.
SchubertExpansion expand_in_schubert_basis(const Polynomial& f, int n, SchubertCache& cache = SchubertCache::shared());

// sum coeffs[w] * S_w in the plain x-space of size n.
Polynomial reconstruct(const SchubertExpansion& expansion, SchubertCache& cache = SchubertCache::shared());

} // namespace schubfact
