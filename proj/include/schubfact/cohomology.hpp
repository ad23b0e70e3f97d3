#pragma once

#include "schubfact/composition.hpp"
#include "schubfact/factored.hpp"
#include "schubfact/permutation.hpp"
#include "schubfact/polynomial.hpp"

#include <utility>
#include <vector>

namespace schubfact {

// Type A positive roots e_k - e_l (k < l) of GL_n, and the Levi roots of a
// composition (both ends in one block).
struct RootSystemA {
    int n;

    std::vector<std::pair<int, int>> positive_roots() const;
    std::vector<std::pair<int, int>> levi_roots(const Composition& mu) const;
    // Positive roots that are not Levi roots.
    std::vector<std::pair<int, int>> cross_roots(const Composition& mu) const;
};

// ---- ordinary classes, plain x-space of size mu.total()

// prod_i x_i^{R(mu,i) + delta(mu,i)} * prod_blocks prod_{nu_b+1 <= j < k <= 2 nu_b + mu_b - j} (x_j + x_k)
FactoredPolynomial rhs_orthogonal_factored(const Composition& mu);
Polynomial rhs_orthogonal(const Composition& mu);

// prod_i x_i^{R(mu,i)} * the same binomials. Throws on an odd part.
FactoredPolynomial rhs_symplectic_factored(const Composition& mu);
Polynomial rhs_symplectic(const Composition& mu);

// ---- equivariant pieces, space VariableSpace::make(mu)

// prod_{j = nu_i+1}^{nu_i + floor(mu_i/2)} (x_j - z_i)
FactoredPolynomial f_block(const Composition& mu, int block);
// prod_{nu_i+1 <= j < k <= 2 nu_i + mu_i - j} (x_j + x_k - 2 z_i)
FactoredPolynomial g_block(const Composition& mu, int block);
// h_{i,j}(x, y, z) for blocks i < j.
FactoredPolynomial h_pair_xyz(const Composition& mu, int i, int j);
FactoredPolynomial h_mu_xyz(const Composition& mu);

// P_n = prod_{1 <= i <= j <= n-i} (x_i + x_j - 2z), z = z_1 of the one-block space.
FactoredPolynomial base_class_orthogonal(int n);
// P'_n = prod_{1 <= i < j <= 2n-i} (x_i + x_j - 2z) for two_n = 2n.
FactoredPolynomial base_class_symplectic(int two_n);

// 2^{d(mu)} h_mu(x,y,z) prod_i f_i g_i
FactoredPolynomial class_orthogonal_equivariant(const Composition& mu);
// h_mu(x,y,z) prod_i g_i. Throws on an odd part.
FactoredPolynomial class_symplectic_equivariant(const Composition& mu);

// h_mu(x, y) = prod over cross roots (k, l) of (x_k - y_l), full y-variables.
FactoredPolynomial chern_class_full_torus(const Composition& mu);

// f(wY, Y): x_i -> y_{w(i)}.
Polynomial restrict_at(const Permutation& w, const Polynomial& f);

// True iff w maps every block of mu onto itself.
bool preserves_blocks(const Composition& mu, const Permutation& w);

// prod over cross roots (k, l) of (y_{w(k)} - y_{w(l)}) when w lies in the
// Levi Weyl group, the zero polynomial otherwise.
Polynomial weight_product(const Composition& mu, const Permutation& w);

// Restriction from the full torus to the torus of the block groups:
// y_{nu_i + k} -> z_i + y_{i,k}, y_{nu_i + mu_i + 1 - k} -> z_i - y_{i,k}
// (k <= floor(mu_i/2)), and the middle y of an odd block -> z_i.
Polynomial restrict_torus_coordinates(const Composition& mu, const Polynomial& f);

// Sets every y, y_block and z variable to zero and returns the result in the
// plain x-space of the same size.
Polynomial specialize_to_ordinary(const Polynomial& f);

} // namespace schubfact
