#include "schubfact/cohomology.hpp"

#include <stdexcept>

namespace schubfact {

std::vector<std::pair<int, int>> RootSystemA::positive_roots() const
{
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            out.emplace_back(k, l);
    return out;
}

std::vector<std::pair<int, int>> RootSystemA::levi_roots(const Composition& mu) const
{
    if (mu.total() != n)
        throw std::invalid_argument("levi_roots: composition size mismatch");
    std::vector<std::pair<int, int>> out;
    for (auto [k, l] : positive_roots())
        if (mu.block_of(k) == mu.block_of(l))
            out.emplace_back(k, l);
    return out;
}

std::vector<std::pair<int, int>> RootSystemA::cross_roots(const Composition& mu) const
{
    if (mu.total() != n)
        throw std::invalid_argument("cross_roots: composition size mismatch");
    std::vector<std::pair<int, int>> out;
    for (auto [k, l] : positive_roots())
        if (mu.block_of(k) != mu.block_of(l))
            out.emplace_back(k, l);
    return out;
}

namespace {

void require_even(const Composition& mu, const char* what)
{
    if (!mu.all_parts_even())
        throw std::invalid_argument(std::string(what) + ": composition " + mu.to_string() + " has an odd part");
}

void check_block(const Composition& mu, int b)
{
    if (b < 1 || b > mu.blocks())
        throw std::out_of_range("block index " + std::to_string(b) + " out of range");
}

Polynomial var(const SpacePtr& space, VarId v, int coeff = 1)
{
    return Polynomial::term(space, Monomial::variable(v), coeff);
}

// The binomial factors (x_j + x_k) of every block, with the g_i index bound.
void add_binomials(FactoredPolynomial& out, const Composition& mu)
{
    const SpacePtr& space = out.space_ptr();
    for (int b = 1; b <= mu.blocks(); ++b) {
        const int lo = mu.nu(b) + 1;
        const int bound = 2 * mu.nu(b) + mu.part(b);
        for (int j = lo; j <= bound; ++j)
            for (int k = j + 1; k <= bound - j; ++k)
                out.add_factor(var(space, space->x(j)) + var(space, space->x(k)));
    }
}

FactoredPolynomial rhs_common(const Composition& mu, bool with_delta)
{
    SpacePtr space = VariableSpace::make(mu.total());
    FactoredPolynomial out(space);
    for (int i = 1; i <= mu.total(); ++i) {
        const int e = mu.right_mass(i) + (with_delta ? mu.first_half_flag(i) : 0);
        out.add_factor(var(space, space->x(i)), e);
    }
    add_binomials(out, mu);
    return out;
}

} // namespace

FactoredPolynomial rhs_orthogonal_factored(const Composition& mu)
{
    return rhs_common(mu, true);
}

Polynomial rhs_orthogonal(const Composition& mu)
{
    return rhs_orthogonal_factored(mu).expand();
}

FactoredPolynomial rhs_symplectic_factored(const Composition& mu)
{
    require_even(mu, "rhs_symplectic");
    return rhs_common(mu, false);
}

Polynomial rhs_symplectic(const Composition& mu)
{
    return rhs_symplectic_factored(mu).expand();
}

FactoredPolynomial f_block(const Composition& mu, int block)
{
    check_block(mu, block);
    SpacePtr space = VariableSpace::make(mu);
    FactoredPolynomial out(space);
    const Polynomial z = var(space, space->z(block));
    for (int j = mu.nu(block) + 1; j <= mu.nu(block) + mu.part(block) / 2; ++j)
        out.add_factor(var(space, space->x(j)) - z);
    return out;
}

FactoredPolynomial g_block(const Composition& mu, int block)
{
    check_block(mu, block);
    SpacePtr space = VariableSpace::make(mu);
    FactoredPolynomial out(space);
    const Polynomial two_z = var(space, space->z(block), 2);
    const int bound = 2 * mu.nu(block) + mu.part(block);
    for (int j = mu.nu(block) + 1; j <= bound; ++j)
        for (int k = j + 1; k <= bound - j; ++k)
            out.add_factor(var(space, space->x(j)) + var(space, space->x(k)) - two_z);
    return out;
}

FactoredPolynomial h_pair_xyz(const Composition& mu, int i, int j)
{
    check_block(mu, i);
    check_block(mu, j);
    if (i >= j)
        throw std::invalid_argument("h_pair_xyz needs i < j");
    SpacePtr space = VariableSpace::make(mu);
    FactoredPolynomial out(space);
    const Polynomial zj = var(space, space->z(j));
    for (int k = 1; k <= mu.part(i); ++k) {
        const Polynomial xk = var(space, space->x(mu.nu(i) + k));
        if (mu.part(j) % 2 == 1)
            out.add_factor(xk - zj);
        for (int l = 1; l <= mu.part(j) / 2; ++l) {
            const Polynomial y = var(space, space->y_block(j, l));
            out.add_factor(xk - y - zj);
            out.add_factor(xk + y - zj);
        }
    }
    return out;
}

FactoredPolynomial h_mu_xyz(const Composition& mu)
{
    FactoredPolynomial out(VariableSpace::make(mu));
    for (int i = 1; i <= mu.blocks(); ++i)
        for (int j = i + 1; j <= mu.blocks(); ++j)
            out.append(h_pair_xyz(mu, i, j));
    return out;
}

FactoredPolynomial base_class_orthogonal(int n)
{
    if (n < 1)
        throw std::invalid_argument("base_class_orthogonal needs n >= 1");
    SpacePtr space = VariableSpace::make(Composition({n}));
    FactoredPolynomial out(space);
    const Polynomial two_z = var(space, space->z(1), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n - i; ++j)
            out.add_factor(var(space, space->x(i)) + var(space, space->x(j)) - two_z);
    return out;
}

FactoredPolynomial base_class_symplectic(int two_n)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("base_class_symplectic needs a positive even size");
    SpacePtr space = VariableSpace::make(Composition({two_n}));
    FactoredPolynomial out(space);
    const Polynomial two_z = var(space, space->z(1), 2);
    for (int i = 1; i <= two_n; ++i)
        for (int j = i + 1; j <= two_n - i; ++j)
            out.add_factor(var(space, space->x(i)) + var(space, space->x(j)) - two_z);
    return out;
}

FactoredPolynomial class_orthogonal_equivariant(const Composition& mu)
{
    FactoredPolynomial out(VariableSpace::make(mu));
    out.multiply_scalar(Integer(1) << mu.half_weight());
    out.append(h_mu_xyz(mu));
    for (int b = 1; b <= mu.blocks(); ++b) {
        out.append(f_block(mu, b));
        out.append(g_block(mu, b));
    }
    return out;
}

FactoredPolynomial class_symplectic_equivariant(const Composition& mu)
{
    require_even(mu, "class_symplectic_equivariant");
    FactoredPolynomial out(VariableSpace::make(mu));
    out.append(h_mu_xyz(mu));
    for (int b = 1; b <= mu.blocks(); ++b)
        out.append(g_block(mu, b));
    return out;
}

FactoredPolynomial chern_class_full_torus(const Composition& mu)
{
    SpacePtr space = VariableSpace::make(mu);
    FactoredPolynomial out(space);
    for (auto [k, l] : RootSystemA{mu.total()}.cross_roots(mu))
        out.add_factor(var(space, space->x(k)) - var(space, space->y(l)));
    return out;
}

Polynomial restrict_at(const Permutation& w, const Polynomial& f)
{
    const SpacePtr& space = f.space_ptr();
    if (w.size() != space->n())
        throw std::invalid_argument("restrict_at: permutation size does not match the space");
    Polynomial::Substitution assignment;
    for (int i = 1; i <= w.size(); ++i)
        assignment.emplace(space->x(i), var(space, space->y(w(i))));
    return f.substitute(assignment);
}

bool preserves_blocks(const Composition& mu, const Permutation& w)
{
    if (w.size() != mu.total())
        throw std::invalid_argument("preserves_blocks: size mismatch");
    for (int i = 1; i <= w.size(); ++i)
        if (mu.block_of(w(i)) != mu.block_of(i))
            return false;
    return true;
}

Polynomial weight_product(const Composition& mu, const Permutation& w)
{
    SpacePtr space = VariableSpace::make(mu);
    if (!preserves_blocks(mu, w))
        return Polynomial(space);
    FactoredPolynomial out(space);
    for (auto [k, l] : RootSystemA{mu.total()}.cross_roots(mu))
        out.add_factor(var(space, space->y(w(k))) - var(space, space->y(w(l))));
    return out.expand();
}

Polynomial restrict_torus_coordinates(const Composition& mu, const Polynomial& f)
{
    SpacePtr space = VariableSpace::make(mu);
    if (!(f.space() == *space))
        throw std::invalid_argument("restrict_torus_coordinates: polynomial is not in the space of " + mu.to_string());
    Polynomial::Substitution assignment;
    for (int b = 1; b <= mu.blocks(); ++b) {
        const Polynomial z = var(space, space->z(b));
        const int half = mu.part(b) / 2;
        for (int k = 1; k <= half; ++k) {
            const Polynomial y = var(space, space->y_block(b, k));
            assignment.emplace(space->y(mu.nu(b) + k), z + y);
            assignment.emplace(space->y(mu.nu(b) + mu.part(b) + 1 - k), z - y);
        }
        if (mu.part(b) % 2 == 1)
            assignment.emplace(space->y(mu.nu(b) + half + 1), z);
    }
    return f.substitute(assignment);
}

Polynomial specialize_to_ordinary(const Polynomial& f)
{
    const SpacePtr& space = f.space_ptr();
    Polynomial::Substitution assignment;
    for (VarId v = 0; v < space->size(); ++v)
        if (!space->is_x(v))
            assignment.emplace(v, Polynomial(space));
    return f.substitute(assignment).rebase(VariableSpace::make(space->n()));
}

} // namespace schubfact
