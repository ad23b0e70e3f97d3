#include "schubfact/schubert.hpp"

#include <mutex>
#include <stdexcept>

namespace schubfact {

namespace {

Polynomial staircase(int n)
{
    SpacePtr space = VariableSpace::make(n);
    std::vector<Monomial::Entry> entries;
    for (int i = 1; i < n; ++i)
        entries.emplace_back(space->x(i), static_cast<std::uint16_t>(n - i));
    return Polynomial::term(space, Monomial::from_entries(std::move(entries)), 1);
}

} // namespace

SchubertCache& SchubertCache::shared()
{
    static SchubertCache cache;
    return cache;
}

std::size_t SchubertCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

const Polynomial& SchubertCache::get(const Permutation& w)
{
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(w);
        if (it != table_.end())
            return it->second;
    }

    const int n = w.size();
    int ascent = 0;
    for (int i = 1; i < n; ++i)
        if (w.has_right_ascent(i)) {
            ascent = i;
            break;
        }

    Polynomial value = ascent == 0 ? staircase(n) : get(w.right_multiply_simple(ascent)).divided_difference(ascent);

    std::unique_lock lock(mutex_);
    return table_.try_emplace(w, std::move(value)).first->second;
}

Polynomial schubert_poly(const Permutation& w)
{
    if (w.size() == 0)
        throw std::invalid_argument("schubert_poly: empty permutation");
    return SchubertCache::shared().get(w);
}

namespace {

// Depth-first search over the staircase cells (r, c), r + c <= n, read row by
// row from the top and right to left inside a row. A cross at (r, c) is the
// letter s_{r+c-1}; the reading word must be a reduced word for w. `rest`
// holds u^{-1} w for the prefix product u, so a cross is allowed exactly when
// its letter is a left descent of `rest`.
struct PipeDreamSearch {
    int n;
    SpacePtr space;
    Polynomial result;
    std::vector<int> row_count; // crosses per row

    void record()
    {
        std::vector<Monomial::Entry> entries;
        for (int r = 1; r <= n; ++r)
            if (row_count[static_cast<std::size_t>(r)] > 0)
                entries.emplace_back(space->x(r), static_cast<std::uint16_t>(row_count[static_cast<std::size_t>(r)]));
        result.add_term(Monomial::from_entries(std::move(entries)), 1);
    }

    // position of value v in rest
    static bool is_left_descent(const std::vector<int>& rest_inv, int k)
    {
        return rest_inv[static_cast<std::size_t>(k)] > rest_inv[static_cast<std::size_t>(k + 1)];
    }

    void visit(int row, int col, std::vector<int>& rest, std::vector<int>& rest_inv, int remaining)
    {
        if (remaining == 0) {
            record();
            return;
        }
        if (col < 1) {
            // row finished: the rest only uses letters > row, so it fixes 1..row
            if (rest[static_cast<std::size_t>(row)] != row)
                return;
            if (row + 1 >= n)
                return;
            visit(row + 1, n - row - 1, rest, rest_inv, remaining);
            return;
        }
        const int k = row + col - 1;
        if (is_left_descent(rest_inv, k)) {
            // rest <- s_k rest: swap values k and k+1
            const int pk = rest_inv[static_cast<std::size_t>(k)], pk1 = rest_inv[static_cast<std::size_t>(k + 1)];
            std::swap(rest[static_cast<std::size_t>(pk)], rest[static_cast<std::size_t>(pk1)]);
            std::swap(rest_inv[static_cast<std::size_t>(k)], rest_inv[static_cast<std::size_t>(k + 1)]);
            ++row_count[static_cast<std::size_t>(row)];
            visit(row, col - 1, rest, rest_inv, remaining - 1);
            --row_count[static_cast<std::size_t>(row)];
            std::swap(rest_inv[static_cast<std::size_t>(k)], rest_inv[static_cast<std::size_t>(k + 1)]);
            std::swap(rest[static_cast<std::size_t>(pk)], rest[static_cast<std::size_t>(pk1)]);
        }
        visit(row, col - 1, rest, rest_inv, remaining);
    }
};

} // namespace

Polynomial schubert_poly_oracle(const Permutation& w)
{
    const int n = w.size();
    if (n == 0)
        throw std::invalid_argument("schubert_poly_oracle: empty permutation");
    PipeDreamSearch search{n, VariableSpace::make(n), Polynomial(VariableSpace::make(n)),
                           std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    // 1-based arrays: rest[p] = value at position p, rest_inv[v] = position of v
    std::vector<int> rest(static_cast<std::size_t>(n) + 1, 0), rest_inv(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 1; p <= n; ++p) {
        rest[static_cast<std::size_t>(p)] = w(p);
        rest_inv[static_cast<std::size_t>(w(p))] = p;
    }
    const int len = w.length();
    if (len == 0)
        return Polynomial::constant(search.space, 1);
    search.visit(1, n - 1, rest, rest_inv, len);
    return search.result;
}

bool in_gamma(const Polynomial& f, int n)
{
    if (!f.uses_only(Family::x))
        throw std::invalid_argument("in_gamma: polynomial involves non-x variables");
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m.entries()) {
            const int i = f.space().describe(v).index;
            if (e > n - i)
                return false;
        }
    return true;
}

SchubertExpansion expand_in_schubert_basis(const Polynomial& f, int n, SchubertCache& cache)
{
    if (n < 1)
        throw std::invalid_argument("expand_in_schubert_basis: n must be >= 1");
    if (!in_gamma(f, n))
        throw std::invalid_argument("expand_in_schubert_basis: polynomial is not in the span of x^c with c_i <= n-i");

    SchubertExpansion out;
    out.n = n;
    Polynomial rest = f.rebase(VariableSpace::make(n));
    while (!rest.is_zero()) {
        const auto& [lead, coeff] = rest.leading_term();
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (const auto& [v, e] : lead.entries())
            c[v] = e;
        for (int i = 0; i < n; ++i)
            if (c[static_cast<std::size_t>(i)] > n - 1 - i)
                throw std::logic_error("expand_in_schubert_basis: residual leading exponent is not a Lehmer code");
        const Permutation w = Permutation::from_code(c);
        const Integer k = coeff;
        rest -= cache.get(w).scale(k);
        out.coeffs[w] += k;
        if (out.coeffs[w] == 0)
            out.coeffs.erase(w);
    }
    return out;
}

Polynomial reconstruct(const SchubertExpansion& expansion, SchubertCache& cache)
{
    Polynomial out(VariableSpace::make(expansion.n));
    for (const auto& [w, c] : expansion.coeffs)
        out += cache.get(w).scale(c);
    return out;
}

} // namespace schubfact
