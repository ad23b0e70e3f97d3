#include "schubfact/verifier.hpp"

#include "schubfact/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

namespace schubfact {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<MismatchWitness> find_witness(const Polynomial& lhs, const Polynomial& rhs)
{
    const Polynomial diff = lhs - rhs;
    if (diff.is_zero())
        return std::nullopt;
    const Monomial& m = diff.leading_term().first;
    return MismatchWitness{m.is_one() ? "1" : monomial_to_string(diff.space(), m), lhs.coefficient(m),
                           rhs.coefficient(m)};
}

// The binomial bound k <= 2 nu_i + mu_i - j only differs from
// k <= nu_{i+1} - j on a block after the first with at least one binomial.
bool bound_matters(const Composition& mu)
{
    for (int b = 2; b <= mu.blocks(); ++b)
        if (mu.part(b) >= 3)
            return true;
    return false;
}

std::vector<std::string> convention_flags(const Composition& mu, WFamily family)
{
    std::vector<std::string> flags;
    if (bound_matters(mu))
        flags.emplace_back("binomial bound k <= 2nu_i+mu_i-j used; k <= nu_{i+1}-j would drop factors");
    if (family == WFamily::symplectic && mu.blocks() > 1)
        flags.emplace_back("symplectic block letters descend across blocks");
    return flags;
}

} // namespace

Polynomial lhs_sum(std::span<const Permutation> members, int n, SchubertCache& cache)
{
    Polynomial out(VariableSpace::make(n));
    for (const Permutation& w : members) {
        if (w.size() != n)
            throw std::invalid_argument("lhs_sum: member " + w.to_string() + " is not in S_" + std::to_string(n));
        out += cache.get(w);
    }
    return out;
}

Polynomial lhs_sum(const WSet& wset, SchubertCache& cache)
{
    return lhs_sum(wset.members, wset.mu.total(), cache);
}

Polynomial product_side(const Composition& mu, WFamily family)
{
    return family == WFamily::orthogonal ? rhs_orthogonal(mu) : rhs_symplectic(mu);
}

IdentityReport verify_members(const Composition& mu, WFamily family, std::span<const Permutation> members)
{
    const auto start = Clock::now();
    const int n = mu.total();
    IdentityReport report;
    report.family = family;
    report.mu = mu;
    report.kind = "candidate";
    report.lhs_support_size = members.size();

    const Polynomial lhs = lhs_sum(members, n);
    const Polynomial rhs = product_side(mu, family);
    report.degree = rhs.total_degree();
    report.lhs_degree = lhs.total_degree();
    report.witness = find_witness(lhs, rhs);
    const bool equal = !report.witness.has_value();
    ++report.checks;

    const bool gamma = in_gamma(rhs, n);
    ++report.checks;
    bool support_ok = false;
    if (gamma) {
        const SchubertExpansion expansion = expand_in_schubert_basis(rhs, n);
        std::set<Permutation> expected(members.begin(), members.end());
        support_ok = expansion.coeffs.size() == expected.size() &&
                     std::all_of(expansion.coeffs.begin(), expansion.coeffs.end(), [&](const auto& kv) {
                         return kv.second == 1 && expected.contains(kv.first);
                     });
        ++report.checks;
    }
    if (!gamma)
        report.flags.emplace_back("product side is not in Gamma");
    if (!support_ok)
        report.flags.emplace_back("Schubert expansion of the product side differs from the member set");
    if (report.degree != report.lhs_degree)
        report.flags.emplace_back("degree mismatch: sum has degree " + std::to_string(report.lhs_degree) +
                                  ", product has degree " + std::to_string(report.degree));
    report.pass = equal && gamma && support_ok;
    report.ms = elapsed_ms(start);
    return report;
}

std::vector<Permutation> printed_symplectic_2_4()
{
    return {Permutation::parse("123564"), Permutation::parse("125346")};
}

IdentityReport verify_identity(const Composition& mu, WFamily family)
{
    const auto start = Clock::now();
    const WSet wset = w_set(mu, family);
    IdentityReport report = verify_members(mu, family, wset.members);
    report.kind = "identity";
    for (auto& f : convention_flags(mu, family))
        report.flags.push_back(std::move(f));
    if (family == WFamily::symplectic && mu == Composition({2, 4})) {
        const IdentityReport printed = verify_members(mu, family, printed_symplectic_2_4());
        report.flags.push_back(std::string("printed W'_(2,4) = {123564, 125346} ") +
                               (printed.pass ? "passes" : "fails") + " (degree " +
                               std::to_string(printed.lhs_degree) + " vs " + std::to_string(printed.degree) + ")");
    }
    report.ms = elapsed_ms(start);
    return report;
}

IdentityReport verify_equivariant_suite(const Composition& mu, WFamily family)
{
    const auto start = Clock::now();
    if (family == WFamily::symplectic && !mu.all_parts_even())
        throw std::invalid_argument("verify_equivariant_suite: composition " + mu.to_string() + " has an odd part");
    const int n = mu.total();
    IdentityReport report;
    report.family = family;
    report.mu = mu;
    report.kind = "equivariant";
    bool ok = true;

    // Localization of the normal-bundle Chern class at every fixed point.
    const FactoredPolynomial chern = chern_class_full_torus(mu);
    const Polynomial chern_expanded = chern.expand();
    std::size_t points = 0;
    for (const Permutation& w : all_permutations(n)) {
        Polynomial restricted(chern.space_ptr());
        if (n <= 5) {
            restricted = restrict_at(w, chern_expanded);
        } else {
            // factor by factor; restriction is a ring homomorphism
            restricted = Polynomial::constant(chern.space_ptr(), chern.scalar());
            for (const auto& [form, mult] : chern.factors())
                restricted *= restrict_at(w, form).pow(mult);
        }
        ++points;
        if (!(restricted == weight_product(mu, w))) {
            ok = false;
            report.flags.push_back("localization fails at w = " + w.to_string());
            break;
        }
    }
    report.checks += points;
    report.flags.push_back(std::to_string(points) + " restriction points checked");

    // Torus-coordinate restriction of h_mu(x,y) is h_mu(x,y,z).
    const Polynomial h_xyz = h_mu_xyz(mu).expand();
    if (!(restrict_torus_coordinates(mu, chern_expanded) == h_xyz)) {
        ok = false;
        report.flags.emplace_back("rho(h_mu(x,y)) differs from h_mu(x,y,z)");
    }
    ++report.checks;

    // Base classes factor blockwise.
    std::set<int> sizes(mu.parts().begin(), mu.parts().end());
    for (int m : sizes) {
        const Composition single({m});
        bool factor_ok = false;
        if (family == WFamily::orthogonal) {
            Polynomial fg = f_block(single, 1).expand() * g_block(single, 1).expand();
            factor_ok = base_class_orthogonal(m).expand() == fg.scale(Integer(1) << (m / 2));
        } else {
            factor_ok = base_class_symplectic(m).expand() == g_block(single, 1).expand();
        }
        ++report.checks;
        if (!factor_ok) {
            ok = false;
            report.flags.push_back("base class of size " + std::to_string(m) + " does not factor");
        }
    }

    // y, z -> 0 recovers the ordinary product side.
    const FactoredPolynomial cls =
        family == WFamily::orthogonal ? class_orthogonal_equivariant(mu) : class_symplectic_equivariant(mu);
    const Polynomial expanded = cls.expand();
    const Polynomial ordinary = specialize_to_ordinary(expanded);
    const Polynomial expected = family == WFamily::orthogonal
                                    ? rhs_orthogonal(mu).scale(Integer(1) << mu.half_weight())
                                    : rhs_symplectic(mu);
    report.witness = find_witness(ordinary, expected);
    if (report.witness) {
        ok = false;
        report.flags.emplace_back("specialization y,z -> 0 differs from the ordinary class");
    }
    ++report.checks;

    report.degree = expanded.total_degree();
    report.lhs_degree = ordinary.total_degree();
    report.pass = ok;
    report.ms = elapsed_ms(start);
    return report;
}

bool SweepResult::all_pass() const
{
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

SweepResult sweep(int n_max, WFamily family, int threads)
{
    if (n_max < 1)
        throw std::invalid_argument("sweep needs n >= 1");
    const auto compositions = enumerate_compositions(n_max, family == WFamily::symplectic);
    SweepResult result;
    result.family = family;
    result.n = n_max;
    result.reports.resize(compositions.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < compositions.size(); k = next++)
            result.reports[k] = verify_identity(compositions[k], family);
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(compositions.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }

    if (family == WFamily::symplectic) {
        IdentityReport printed = verify_members(Composition({2, 4}), family, printed_symplectic_2_4());
        printed.flags.emplace_back("known discrepancy: printed W'_(2,4) with ascending letter blocks");
        result.known_discrepancies.push_back(std::move(printed));
    }
    return result;
}

} // namespace schubfact
