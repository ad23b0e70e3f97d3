#include "schubfact/factored.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubfact {

FactoredPolynomial::FactoredPolynomial(SpacePtr space) : space_(std::move(space))
{
    if (!space_)
        throw std::invalid_argument("factored polynomial needs a variable space");
}

void FactoredPolynomial::add_factor(const Polynomial& form, int multiplicity)
{
    if (!(form.space() == *space_))
        throw std::invalid_argument("add_factor: variable-space mismatch");
    if (form.total_degree() > 1)
        throw std::invalid_argument("add_factor: factor is not linear");
    if (multiplicity <= 0)
        return;
    if (form.total_degree() <= 0) {
        Integer c = form.is_zero() ? Integer(0) : form.terms().begin()->second;
        for (int k = 0; k < multiplicity; ++k)
            scalar_ *= c;
        return;
    }
    for (auto& [f, m] : factors_)
        if (f == form) {
            m += multiplicity;
            return;
        }
    factors_.emplace_back(form, multiplicity);
}

void FactoredPolynomial::append(const FactoredPolynomial& other)
{
    scalar_ *= other.scalar_;
    for (const auto& [f, m] : other.factors_)
        add_factor(f, m);
}

int FactoredPolynomial::factor_count() const
{
    int count = 0;
    for (const auto& [f, m] : factors_)
        count += m;
    return count;
}

Polynomial FactoredPolynomial::expand() const
{
    Polynomial out = Polynomial::constant(space_, scalar_);
    for (const auto& [f, m] : factors_)
        for (int k = 0; k < m; ++k)
            out *= f;
    return out;
}

std::string linear_form_to_string(const Polynomial& form)
{
    if (form.is_zero())
        return "0";
    std::vector<std::pair<int, Integer>> coeffs; // (var id, coefficient); -1 for the constant
    for (const auto& [m, c] : form.terms())
        coeffs.emplace_back(m.is_one() ? form.space().size() : m.entries()[0].first, c);
    std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out;
    bool first = true;
    for (const auto& [v, c] : coeffs) {
        const bool negative = c < 0;
        const Integer mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (v == form.space().size()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + ' ';
        out += form.space().name(static_cast<VarId>(v));
    }
    return out;
}

std::string FactoredPolynomial::to_string() const
{
    if (scalar_ == 0)
        return "0";
    std::vector<std::string> parts;
    if (scalar_ != 1 || factors_.empty())
        parts.push_back(scalar_.get_str());

    auto is_single_variable = [](const Polynomial& f) {
        return f.term_count() == 1 && f.terms().begin()->second == 1 && f.terms().begin()->first.degree() == 1;
    };
    for (const auto& [f, m] : factors_) {
        if (!is_single_variable(f))
            continue;
        std::string s = f.space().name(f.terms().begin()->first.entries()[0].first);
        if (m > 1)
            s += '^' + std::to_string(m);
        parts.push_back(std::move(s));
    }
    for (const auto& [f, m] : factors_) {
        if (is_single_variable(f))
            continue;
        std::string s = '(' + linear_form_to_string(f) + ')';
        if (m > 1)
            s += '^' + std::to_string(m);
        parts.push_back(std::move(s));
    }

    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += parts[i];
    }
    return out;
}

} // namespace schubfact
