#pragma once

#include "schubfact/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace schubfact {

// An integer scalar times a product of linear forms, kept unexpanded so the
// product formulas can be printed the way they are usually written.
class FactoredPolynomial {
public:
    explicit FactoredPolynomial(SpacePtr space);

    const SpacePtr& space_ptr() const { return space_; }
    const Integer& scalar() const { return scalar_; }
    const std::vector<std::pair<Polynomial, int>>& factors() const { return factors_; }

    void multiply_scalar(const Integer& k) { scalar_ *= k; }

    // Throws std::invalid_argument if `form` is not of degree <= 1 or lives
    // in another space. Equal factors are merged into one power.
    void add_factor(const Polynomial& form, int multiplicity = 1);

    void append(const FactoredPolynomial& other);

    int factor_count() const;
    Polynomial expand() const;

    // e.g. "8 x1^5 x2 (x1 + x2) (x4 - y2_1 - z2)^2"
    std::string to_string() const;

private:
    SpacePtr space_;
    Integer scalar_ = 1;
    std::vector<std::pair<Polynomial, int>> factors_;
};

// Linear form with variables in id order: "x1 + x2 - 2 z1".
std::string linear_form_to_string(const Polynomial& form);

} // namespace schubfact
