#pragma once

#include "schubfact/composition.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubfact {

using Integer = mpz_class;
using VarId = std::uint16_t;

enum class Family { x, y_full, y_block, z };

// A variable described by family and indices; `sub` is only used by
// y_block, whose variables are indexed by (block, j).
struct Variable {
    Family family;
    int index;
    int sub = 0;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// The ordered set of variables a polynomial lives in:
//   x_1..x_n, y_1..y_n, y_{i,j} (1 <= j <= floor(mu_i/2)), z_1..z_s
// in exactly that order. VarId is the position in this list.
//
// A space built from a bare size n has no blocks (s = 0) and is what plain
// x-polynomials such as Schubert polynomials use.
class VariableSpace {
public:
    static std::shared_ptr<const VariableSpace> make(int n);
    static std::shared_ptr<const VariableSpace> make(const Composition& mu);

    int n() const { return n_; }
    int blocks() const { return static_cast<int>(mu_.size()); }
    std::span<const int> mu() const { return mu_; }
    int size() const { return static_cast<int>(vars_.size()); }

    VarId x(int i) const;
    VarId y(int i) const;
    VarId y_block(int block, int j) const;
    VarId z(int block) const;

    const Variable& describe(VarId id) const { return vars_.at(id); }
    std::string name(VarId id) const;
    std::optional<VarId> lookup(const Variable& v) const;
    std::optional<VarId> lookup(std::string_view name) const;

    bool is_x(VarId id) const { return id < n_; }

    friend bool operator==(const VariableSpace& a, const VariableSpace& b)
    {
        return a.n_ == b.n_ && a.mu_ == b.mu_;
    }

    VariableSpace(int n, std::vector<int> mu);

private:
    int n_ = 0;
    std::vector<int> mu_;
    std::vector<Variable> vars_;
    std::vector<int> y_block_offset_; // first y_block id of each block
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

// Sparse exponent vector: (variable, exponent) pairs sorted by variable id,
// exponents strictly positive.
class Monomial {
public:
    using Entry = std::pair<VarId, std::uint16_t>;

    Monomial() = default;
    static Monomial from_entries(std::vector<Entry> entries);
    static Monomial variable(VarId v, int e = 1);

    std::span<const Entry> entries() const { return entries_; }
    int exponent(VarId v) const;
    int degree() const;
    bool is_one() const { return entries_.empty(); }
    Monomial with_exponent(VarId v, int e) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

// Canonical monomial order. Graded on the x-variables, then x-exponents are
// compared from x_n down to x_1 with the larger exponent winning, so that
// x^{code(w)} is the largest monomial of the Schubert polynomial of w. Ties
// are broken the same way on the remaining families.
struct MonomialOrder {
    int x_count = 0;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact sparse polynomial with arbitrary-precision integer coefficients over
// a VariableSpace. Terms are kept in ascending canonical order and no stored
// coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;
    using Substitution = std::map<VarId, Polynomial>;

    explicit Polynomial(SpacePtr space);
    static Polynomial constant(SpacePtr space, const Integer& c);
    static Polynomial variable(SpacePtr space, VarId v);
    static Polynomial term(SpacePtr space, Monomial m, const Integer& c);

    const SpacePtr& space_ptr() const { return space_; }
    const VariableSpace& space() const { return *space_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    Integer coefficient(const Monomial& m) const;

    // Largest term in the canonical order. Throws std::logic_error on zero.
    const TermMap::value_type& leading_term() const;

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    Polynomial scale(const Integer& k) const;
    Polynomial pow(int e) const;

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f) { return f.scale(-1); }

    // Adds c * m in place.
    void add_term(const Monomial& m, const Integer& c);

    // f with x_i and x_{i+1} exchanged.
    Polynomial swap_x(int i) const;

    // (f - s_i f) / (x_i - x_{i+1}); variables other than x_i, x_{i+1} are
    // constants. Throws std::out_of_range unless 1 <= i < n.
    Polynomial divided_difference(int i) const;

    // Ring homomorphism extending the assignment; unassigned variables map to
    // themselves. Every target must live in this polynomial's space.
    Polynomial substitute(const Substitution& assignment) const;

    // Same polynomial read in another space, matching variables by family
    // and indices. Throws std::invalid_argument if a used variable is absent.
    Polynomial rebase(SpacePtr target) const;

    // True iff every variable with nonzero exponent belongs to `family`.
    bool uses_only(Family family) const;

    // Value at an integer point indexed by VarId.
    Integer evaluate(std::span<const Integer> point) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& f, const Polynomial& g);

private:
    void require_same_space(const Polynomial& g, const char* op) const;

    SpacePtr space_;
    TermMap terms_;
};

// Product of polynomials of total degree <= 1; the empty product is 1.
// Throws std::invalid_argument on a non-linear form or an empty list without
// a space.
Polynomial product_of_linear_forms(std::span<const Polynomial> forms, SpacePtr space = nullptr);

std::string monomial_to_string(const VariableSpace& space, const Monomial& m);

} // namespace schubfact
