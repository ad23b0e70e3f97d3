#include "schubfact/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace schubfact {

// ---------------------------------------------------------------- spaces

VariableSpace::VariableSpace(int n, std::vector<int> mu) : n_(n), mu_(std::move(mu))
{
    if (n_ < 1)
        throw std::invalid_argument("variable space needs n >= 1");
    for (int i = 1; i <= n_; ++i)
        vars_.push_back({Family::x, i});
    for (int i = 1; i <= n_; ++i)
        vars_.push_back({Family::y_full, i});
    for (std::size_t b = 0; b < mu_.size(); ++b) {
        y_block_offset_.push_back(static_cast<int>(vars_.size()));
        for (int j = 1; j <= mu_[b] / 2; ++j)
            vars_.push_back({Family::y_block, static_cast<int>(b) + 1, j});
    }
    for (std::size_t b = 0; b < mu_.size(); ++b)
        vars_.push_back({Family::z, static_cast<int>(b) + 1});
    if (vars_.size() > 0xFFFF)
        throw std::invalid_argument("variable space too large");
}

namespace {

SpacePtr cached_space(int n, std::vector<int> mu)
{
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, SpacePtr> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(n, mu);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto space = std::make_shared<const VariableSpace>(n, std::move(mu));
    cache.emplace(std::move(key), space);
    return space;
}

} // namespace

SpacePtr VariableSpace::make(int n)
{
    return cached_space(n, {});
}

SpacePtr VariableSpace::make(const Composition& mu)
{
    return cached_space(mu.total(), std::vector<int>(mu.parts().begin(), mu.parts().end()));
}

VarId VariableSpace::x(int i) const
{
    if (i < 1 || i > n_)
        throw std::out_of_range("x index " + std::to_string(i) + " out of range");
    return static_cast<VarId>(i - 1);
}

VarId VariableSpace::y(int i) const
{
    if (i < 1 || i > n_)
        throw std::out_of_range("y index " + std::to_string(i) + " out of range");
    return static_cast<VarId>(n_ + i - 1);
}

VarId VariableSpace::y_block(int block, int j) const
{
    if (block < 1 || block > blocks() || j < 1 || j > mu_[static_cast<std::size_t>(block - 1)] / 2)
        throw std::out_of_range("y_block index (" + std::to_string(block) + "," + std::to_string(j) +
                                ") out of range");
    return static_cast<VarId>(y_block_offset_[static_cast<std::size_t>(block - 1)] + j - 1);
}

VarId VariableSpace::z(int block) const
{
    if (block < 1 || block > blocks())
        throw std::out_of_range("z index " + std::to_string(block) + " out of range");
    return static_cast<VarId>(size() - blocks() + block - 1);
}

std::string VariableSpace::name(VarId id) const
{
    const Variable& v = describe(id);
    switch (v.family) {
    case Family::x:
        return "x" + std::to_string(v.index);
    case Family::y_full:
        return "y" + std::to_string(v.index);
    case Family::y_block:
        return "y" + std::to_string(v.index) + "_" + std::to_string(v.sub);
    case Family::z:
        return "z" + std::to_string(v.index);
    }
    return "?";
}

std::optional<VarId> VariableSpace::lookup(const Variable& v) const
{
    for (std::size_t id = 0; id < vars_.size(); ++id)
        if (vars_[id] == v)
            return static_cast<VarId>(id);
    return std::nullopt;
}

std::optional<VarId> VariableSpace::lookup(std::string_view name) const
{
    for (std::size_t id = 0; id < vars_.size(); ++id)
        if (this->name(static_cast<VarId>(id)) == name)
            return static_cast<VarId>(id);
    return std::nullopt;
}

// ------------------------------------------------------------- monomials

Monomial Monomial::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end());
    std::vector<Entry> merged;
    for (const auto& [v, e] : entries) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second = static_cast<std::uint16_t>(merged.back().second + e);
        else
            merged.emplace_back(v, e);
    }
    std::erase_if(merged, [](const Entry& en) { return en.second == 0; });
    Monomial m;
    m.entries_ = std::move(merged);
    return m;
}

Monomial Monomial::variable(VarId v, int e)
{
    Monomial m;
    if (e > 0)
        m.entries_.emplace_back(v, static_cast<std::uint16_t>(e));
    return m;
}

int Monomial::exponent(VarId v) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& en, VarId id) { return en.first < id; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& en : entries_)
        d += en.second;
    return d;
}

Monomial Monomial::with_exponent(VarId v, int e) const
{
    Monomial m = *this;
    auto it = std::lower_bound(m.entries_.begin(), m.entries_.end(), v,
                               [](const Entry& en, VarId id) { return en.first < id; });
    if (it != m.entries_.end() && it->first == v) {
        if (e == 0)
            m.entries_.erase(it);
        else
            it->second = static_cast<std::uint16_t>(e);
    } else if (e != 0) {
        m.entries_.insert(it, Entry{v, static_cast<std::uint16_t>(e)});
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first < j->first)
            m.entries_.push_back(*i++);
        else if (j->first < i->first)
            m.entries_.push_back(*j++);
        else {
            m.entries_.emplace_back(i->first, static_cast<std::uint16_t>(i->second + j->second));
            ++i;
            ++j;
        }
    }
    m.entries_.insert(m.entries_.end(), i, a.entries_.end());
    m.entries_.insert(m.entries_.end(), j, b.entries_.end());
    return m;
}

namespace {

using EntrySpan = std::span<const Monomial::Entry>;

int degree_of(EntrySpan s)
{
    int d = 0;
    for (const auto& en : s)
        d += en.second;
    return d;
}

// Scan from the highest variable down; the larger exponent wins.
int compare_from_top(EntrySpan a, EntrySpan b)
{
    auto i = a.size();
    auto j = b.size();
    while (i > 0 && j > 0) {
        const auto& ea = a[i - 1];
        const auto& eb = b[j - 1];
        if (ea.first != eb.first)
            return ea.first > eb.first ? 1 : -1;
        if (ea.second != eb.second)
            return ea.second > eb.second ? 1 : -1;
        --i;
        --j;
    }
    if (i > 0)
        return 1;
    if (j > 0)
        return -1;
    return 0;
}

std::size_t split_point(EntrySpan s, int x_count)
{
    std::size_t k = 0;
    while (k < s.size() && s[k].first < x_count)
        ++k;
    return k;
}

} // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    EntrySpan ea = a.entries();
    EntrySpan eb = b.entries();
    const std::size_t pa = split_point(ea, x_count);
    const std::size_t pb = split_point(eb, x_count);
    EntrySpan xa = ea.first(pa), xb = eb.first(pb);
    EntrySpan ra = ea.subspan(pa), rb = eb.subspan(pb);

    const int dxa = degree_of(xa), dxb = degree_of(xb);
    if (dxa != dxb)
        return dxa < dxb;
    if (int c = compare_from_top(xa, xb); c != 0)
        return c < 0;
    const int dra = degree_of(ra), drb = degree_of(rb);
    if (dra != drb)
        return dra < drb;
    return compare_from_top(ra, rb) < 0;
}

// ----------------------------------------------------------- polynomials

Polynomial::Polynomial(SpacePtr space)
    : space_(std::move(space)), terms_(MonomialOrder{space_ ? space_->n() : 0})
{
    if (!space_)
        throw std::invalid_argument("polynomial needs a variable space");
}

Polynomial Polynomial::constant(SpacePtr space, const Integer& c)
{
    Polynomial p(std::move(space));
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(SpacePtr space, VarId v)
{
    if (v >= space->size())
        throw std::out_of_range("variable id out of range");
    Polynomial p(std::move(space));
    p.add_term(Monomial::variable(v), 1);
    return p;
}

Polynomial Polynomial::term(SpacePtr space, Monomial m, const Integer& c)
{
    Polynomial p(std::move(space));
    p.add_term(m, c);
    return p;
}

void Polynomial::require_same_space(const Polynomial& g, const char* op) const
{
    if (space_ != g.space_ && !(*space_ == *g.space_))
        throw std::invalid_argument(std::string(op) + ": variable-space mismatch");
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& g)
{
    require_same_space(g, "add");
    for (const auto& [m, c] : g.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g)
{
    require_same_space(g, "subtract");
    for (const auto& [m, c] : g.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
    f.require_same_space(g, "multiply");
    Polynomial out(f.space_);
    Integer prod;
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) {
            prod = cf * cg;
            out.add_term(mf * mg, prod);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& g)
{
    *this = *this * g;
    return *this;
}

Polynomial Polynomial::scale(const Integer& k) const
{
    Polynomial out(space_);
    if (k == 0)
        return out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, c * k);
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("negative power");
    Polynomial result = constant(space_, 1);
    for (int k = 0; k < e; ++k)
        result *= *this;
    return result;
}

Polynomial Polynomial::swap_x(int i) const
{
    if (i < 1 || i >= space_->n())
        throw std::out_of_range("swap_x index " + std::to_string(i) + " out of range");
    const VarId a = space_->x(i), b = space_->x(i + 1);
    Polynomial out(space_);
    for (const auto& [m, c] : terms_) {
        const int ea = m.exponent(a), eb = m.exponent(b);
        out.add_term(m.with_exponent(a, eb).with_exponent(b, ea), c);
    }
    return out;
}

Polynomial Polynomial::divided_difference(int i) const
{
    if (i < 1 || i >= space_->n())
        throw std::out_of_range("divided difference index " + std::to_string(i) + " out of range");
    const VarId a = space_->x(i), b = space_->x(i + 1);
    Polynomial out(space_);
    // Each term c x^p y^q pairs with its image c x^q y^p under s_i; the
    // difference c (x^p y^q - x^q y^p) divides by (x - y) to give
    // c x^q y^q (x^{p-q-1} + x^{p-q-2} y + ... + y^{p-q-1}) when p > q.
    for (const auto& [m, c] : terms_) {
        const int p = m.exponent(a), q = m.exponent(b);
        if (p == q)
            continue;
        const int lo = std::min(p, q), hi = std::max(p, q);
        const Integer coeff = p > q ? c : Integer(-c);
        for (int k = 0; k < hi - lo; ++k)
            out.add_term(m.with_exponent(a, lo + k).with_exponent(b, hi - 1 - k), coeff);
    }
    return out;
}

Polynomial Polynomial::substitute(const Substitution& assignment) const
{
    for (const auto& [v, target] : assignment) {
        if (v >= space_->size())
            throw std::out_of_range("substitution variable out of range");
        require_same_space(target, "substitute");
    }
    std::map<std::pair<VarId, int>, Polynomial> powers;
    auto power_of = [&](VarId v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        auto src = assignment.find(v);
        Polynomial base = src != assignment.end() ? src->second : variable(space_, v);
        return powers.emplace(key, base.pow(e)).first->second;
    };

    Polynomial out(space_);
    for (const auto& [m, c] : terms_) {
        Polynomial image = constant(space_, c);
        std::vector<Monomial::Entry> kept;
        for (const auto& [v, e] : m.entries()) {
            if (assignment.contains(v))
                image *= power_of(v, e);
            else
                kept.emplace_back(v, e);
        }
        if (!kept.empty())
            image *= term(space_, Monomial::from_entries(std::move(kept)), 1);
        out += image;
    }
    return out;
}

Polynomial Polynomial::rebase(SpacePtr target) const
{
    if (*target == *space_)
        return *this;
    std::vector<std::optional<VarId>> map(static_cast<std::size_t>(space_->size()));
    for (VarId v = 0; v < space_->size(); ++v)
        map[v] = target->lookup(space_->describe(v));
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [v, e] : m.entries()) {
            if (!map[v])
                throw std::invalid_argument("rebase: variable " + space_->name(v) + " missing in target space");
            entries.emplace_back(*map[v], e);
        }
        out.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return out;
}

bool Polynomial::uses_only(Family family) const
{
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries())
            if (space_->describe(v).family != family)
                return false;
    return true;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const
{
    if (point.size() < static_cast<std::size_t>(space_->size()))
        throw std::invalid_argument("evaluate: point has too few coordinates");
    Integer total = 0;
    Integer value, p;
    for (const auto& [m, c] : terms_) {
        value = c;
        for (const auto& [v, e] : m.entries()) {
            mpz_pow_ui(p.get_mpz_t(), point[v].get_mpz_t(), e);
            value *= p;
        }
        total += value;
    }
    return total;
}

std::string monomial_to_string(const VariableSpace& space, const Monomial& m)
{
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty())
            out += ' ';
        out += space.name(v);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + ' ';
        out += monomial_to_string(*space_, m);
    }
    return out;
}

bool operator==(const Polynomial& f, const Polynomial& g)
{
    if (!(*f.space_ == *g.space_))
        return false;
    return f.terms_.size() == g.terms_.size() && std::equal(f.terms_.begin(), f.terms_.end(), g.terms_.begin());
}

Polynomial product_of_linear_forms(std::span<const Polynomial> forms, SpacePtr space)
{
    if (forms.empty()) {
        if (!space)
            throw std::invalid_argument("empty product needs a variable space");
        return Polynomial::constant(std::move(space), 1);
    }
    Polynomial out = Polynomial::constant(space ? space : forms.front().space_ptr(), 1);
    for (const auto& f : forms) {
        if (f.total_degree() > 1)
            throw std::invalid_argument("product_of_linear_forms: factor of degree " +
                                        std::to_string(f.total_degree()));
        out *= f;
    }
    return out;
}

} // namespace schubfact
