#include "schubfact/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace schubfact {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::invalid_argument("composition needs at least one part");
    nu_.assign(1, 0);
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
        nu_.push_back(nu_.back() + p);
    }
}

Composition Composition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad composition part '" + std::string(tok) + "'");
        parts.push_back(v);
        pos = end + 1;
    }
    return Composition(std::move(parts));
}

int Composition::part(int b) const
{
    if (b < 1 || b > blocks())
        throw std::out_of_range("block index " + std::to_string(b) + " out of range");
    return parts_[static_cast<std::size_t>(b - 1)];
}

int Composition::nu(int b) const
{
    if (b < 1 || b > blocks() + 1)
        throw std::out_of_range("nu index " + std::to_string(b) + " out of range");
    return nu_[static_cast<std::size_t>(b - 1)];
}

void Composition::check_position(int i) const
{
    if (i < 1 || i > total())
        throw std::out_of_range("position " + std::to_string(i) + " outside 1.." + std::to_string(total()));
}

int Composition::block_of(int i) const
{
    check_position(i);
    // smallest b with nu(b+1) >= i
    auto it = std::lower_bound(nu_.begin() + 1, nu_.end(), i);
    return static_cast<int>(it - nu_.begin());
}

int Composition::right_mass(int i) const
{
    return total() - nu(block_of(i) + 1);
}

int Composition::first_half_flag(int i) const
{
    const int b = block_of(i);
    return (i - nu(b)) <= part(b) / 2 ? 1 : 0;
}

int Composition::half_weight() const
{
    int d = 0;
    for (int p : parts_)
        d += p / 2;
    return d;
}

bool Composition::all_parts_even() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string Composition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Composition> enumerate_compositions(int n, bool even_parts_only)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_compositions needs n >= 1");
    if (even_parts_only && n % 2 != 0)
        throw std::invalid_argument("no composition of an odd number into even parts");

    const int step = even_parts_only ? 2 : 1;
    std::vector<std::vector<int>> all;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int remaining) {
        if (remaining == 0) {
            all.push_back(current);
            return;
        }
        for (int p = remaining - (remaining % step); p >= step; p -= step) {
            current.push_back(p);
            extend(remaining - p);
            current.pop_back();
        }
    };
    extend(n);
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<Composition> out;
    out.reserve(all.size());
    for (auto& parts : all)
        out.emplace_back(std::move(parts));
    return out;
}

} // namespace schubfact
