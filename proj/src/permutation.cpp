#include "schubfact/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schubfact {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    const int n = size();
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative permutation size");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation Permutation::longest(int n)
{
    if (n < 1)
        throw std::invalid_argument("longest element needs n >= 1");
    Permutation p = identity(n);
    std::reverse(p.word_.begin(), p.word_.end());
    return p;
}

Permutation Permutation::from_code(std::span<const int> code)
{
    const int n = static_cast<int>(code.size());
    std::vector<int> avail(code.size());
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    w.reserve(code.size());
    for (int i = 0; i < n; ++i) {
        const int c = code[static_cast<std::size_t>(i)];
        if (c < 0 || c > n - 1 - i)
            throw std::invalid_argument("invalid Lehmer code entry at position " + std::to_string(i + 1));
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
            word.push_back(ch - '0');
        }
    } else {
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
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
                throw std::invalid_argument("bad permutation entry '" + std::string(tok) + "'");
            word.push_back(v);
            pos = end + 1;
        }
    }
    if (word.empty())
        throw std::invalid_argument("empty permutation");
    return Permutation(std::move(word));
}

int Permutation::length() const
{
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j])
                ++inv;
    return inv;
}

std::vector<int> Permutation::code() const
{
    std::vector<int> c(word_.size(), 0);
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[j] < word_[i])
                ++c[i];
    return c;
}

Permutation Permutation::right_multiply_simple(int i) const
{
    if (i < 1 || i >= size())
        throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range for S_" +
                                std::to_string(size()));
    Permutation p = *this;
    std::swap(p.word_[static_cast<std::size_t>(i - 1)], p.word_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::left_multiply_simple(int i) const
{
    if (i < 1 || i >= size())
        throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range for S_" +
                                std::to_string(size()));
    Permutation p = *this;
    for (int& v : p.word_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return p;
}

Permutation Permutation::inverse() const
{
    Permutation p = *this;
    for (std::size_t i = 0; i < word_.size(); ++i)
        p.word_[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return p;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::string out;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!digits && i > 0)
            out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Permutation compose(const Permutation& u, const Permutation& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i)
        w[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept
{
    std::size_t h = static_cast<std::size_t>(w.size());
    for (int v : w.word())
        h = h * 31 + static_cast<std::size_t>(v);
    return h;
}

} // namespace schubfact
