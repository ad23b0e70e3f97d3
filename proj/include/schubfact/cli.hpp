#pragma once

#include "schubfact/composition.hpp"
#include "schubfact/permutation.hpp"
#include "schubfact/wset.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schubfact::cli {

enum class Format { text, json };

struct CliConfig {
    std::string command; // wset | schubert | formula | equivariant | expand | verify | sweep
    std::optional<Composition> mu;
    WFamily family = WFamily::orthogonal;
    std::optional<int> n;
    std::optional<Permutation> perm;
    std::optional<std::string> input; // polynomial JSON file for `expand`
    Format format = Format::text;
    int max_n = 9;
    bool expand = false;
    bool dot = false;
    bool timing = false;
    bool equivariant = false;
    int jobs = 1;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// Validates the configuration and writes the requested artifact to `out`.
// Returns exit_ok, exit_failure (a verification verdict was fail) or
// exit_usage (bad flags, family/composition mismatch, size guard).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and calls run().
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schubfact::cli
