#pragma once

#include "gallery/regions.h"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace gallery {

/// The `index`-th guard (0-based, ascending by vertex) placed in element `element`.
struct GuardRef {
    std::size_t element = 0;
    int index = 0;
    friend auto operator<=>(const GuardRef&, const GuardRef&) = default;
};

/// One structured instance: guards per element, guards per element's coverage chain,
/// and which placed guard plays each link of each chain.
struct Guess {
    std::vector<int> ig;                    // guards placed in each element
    std::vector<int> og;                    // length of each element's coverage chain
    std::vector<std::vector<GuardRef>> how; // chain of each element, og[x] entries
    friend bool operator==(const Guess&, const Guess&) = default;
};

/// Static shape of the guess space.
struct GuessSpace {
    int k = 0;
    std::vector<int> capacity;     // guards an element can hold
    std::vector<bool> reflex;      // element is a reflex vertex
    std::vector<bool> needs_cover; // element contains a vertex that must be seen
};

/// Every element can hold all its vertices and must be covered.
GuessSpace guess_space(const regions::RegionDecomposition& dec, int k);

/// Optional pruning hooks, applied while chains are built.
struct GuessFilter {
    /// Upper bound for og of a region, on top of min(k, placed guards).
    std::function<int(std::size_t element)> max_chain;
    /// Called after each chain entry is appended; false drops every chain with this prefix.
    std::function<bool(std::size_t element, std::span<const GuardRef> chain, int chain_length)> step;
};

/// Visits every guess in canonical order: ig lexicographic, then og, then how.
/// Stops early when `visit` returns false. Returns the number of guesses visited.
std::uint64_t for_each_guess(const GuessSpace& space, const GuessFilter* filter,
                             const std::function<bool(const Guess&)>& visit);

/// Counts guesses without a filter by formula (not by enumeration).
std::uint64_t count_guesses(const GuessSpace& space);

/// 1-based, human-readable one-line form.
void print_guess(std::ostream& out, const Guess& g);

}  // namespace gallery
