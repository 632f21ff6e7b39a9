#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigencomp/perm_core.hpp"

namespace eigencomp {

/// A permutation with some of its non-max LIT entries marked.
struct MarkedPermutation {
    Permutation base;
    /// Marked entry values, ascending.
    std::vector<Entry> marks;

    friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;
    friend auto operator<=>(const MarkedPermutation&, const MarkedPermutation&) = default;
};

/// Throws InvalidInput unless marks are distinct, sorted, non-max LIT entries of base.
void validate_marks(const MarkedPermutation& m);

/// p with every legal mark set, in binary counting order of the non-max LIT entries.
std::vector<MarkedPermutation> all_markings(const Permutation& p);

/**
 * A standard permutation with stars. A star sits either immediately before
 * an LIT entry or right after the maximum; several stars may share a spot.
 */
struct StarredPermutation {
    Permutation base;
    /// Number of stars immediately before each position (same length as base).
    std::vector<unsigned> stars_before;
    unsigned stars_after_max = 0;

    unsigned star_count() const;

    friend bool operator==(const StarredPermutation&, const StarredPermutation&) = default;
};

using PermList = std::vector<Permutation>;
using BitSequence = std::vector<std::uint8_t>;

/// True iff sigma and tau are 3(5)241-OK and every sigma entry above min(tau) is LIT in sigma.
bool theorem4_holds(std::span<const Entry> sigma, std::span<const Entry> tau);

struct StarEncoding {
    Permutation rho;
    StarredPermutation starred;
};

/**
 * Split p = sigma n tau. rho = reduce(tau); each tau value becomes a star
 * before the smallest sigma entry above it (or after max(sigma)), and sigma
 * is reduced with the stars left in place.
 */
StarEncoding star_encode(const Permutation& p);
Permutation star_decode(const Permutation& rho, const StarredPermutation& starred);

struct CollapsedStars {
    MarkedPermutation marked;
    /// One symbol per star plus one for the maximum; ones at marks and at the maximum.
    BitSequence bits;
};

/// Throws InvalidInput for an empty base or a star in an illegal spot.
CollapsedStars collapse_stars(const StarredPermutation& starred);
StarredPermutation expand_stars(const MarkedPermutation& marked, std::span<const std::uint8_t> bits);

struct SortReduction {
    /// Same marks, every LRmax tail sorted ascending.
    MarkedPermutation sorted;
    /// Position of each LRmax entry, and the tail that followed it in the input.
    std::vector<std::size_t> factor_starts;
    std::vector<std::vector<Entry>> original_tails;
};

SortReduction sort_reduce(const MarkedPermutation& p);

/// Half-open position range [begin, end) of whole LRmax factors.
struct Pane {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Pane&, const Pane&) = default;
};

/// Every intermediate of the moving-window construction.
struct PaneDecomposition {
    std::vector<Pane> initial_panes;
    /// LRmax entry or empty (the empty-set symbol), in order of generation.
    std::vector<std::optional<Entry>> associations;
    /// Associations last-generated first, then the initial pane starts ascending.
    std::vector<std::optional<Entry>> insertion_list;
    /// The k-row array, each row read left to right.
    std::vector<std::vector<std::optional<Entry>>> array;
    /// Panes named by each row's LRmax entries, left to right.
    std::vector<std::vector<Pane>> rows;
};

/// Requires a 321-avoiding base with legal marks.
PaneDecomposition decompose_panes(const MarkedPermutation& q);

PermList window_forward(const MarkedPermutation& q);
MarkedPermutation window_inverse(const PermList& v);

PermList theorem6_forward(const MarkedPermutation& p);
MarkedPermutation theorem6_inverse(const PermList& v);

struct EigenPair {
    Permutation rho;
    /// k possibly-empty 3(5)241-OK permutations; k = |rho| + 1.
    PermList items;

    friend bool operator==(const EigenPair&, const EigenPair&) = default;
    friend auto operator<=>(const EigenPair&, const EigenPair&) = default;
};

/// A_n -> pairs (rho in A_{k-1}, k-list of total length n-k).
EigenPair eigen_forward(const Permutation& p);
Permutation eigen_inverse(const EigenPair& pair);

} // namespace eigencomp
