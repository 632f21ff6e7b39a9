#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eigencomp/perm_core.hpp"

namespace eigencomp {

enum class SequenceLabel { catalan, bell, a051295, new4 };

std::string_view to_string(SequenceLabel label);

/// One orbit of underlined 4-patterns under reverse, complement and inverse.
struct PatternClass {
    UnderlinedPattern representative;
    std::vector<UnderlinedPattern> members;
    SequenceLabel label;
    /// Counts coincide with plain avoidance of the base 3-pattern.
    bool trivial;
    /// Census of the representative for n = 0..max_n.
    std::vector<BigInt> counts;
};

/// The 24 standard 4-permutations, each with every one of its 4 letters marked.
std::vector<UnderlinedPattern> all_underlined4();

/// Orbit of up under the group generated by the three symmetries, sorted.
std::vector<UnderlinedPattern> symmetry_orbit(const UnderlinedPattern& up);

/**
 * Partition the 96 patterns into symmetry orbits and label each by matching its
 * census for n <= max_n against the four reference sequences. Nontrivial
 * classes come first, in the column order of the reference table, followed by
 * the trivial ones. Throws ClassificationFailure if a census matches nothing.
 */
std::vector<PatternClass> classify(unsigned max_n = 7);

/// Expected nontrivial classes, one column each, representative first.
struct ReferenceColumn {
    std::vector<std::string_view> members;
    SequenceLabel label;
};
const std::array<ReferenceColumn, 5>& reference_table();

/// Human-readable differences between computed nontrivial orbits and reference_table().
std::vector<std::string> compare_with_reference(const std::vector<PatternClass>& classes);

/// Aligned text table: nontrivial classes as columns, labels underneath, trivial summary after.
std::string render_classification(const std::vector<PatternClass>& classes);

/// A set partition of [n]; blocks sorted ascending internally, ordered by largest element.
class SetPartition {
public:
    /// Throws InvalidInput unless the blocks are nonempty, disjoint and cover 1..n.
    explicit SetPartition(std::vector<std::vector<Entry>> blocks);

    const std::vector<std::vector<Entry>>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return n_; }

    /// Largest entry first, rest ascending: "412-6-735".
    std::string canonical_increasing() const;
    /// Each block descending: "421-6-753".
    std::string canonical_decreasing() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<std::vector<Entry>> blocks_;
    std::size_t n_ = 0;
};

/// LRmax factors of a 32(4)1-OK permutation as blocks.
SetPartition to_partition_increasing(const Permutation& p);
Permutation from_partition_increasing(const SetPartition& partition);

/// LRmax factors of a 31(4)2-OK permutation as blocks.
SetPartition to_partition_decreasing(const Permutation& p);
Permutation from_partition_decreasing(const SetPartition& partition);

/// u_0..u_N with u_n = sum_{k=1}^n u_{k-1} (n-k)!.
std::vector<BigInt> a051295_seq(std::size_t n_max);

/// Number of (1)342-OK permutations of [n] with entry 1 at position k (brute force).
BigInt u_nk(unsigned n, unsigned k, const CensusOptions& options = {});
/// u_{n,1}..u_{n,n} in one pass over the permutations of [n]; index 0 unused.
std::vector<BigInt> u_row(unsigned n, const CensusOptions& options = {});
/// [x^n] x^k (sum_m m! x^m)^k.
BigInt u_nk_series(unsigned n, unsigned k);

BigInt factorial(unsigned n);
/// k (k+1) ... (k+i-1); 1 when i = 0.
BigInt rising_factorial(long long k, unsigned i);
/// m (m-1) ... (m-j+1); 1 when j = 0, 0 when j > m >= 0.
BigInt falling_factorial(long long m, unsigned j);

/// (n-1)! + sum_{k<=n-2} sum_{i+j<=n-2-k} k^(i rising) (n-2-k)^(j falling); term 0 is 1.
std::vector<BigInt> new_seq(std::size_t n_max);

/// m1 L1 ... mr Lr (left-to-right minima) -> m1 ... mr Lr ... L1. Requires (1)324-OK input.
Permutation wilf_map(const Permutation& p);

/// Every 342 whose "4" and "2" are adjacent extends to a 3142.
bool patience_ok(std::span<const Entry> p);

} // namespace eigencomp
