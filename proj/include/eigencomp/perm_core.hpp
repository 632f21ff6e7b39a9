#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eigencomp {

using BigInt = mpz_class;
using Entry = std::int64_t;

/**
 * A word of pairwise distinct positive integers.
 *
 * Most pattern questions only depend on relative order, so the free functions
 * below accept any such word as a span; the class exists to carry the
 * distinctness invariant across API boundaries.
 */
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidInput on a non-positive or repeated entry.
    explicit Permutation(std::vector<Entry> entries);
    Permutation(std::initializer_list<Entry> entries);

    static Permutation identity(std::size_t n);

    std::span<const Entry> entries() const noexcept { return entries_; }
    const std::vector<Entry>& to_vector() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Entry operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// True iff the entries are exactly 1..n. The empty permutation is standard.
    bool is_standard() const;
    /// Largest entry, 0 for the empty permutation.
    Entry max() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Entry> entries_;
};

/// Rank-relabel a word of distinct integers onto 1..n.
Permutation reduce(std::span<const Entry> word);

struct LRMaxFactor {
    Entry max_entry = 0;
    std::vector<Entry> tail;
};

/// p = m1 L1 m2 L2 ... mr Lr with m1 < ... < mr the left-to-right maxima.
struct LRMaxFactorization {
    std::vector<LRMaxFactor> factors;
    /// Index of the first factor whose maximum is an LIT entry (factors.size() if none).
    std::size_t lit_start = 0;
    /// LIT entries in increasing order.
    std::vector<Entry> lit;
};

LRMaxFactorization lrmax_factorize(std::span<const Entry> p);

/// Positions of the left-to-right maxima.
std::vector<std::size_t> lrmax_positions(std::span<const Entry> p);

/// Per-position flag: is this entry a left-to-right maximum.
std::vector<bool> lrmax_flags(std::span<const Entry> p);

/**
 * Position of the first LIT (longest increasing terminal) entry. The LIT
 * entries are the values v..max that occur in increasing order, with v as
 * small as possible. Returns p.size() for the empty word.
 */
std::size_t lit_start_position(std::span<const Entry> p);

/// Positions of the LIT entries, in increasing order.
std::vector<std::size_t> lit_positions(std::span<const Entry> p);

enum class Symmetry { complement, reverse, inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry g);
/// Applies the generators left to right. Throws InvalidInput unless p is standard.
Permutation apply_symmetry(const Permutation& p, std::span<const Symmetry> word);

/**
 * Calls visit(positions) for every occurrence of `pattern` in p, in
 * lexicographic order of the (zero-based) position tuple. Enumeration stops
 * early when visit returns false.
 */
void for_each_occurrence(std::span<const Entry> p, std::span<const Entry> pattern,
                         const std::function<bool(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> occurrences(std::span<const Entry> p,
                                                  std::span<const Entry> pattern);

bool is_avoider(std::span<const Entry> p, std::span<const Entry> pattern);

/**
 * A standard pattern with one marked letter, written like "3(5)241".
 *
 * A permutation satisfies it (is "OK") when every occurrence of the pattern
 * with the marked letter deleted extends, through one more entry in the slot
 * the marked letter dictates, to an occurrence of the full pattern.
 */
class UnderlinedPattern {
public:
    /// marked is a zero-based position in full. Throws InvalidInput on bad input.
    UnderlinedPattern(Permutation full, std::size_t marked);

    static UnderlinedPattern parse(std::string_view text);

    const Permutation& full() const noexcept { return full_; }
    std::size_t marked_position() const noexcept { return marked_; }
    Entry marked_value() const { return full_[marked_]; }
    /// reduce(full with the marked letter deleted).
    const Permutation& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return full_.size(); }

    std::string to_string() const;

    friend bool operator==(const UnderlinedPattern& a, const UnderlinedPattern& b) {
        return a.full_ == b.full_ && a.marked_ == b.marked_;
    }
    friend auto operator<=>(const UnderlinedPattern& a, const UnderlinedPattern& b) {
        if (auto c = a.full_ <=> b.full_; c != 0) return c;
        return a.marked_ <=> b.marked_;
    }

private:
    Permutation full_;
    std::size_t marked_;
    Permutation base_;
};

/// The image pattern: transform the full pattern, carry the mark with its letter.
UnderlinedPattern apply_symmetry(const UnderlinedPattern& up, Symmetry g);

bool satisfies(std::span<const Entry> p, const UnderlinedPattern& up);

/// Structural test for 3(5)241: tails value-ordered across LRmax factors, each tail OK.
bool fast_35241ok(std::span<const Entry> p);

/// Both 3(5)241-OK and 2341-avoiding.
bool is_two_stack_sortable(std::span<const Entry> p);

struct CensusOptions {
    unsigned limit = 10;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

using PermutationPredicate = std::function<bool(std::span<const Entry>)>;

/**
 * Number of permutations of [n] accepted by pred. The search space is split
 * by first entry across worker threads and the partial counts are summed.
 * Throws ResourceLimit when n exceeds options.limit.
 */
BigInt census_if(unsigned n, const PermutationPredicate& pred, const CensusOptions& options = {});

BigInt census(const UnderlinedPattern& up, unsigned n, const CensusOptions& options = {});

/// Calls visit for every permutation of [n] in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(std::span<const Entry>)>& visit);

/// All permutations of [n] accepted by pred, in lexicographic order.
std::vector<Permutation> permutations_if(std::size_t n, const PermutationPredicate& pred);

} // namespace eigencomp
