#pragma once

#include <cstddef>
#include <vector>

#include "eigencomp/perm_core.hpp"

namespace eigencomp {

/// An ordered list of positive parts.
class Composition {
public:
    /// Throws InvalidInput if empty or if any part is zero.
    explicit Composition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned total() const noexcept { return total_; }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

/**
 * Tables of the triple recurrence for 3(5)241-OK permutations:
 *   a_n     = sum_{i<n} a_i c_{n-i}
 *   c_n     = sum_{i<n} i a_{n-1,i}                    (ascent-start count, n >= 2)
 *   a_{n,k} = sum_{i<k} a_i sum_{j=k-i}^{n-1-i} a_{n-1-i,j}  (k < n),  a_{n,n} = a_{n-1}
 */
struct RecurrenceTables {
    std::vector<BigInt> a;              ///< a_0..a_N
    std::vector<BigInt> ascent_start;   ///< c_n at index n; index 0 unused
    std::vector<std::vector<BigInt>> by_first_entry; ///< a_{n,k} at [n][k], 1 <= k <= n

    std::size_t order() const noexcept { return a.size() - 1; }
    const BigInt& a_nk(std::size_t n, std::size_t k) const { return by_first_entry.at(n).at(k); }
};

RecurrenceTables theorem2_tables(std::size_t n_max);

/// All 2^{n-1} compositions of n, in reverse lexicographic order of parts.
std::vector<Composition> compositions(unsigned n);

/// Same-length compositions d of c.total() whose partial sums dominate those of c (enumeration).
BigInt dominance_count(const Composition& c);

/// dominance_count by dynamic programming over partial sums.
BigInt dominance_count_dp(const Composition& c);

inline constexpr std::size_t kCompositionSumLimit = 16;

/// a_0..a_N from the sum over compositions weighted by dominance counts.
std::vector<BigInt> theorem3_a(std::size_t n_max, std::size_t limit = kCompositionSumLimit);

/// The same sum without the dominance factor; yields the Catalan numbers.
std::vector<BigInt> catalan_via_compositions(std::size_t n_max,
                                             std::size_t limit = kCompositionSumLimit);

/// B_0..B_N via the Bell triangle.
std::vector<BigInt> bell_numbers(std::size_t n_max);

} // namespace eigencomp
