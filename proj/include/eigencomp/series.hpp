#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eigencomp/perm_core.hpp"

namespace eigencomp {

/**
 * A power series with zero constant term, truncated after x^N.
 * Coefficients are exact; coeff(k) is the coefficient of x^k for 1 <= k <= N.
 */
class PowerSeries {
public:
    /// coeffs[0] is the coefficient of x^1. Throws InvalidInput if empty.
    explicit PowerSeries(std::vector<BigInt> coeffs);

    /// The series x truncated at the given order.
    static PowerSeries x(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const BigInt& coeff(std::size_t k) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Truncated product; both factors must share an order.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// A(B(x)) truncated at the common order N. Throws InvalidInput on mismatched orders.
PowerSeries compose(const PowerSeries& a, const PowerSeries& b);

/// The monic sequence b_1..b_N with B(B(x)) = B(x)/x - 1.
std::vector<BigInt> eigensequence(std::size_t n_terms);

/// True iff [x^n] B(B(x)) == b_{n+1} for 1 <= n <= N-1, with B built from b_1..b_N.
bool verify_shift(std::span<const BigInt> b, std::size_t n_terms);

} // namespace eigencomp
