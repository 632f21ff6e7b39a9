#include "eigencomp/series.hpp"

#include <string>

#include "eigencomp/errors.hpp"

namespace eigencomp {

PowerSeries::PowerSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("power series must have truncation order >= 1");
}

PowerSeries PowerSeries::x(std::size_t order) {
    std::vector<BigInt> c(order, 0);
    if (order > 0) c[0] = 1;
    return PowerSeries(std::move(c));
}

const BigInt& PowerSeries::coeff(std::size_t k) const {
    if (k < 1 || k > coeffs_.size()) {
        throw InvalidInput("coefficient index " + std::to_string(k) + " outside 1.." +
                           std::to_string(coeffs_.size()));
    }
    return coeffs_[k - 1];
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw InvalidInput("multiply: mismatched truncation orders");
    const std::size_t n = a.order();
    std::vector<BigInt> c(n, 0);
    // x^i * x^j contributes to x^(i+j); indices are 1-based powers.
    for (std::size_t i = 1; i < n; ++i) {
        const BigInt& ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 1; i + j <= n; ++j) {
            c[i + j - 1] += ai * b.coeff(j);
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw InvalidInput("compose: mismatched truncation orders");
    const std::size_t n = a.order();
    std::vector<BigInt> c(n, 0);
    PowerSeries power = b; // B^k, starting at k = 1
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) power = multiply(power, b);
        const BigInt& ak = a.coeff(k);
        if (ak == 0) continue;
        // B^k has no terms below x^k.
        for (std::size_t m = k; m <= n; ++m) c[m - 1] += ak * power.coeff(m);
    }
    return PowerSeries(std::move(c));
}

std::vector<BigInt> eigensequence(std::size_t n_terms) {
    if (n_terms == 0) throw InvalidInput("eigensequence: need at least one term");
    std::vector<BigInt> b{1};
    while (b.size() < n_terms) {
        // [x^n] B(B(x)) only involves b_1..b_n, all already known.
        const std::size_t n = b.size();
        const PowerSeries known(b);
        b.push_back(compose(known, known).coeff(n));
    }
    return b;
}

bool verify_shift(std::span<const BigInt> b, std::size_t n_terms) {
    if (n_terms == 0 || b.size() < n_terms) throw InvalidInput("verify_shift: not enough terms");
    const PowerSeries series(std::vector<BigInt>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n_terms)));
    const PowerSeries self = compose(series, series);
    for (std::size_t n = 1; n < n_terms; ++n) {
        if (self.coeff(n) != b[n]) return false;
    }
    return true;
}

} // namespace eigencomp
