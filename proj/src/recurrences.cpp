#include "eigencomp/recurrences.hpp"

#include <numeric>
#include <string>

#include "eigencomp/errors.hpp"

namespace eigencomp {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("composition must have at least one part");
    for (unsigned p : parts_) {
        if (p == 0) throw InvalidInput("composition parts must be positive");
        total_ += p;
    }
}

RecurrenceTables theorem2_tables(std::size_t n_max) {
    if (n_max < 1) throw InvalidInput("theorem2_tables: need N >= 1");
    RecurrenceTables t;
    t.a.assign(n_max + 1, 0);
    t.ascent_start.assign(n_max + 1, 0);
    t.by_first_entry.assign(n_max + 1, {});
    t.a[0] = 1;
    t.ascent_start[1] = 1;

    for (std::size_t n = 1; n <= n_max; ++n) {
        auto& row = t.by_first_entry[n];
        row.assign(n + 1, 0);
        for (std::size_t k = 1; k < n; ++k) {
            BigInt sum = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t m = n - 1 - i;
                BigInt inner = 0;
                for (std::size_t j = k - i; j <= m; ++j) inner += t.by_first_entry[m][j];
                sum += t.a[i] * inner;
            }
            row[k] = sum;
        }
        row[n] = t.a[n - 1];

        if (n >= 2) {
            BigInt c = 0;
            for (std::size_t i = 1; i < n; ++i) c += BigInt(static_cast<unsigned long>(i)) * t.by_first_entry[n - 1][i];
            t.ascent_start[n] = c;
        }
        BigInt a = 0;
        for (std::size_t i = 0; i < n; ++i) a += t.a[i] * t.ascent_start[n - i];
        t.a[n] = a;
    }
    return t;
}

std::vector<Composition> compositions(unsigned n) {
    if (n < 1) throw InvalidInput("compositions: need n >= 1");
    if (n > 30) throw ResourceLimit("compositions: n=" + std::to_string(n) + " is too large to list");
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    // Bits of r, most significant first, mark cuts between consecutive units; r = 0 gives (n).
    const unsigned long long count = 1ULL << (n - 1);
    for (unsigned long long r = 0; r < count; ++r) {
        const unsigned long long mask = r;
        std::vector<unsigned> parts;
        unsigned run = 1;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (mask >> (n - 2 - i) & 1ULL) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace {

unsigned long long count_dominating(const std::vector<unsigned>& prefix, std::size_t depth,
                                    unsigned partial, unsigned n) {
    const std::size_t r = prefix.size();
    if (depth + 1 == r) return 1; // last part is forced to n - partial >= 1
    unsigned long long total = 0;
    // Leave at least one unit for each remaining part.
    const unsigned remaining_parts = static_cast<unsigned>(r - depth - 1);
    for (unsigned d = 1; partial + d + remaining_parts <= n; ++d) {
        if (partial + d < prefix[depth]) continue;
        total += count_dominating(prefix, depth + 1, partial + d, n);
    }
    return total;
}

} // namespace

BigInt dominance_count(const Composition& c) {
    std::vector<unsigned> prefix(c.length());
    std::partial_sum(c.parts().begin(), c.parts().end(), prefix.begin());
    return BigInt(std::to_string(count_dominating(prefix, 0, 0, c.total())));
}

BigInt dominance_count_dp(const Composition& c) {
    const unsigned n = c.total();
    const std::size_t r = c.length();
    std::vector<unsigned> prefix(r);
    std::partial_sum(c.parts().begin(), c.parts().end(), prefix.begin());
    // ways[s] = number of ways to choose D_1 < ... < D_i = s meeting D_j >= prefix[j].
    std::vector<BigInt> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigInt> next(n + 1, 0);
        BigInt running = 0; // sum of ways[t] for t < s
        for (unsigned s = 0; s <= n; ++s) {
            if (s >= prefix[i] && s >= 1) next[s] = running;
            running += ways[s];
        }
        ways = std::move(next);
    }
    return ways[n];
}

namespace {

std::vector<BigInt> composition_sum(std::size_t n_max, std::size_t limit, bool weighted,
                                    const char* what) {
    if (n_max > limit) {
        throw ResourceLimit(std::string(what) + ": N=" + std::to_string(n_max) +
                            " exceeds the configured limit " + std::to_string(limit));
    }
    std::vector<BigInt> a(n_max + 1, 0);
    a[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (const Composition& c : compositions(static_cast<unsigned>(n))) {
            BigInt term = weighted ? dominance_count_dp(c) : BigInt(1);
            for (unsigned part : c.parts()) term *= a[part - 1];
            sum += term;
        }
        a[n] = sum;
    }
    return a;
}

} // namespace

std::vector<BigInt> theorem3_a(std::size_t n_max, std::size_t limit) {
    return composition_sum(n_max, limit, true, "theorem3_a");
}

std::vector<BigInt> catalan_via_compositions(std::size_t n_max, std::size_t limit) {
    return composition_sum(n_max, limit, false, "catalan_via_compositions");
}

std::vector<BigInt> bell_numbers(std::size_t n_max) {
    std::vector<BigInt> bell{1};
    std::vector<BigInt> row{1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

} // namespace eigencomp
