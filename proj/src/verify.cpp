#include "eigencomp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "eigencomp/bijection.hpp"
#include "eigencomp/errors.hpp"
#include "eigencomp/four_patterns.hpp"
#include "eigencomp/recurrences.hpp"
#include "eigencomp/series.hpp"
#include "eigencomp/text_format.hpp"

namespace eigencomp {

namespace {

constexpr Entry k321[] = {3, 2, 1};

/// Runs body; an empty returned string means the check passed.
CheckResult timed(std::string name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{std::move(name), false, {}, 0.0};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const BigInt& x : v) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

CensusOptions options_for(unsigned n) { return CensusOptions{std::max(n, 10u), 0}; }

bool is_321_avoider(std::span<const Entry> p) { return is_avoider(p, k321); }

/// All k-lists of permutations from `pool[m]` (by length m) with total length n; lengths >= min_len.
void for_each_list(unsigned n, std::size_t k, unsigned min_len, const std::vector<std::vector<Permutation>>& pool,
                   const std::function<void(const PermList&)>& visit) {
    PermList current;
    std::function<void(unsigned)> rec = [&](unsigned remaining) {
        if (current.size() == k) {
            if (remaining == 0) visit(current);
            return;
        }
        for (unsigned len = min_len; len <= remaining; ++len) {
            for (const Permutation& p : pool[len]) {
                current.push_back(p);
                rec(remaining - len);
                current.pop_back();
            }
        }
    };
    rec(n);
}

} // namespace

CheckResult check_eigensequence_prefix() {
    return timed("eigensequence terms 1..7", [] {
        const std::vector<BigInt> expected{1, 1, 2, 6, 23, 104, 531};
        const auto got = eigensequence(7);
        return got == expected ? std::string{} : "got " + join(got);
    });
}

CheckResult check_census_shift(unsigned max_n) {
    return timed("census 3(5)241 = b_{n+1}, n <= " + std::to_string(max_n), [max_n] {
        const auto b = eigensequence(max_n + 1);
        const auto up = UnderlinedPattern::parse("3(5)241");
        for (unsigned n = 0; n <= max_n; ++n) {
            const BigInt c = census(up, n, options_for(max_n));
            if (c != b[n]) return "n=" + std::to_string(n) + ": census " + c.get_str() + " vs " + b[n].get_str();
        }
        return std::string{};
    });
}

CheckResult check_recurrences(unsigned max_n) {
    return timed("recurrence tables = composition sum = eigensequence shift, n <= " + std::to_string(max_n), [max_n] {
        const auto b = eigensequence(max_n + 1);
        const auto t2 = theorem2_tables(max_n).a;
        for (unsigned n = 0; n <= max_n; ++n) {
            if (t2[n] != b[n]) return "tables differ from shift at n=" + std::to_string(n);
        }
        const unsigned m3 = std::min<unsigned>(max_n, 14);
        const auto t3 = theorem3_a(m3);
        for (unsigned n = 0; n <= m3; ++n) {
            if (t3[n] != t2[n]) return "composition sum differs at n=" + std::to_string(n);
        }
        return std::string{};
    });
}

CheckResult check_catalan(unsigned max_n) {
    return timed("composition-sum Catalan = 321-avoider census, n <= " + std::to_string(max_n), [max_n] {
        const auto cat = catalan_via_compositions(max_n);
        for (unsigned n = 0; n <= max_n; ++n) {
            const BigInt c = census_if(n, is_321_avoider, options_for(max_n));
            if (c != cat[n]) return "n=" + std::to_string(n) + ": " + cat[n].get_str() + " vs census " + c.get_str();
        }
        return std::string{};
    });
}

CheckResult check_window_bijection(unsigned max_n) {
    return timed("window map X_{n,k} -> Y_{n,k} bijective, n <= " + std::to_string(max_n), [max_n] {
        std::vector<std::vector<Permutation>> avoiders(max_n + 1);
        for (unsigned m = 0; m <= max_n; ++m) avoiders[m] = permutations_if(m, is_321_avoider);
        for (unsigned n = 1; n <= max_n; ++n) {
            std::map<std::size_t, std::set<PermList>> images;
            for (const Permutation& p : avoiders[n]) {
                for (const MarkedPermutation& q : all_markings(p)) {
                    PermList v = window_forward(q);
                    if (v.size() != q.marks.size() + 1) return "wrong list length for " + format_marked(q);
                    std::size_t total = 0;
                    for (const Permutation& item : v) {
                        if (item.empty() || !item.is_standard() || !is_321_avoider(item.entries())) {
                            return "image item outside Y for " + format_marked(q);
                        }
                        total += item.size();
                    }
                    if (total != n) return "image total length wrong for " + format_marked(q);
                    if (!(window_inverse(v) == q)) return "inverse(forward) != id on " + format_marked(q);
                    if (!images[v.size()].insert(std::move(v)).second) return "collision at " + format_marked(q);
                }
            }
            for (std::size_t k = 1; k <= n; ++k) {
                std::size_t y_count = 0;
                std::string failure;
                for_each_list(n, k, 1, avoiders, [&](const PermList& v) {
                    ++y_count;
                    if (!failure.empty()) return;
                    if (!images[k].count(v)) failure = "not in image: " + format_list(v);
                    else if (window_forward(window_inverse(v)) != v) failure = "forward(inverse) != id on " + format_list(v);
                });
                if (!failure.empty()) return failure;
                if (y_count != images[k].size()) {
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": |image| " +
                           std::to_string(images[k].size()) + " vs |Y| " + std::to_string(y_count);
                }
            }
        }
        return std::string{};
    });
}

CheckResult check_reduction_round_trips(unsigned max_n) {
    return timed("marked 3(5)241-OK round trips, n <= " + std::to_string(max_n), [max_n] {
        for (unsigned n = 1; n <= max_n; ++n) {
            std::set<PermList> images;
            for (const Permutation& p : permutations_if(n, fast_35241ok)) {
                for (const MarkedPermutation& q : all_markings(p)) {
                    PermList v = theorem6_forward(q);
                    if (!(theorem6_inverse(v) == q)) return "round trip fails on " + format_marked(q);
                    if (theorem6_forward(theorem6_inverse(v)) != v) return "reverse round trip fails on " + format_marked(q);
                    if (!images.insert(std::move(v)).second) return "collision at " + format_marked(q);
                }
            }
        }
        return std::string{};
    });
}

CheckResult check_eigen_bijection(unsigned max_n) {
    return timed("eigen decomposition bijective, n <= " + std::to_string(max_n), [max_n] {
        std::vector<std::vector<Permutation>> ok(max_n + 1);
        for (unsigned m = 0; m <= max_n; ++m) ok[m] = permutations_if(m, fast_35241ok);
        for (unsigned n = 1; n <= max_n; ++n) {
            std::set<EigenPair> images;
            for (const Permutation& p : ok[n]) {
                EigenPair pair = eigen_forward(p);
                const std::size_t k = pair.items.size();
                std::size_t total = 0;
                for (const Permutation& item : pair.items) {
                    if (!item.is_standard() || !fast_35241ok(item.entries())) {
                        return "image item not 3(5)241-OK for " + format_permutation(p.entries());
                    }
                    total += item.size();
                }
                if (pair.rho.size() + 1 != k || total + k != n || !fast_35241ok(pair.rho.entries())) {
                    return "image outside codomain for " + format_permutation(p.entries());
                }
                if (!(eigen_inverse(pair) == p)) return "round trip fails on " + format_permutation(p.entries());
                if (!images.insert(std::move(pair)).second) return "collision at " + format_permutation(p.entries());
            }
            // Codomain size: sum over k of |A_{k-1}| times the number of k-lists of total length n-k.
            std::size_t codomain = 0;
            for (unsigned k = 1; k <= n; ++k) {
                std::vector<std::size_t> ways(n - k + 1, 0);
                ways[0] = 1;
                for (unsigned item = 0; item < k; ++item) {
                    std::vector<std::size_t> next(n - k + 1, 0);
                    for (unsigned t = 0; t <= n - k; ++t) {
                        for (unsigned len = 0; t + len <= n - k; ++len) next[t + len] += ways[t] * ok[len].size();
                    }
                    ways = std::move(next);
                }
                codomain += ok[k - 1].size() * ways[n - k];
            }
            if (codomain != images.size()) {
                return "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " images vs codomain " +
                       std::to_string(codomain);
            }
        }
        return std::string{};
    });
}

CheckResult check_fixed_examples() {
    return timed("fixed examples", [] {
        const Permutation p{2, 8, 3, 1, 11, 4, 6, 5, 13, 7, 15, 9, 10, 14, 12};
        const StarEncoding enc = star_encode(p);
        if (enc.rho != Permutation{1, 2, 4, 3}) return "star example: rho = " + format_permutation(enc.rho.entries());
        const std::string starred = format_starred(enc.starred);
        if (starred != "2 8 3 1 * * 9 4 6 5 * 10 * 7") return "star example: starred = " + starred;
        if (eigen_forward(p).items.size() != 5) return std::string("star example: k != 5");
        if (!(star_decode(enc.rho, enc.starred) == p)) return std::string("star example does not decode");

        const MarkedPermutation q = parse_marked(
            "3 1 5 2 8 4 6 12 7 15 9 17 10 11 20 25 26^ 13 27 28^ 14 29^ 16 30 18 19 21 22 23 24");
        const PermList expected = parse_list("2 1 4 5 3 / 2 3 1 / 3 1 5 2 7 4 6 9 8 11 10 / 3 1 2 6 11 4 5 7 8 9 10");
        const PermList got = window_forward(q);
        if (got != expected) return "window example: got " + format_list(got);
        if (!(window_inverse(got) == q)) return std::string("window example: inverse does not recover the input");
        return std::string{};
    });
}

CheckResult check_classification() {
    return timed("classification of the 96 underlined 4-patterns", [] {
        const auto classes = classify(7);
        std::vector<std::size_t> trivial_sizes;
        std::vector<std::pair<std::size_t, SequenceLabel>> nontrivial;
        std::size_t trivial_patterns = 0;
        for (const PatternClass& c : classes) {
            if (c.trivial) {
                trivial_patterns += c.members.size();
                trivial_sizes.push_back(c.members.size());
            } else {
                nontrivial.emplace_back(c.members.size(), c.label);
            }
        }
        std::sort(trivial_sizes.rbegin(), trivial_sizes.rend());
        const std::vector<std::size_t> expected_trivial{8, 8, 8, 8, 8, 4, 4, 4, 4, 4, 4};
        if (trivial_patterns != 64 || trivial_sizes != expected_trivial) return std::string("trivial orbit sizes differ");
        const std::vector<std::pair<std::size_t, SequenceLabel>> expected{
            {8, SequenceLabel::bell}, {8, SequenceLabel::bell}, {8, SequenceLabel::a051295},
            {4, SequenceLabel::a051295}, {4, SequenceLabel::new4}};
        if (nontrivial != expected) return std::string("nontrivial orbits or labels differ");
        const auto diffs = compare_with_reference(classes);
        return diffs.empty() ? std::string{} : diffs.front();
    });
}

CheckResult check_four_pattern_sequences(unsigned max_n) {
    return timed("A051295, new sequence and u_{n,k} identities, n <= " + std::to_string(max_n), [max_n] {
        const auto u = a051295_seq(max_n);
        const auto w = new_seq(max_n);
        const auto p1324 = UnderlinedPattern::parse("(1)324");
        const auto p3214 = UnderlinedPattern::parse("321(4)");
        for (unsigned n = 0; n <= max_n; ++n) {
            if (census(p1324, n, options_for(max_n)) != u[n]) return "A051295 differs at n=" + std::to_string(n);
            if (census(p3214, n, options_for(max_n)) != w[n]) return "new sequence differs at n=" + std::to_string(n);
        }
        for (unsigned n = 1; n <= max_n; ++n) {
            const auto row = u_row(n, options_for(max_n));
            BigInt sum = 0;
            for (unsigned k = 1; k <= n; ++k) {
                if (row[k] != u_nk_series(n, k)) {
                    return "u_{n,k} differs from its series at n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
                sum += row[k];
            }
            if (sum != u[n]) return "row sum of u_{n,k} differs at n=" + std::to_string(n);
        }
        return std::string{};
    });
}

CheckResult check_bell_maps(unsigned max_n) {
    return timed("set-partition maps round trip, Bell counts, n <= " + std::to_string(max_n), [max_n] {
        const auto bell = bell_numbers(max_n);
        const auto inc = UnderlinedPattern::parse("32(4)1");
        const auto dec = UnderlinedPattern::parse("31(4)2");
        for (unsigned n = 0; n <= max_n; ++n) {
            std::set<SetPartition> inc_images, dec_images;
            for (const Permutation& p : permutations_if(n, [&](std::span<const Entry> s) { return satisfies(s, inc); })) {
                SetPartition sp = to_partition_increasing(p);
                if (from_partition_increasing(sp) != p) return "increasing map fails on " + format_permutation(p.entries());
                inc_images.insert(std::move(sp));
            }
            for (const Permutation& p : permutations_if(n, [&](std::span<const Entry> s) { return satisfies(s, dec); })) {
                SetPartition sp = to_partition_decreasing(p);
                if (from_partition_decreasing(sp) != p) return "decreasing map fails on " + format_permutation(p.entries());
                dec_images.insert(std::move(sp));
            }
            if (BigInt(std::to_string(inc_images.size())) != bell[n] ||
                BigInt(std::to_string(dec_images.size())) != bell[n]) {
                return "partition counts differ from Bell at n=" + std::to_string(n);
            }
        }
        return std::string{};
    });
}

CheckResult check_wilf_and_patience(unsigned max_n) {
    return timed("Wilf map bijective, patience condition = 3(1)42-OK, n <= " + std::to_string(max_n), [max_n] {
        const auto src = UnderlinedPattern::parse("(1)324");
        const auto dst = UnderlinedPattern::parse("(1)342");
        const auto pat = UnderlinedPattern::parse("3(1)42");
        for (unsigned n = 0; n <= max_n; ++n) {
            std::set<Permutation> images;
            for (const Permutation& p : permutations_if(n, [&](std::span<const Entry> s) { return satisfies(s, src); })) {
                Permutation w = wilf_map(p);
                if (w.size() != n || !satisfies(w.entries(), dst)) return "Wilf image not (1)342-OK for " + format_permutation(p.entries());
                if (!images.insert(std::move(w)).second) return "Wilf map collision at " + format_permutation(p.entries());
            }
            if (BigInt(std::to_string(images.size())) != census(dst, n, options_for(max_n))) {
                return "Wilf map not onto at n=" + std::to_string(n);
            }
            std::string failure;
            for_each_permutation(n, [&](std::span<const Entry> p) {
                if (failure.empty() && patience_ok(p) != satisfies(p, pat)) failure = "patience condition differs on " + format_permutation(p);
            });
            if (!failure.empty()) return failure;
        }
        return std::string{};
    });
}

std::vector<CheckResult> run_suite(std::string_view suite, unsigned max_n) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (!all && suite != "recurrences" && suite != "bijection" && suite != "fourpatterns") {
        throw InvalidInput("unknown verification suite '" + std::string(suite) +
                           "' (expected recurrences, bijection, fourpatterns or all)");
    }
    if (all || suite == "recurrences") {
        out.push_back(check_eigensequence_prefix());
        out.push_back(check_census_shift(max_n));
        out.push_back(check_recurrences(max_n));
        out.push_back(check_catalan(max_n));
    }
    if (all || suite == "bijection") {
        out.push_back(check_fixed_examples());
        out.push_back(check_window_bijection(max_n));
        out.push_back(check_reduction_round_trips(max_n));
        out.push_back(check_eigen_bijection(max_n));
    }
    if (all || suite == "fourpatterns") {
        out.push_back(check_classification());
        out.push_back(check_four_pattern_sequences(max_n));
        out.push_back(check_bell_maps(max_n));
        out.push_back(check_wilf_and_patience(max_n));
    }
    return out;
}

} // namespace eigencomp
