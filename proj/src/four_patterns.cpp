#include "eigencomp/four_patterns.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "eigencomp/errors.hpp"
#include "eigencomp/recurrences.hpp"

namespace eigencomp {

std::string_view to_string(SequenceLabel label) {
    switch (label) {
    case SequenceLabel::catalan: return "catalan";
    case SequenceLabel::bell: return "bell";
    case SequenceLabel::a051295: return "a051295";
    case SequenceLabel::new4: return "new4";
    }
    return "?";
}

std::vector<UnderlinedPattern> all_underlined4() {
    std::vector<UnderlinedPattern> out;
    for (const Permutation& p : permutations_if(4, [](std::span<const Entry>) { return true; })) {
        for (std::size_t marked = 0; marked < 4; ++marked) out.emplace_back(p, marked);
    }
    return out;
}

std::vector<UnderlinedPattern> symmetry_orbit(const UnderlinedPattern& up) {
    static constexpr Symmetry generators[] = {Symmetry::complement, Symmetry::reverse, Symmetry::inverse};
    std::set<UnderlinedPattern> seen{up};
    std::vector<UnderlinedPattern> frontier{up};
    while (!frontier.empty()) {
        const UnderlinedPattern cur = frontier.back();
        frontier.pop_back();
        for (Symmetry g : generators) {
            UnderlinedPattern image = apply_symmetry(cur, g);
            if (seen.insert(image).second) frontier.push_back(std::move(image));
        }
    }
    return {seen.begin(), seen.end()};
}

const std::array<ReferenceColumn, 5>& reference_table() {
    static const std::array<ReferenceColumn, 5> table{{
        {{"32(4)1", "134(2)", "1(4)23", "23(1)4", "(2)431", "(3)124", "4(1)32", "421(3)"}, SequenceLabel::bell},
        {{"31(4)2", "(3)142", "314(2)", "3(1)42", "24(1)3", "(2)413", "241(3)", "2(4)13"}, SequenceLabel::bell},
        {{"(1)342", "(1)423", "231(4)", "243(1)", "312(4)", "324(1)", "(4)132", "(4)213"}, SequenceLabel::a051295},
        {{"(1)324", "132(4)", "423(1)", "(4)231"}, SequenceLabel::a051295},
        {{"321(4)", "(4)123", "(1)432", "234(1)"}, SequenceLabel::new4},
    }};
    return table;
}

namespace {

std::vector<BigInt> pattern_counts(const UnderlinedPattern& up, unsigned max_n) {
    std::vector<BigInt> counts;
    const CensusOptions options{std::max(max_n, 10u), 1};
    for (unsigned n = 0; n <= max_n; ++n) counts.push_back(census(up, n, options));
    return counts;
}

std::vector<BigInt> avoider_counts(const Permutation& base, unsigned max_n) {
    std::vector<BigInt> counts;
    const CensusOptions options{std::max(max_n, 10u), 1};
    for (unsigned n = 0; n <= max_n; ++n) {
        counts.push_back(census_if(
            n, [&](std::span<const Entry> p) { return is_avoider(p, base.entries()); }, options));
    }
    return counts;
}

std::size_t reference_column_of(const std::vector<UnderlinedPattern>& members) {
    const auto& table = reference_table();
    for (std::size_t c = 0; c < table.size(); ++c) {
        const auto rep = UnderlinedPattern::parse(table[c].members.front());
        if (std::find(members.begin(), members.end(), rep) != members.end()) return c;
    }
    return table.size();
}

} // namespace

std::vector<PatternClass> classify(unsigned max_n) {
    const std::vector<std::pair<SequenceLabel, std::vector<BigInt>>> references{
        {SequenceLabel::catalan, catalan_via_compositions(max_n)},
        {SequenceLabel::bell, bell_numbers(max_n)},
        {SequenceLabel::a051295, a051295_seq(max_n)},
        {SequenceLabel::new4, new_seq(max_n)},
    };

    std::set<UnderlinedPattern> assigned;
    std::vector<std::pair<std::size_t, PatternClass>> keyed;
    for (const UnderlinedPattern& up : all_underlined4()) {
        if (assigned.count(up)) continue;
        std::vector<UnderlinedPattern> members = symmetry_orbit(up);
        assigned.insert(members.begin(), members.end());

        const std::size_t column = reference_column_of(members);
        const UnderlinedPattern representative =
            column < reference_table().size() ? UnderlinedPattern::parse(reference_table()[column].members.front())
                                              : members.front();
        std::vector<BigInt> counts = pattern_counts(representative, max_n);
        for (const UnderlinedPattern& member : members) {
            if (pattern_counts(member, max_n) != counts) {
                throw ClassificationFailure("orbit of " + representative.to_string() +
                                            " has members with different counts, e.g. " + member.to_string());
            }
        }
        const bool trivial = counts == avoider_counts(representative.base(), max_n);
        const auto match = std::find_if(references.begin(), references.end(),
                                        [&](const auto& ref) { return ref.second == counts; });
        if (match == references.end()) {
            throw ClassificationFailure("census of " + representative.to_string() +
                                        " matches no reference sequence");
        }
        if (trivial && match->first != SequenceLabel::catalan) {
            throw ClassificationFailure("trivial pattern " + representative.to_string() + " is not Catalan");
        }
        PatternClass cls{representative, std::move(members), match->first, trivial, std::move(counts)};
        // Nontrivial classes in reference column order, then trivial ones by size and representative.
        const std::size_t key = trivial ? 100 + (cls.members.size() == 8 ? 0 : 50) : column;
        keyed.emplace_back(key, std::move(cls));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.representative < b.second.representative;
    });
    std::vector<PatternClass> out;
    for (auto& [key, cls] : keyed) out.push_back(std::move(cls));
    return out;
}

std::vector<std::string> compare_with_reference(const std::vector<PatternClass>& classes) {
    std::vector<std::string> diffs;
    std::vector<const PatternClass*> nontrivial;
    for (const PatternClass& c : classes) {
        if (!c.trivial) nontrivial.push_back(&c);
    }
    const auto& table = reference_table();
    if (nontrivial.size() != table.size()) {
        diffs.push_back("expected " + std::to_string(table.size()) + " nontrivial classes, found " +
                        std::to_string(nontrivial.size()));
    }
    for (const ReferenceColumn& column : table) {
        std::vector<UnderlinedPattern> expected;
        for (std::string_view text : column.members) expected.push_back(UnderlinedPattern::parse(text));
        std::sort(expected.begin(), expected.end());
        const std::string rep = std::string(column.members.front());
        const auto it = std::find_if(nontrivial.begin(), nontrivial.end(), [&](const PatternClass* c) {
            return std::find(c->members.begin(), c->members.end(), expected.front()) != c->members.end();
        });
        if (it == nontrivial.end()) {
            diffs.push_back("no computed class contains " + expected.front().to_string());
            continue;
        }
        if ((*it)->members != expected) diffs.push_back("members differ for the class of " + rep);
        if ((*it)->label != column.label) {
            diffs.push_back("label differs for the class of " + rep + ": computed " +
                            std::string(to_string((*it)->label)));
        }
    }
    return diffs;
}

std::string render_classification(const std::vector<PatternClass>& classes) {
    std::vector<const PatternClass*> nontrivial;
    std::size_t trivial_patterns = 0;
    std::map<std::size_t, std::size_t> trivial_sizes;
    for (const PatternClass& c : classes) {
        if (c.trivial) {
            trivial_patterns += c.members.size();
            ++trivial_sizes[c.members.size()];
        } else {
            nontrivial.push_back(&c);
        }
    }
    constexpr int width = 10;
    std::ostringstream out;
    std::size_t rows = 0;
    for (const PatternClass* c : nontrivial) rows = std::max(rows, c->members.size() - 1);

    auto rule = [&] { out << std::string(nontrivial.size() * width, '-') << '\n'; };
    auto cell = [&](const std::string& text) { out << std::left << std::setw(width) << text; };
    rule();
    for (const PatternClass* c : nontrivial) cell(c->representative.to_string());
    out << '\n';
    rule();
    for (std::size_t r = 0; r < rows; ++r) {
        for (const PatternClass* c : nontrivial) {
            // Representative already shown in the header row.
            std::vector<UnderlinedPattern> rest;
            for (const auto& m : c->members) {
                if (!(m == c->representative)) rest.push_back(m);
            }
            cell(r < rest.size() ? rest[r].to_string() : "");
        }
        out << '\n';
    }
    rule();
    for (const PatternClass* c : nontrivial) cell(std::string(to_string(c->label)));
    out << '\n';
    rule();
    out << "trivial (catalan): " << trivial_patterns << " patterns in";
    for (auto it = trivial_sizes.rbegin(); it != trivial_sizes.rend(); ++it) {
        out << ' ' << it->second << " orbits of size " << it->first << (std::next(it) == trivial_sizes.rend() ? "" : ",");
    }
    out << '\n';
    return out.str();
}

SetPartition::SetPartition(std::vector<std::vector<Entry>> blocks) : blocks_(std::move(blocks)) {
    std::vector<Entry> all;
    for (auto& block : blocks_) {
        if (block.empty()) throw InvalidInput("set partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != static_cast<Entry>(i + 1)) {
            throw InvalidInput("set partition blocks must be disjoint and cover 1..n");
        }
    }
    n_ = all.size();
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
}

namespace {

std::string join_blocks(const std::vector<std::vector<Entry>>& words) {
    std::string s;
    for (std::size_t b = 0; b < words.size(); ++b) {
        if (b) s += '-';
        for (std::size_t i = 0; i < words[b].size(); ++i) {
            if (i && words[b][i] >= 10) s += ' ';
            s += std::to_string(words[b][i]);
        }
    }
    return s;
}

std::vector<std::vector<Entry>> increasing_words(const SetPartition& sp) {
    std::vector<std::vector<Entry>> words;
    for (const auto& block : sp.blocks()) {
        std::vector<Entry> w{block.back()};
        w.insert(w.end(), block.begin(), block.end() - 1);
        words.push_back(std::move(w));
    }
    return words;
}

std::vector<std::vector<Entry>> decreasing_words(const SetPartition& sp) {
    std::vector<std::vector<Entry>> words;
    for (const auto& block : sp.blocks()) words.emplace_back(block.rbegin(), block.rend());
    return words;
}

Permutation concatenate(const std::vector<std::vector<Entry>>& words) {
    std::vector<Entry> out;
    for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
    return Permutation(std::move(out));
}

SetPartition lrmax_blocks(const Permutation& p) {
    std::vector<std::vector<Entry>> blocks;
    for (const LRMaxFactor& f : lrmax_factorize(p.entries()).factors) {
        std::vector<Entry> block{f.max_entry};
        block.insert(block.end(), f.tail.begin(), f.tail.end());
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

} // namespace

std::string SetPartition::canonical_increasing() const { return join_blocks(increasing_words(*this)); }
std::string SetPartition::canonical_decreasing() const { return join_blocks(decreasing_words(*this)); }

SetPartition to_partition_increasing(const Permutation& p) {
    static const UnderlinedPattern pattern = UnderlinedPattern::parse("32(4)1");
    if (!p.is_standard() || !satisfies(p.entries(), pattern)) {
        throw InvalidInput("to_partition_increasing: input is not 32(4)1-OK");
    }
    return lrmax_blocks(p);
}

Permutation from_partition_increasing(const SetPartition& partition) {
    return concatenate(increasing_words(partition));
}

SetPartition to_partition_decreasing(const Permutation& p) {
    static const UnderlinedPattern pattern = UnderlinedPattern::parse("31(4)2");
    if (!p.is_standard() || !satisfies(p.entries(), pattern)) {
        throw InvalidInput("to_partition_decreasing: input is not 31(4)2-OK");
    }
    return lrmax_blocks(p);
}

Permutation from_partition_decreasing(const SetPartition& partition) {
    return concatenate(decreasing_words(partition));
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt rising_factorial(long long k, unsigned i) {
    BigInt r = 1;
    for (unsigned t = 0; t < i; ++t) r *= BigInt(std::to_string(k + static_cast<long long>(t)));
    return r;
}

BigInt falling_factorial(long long m, unsigned j) {
    if (m >= 0 && static_cast<long long>(j) > m) return 0;
    BigInt r = 1;
    for (unsigned t = 0; t < j; ++t) r *= BigInt(std::to_string(m - static_cast<long long>(t)));
    return r;
}

std::vector<BigInt> a051295_seq(std::size_t n_max) {
    std::vector<BigInt> u{1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (std::size_t k = 1; k <= n; ++k) sum += u[k - 1] * factorial(static_cast<unsigned>(n - k));
        u.push_back(sum);
    }
    return u;
}

std::vector<BigInt> u_row(unsigned n, const CensusOptions& options) {
    if (n > options.limit) {
        throw ResourceLimit("u_nk: n=" + std::to_string(n) + " exceeds the configured limit " +
                            std::to_string(options.limit));
    }
    static const UnderlinedPattern pattern = UnderlinedPattern::parse("(1)342");
    std::vector<unsigned long long> counts(n + 1, 0);
    for_each_permutation(n, [&](std::span<const Entry> p) {
        if (!satisfies(p, pattern)) return;
        const auto one = std::find(p.begin(), p.end(), Entry{1});
        ++counts[static_cast<std::size_t>(one - p.begin()) + 1];
    });
    std::vector<BigInt> out;
    for (unsigned long long c : counts) out.emplace_back(std::to_string(c));
    return out;
}

BigInt u_nk(unsigned n, unsigned k, const CensusOptions& options) {
    if (k < 1 || k > n) throw InvalidInput("u_nk: need 1 <= k <= n");
    return u_row(n, options)[k];
}

BigInt u_nk_series(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw InvalidInput("u_nk_series: need 1 <= k <= n");
    const unsigned order = n - k; // coefficient of x^{n-k} in F^k, F = sum m! x^m
    std::vector<BigInt> f(order + 1);
    for (unsigned m = 0; m <= order; ++m) f[m] = factorial(m);
    std::vector<BigInt> power(order + 1, 0);
    power[0] = 1;
    for (unsigned t = 0; t < k; ++t) {
        std::vector<BigInt> next(order + 1, 0);
        for (unsigned i = 0; i <= order; ++i) {
            if (power[i] == 0) continue;
            for (unsigned j = 0; i + j <= order; ++j) next[i + j] += power[i] * f[j];
        }
        power = std::move(next);
    }
    return power[order];
}

std::vector<BigInt> new_seq(std::size_t n_max) {
    std::vector<BigInt> out{1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt term = factorial(static_cast<unsigned>(n - 1));
        for (long long k = 0; k + 2 <= static_cast<long long>(n); ++k) {
            const auto rest = static_cast<unsigned>(n - 2 - static_cast<std::size_t>(k));
            for (unsigned i = 0; i <= rest; ++i) {
                for (unsigned j = 0; i + j <= rest; ++j) term += rising_factorial(k, i) * falling_factorial(rest, j);
            }
        }
        out.push_back(term);
    }
    return out;
}

Permutation wilf_map(const Permutation& p) {
    static const UnderlinedPattern pattern = UnderlinedPattern::parse("(1)324");
    if (!p.is_standard() || !satisfies(p.entries(), pattern)) {
        throw InvalidInput("wilf_map: input is not (1)324-OK");
    }
    std::vector<Entry> minima;
    std::vector<std::vector<Entry>> tails;
    for (Entry e : p) {
        if (minima.empty() || e < minima.back()) {
            minima.push_back(e);
            tails.emplace_back();
        } else {
            tails.back().push_back(e);
        }
    }
    std::vector<Entry> out = minima;
    for (auto it = tails.rbegin(); it != tails.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return Permutation(std::move(out));
}

bool patience_ok(std::span<const Entry> p) {
    // A 342 with adjacent "4","2" sits at positions a < b, b+1 with p[b+1] < p[a] < p[b].
    for (std::size_t b = 0; b + 1 < p.size(); ++b) {
        const Entry four = p[b], two = p[b + 1];
        if (four < two) continue;
        for (std::size_t a = 0; a < b; ++a) {
            if (!(two < p[a] && p[a] < four)) continue;
            const bool extends = std::any_of(p.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                                             p.begin() + static_cast<std::ptrdiff_t>(b),
                                             [&](Entry e) { return e < two; });
            if (!extends) return false;
        }
    }
    return true;
}

} // namespace eigencomp
