#include "eigencomp/perm_core.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "eigencomp/errors.hpp"

namespace eigencomp {

namespace {

bool all_distinct(std::span<const Entry> word) {
    std::vector<Entry> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void require_standard(const Permutation& p, const char* what) {
    if (!p.is_standard()) {
        throw InvalidInput(std::string(what) + ": permutation is not standard");
    }
}

// Depth-first occurrence search; the visitor returns false to stop.
template <typename Visit>
bool search_occurrences(std::span<const Entry> p, std::span<const Entry> pattern,
                        std::size_t* positions, std::size_t depth, std::size_t from,
                        Visit& visit) {
    const std::size_t m = pattern.size();
    if (depth == m) {
        return visit(std::span<const std::size_t>(positions, m));
    }
    const std::size_t last = p.size() - (m - depth);
    for (std::size_t i = from; i <= last; ++i) {
        bool consistent = true;
        for (std::size_t s = 0; s < depth; ++s) {
            if ((p[positions[s]] < p[i]) != (pattern[s] < pattern[depth])) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        positions[depth] = i;
        if (!search_occurrences(p, pattern, positions, depth + 1, i + 1, visit)) return false;
    }
    return true;
}

template <typename Visit>
void visit_occurrences(std::span<const Entry> p, std::span<const Entry> pattern, Visit&& visit) {
    if (pattern.size() > p.size()) return;
    if (pattern.empty()) {
        visit(std::span<const std::size_t>{});
        return;
    }
    std::vector<std::size_t> positions(pattern.size());
    search_occurrences(p, pattern, positions.data(), 0, 0, visit);
}

} // namespace

Permutation::Permutation(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (Entry e : entries_) {
        if (e <= 0) throw InvalidInput("permutation entries must be positive");
    }
    if (!all_distinct(entries_)) throw InvalidInput("permutation entries must be distinct");
}

Permutation::Permutation(std::initializer_list<Entry> entries)
    : Permutation(std::vector<Entry>(entries)) {}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Entry> v(n);
    std::iota(v.begin(), v.end(), Entry{1});
    return Permutation(std::move(v));
}

bool Permutation::is_standard() const {
    // Entries are distinct and positive, so max == size is enough.
    return max() == static_cast<Entry>(entries_.size());
}

Entry Permutation::max() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Permutation reduce(std::span<const Entry> word) {
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<Entry> out(word.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]]) {
            throw InvalidInput("reduce: duplicate entry " + std::to_string(word[order[r]]));
        }
        out[order[r]] = static_cast<Entry>(r + 1);
    }
    return Permutation(std::move(out));
}

std::vector<std::size_t> lrmax_positions(std::span<const Entry> p) {
    std::vector<std::size_t> out;
    Entry best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (out.empty() || p[i] > best) {
            out.push_back(i);
            best = p[i];
        }
    }
    return out;
}

std::vector<bool> lrmax_flags(std::span<const Entry> p) {
    std::vector<bool> flags(p.size(), false);
    for (std::size_t i : lrmax_positions(p)) flags[i] = true;
    return flags;
}

std::size_t lit_start_position(std::span<const Entry> p) {
    if (p.empty()) return 0;
    std::vector<std::size_t> by_value(p.size());
    std::iota(by_value.begin(), by_value.end(), std::size_t{0});
    std::sort(by_value.begin(), by_value.end(),
              [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
    std::size_t start = by_value[0];
    for (std::size_t r = 1; r < by_value.size() && by_value[r] < start; ++r) {
        start = by_value[r];
    }
    return start;
}

std::vector<std::size_t> lit_positions(std::span<const Entry> p) {
    std::vector<std::size_t> out;
    if (p.empty()) return out;
    const std::size_t start = lit_start_position(p);
    Entry threshold = p[start];
    for (std::size_t i = start; i < p.size(); ++i) {
        if (p[i] >= threshold) {
            out.push_back(i);
            threshold = p[i];
        }
    }
    return out;
}

LRMaxFactorization lrmax_factorize(std::span<const Entry> p) {
    LRMaxFactorization f;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (f.factors.empty() || p[i] > f.factors.back().max_entry) {
            f.factors.push_back(LRMaxFactor{p[i], {}});
        } else {
            f.factors.back().tail.push_back(p[i]);
        }
    }
    f.lit_start = f.factors.size();
    for (std::size_t i : lit_positions(p)) f.lit.push_back(p[i]);
    if (!f.lit.empty()) {
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            if (f.factors[j].max_entry == f.lit.front()) {
                f.lit_start = j;
                break;
            }
        }
    }
    return f;
}

Permutation apply_symmetry(const Permutation& p, Symmetry g) {
    require_standard(p, "apply_symmetry");
    const std::size_t n = p.size();
    std::vector<Entry> out(n);
    switch (g) {
    case Symmetry::complement:
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Entry>(n + 1) - p[i];
        break;
    case Symmetry::reverse:
        std::reverse_copy(p.begin(), p.end(), out.begin());
        break;
    case Symmetry::inverse:
        for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(p[i] - 1)] = static_cast<Entry>(i + 1);
        break;
    }
    return Permutation(std::move(out));
}

Permutation apply_symmetry(const Permutation& p, std::span<const Symmetry> word) {
    require_standard(p, "apply_symmetry");
    Permutation out = p;
    for (Symmetry g : word) out = apply_symmetry(out, g);
    return out;
}

void for_each_occurrence(std::span<const Entry> p, std::span<const Entry> pattern,
                         const std::function<bool(std::span<const std::size_t>)>& visit) {
    visit_occurrences(p, pattern, [&](std::span<const std::size_t> pos) { return visit(pos); });
}

std::vector<std::vector<std::size_t>> occurrences(std::span<const Entry> p,
                                                  std::span<const Entry> pattern) {
    std::vector<std::vector<std::size_t>> out;
    visit_occurrences(p, pattern, [&](std::span<const std::size_t> pos) {
        out.emplace_back(pos.begin(), pos.end());
        return true;
    });
    return out;
}

bool is_avoider(std::span<const Entry> p, std::span<const Entry> pattern) {
    bool found = false;
    visit_occurrences(p, pattern, [&](std::span<const std::size_t>) {
        found = true;
        return false;
    });
    return !found;
}

UnderlinedPattern::UnderlinedPattern(Permutation full, std::size_t marked)
    : full_(std::move(full)), marked_(marked) {
    if (!full_.is_standard() || full_.empty()) {
        throw InvalidInput("underlined pattern must be a nonempty standard permutation");
    }
    if (marked_ >= full_.size()) throw InvalidInput("marked position out of range");
    std::vector<Entry> rest;
    for (std::size_t i = 0; i < full_.size(); ++i) {
        if (i != marked_) rest.push_back(full_[i]);
    }
    base_ = reduce(rest);
}

UnderlinedPattern UnderlinedPattern::parse(std::string_view text) {
    std::vector<Entry> letters;
    std::size_t marked = 0;
    int marks = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '1' && c <= '9') {
            letters.push_back(c - '0');
        } else if (c == '(') {
            if (i + 2 >= text.size() || text[i + 2] != ')' || text[i + 1] < '1' || text[i + 1] > '9') {
                throw InvalidInput("malformed pattern '" + std::string(text) + "': expected (d)");
            }
            marked = letters.size();
            letters.push_back(text[i + 1] - '0');
            ++marks;
            i += 2;
        } else {
            throw InvalidInput("malformed pattern '" + std::string(text) + "': unexpected character");
        }
    }
    if (marks != 1) {
        throw InvalidInput("pattern '" + std::string(text) + "' must have exactly one marked letter");
    }
    return UnderlinedPattern(Permutation(std::move(letters)), marked);
}

std::string UnderlinedPattern::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < full_.size(); ++i) {
        const std::string letter = std::to_string(full_[i]);
        s += (i == marked_) ? "(" + letter + ")" : letter;
    }
    return s;
}

UnderlinedPattern apply_symmetry(const UnderlinedPattern& up, Symmetry g) {
    const std::size_t m = up.size();
    std::size_t marked = up.marked_position();
    switch (g) {
    case Symmetry::complement:
        break;
    case Symmetry::reverse:
        marked = m - 1 - marked;
        break;
    case Symmetry::inverse:
        marked = static_cast<std::size_t>(up.marked_value() - 1);
        break;
    }
    return UnderlinedPattern(apply_symmetry(up.full(), g), marked);
}

bool satisfies(std::span<const Entry> p, const UnderlinedPattern& up) {
    const std::size_t m = up.size();
    const std::size_t q = up.marked_position();
    const Entry v = up.marked_value();
    const auto full = up.full().entries();

    // Base letters holding full values v-1 and v+1 bound the extension value.
    std::size_t below = m, above = m;
    for (std::size_t s = 0; s + 1 < m; ++s) {
        const Entry fv = full[s < q ? s : s + 1];
        if (fv == v - 1) below = s;
        if (fv == v + 1) above = s;
    }

    bool ok = true;
    visit_occurrences(p, up.base().entries(), [&](std::span<const std::size_t> pos) {
        const std::size_t first = q == 0 ? 0 : pos[q - 1] + 1;
        const std::size_t last = q + 1 == m ? p.size() : pos[q];
        const Entry lo = below == m ? Entry{0} : p[pos[below]];
        const bool bounded = above != m;
        const Entry hi = bounded ? p[pos[above]] : Entry{0};
        for (std::size_t i = first; i < last; ++i) {
            if (p[i] > lo && (!bounded || p[i] < hi)) return true;
        }
        ok = false;
        return false;
    });
    return ok;
}

bool fast_35241ok(std::span<const Entry> p) {
    std::size_t i = 0;
    bool have_prev_tail = false;
    Entry prev_tail_max = 0;
    while (i < p.size()) {
        const Entry m = p[i];
        std::size_t j = i + 1;
        while (j < p.size() && p[j] < m) ++j;
        const auto tail = p.subspan(i + 1, j - i - 1);
        if (!tail.empty()) {
            const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
            if (have_prev_tail && *lo < prev_tail_max) return false;
            if (!fast_35241ok(tail)) return false;
            prev_tail_max = *hi;
            have_prev_tail = true;
        }
        i = j;
    }
    return true;
}

bool is_two_stack_sortable(std::span<const Entry> p) {
    static constexpr Entry k2341[] = {2, 3, 4, 1};
    return fast_35241ok(p) && is_avoider(p, k2341);
}

void for_each_permutation(std::size_t n, const std::function<void(std::span<const Entry>)>& visit) {
    std::vector<Entry> perm(n);
    std::iota(perm.begin(), perm.end(), Entry{1});
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Permutation> permutations_if(std::size_t n, const PermutationPredicate& pred) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](std::span<const Entry> p) {
        if (pred(p)) out.emplace_back(std::vector<Entry>(p.begin(), p.end()));
    });
    return out;
}

BigInt census_if(unsigned n, const PermutationPredicate& pred, const CensusOptions& options) {
    if (n > options.limit) {
        throw ResourceLimit("census: n=" + std::to_string(n) + " exceeds the configured limit " +
                            std::to_string(options.limit));
    }
    if (n == 0) return pred(std::span<const Entry>{}) ? 1 : 0;

    std::atomic<unsigned> next_first{1};
    std::vector<unsigned long long> partial;
    auto worker = [&](unsigned long long& count) {
        std::vector<Entry> perm(n);
        for (unsigned first = next_first++; first <= n; first = next_first++) {
            perm[0] = first;
            Entry v = 1;
            for (unsigned i = 1; i < n; ++i, ++v) {
                if (v == static_cast<Entry>(first)) ++v;
                perm[i] = v;
            }
            do {
                if (pred(perm)) ++count;
            } while (std::next_permutation(perm.begin() + 1, perm.end()));
        }
    };

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp(threads, 1u, n);
    partial.assign(threads, 0);
    if (threads == 1) {
        worker(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, std::ref(partial[t]));
    }
    BigInt total = 0;
    for (unsigned long long c : partial) total += BigInt(std::to_string(c));
    return total;
}

BigInt census(const UnderlinedPattern& up, unsigned n, const CensusOptions& options) {
    return census_if(
        n, [&up](std::span<const Entry> p) { return satisfies(p, up); }, options);
}

} // namespace eigencomp
