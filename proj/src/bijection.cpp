#include "eigencomp/bijection.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "eigencomp/errors.hpp"

namespace eigencomp {

namespace {

constexpr Entry k321[] = {3, 2, 1};

std::size_t position_of(std::span<const Entry> p, Entry value) {
    const auto it = std::find(p.begin(), p.end(), value);
    if (it == p.end()) throw InvalidInput("entry " + std::to_string(value) + " not present");
    return static_cast<std::size_t>(it - p.begin());
}

std::size_t max_position(std::span<const Entry> p) {
    return static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
}

std::vector<Entry> sort_tails(std::span<const Entry> p) {
    std::vector<Entry> out(p.begin(), p.end());
    const auto starts = lrmax_positions(p);
    for (std::size_t f = 0; f < starts.size(); ++f) {
        const std::size_t b = starts[f] + 1;
        const std::size_t e = f + 1 < starts.size() ? starts[f + 1] : p.size();
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(b), out.begin() + static_cast<std::ptrdiff_t>(e));
    }
    return out;
}

void require_ok(std::span<const Entry> p, const char* what) {
    if (!fast_35241ok(p)) throw InvalidInput(std::string(what) + ": input is not 3(5)241-OK");
}

// Per-item layout produced by the inverse window procedure.
struct InverseLayout {
    std::vector<std::vector<Entry>> values;            // final value at each item position
    std::vector<std::vector<std::size_t>> pane_starts; // ascending positions
};

InverseLayout inverse_layout(const PermList& v) {
    const std::size_t k = v.size();
    if (k == 0) throw InvalidInput("window_inverse: empty list");
    std::size_t n = 0;
    for (const Permutation& item : v) {
        if (item.empty()) throw InvalidInput("window_inverse: list items must be nonempty");
        if (!is_avoider(item.entries(), k321)) {
            throw InvalidInput("window_inverse: list items must be 321-avoiding");
        }
        n += item.size();
    }

    InverseLayout layout;
    layout.values.resize(k);
    layout.pane_starts.resize(k);
    std::vector<std::vector<bool>> lrmax(k);
    std::vector<std::size_t> frontier(k);
    // Item positions by decreasing entry, for "largest blank entry" lookups.
    std::vector<std::vector<std::size_t>> by_value(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto item = v[i].entries();
        layout.values[i].assign(item.size(), 0);
        lrmax[i] = lrmax_flags(item);
        frontier[i] = lit_start_position(item);
        layout.pane_starts[i] = {frontier[i]};
        by_value[i].resize(item.size());
        std::iota(by_value[i].begin(), by_value[i].end(), std::size_t{0});
        std::sort(by_value[i].begin(), by_value[i].end(),
                  [&](std::size_t a, std::size_t b) { return item[a] > item[b]; });
    }

    // LIT entries take n, n-1, ... working right to left across the list.
    Entry next = static_cast<Entry>(n);
    for (std::size_t i = k; i-- > 0;) {
        const auto lit = lit_positions(v[i].entries());
        for (auto it = lit.rbegin(); it != lit.rend(); ++it) layout.values[i][*it] = next--;
    }

    std::size_t current = k - 1;
    while (next > 0) {
        auto& values = layout.values[current];
        std::size_t leftmost = values.size();
        bool first = true;
        for (std::size_t pos : by_value[current]) {
            if (values[pos] != 0) continue;
            if (!first && pos < frontier[current] && !lrmax[current][pos]) break;
            values[pos] = next--;
            leftmost = std::min(leftmost, pos);
            first = false;
            if (next == 0) break;
        }
        if (leftmost < frontier[current]) {
            frontier[current] = leftmost;
            layout.pane_starts[current].insert(layout.pane_starts[current].begin(), leftmost);
        }
        current = current == 0 ? k - 1 : current - 1;
    }
    return layout;
}

// Panes of every item, relabelled, ordered by first entry and concatenated.
MarkedPermutation assemble_panes(const std::vector<std::vector<Entry>>& relabelled,
                                 const std::vector<std::vector<std::size_t>>& pane_starts) {
    std::vector<std::vector<Entry>> panes;
    MarkedPermutation out;
    for (std::size_t i = 0; i < relabelled.size(); ++i) {
        const auto& item = relabelled[i];
        const auto& starts = pane_starts[i];
        if (starts.empty() || starts.front() != 0) {
            throw InvalidInput("window_inverse: item " + std::to_string(i + 1) + " was not fully empaned");
        }
        for (std::size_t j = 0; j < starts.size(); ++j) {
            const std::size_t e = j + 1 < starts.size() ? starts[j + 1] : item.size();
            panes.emplace_back(item.begin() + static_cast<std::ptrdiff_t>(starts[j]),
                               item.begin() + static_cast<std::ptrdiff_t>(e));
        }
        if (i + 1 < relabelled.size()) {
            out.marks.push_back(*std::max_element(item.begin(), item.end()));
        }
    }
    std::sort(panes.begin(), panes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<Entry> word;
    for (const auto& pane : panes) word.insert(word.end(), pane.begin(), pane.end());
    out.base = Permutation(std::move(word));
    std::sort(out.marks.begin(), out.marks.end());
    return out;
}

} // namespace

void validate_marks(const MarkedPermutation& m) {
    const auto p = m.base.entries();
    if (!std::is_sorted(m.marks.begin(), m.marks.end()) ||
        std::adjacent_find(m.marks.begin(), m.marks.end()) != m.marks.end()) {
        throw InvalidInput("marks must be distinct and ascending");
    }
    if (m.marks.empty()) return;
    const Entry max = m.base.max();
    const auto lit = lit_positions(p);
    for (Entry mark : m.marks) {
        const bool is_lit =
            std::any_of(lit.begin(), lit.end(), [&](std::size_t pos) { return p[pos] == mark; });
        if (!is_lit || mark == max) {
            throw InvalidInput("mark " + std::to_string(mark) + " is not a non-max LIT entry");
        }
    }
}

std::vector<MarkedPermutation> all_markings(const Permutation& p) {
    std::vector<Entry> candidates;
    for (std::size_t pos : lit_positions(p.entries())) {
        if (p[pos] != p.max()) candidates.push_back(p[pos]);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<MarkedPermutation> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << candidates.size()); ++mask) {
        MarkedPermutation m{p, {}};
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (mask >> i & 1) m.marks.push_back(candidates[i]);
        }
        out.push_back(std::move(m));
    }
    return out;
}

unsigned StarredPermutation::star_count() const {
    return std::accumulate(stars_before.begin(), stars_before.end(), stars_after_max);
}

bool theorem4_holds(std::span<const Entry> sigma, std::span<const Entry> tau) {
    if (!fast_35241ok(sigma) || !fast_35241ok(tau)) return false;
    if (tau.empty() || sigma.empty()) return true;
    const Entry tau_min = *std::min_element(tau.begin(), tau.end());
    const auto lit = lit_positions(sigma);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > tau_min && std::find(lit.begin(), lit.end(), i) == lit.end()) return false;
    }
    return true;
}

StarEncoding star_encode(const Permutation& p) {
    if (p.empty() || !p.is_standard()) throw InvalidInput("star_encode: need a nonempty standard permutation");
    require_ok(p.entries(), "star_encode");
    const auto word = p.entries();
    const std::size_t pm = max_position(word);
    const auto sigma = word.first(pm);
    const auto tau = word.subspan(pm + 1);

    StarEncoding enc;
    enc.rho = reduce(tau);
    enc.starred.base = reduce(sigma);
    enc.starred.stars_before.assign(sigma.size(), 0);
    for (Entry c : tau) {
        std::size_t best = sigma.size();
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i] > c && (best == sigma.size() || sigma[i] < sigma[best])) best = i;
        }
        if (best == sigma.size()) {
            ++enc.starred.stars_after_max;
        } else {
            ++enc.starred.stars_before[best];
        }
    }
    return enc;
}

namespace {

void validate_star_spots(const StarredPermutation& s) {
    if (!s.base.is_standard()) throw InvalidInput("starred permutation base must be standard");
    if (s.stars_before.size() != s.base.size()) {
        throw InvalidInput("starred permutation: star counts do not match base length");
    }
    const auto lit = lit_positions(s.base.entries());
    for (std::size_t i = 0; i < s.stars_before.size(); ++i) {
        if (s.stars_before[i] != 0 && std::find(lit.begin(), lit.end(), i) == lit.end()) {
            throw InvalidInput("star before non-LIT entry " + std::to_string(s.base[i]));
        }
    }
}

} // namespace

Permutation star_decode(const Permutation& rho, const StarredPermutation& starred) {
    validate_star_spots(starred);
    if (!rho.is_standard()) throw InvalidInput("star_decode: rho must be standard");
    if (starred.star_count() != rho.size()) {
        throw InvalidInput("star_decode: star count must equal |rho|");
    }
    const auto base = starred.base.entries();
    const std::size_t m = base.size();
    std::vector<std::size_t> pos_of(m + 1);
    for (std::size_t i = 0; i < m; ++i) pos_of[static_cast<std::size_t>(base[i])] = i;

    // Walk values upward: the stars before entry e stand for tau values just below e.
    std::vector<Entry> sigma_value(m + 1);
    std::vector<Entry> support;
    Entry v = 1;
    for (std::size_t e = 1; e <= m; ++e) {
        for (unsigned s = 0; s < starred.stars_before[pos_of[e]]; ++s) support.push_back(v++);
        sigma_value[e] = v++;
    }
    for (unsigned s = 0; s < starred.stars_after_max; ++s) support.push_back(v++);

    std::vector<Entry> word;
    word.reserve(m + 1 + rho.size());
    for (Entry e : base) word.push_back(sigma_value[static_cast<std::size_t>(e)]);
    word.push_back(v);
    for (Entry r : rho) word.push_back(support[static_cast<std::size_t>(r - 1)]);
    return Permutation(std::move(word));
}

CollapsedStars collapse_stars(const StarredPermutation& starred) {
    if (starred.base.empty()) throw InvalidInput("collapse_stars: base permutation is empty");
    validate_star_spots(starred);
    const auto base = starred.base.entries();
    const std::size_t pm = max_position(base);

    CollapsedStars out;
    out.marked.base = starred.base;
    for (std::size_t pos : lit_positions(base)) {
        const unsigned c = starred.stars_before[pos];
        if (pos == pm) {
            out.bits.insert(out.bits.end(), c, 0);
            out.bits.push_back(1);
        } else if (c > 0) {
            out.bits.insert(out.bits.end(), c - 1, 0);
            out.bits.push_back(1);
            out.marked.marks.push_back(base[pos]);
        }
    }
    out.bits.insert(out.bits.end(), starred.stars_after_max, 0);
    return out;
}

StarredPermutation expand_stars(const MarkedPermutation& marked, std::span<const std::uint8_t> bits) {
    if (marked.base.empty()) throw InvalidInput("expand_stars: base permutation is empty");
    validate_marks(marked);
    const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    if (ones != marked.marks.size() + 1) {
        throw InvalidInput("expand_stars: bit sequence must contain one 1 per mark plus one for the maximum");
    }
    const auto base = marked.base.entries();
    StarredPermutation out;
    out.base = marked.base;
    out.stars_before.assign(base.size(), 0);

    std::size_t seen = 0;
    unsigned zeros = 0;
    for (std::uint8_t bit : bits) {
        if (bit == 0) {
            ++zeros;
            continue;
        }
        if (seen < marked.marks.size()) {
            out.stars_before[position_of(base, marked.marks[seen])] = zeros + 1;
        } else {
            out.stars_before[max_position(base)] = zeros;
        }
        ++seen;
        zeros = 0;
    }
    out.stars_after_max = zeros;
    return out;
}

SortReduction sort_reduce(const MarkedPermutation& p) {
    validate_marks(p);
    SortReduction out;
    const auto word = p.base.entries();
    out.factor_starts = lrmax_positions(word);
    for (std::size_t f = 0; f < out.factor_starts.size(); ++f) {
        const std::size_t b = out.factor_starts[f] + 1;
        const std::size_t e = f + 1 < out.factor_starts.size() ? out.factor_starts[f + 1] : word.size();
        out.original_tails.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(b),
                                        word.begin() + static_cast<std::ptrdiff_t>(e));
    }
    out.sorted.base = Permutation(sort_tails(word));
    out.sorted.marks = p.marks;
    return out;
}

PaneDecomposition decompose_panes(const MarkedPermutation& q) {
    validate_marks(q);
    const auto p = q.base.entries();
    if (p.empty()) throw InvalidInput("window_forward: empty permutation");
    if (!is_avoider(p, k321)) throw InvalidInput("window_forward: permutation must be 321-avoiding");
    const std::size_t n = p.size();
    const auto lrmax = lrmax_flags(p);
    const auto lit = lit_positions(p);

    // Initial window: panes at the first LIT entry and after each marked LIT entry.
    std::vector<std::size_t> starts{lit.front()};
    for (std::size_t t = 0; t + 1 < lit.size(); ++t) {
        if (std::binary_search(q.marks.begin(), q.marks.end(), p[lit[t]])) starts.push_back(lit[t + 1]);
    }
    const std::size_t k = starts.size();

    PaneDecomposition d;
    std::map<Entry, Pane> pane_at; // keyed by first entry
    for (std::size_t j = 0; j < k; ++j) {
        const Pane pane{starts[j], j + 1 < k ? starts[j + 1] : n};
        d.initial_panes.push_back(pane);
        pane_at[p[pane.begin]] = pane;
    }

    std::size_t frontier = starts.front(); // everything from here on is empaned
    if (frontier == 0) {
        d.associations.push_back(std::nullopt);
    } else {
        std::deque<Pane> window(d.initial_panes.begin(), d.initial_panes.end());
        while (!window.empty()) {
            Entry m = 0; // stands in for -infinity
            for (std::size_t w = 0; w + 1 < window.size(); ++w) {
                for (std::size_t i = window[w].begin; i < window[w].end; ++i) {
                    if (!lrmax[i]) m = std::max(m, p[i]);
                }
            }
            // Un-empaned LRmax entries increase left to right, so the smallest one above m is the leftmost.
            std::optional<std::size_t> found;
            for (std::size_t i = 0; i < frontier; ++i) {
                if (lrmax[i] && p[i] > m) {
                    found = i;
                    break;
                }
            }
            if (!found) {
                d.associations.push_back(std::nullopt);
            } else {
                const Pane pane{*found, frontier};
                d.associations.push_back(p[*found]);
                pane_at[p[*found]] = pane;
                window.push_front(pane);
                frontier = *found;
            }
            window.pop_back();
        }
    }

    d.insertion_list.assign(d.associations.rbegin(), d.associations.rend());
    for (std::size_t s : starts) d.insertion_list.push_back(p[s]);

    // Fill right to left, each column bottom to top; an empty symbol closes its row.
    std::vector<std::vector<std::optional<Entry>>> reversed_rows(k);
    std::vector<bool> closed(k, false);
    std::size_t remaining = d.insertion_list.size();
    while (remaining > 0) {
        bool placed = false;
        for (std::size_t r = k; r-- > 0 && remaining > 0;) {
            if (closed[r]) continue;
            const auto symbol = d.insertion_list[--remaining];
            reversed_rows[r].push_back(symbol);
            if (!symbol) closed[r] = true;
            placed = true;
        }
        if (!placed) throw InvalidInput("window_forward: insertion list overflowed the array");
    }
    for (auto& row : reversed_rows) {
        d.array.emplace_back(row.rbegin(), row.rend());
        std::vector<Pane> panes;
        for (const auto& symbol : d.array.back()) {
            if (symbol) panes.push_back(pane_at.at(*symbol));
        }
        d.rows.push_back(std::move(panes));
    }

    std::size_t covered = 0;
    for (const auto& row : d.rows) {
        for (const Pane& pane : row) covered += pane.end - pane.begin;
    }
    if (covered != n) throw InvalidInput("window_forward: panes do not cover the permutation");
    return d;
}

namespace {

PermList rows_to_list(std::span<const Entry> word, const PaneDecomposition& d) {
    PermList out;
    for (const auto& row : d.rows) {
        std::vector<Entry> item;
        for (const Pane& pane : row) {
            item.insert(item.end(), word.begin() + static_cast<std::ptrdiff_t>(pane.begin),
                        word.begin() + static_cast<std::ptrdiff_t>(pane.end));
        }
        out.push_back(reduce(item));
    }
    return out;
}

} // namespace

PermList window_forward(const MarkedPermutation& q) {
    return rows_to_list(q.base.entries(), decompose_panes(q));
}

MarkedPermutation window_inverse(const PermList& v) {
    const InverseLayout layout = inverse_layout(v);
    return assemble_panes(layout.values, layout.pane_starts);
}

PermList theorem6_forward(const MarkedPermutation& p) {
    if (p.base.empty()) throw InvalidInput("theorem6_forward: empty permutation");
    require_ok(p.base.entries(), "theorem6_forward");
    const SortReduction sr = sort_reduce(p);
    // Panes consist of whole LRmax factors, so reading them off the unsorted word restores each tail.
    return rows_to_list(p.base.entries(), decompose_panes(sr.sorted));
}

MarkedPermutation theorem6_inverse(const PermList& v) {
    PermList sorted;
    for (const Permutation& item : v) {
        if (item.empty()) throw InvalidInput("theorem6_inverse: list items must be nonempty");
        require_ok(item.entries(), "theorem6_inverse");
        sorted.emplace_back(sort_tails(item.entries()));
    }
    const InverseLayout layout = inverse_layout(sorted);
    // Relabelling acts on values; tails hold the same value sets before and after sorting.
    std::vector<std::vector<Entry>> relabelled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::map<Entry, Entry> final_value;
        for (std::size_t pos = 0; pos < sorted[i].size(); ++pos) {
            final_value[sorted[i][pos]] = layout.values[i][pos];
        }
        for (Entry e : v[i]) relabelled[i].push_back(final_value.at(e));
    }
    return assemble_panes(relabelled, layout.pane_starts);
}

EigenPair eigen_forward(const Permutation& p) {
    if (p.empty() || !p.is_standard()) throw InvalidInput("eigen_forward: need a nonempty standard permutation");
    require_ok(p.entries(), "eigen_forward");
    const auto word = p.entries();
    const std::size_t pm = max_position(word);
    const std::size_t k = word.size() - pm;

    EigenPair out;
    if (pm == 0) {
        out.rho = reduce(word.subspan(1));
        out.items.assign(k, Permutation{});
        return out;
    }
    StarEncoding enc = star_encode(p);
    const CollapsedStars collapsed = collapse_stars(enc.starred);
    const PermList nonempty = theorem6_forward(collapsed.marked);
    out.rho = std::move(enc.rho);
    std::size_t next = 0;
    for (std::uint8_t bit : collapsed.bits) {
        out.items.push_back(bit ? nonempty.at(next++) : Permutation{});
    }
    return out;
}

Permutation eigen_inverse(const EigenPair& pair) {
    const std::size_t k = pair.items.size();
    if (k == 0) throw InvalidInput("eigen_inverse: list must have at least one item");
    if (pair.rho.size() + 1 != k) throw InvalidInput("eigen_inverse: |rho| must equal k - 1");
    if (!pair.rho.is_standard()) throw InvalidInput("eigen_inverse: rho must be standard");
    require_ok(pair.rho.entries(), "eigen_inverse");

    BitSequence bits;
    PermList nonempty;
    for (const Permutation& item : pair.items) {
        if (!item.is_standard()) throw InvalidInput("eigen_inverse: list items must be standard");
        require_ok(item.entries(), "eigen_inverse");
        bits.push_back(item.empty() ? 0 : 1);
        if (!item.empty()) nonempty.push_back(item);
    }
    if (nonempty.empty()) {
        std::vector<Entry> word{static_cast<Entry>(k)};
        word.insert(word.end(), pair.rho.begin(), pair.rho.end());
        return Permutation(std::move(word));
    }
    const MarkedPermutation marked = theorem6_inverse(nonempty);
    return star_decode(pair.rho, expand_stars(marked, bits));
}

} // namespace eigencomp
