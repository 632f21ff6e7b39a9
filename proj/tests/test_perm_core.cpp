#include <doctest.h>

#include <set>

#include "eigencomp/errors.hpp"
#include "eigencomp/perm_core.hpp"
#include "oracles.hpp"

using namespace eigencomp;

namespace {

Permutation P(std::initializer_list<Entry> e) { return Permutation(e); }

const UnderlinedPattern& pattern35241() {
    static const UnderlinedPattern up = UnderlinedPattern::parse("3(5)241");
    return up;
}

} // namespace

TEST_CASE("Permutation rejects repeated and non-positive entries") {
    CHECK_THROWS_AS(P({1, 1}), InvalidInput);
    CHECK_THROWS_AS(P({0, 1}), InvalidInput);
    CHECK_THROWS_AS(P({-3}), InvalidInput);
    CHECK(P({3, 9, 4}).size() == 3);
    CHECK_FALSE(P({3, 9, 4}).is_standard());
    CHECK(P({2, 3, 1}).is_standard());
    CHECK(Permutation().is_standard());
    CHECK(Permutation::identity(4) == P({1, 2, 3, 4}));
}

TEST_CASE("reduce") {
    CHECK(reduce(P({3, 5, 2}).entries()) == P({2, 3, 1}));
    CHECK(reduce(P({1, 2, 3}).entries()) == P({1, 2, 3}));
    CHECK(reduce(P({9, 4, 7}).entries()) == P({3, 1, 2}));
    const std::vector<Entry> dup{4, 4};
    CHECK_THROWS_AS(reduce(dup), InvalidInput);
    for (const auto& w : oracle::all_permutations(5)) {
        CHECK(reduce(w) == Permutation(w));
    }
}

TEST_CASE("LRmax factorization") {
    const auto f = lrmax_factorize(P({2, 1, 4, 7, 6, 5, 8, 9, 3}).entries());
    REQUIRE(f.factors.size() == 5);
    CHECK(f.factors[0].max_entry == 2);
    CHECK(f.factors[0].tail == std::vector<Entry>{1});
    CHECK(f.factors[1].tail.empty());
    CHECK(f.factors[2].tail == std::vector<Entry>{6, 5});
    CHECK(f.factors[4].tail == std::vector<Entry>{3});
    CHECK(f.lit == std::vector<Entry>{7, 8, 9});

    const auto id = lrmax_factorize(Permutation::identity(5).entries());
    CHECK(id.factors.size() == 5);
    CHECK(id.lit == std::vector<Entry>{1, 2, 3, 4, 5});

    const auto g = lrmax_factorize(P({3, 1, 5, 2, 4}).entries());
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[1].tail == std::vector<Entry>{2, 4});
    CHECK(g.lit == std::vector<Entry>{5});

    CHECK(lrmax_factorize(P({2, 1, 3}).entries()).lit == std::vector<Entry>{2, 3});
}

TEST_CASE("LRmax invariants and LIT as a terminal segment, n <= 7") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (const auto& w : oracle::all_permutations(n)) {
            const auto f = lrmax_factorize(w);
            std::vector<Entry> rebuilt;
            Entry prev = 0;
            for (const auto& factor : f.factors) {
                CHECK(factor.max_entry > prev);
                prev = factor.max_entry;
                rebuilt.push_back(factor.max_entry);
                for (Entry t : factor.tail) {
                    CHECK(t < factor.max_entry);
                    rebuilt.push_back(t);
                }
            }
            CHECK(rebuilt == w);
            CHECK(prev == static_cast<Entry>(n));
            // LIT maxima: the terminal run of factor maxima that are consecutive and end at n.
            std::vector<Entry> expected;
            for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
                if (it->max_entry != static_cast<Entry>(n) - static_cast<Entry>(expected.size())) break;
                expected.insert(expected.begin(), it->max_entry);
            }
            CHECK(f.lit == expected);
            // Sorting tails leaves the LIT set alone.
            std::vector<Entry> sorted;
            for (const auto& factor : f.factors) {
                sorted.push_back(factor.max_entry);
                std::vector<Entry> tail = factor.tail;
                std::sort(tail.begin(), tail.end());
                sorted.insert(sorted.end(), tail.begin(), tail.end());
            }
            CHECK(lrmax_factorize(sorted).lit == f.lit);
        }
    }
}

TEST_CASE("symmetries") {
    CHECK(apply_symmetry(P({1, 2, 3}), Symmetry::complement) == P({3, 2, 1}));
    CHECK(apply_symmetry(P({2, 1, 3}), Symmetry::reverse) == P({3, 1, 2}));
    CHECK(apply_symmetry(P({2, 3, 1}), Symmetry::inverse) == P({3, 1, 2}));
    for (const auto& w : oracle::all_permutations(5)) {
        const Permutation p(w);
        for (Symmetry g : {Symmetry::complement, Symmetry::reverse, Symmetry::inverse}) {
            CHECK(apply_symmetry(apply_symmetry(p, g), g) == p);
        }
    }
    CHECK_THROWS_AS(apply_symmetry(P({2, 5}), Symmetry::inverse), InvalidInput);
}

TEST_CASE("occurrences") {
    const auto occ = occurrences(P({3, 5, 1, 2, 4}).entries(), P({2, 3, 1}).entries());
    const std::vector<std::size_t> subword352{0, 1, 3};
    CHECK(std::find(occ.begin(), occ.end(), subword352) != occ.end());
    CHECK(occurrences(P({1, 2}).entries(), P({1, 2, 3}).entries()).empty());
    const auto single = occurrences(P({3, 2, 1}).entries(), P({3, 2, 1}).entries());
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<std::size_t>{0, 1, 2});

    for (const auto& w : oracle::all_permutations(6)) {
        for (const auto& pat : oracle::all_permutations(3)) {
            std::size_t naive = 0;
            for (const auto& s : oracle::subsets(6, 3)) naive += oracle::is_occurrence(w, s, pat);
            CHECK(occurrences(w, pat).size() == naive);
        }
    }
}

TEST_CASE("is_avoider") {
    CHECK(is_avoider(P({1, 2, 3}).entries(), P({3, 2, 1}).entries()));
    CHECK_FALSE(is_avoider(P({3, 2, 1}).entries(), P({3, 2, 1}).entries()));
    const std::vector<Entry> p321{3, 2, 1};
    std::size_t count = 0;
    for (const auto& w : oracle::all_permutations(4)) count += is_avoider(w, p321);
    CHECK(count == 14);
    for (const auto& w : oracle::all_permutations(6)) {
        CHECK(is_avoider(w, p321) == !oracle::contains(w, {3, 2, 1}));
        CHECK(is_avoider(w, std::vector<Entry>{2, 4, 1, 3}) == !oracle::contains(w, {2, 4, 1, 3}));
    }
}

TEST_CASE("underlined pattern parsing") {
    const auto up = UnderlinedPattern::parse("3(5)241");
    CHECK(up.full() == P({3, 5, 2, 4, 1}));
    CHECK(up.marked_position() == 1);
    CHECK(up.marked_value() == 5);
    CHECK(up.base() == P({3, 2, 4, 1}));
    CHECK(up.to_string() == "3(5)241");
    CHECK(UnderlinedPattern::parse("(1)324").marked_position() == 0);
    CHECK_THROWS_AS(UnderlinedPattern::parse("35241"), InvalidInput);
    CHECK_THROWS_AS(UnderlinedPattern::parse("(3)(5)241"), InvalidInput);
    CHECK_THROWS_AS(UnderlinedPattern::parse("3(5)2x1"), InvalidInput);
    CHECK_THROWS_AS(UnderlinedPattern::parse("3(6)241"), InvalidInput);
}

TEST_CASE("satisfies") {
    CHECK_FALSE(satisfies(P({3, 2, 4, 1}).entries(), pattern35241()));
    CHECK(satisfies(P({3, 5, 2, 4, 1}).entries(), pattern35241()));
    CHECK(satisfies(std::span<const Entry>{}, pattern35241()));
    std::size_t ok4 = 0;
    for (const auto& w : oracle::all_permutations(4)) {
        const bool s = satisfies(w, pattern35241());
        ok4 += s;
        if (!s) CHECK(w == std::vector<Entry>{3, 2, 4, 1});
    }
    CHECK(ok4 == 23);
}

TEST_CASE("satisfies agrees with the definition for every underlined 4-pattern, n <= 6") {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto perms = oracle::all_permutations(n);
        for (const auto& full : oracle::all_permutations(4)) {
            for (std::size_t marked = 0; marked < 4; ++marked) {
                const UnderlinedPattern up(Permutation(full), marked);
                for (const auto& w : perms) {
                    CHECK(satisfies(w, up) == oracle::underlined_ok(w, full, marked));
                }
            }
        }
    }
}

TEST_CASE("satisfies is invariant under the symmetries, n <= 6") {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto perms = oracle::all_permutations(n);
        for (const auto& full : oracle::all_permutations(4)) {
            for (std::size_t marked = 0; marked < 4; ++marked) {
                const UnderlinedPattern up(Permutation(full), marked);
                for (Symmetry g : {Symmetry::complement, Symmetry::reverse, Symmetry::inverse}) {
                    const UnderlinedPattern image = apply_symmetry(up, g);
                    for (const auto& w : perms) {
                        const Permutation p(w);
                        CHECK(satisfies(p.entries(), up) == satisfies(apply_symmetry(p, g).entries(), image));
                    }
                }
            }
        }
    }
}

TEST_CASE("fast_35241ok matches satisfies, n <= 7") {
    CHECK_FALSE(fast_35241ok(P({3, 2, 4, 1}).entries()));
    CHECK(fast_35241ok(Permutation::identity(6).entries()));
    for (unsigned n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_permutations(n)) {
            CHECK(fast_35241ok(w) == satisfies(w, pattern35241()));
        }
    }
    for (const auto& w : oracle::all_permutations(5)) {
        CHECK(fast_35241ok(w) == oracle::underlined_ok(w, {3, 5, 2, 4, 1}, 1));
    }
}

TEST_CASE("census") {
    CHECK(census(pattern35241(), 0) == 1);
    CHECK(census(UnderlinedPattern::parse("(1)324"), 0) == 1);
    CHECK(census(pattern35241(), 4) == 23);
    CHECK(census(pattern35241(), 5) == 104);
    CHECK(census(pattern35241(), 6, {10, 1}) == census(pattern35241(), 6, {10, 4}));
    CHECK_THROWS_AS(census(pattern35241(), 11), ResourceLimit);
    CHECK_NOTHROW(census(pattern35241(), 2, {2, 0}));
}

TEST_CASE("two-stack-sortable permutations are the 2341-avoiding 3(5)241-OK ones") {
    for (const auto& w : oracle::all_permutations(6)) {
        CHECK(is_two_stack_sortable(w) ==
              (!oracle::contains(w, {2, 3, 4, 1}) && oracle::underlined_ok(w, {3, 5, 2, 4, 1}, 1)));
    }
}
