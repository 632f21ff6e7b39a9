#include <doctest.h>

#include <set>

#include "eigencomp/errors.hpp"
#include "eigencomp/perm_core.hpp"
#include "eigencomp/recurrences.hpp"
#include "eigencomp/series.hpp"
#include "oracles.hpp"

using namespace eigencomp;

TEST_CASE("compositions") {
    const auto c3 = compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0].parts() == std::vector<unsigned>{3});
    CHECK(c3[1].parts() == std::vector<unsigned>{2, 1});
    CHECK(c3[2].parts() == std::vector<unsigned>{1, 2});
    CHECK(c3[3].parts() == std::vector<unsigned>{1, 1, 1});
    CHECK(compositions(1).size() == 1);
    CHECK(compositions(10).size() == 512);
    const auto c10 = compositions(10);
    CHECK(std::set<Composition>(c10.begin(), c10.end()).size() == 512);
    for (const Composition& c : c10) CHECK(c.total() == 10);
    CHECK_THROWS_AS(Composition({2, 0}), InvalidInput);
    CHECK_THROWS_AS(compositions(31), ResourceLimit);
}

TEST_CASE("dominance counts") {
    CHECK(dominance_count(Composition({5})) == 1);
    CHECK(dominance_count(Composition({1, 2})) == 2);
    CHECK(dominance_count(Composition({2, 1})) == 1);
    CHECK(dominance_count(Composition({1, 1, 1})) == 1);
    for (unsigned n = 1; n <= 12; ++n) {
        for (const Composition& c : compositions(n)) CHECK(dominance_count(c) == dominance_count_dp(c));
    }
}

TEST_CASE("recurrence tables") {
    const auto t = theorem2_tables(25);
    const std::vector<BigInt> head{1, 1, 2, 6, 23, 104, 531};
    CHECK(std::equal(head.begin(), head.end(), t.a.begin()));
    CHECK(t.a_nk(3, 1) == 2);
    CHECK(t.a_nk(3, 2) == 2);
    CHECK(t.a_nk(3, 3) == 2);
    CHECK(t.ascent_start[3] == 3);
    for (std::size_t n = 1; n <= 25; ++n) {
        BigInt sum = 0;
        for (std::size_t k = 1; k <= n; ++k) sum += t.a_nk(n, k);
        CHECK(sum == t.a[n]);
        CHECK(t.a_nk(n, n) == t.a[n - 1]);
    }
    const auto b = oracle::eigensequence(26);
    for (std::size_t n = 0; n <= 25; ++n) CHECK(t.a[n] == b[n]);
}

TEST_CASE("a_{n,k} counts OK permutations by first entry, n <= 7") {
    const auto t = theorem2_tables(7);
    for (unsigned n = 1; n <= 7; ++n) {
        std::vector<int> by_first(n + 1, 0);
        for (const auto& w : oracle::all_permutations(n)) {
            if (oracle::underlined_ok(w, {3, 5, 2, 4, 1}, 1)) ++by_first[static_cast<std::size_t>(w[0])];
        }
        for (unsigned k = 1; k <= n; ++k) CHECK(t.a_nk(n, k) == by_first[k]);
    }
}

TEST_CASE("composition sum") {
    const auto a = theorem3_a(14);
    CHECK(a[1] == 1);
    CHECK(a[4] == 23);
    CHECK(a == theorem2_tables(14).a);
    CHECK_THROWS_AS(theorem3_a(17), ResourceLimit);
}

TEST_CASE("Catalan numbers via compositions") {
    const auto c = catalan_via_compositions(14);
    CHECK(c[0] == 1);
    CHECK(c[1] == 1);
    CHECK(c[4] == 14);
    CHECK(c[4] == oracle::dyck_paths(4));
    for (unsigned n = 0; n <= 14; ++n) CHECK(c[n] == oracle::catalan(n));
    for (unsigned n = 0; n <= 9; ++n) CHECK(c[n] == oracle::dyck_paths(n));
}

TEST_CASE("Bell numbers") {
    const auto b = bell_numbers(10);
    CHECK(b[0] == 1);
    CHECK(b[3] == 5);
    CHECK(b[5] == 52);
    for (unsigned n = 0; n <= 10; ++n) CHECK(b[n] == oracle::restricted_growth_strings(n).size());
}
