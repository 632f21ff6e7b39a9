#include <doctest.h>

#include <map>
#include <set>

#include "eigencomp/errors.hpp"
#include "eigencomp/four_patterns.hpp"
#include "eigencomp/recurrences.hpp"
#include "oracles.hpp"

using namespace eigencomp;

namespace {

Permutation P(std::initializer_list<Entry> e) { return Permutation(e); }

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::size_t ok_count(unsigned n, const oracle::Word& full, std::size_t marked) {
    std::size_t c = 0;
    for (const auto& w : oracle::all_permutations(n)) c += oracle::underlined_ok(w, full, marked);
    return c;
}

} // namespace

TEST_CASE("the 96 underlined 4-patterns") {
    const auto all = all_underlined4();
    CHECK(all.size() == 96);
    CHECK(std::set<UnderlinedPattern>(all.begin(), all.end()).size() == 96);
    CHECK(std::count(all.begin(), all.end(), UnderlinedPattern::parse("4(2)31")) == 1);
    CHECK(std::count(all.begin(), all.end(), UnderlinedPattern::parse("(1)324")) == 1);
}

TEST_CASE("orbits are closed under the symmetries") {
    std::size_t covered = 0;
    std::set<UnderlinedPattern> seen;
    for (const UnderlinedPattern& up : all_underlined4()) {
        if (seen.count(up)) continue;
        const auto orbit = symmetry_orbit(up);
        covered += orbit.size();
        seen.insert(orbit.begin(), orbit.end());
        for (const UnderlinedPattern& m : orbit) {
            for (Symmetry g : {Symmetry::complement, Symmetry::reverse, Symmetry::inverse}) {
                CHECK(std::count(orbit.begin(), orbit.end(), apply_symmetry(m, g)) == 1);
            }
        }
    }
    CHECK(covered == 96);
    const auto orbit = symmetry_orbit(UnderlinedPattern::parse("32(4)1"));
    CHECK(std::count(orbit.begin(), orbit.end(), UnderlinedPattern::parse("134(2)")) == 1);
}

TEST_CASE("classification") {
    const auto classes = classify(7);
    std::size_t trivial = 0, total = 0;
    std::map<SequenceLabel, std::size_t> per_label;
    for (const PatternClass& c : classes) {
        total += c.members.size();
        per_label[c.label] += c.members.size();
        if (c.trivial) {
            trivial += c.members.size();
            CHECK(c.label == SequenceLabel::catalan);
            for (unsigned n = 0; n <= 7; ++n) CHECK(c.counts[n] == oracle::catalan(n));
        }
        CHECK(std::count(c.members.begin(), c.members.end(), c.representative) == 1);
    }
    CHECK(total == 96);
    CHECK(trivial == 64);
    CHECK(per_label[SequenceLabel::catalan] == 64);
    CHECK(per_label[SequenceLabel::bell] == 16);
    CHECK(per_label[SequenceLabel::a051295] == 12);
    CHECK(per_label[SequenceLabel::new4] == 4);
    REQUIRE(classes.size() == 16);
    CHECK(classes[0].representative.to_string() == "32(4)1");
    CHECK(classes[4].representative.to_string() == "321(4)");
    CHECK(compare_with_reference(classes).empty());

    // Counts checked independently against the definition for a member of every class, n <= 6.
    for (const PatternClass& c : classes) {
        const UnderlinedPattern& m = c.members.back();
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(c.counts[n] == ok_count(n, m.full().to_vector(), m.marked_position()));
        }
    }
    const std::string table = render_classification(classes);
    CHECK(table.find("32(4)1") != std::string::npos);
    CHECK(table.find("new4") != std::string::npos);
}

TEST_CASE("set partitions") {
    const SetPartition sp({{6}, {7, 3, 5}, {2, 4, 1}});
    CHECK(sp.size() == 7);
    CHECK(sp.blocks() == std::vector<std::vector<Entry>>{{1, 2, 4}, {6}, {3, 5, 7}});
    CHECK(sp.canonical_increasing() == "412-6-735");
    CHECK(sp.canonical_decreasing() == "421-6-753");
    CHECK_THROWS_AS(SetPartition({{1, 2}, {2, 3}}), InvalidInput);
    CHECK_THROWS_AS(SetPartition({{1}, {3}}), InvalidInput);
    CHECK_THROWS_AS(SetPartition({{1}, {}}), InvalidInput);

    CHECK(to_partition_increasing(P({4, 1, 2, 6, 7, 3, 5})) == sp);
    CHECK(from_partition_increasing(sp) == P({4, 1, 2, 6, 7, 3, 5}));
    CHECK(to_partition_decreasing(P({4, 2, 1, 6, 7, 5, 3})) == sp);
    CHECK(from_partition_decreasing(sp) == P({4, 2, 1, 6, 7, 5, 3}));
    CHECK(to_partition_increasing(Permutation::identity(4)).blocks().size() == 4);
    CHECK(to_partition_decreasing(Permutation::identity(4)).blocks().size() == 4);
    CHECK_THROWS_AS(to_partition_increasing(P({3, 2, 1})), InvalidInput);
    CHECK_THROWS_AS(to_partition_decreasing(P({3, 1, 2})), InvalidInput);
}

TEST_CASE("set-partition maps against restricted growth strings, n <= 8") {
    for (unsigned n = 0; n <= 8; ++n) {
        const auto all = oracle::restricted_growth_strings(n);
        std::set<Permutation> inc, dec;
        for (const auto& rgs : all) {
            const SetPartition sp(oracle::blocks_of(rgs));
            const Permutation a = from_partition_increasing(sp);
            const Permutation b = from_partition_decreasing(sp);
            CHECK(to_partition_increasing(a) == sp);
            CHECK(to_partition_decreasing(b) == sp);
            inc.insert(a);
            dec.insert(b);
        }
        CHECK(inc.size() == all.size());
        CHECK(dec.size() == all.size());
        if (n <= 7) {
            CHECK(ok_count(n, {3, 2, 4, 1}, 2) == all.size());
            CHECK(ok_count(n, {3, 1, 4, 2}, 2) == all.size());
        }
    }
}

TEST_CASE("A051295") {
    CHECK(a051295_seq(7) == big({1, 1, 2, 5, 15, 54, 235, 1237}));
    for (unsigned n = 0; n <= 7; ++n) CHECK(a051295_seq(7)[n] == ok_count(n, {1, 3, 2, 4}, 0));
}

TEST_CASE("u_{n,k}") {
    CHECK(u_nk(3, 2) == 2);
    CHECK_THROWS_AS(u_nk(3, 0), InvalidInput);
    CHECK_THROWS_AS(u_nk(3, 4), InvalidInput);
    CHECK_THROWS_AS(u_nk(11, 1), ResourceLimit);
    const auto u = a051295_seq(10);
    for (unsigned n = 1; n <= 10; ++n) {
        const auto row = u_row(n);
        CHECK(row[1] == oracle::factorial(n - 1));
        BigInt sum = 0;
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(row[k] == u_nk_series(n, k));
            sum += row[k];
        }
        CHECK(sum == u[n]);
    }
    // u_{3,2} by the definition: 1 in second position and (1)342-OK.
    std::size_t direct = 0;
    for (const auto& w : oracle::all_permutations(3)) direct += w[1] == 1 && oracle::underlined_ok(w, {1, 3, 4, 2}, 0);
    CHECK(direct == 2);
}

TEST_CASE("factorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(rising_factorial(3, 0) == 1);
    CHECK(rising_factorial(3, 3) == 60);
    CHECK(rising_factorial(0, 2) == 0);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(2, 3) == 0);
}

TEST_CASE("new sequence") {
    CHECK(new_seq(8) == big({1, 1, 2, 5, 15, 55, 248, 1357, 8809}));
    CHECK(new_seq(2)[2] == 2);
    const auto w = new_seq(20);
    for (unsigned n = 0; n <= 20; ++n) CHECK(w[n] == oracle::new_sequence_term(n));
    const auto u = a051295_seq(12);
    for (unsigned n = 0; n <= 12; ++n) CHECK(w[n] >= u[n]);
    for (unsigned n = 0; n <= 7; ++n) CHECK(w[n] == ok_count(n, {3, 2, 1, 4}, 3));
}

TEST_CASE("Wilf map") {
    CHECK(wilf_map(Permutation::identity(5)) == Permutation::identity(5));
    CHECK(wilf_map(P({3, 1, 2})) == P({3, 1, 2}));
    CHECK_THROWS_AS(wilf_map(P({2, 1, 3})), InvalidInput);
    for (unsigned n = 0; n <= 7; ++n) {
        std::set<Permutation> image;
        for (const auto& w : oracle::all_permutations(n)) {
            if (!oracle::underlined_ok(w, {1, 3, 2, 4}, 0)) continue;
            const Permutation out = wilf_map(Permutation(w));
            CHECK(oracle::underlined_ok(out.to_vector(), {1, 3, 4, 2}, 0));
            CHECK(image.insert(out).second);
        }
        CHECK(image.size() == ok_count(n, {1, 3, 4, 2}, 0));
    }
}

TEST_CASE("patience condition") {
    for (unsigned n = 0; n <= 2; ++n) {
        for (const auto& w : oracle::all_permutations(n)) CHECK(patience_ok(w));
    }
    CHECK_FALSE(patience_ok(P({2, 3, 1}).entries()));
    CHECK(patience_ok(P({3, 1, 4, 2}).entries()));
    for (unsigned n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_permutations(n)) CHECK(patience_ok(w) == oracle::underlined_ok(w, {3, 1, 4, 2}, 1));
    }
}
