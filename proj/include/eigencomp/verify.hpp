#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eigencomp {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Eigensequence terms 1..7 against the known prefix.
CheckResult check_eigensequence_prefix();
/// census(3(5)241, n) = b_{n+1} for n <= max_n.
CheckResult check_census_shift(unsigned max_n);
/// Recurrence tables against the eigensequence shift for n <= max_n, and the composition sum for n <= min(max_n, 14).
CheckResult check_recurrences(unsigned max_n);
/// Composition-sum Catalan numbers against a 321-avoider census for n <= max_n.
CheckResult check_catalan(unsigned max_n);

/// Window map on marked 321-avoiders: injective, exact image, both round trips, for n <= max_n.
CheckResult check_window_bijection(unsigned max_n);
/// Reduction maps round trip on every marked 3(5)241-OK permutation, n <= max_n.
CheckResult check_reduction_round_trips(unsigned max_n);
/// eigen_forward is a bijection onto its codomain, with exact round trips, for n <= max_n.
CheckResult check_eigen_bijection(unsigned max_n);
/// Fixed examples of the star encoding and the moving window.
CheckResult check_fixed_examples();

/// Orbit sizes, labels and member lists of the 96 underlined 4-patterns.
CheckResult check_classification();
/// a051295_seq and new_seq against brute-force censuses, u_nk against its series, n <= max_n.
CheckResult check_four_pattern_sequences(unsigned max_n);
/// Set-partition maps round trip and count Bell numbers, n <= max_n.
CheckResult check_bell_maps(unsigned max_n);
/// wilf_map bijective and patience_ok equal to 3(1)42-OK, n <= max_n.
CheckResult check_wilf_and_patience(unsigned max_n);

/// Suites: recurrences, bijection, fourpatterns, all. Throws InvalidInput for other names.
std::vector<CheckResult> run_suite(std::string_view suite, unsigned max_n);

} // namespace eigencomp
