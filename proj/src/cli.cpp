#include "eigencomp/cli.hpp"

#include <algorithm>
#include <iomanip>

#include <CLI11.hpp>

#include "eigencomp/bijection.hpp"
#include "eigencomp/errors.hpp"
#include "eigencomp/four_patterns.hpp"
#include "eigencomp/recurrences.hpp"
#include "eigencomp/series.hpp"
#include "eigencomp/text_format.hpp"
#include "eigencomp/verify.hpp"

namespace eigencomp {

namespace {

struct Settings {
    std::string which;
    std::string direction;
    std::string pattern;
    std::string input;
    std::string suite = "all";
    unsigned n = 0;
    unsigned max_n = 8;
    unsigned limit = 10;
    unsigned threads = 0;
    bool json = false;
    bool bfile = false;
    bool brute = false;
    bool fast = false;
    bool window = false;
};

std::vector<BigInt> sequence_terms(const std::string& which, unsigned count) {
    if (count == 0) return {};
    if (which == "eigen") return eigensequence(count);
    std::vector<BigInt> v;
    const std::size_t top = count - 1;
    if (which == "a") v = theorem2_tables(top).a;
    else if (which == "catalan") v = catalan_via_compositions(top);
    else if (which == "bell") v = bell_numbers(top);
    else if (which == "a051295") v = a051295_seq(top);
    else v = new_seq(top);
    return v;
}

int cmd_seq(const Settings& s, std::ostream& out) {
    const auto values = sequence_terms(s.which, s.n);
    if (s.json) {
        out << sequence_to_json(values).dump() << '\n';
    } else if (s.bfile) {
        out << format_bfile(values);
    } else {
        std::string line;
        for (const BigInt& v : values) line += (line.empty() ? "" : " ") + v.get_str();
        out << line << '\n';
    }
    return kExitOk;
}

int cmd_count(const Settings& s, std::ostream& out) {
    const UnderlinedPattern up = UnderlinedPattern::parse(s.pattern);
    const CensusOptions options{s.limit, s.threads};
    if (s.fast) {
        if (!(up == UnderlinedPattern::parse("3(5)241"))) {
            throw InvalidInput("--fast is only available for the pattern 3(5)241");
        }
        out << census_if(s.n, fast_35241ok, options).get_str() << '\n';
    } else {
        out << census(up, s.n, options).get_str() << '\n';
    }
    return kExitOk;
}

int cmd_classify(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto classes = classify(s.max_n);
    if (s.json) {
        out << to_json(classes).dump(2) << '\n';
    } else {
        out << render_classification(classes);
    }
    const auto diffs = compare_with_reference(classes);
    for (const std::string& d : diffs) err << "reference mismatch: " << d << '\n';
    return kExitOk;
}

int cmd_biject(const Settings& s, std::ostream& out) {
    const bool json_in = looks_like_json(s.input);
    if (s.direction == "forward") {
        const MarkedPermutation q = json_in ? marked_from_json(parse_json(s.input)) : parse_marked(s.input);
        const PermList v = s.window ? window_forward(q) : theorem6_forward(q);
        out << (s.json ? to_json(v).dump() : format_list(v)) << '\n';
    } else {
        const PermList v = json_in ? list_from_json(parse_json(s.input)) : parse_list(s.input);
        const MarkedPermutation q = s.window ? window_inverse(v) : theorem6_inverse(v);
        out << (s.json ? to_json(q).dump() : format_marked(q)) << '\n';
    }
    return kExitOk;
}

int cmd_eigen(const Settings& s, std::ostream& out) {
    const bool json_in = looks_like_json(s.input);
    if (s.direction == "decompose") {
        const Permutation p = json_in ? permutation_from_json(parse_json(s.input)) : parse_permutation(s.input);
        const EigenPair pair = eigen_forward(p);
        out << (s.json ? to_json(pair).dump() : format_eigen_pair(pair)) << '\n';
    } else {
        const EigenPair pair = json_in ? eigen_pair_from_json(parse_json(s.input)) : parse_eigen_pair(s.input);
        const Permutation p = eigen_inverse(pair);
        out << (s.json ? to_json(p.entries()).dump() : format_permutation(p.entries())) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    bool ok = true;
    for (const CheckResult& r : run_suite(s.suite, s.max_n)) {
        ok = ok && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
            << " s)";
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigensequence permutations: counting, bijections and pattern classification", "eigencomp"};
    app.require_subcommand(1);
    Settings s;

    auto* seq = app.add_subcommand("seq", "Print the first N terms of a sequence");
    seq->add_option("name", s.which, "eigen, a, catalan, bell, a051295 or new4")
        ->required()
        ->check(CLI::IsMember({"eigen", "a", "catalan", "bell", "a051295", "new4"}));
    seq->add_option("--n", s.n, "Number of terms")->required();
    auto* bfile = seq->add_flag("--bfile", s.bfile, "One 'index value' line per term, 1-indexed");
    seq->add_flag("--json", s.json, "JSON records {n, value}")->excludes(bfile);

    auto* count = app.add_subcommand("count", "Count permutations of [n] satisfying an underlined pattern");
    count->add_option("--pattern", s.pattern, "Underlined pattern, e.g. 3(5)241")->required();
    count->add_option("--n", s.n, "Permutation length")->required();
    auto* brute = count->add_flag("--brute", s.brute, "Generic occurrence search (default)");
    count->add_flag("--fast", s.fast, "Specialised test, 3(5)241 only")->excludes(brute);
    count->add_option("--limit", s.limit, "Largest n accepted for enumeration")->capture_default_str();
    count->add_option("--threads", s.threads, "Worker threads, 0 for hardware concurrency");

    auto* classify4 = app.add_subcommand("classify4", "Classify the 96 underlined 4-patterns");
    classify4->add_flag("--json", s.json, "Machine-readable class records");
    classify4->add_option("--max-n", s.max_n, "Census length used for matching")->capture_default_str();

    auto* biject = app.add_subcommand("biject", "Marked permutations <-> lists of permutations");
    biject->add_option("direction", s.direction, "forward or inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    biject->add_option("--input", s.input, "Marked permutation ('26^' marks 26) or list ('a b / c')")->required();
    biject->add_flag("--window", s.window, "Restrict to the 321-avoiding window map");
    biject->add_flag("--json", s.json, "JSON output");

    auto* eigen = app.add_subcommand("eigen", "Permutation <-> (rho ; k-list) decomposition");
    eigen->add_option("direction", s.direction, "decompose or compose")
        ->required()
        ->check(CLI::IsMember({"decompose", "compose"}));
    eigen->add_option("--input", s.input, "Permutation or 'rho ; item / item'")->required();
    eigen->add_flag("--json", s.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify->add_option("--suite", s.suite, "recurrences, bijection, fourpatterns or all")
        ->check(CLI::IsMember({"recurrences", "bijection", "fourpatterns", "all"}))
        ->capture_default_str();
    verify->add_option("--max-n", s.max_n, "Largest length enumerated")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (seq->parsed()) return cmd_seq(s, out);
        if (count->parsed()) return cmd_count(s, out);
        if (classify4->parsed()) return cmd_classify(s, out, err);
        if (biject->parsed()) return cmd_biject(s, out);
        if (eigen->parsed()) return cmd_eigen(s, out);
        return cmd_verify(s, out);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ResourceLimit& e) {
        err << "limit exceeded: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ClassificationFailure& e) {
        err << "classification failure: " << e.what() << '\n';
        return kExitClassification;
    }
}

} // namespace eigencomp
