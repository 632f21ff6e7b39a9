#include "eigencomp/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "eigencomp/errors.hpp"

namespace eigencomp {

namespace {

std::vector<std::string> tokens_of(std::string_view text) {
    std::string cleaned(text);
    for (char& c : cleaned) {
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
    }
    std::istringstream in(cleaned);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

Entry parse_entry(std::string_view tok) {
    Entry value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value <= 0) {
        throw InvalidInput("malformed permutation text: bad entry '" + std::string(tok) + "'");
    }
    return value;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<Entry> entries_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string("malformed JSON: ") + what + " must be an array");
    std::vector<Entry> out;
    for (const Json& e : j) {
        if (!e.is_number_integer() || e.get<Entry>() <= 0) {
            throw InvalidInput(std::string("malformed JSON: ") + what + " entries must be positive integers");
        }
        out.push_back(e.get<Entry>());
    }
    return out;
}

BigInt big_from_json(const Json& j) {
    try {
        if (j.is_string()) return BigInt(j.get<std::string>());
        if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    } catch (const std::invalid_argument&) {
    }
    throw InvalidInput("malformed JSON: sequence values must be decimal strings or integers");
}

} // namespace

Permutation parse_permutation(std::string_view text) {
    std::vector<Entry> entries;
    for (const std::string& tok : tokens_of(text)) entries.push_back(parse_entry(tok));
    return Permutation(std::move(entries));
}

std::string format_permutation(std::span<const Entry> p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

MarkedPermutation parse_marked(std::string_view text) {
    std::vector<Entry> entries;
    std::vector<Entry> marks;
    for (std::string tok : tokens_of(text)) {
        const bool marked = !tok.empty() && tok.back() == '^';
        if (marked) tok.pop_back();
        entries.push_back(parse_entry(tok));
        if (marked) marks.push_back(entries.back());
    }
    std::sort(marks.begin(), marks.end());
    MarkedPermutation m{Permutation(std::move(entries)), std::move(marks)};
    validate_marks(m);
    return m;
}

std::string format_marked(const MarkedPermutation& m) {
    std::string s;
    for (std::size_t i = 0; i < m.base.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(m.base[i]);
        if (std::binary_search(m.marks.begin(), m.marks.end(), m.base[i])) s += '^';
    }
    return s;
}

StarredPermutation parse_starred(std::string_view text) {
    std::vector<Entry> entries;
    std::vector<unsigned> before;
    unsigned pending = 0;
    for (const std::string& tok : tokens_of(text)) {
        if (tok == "*") {
            ++pending;
            continue;
        }
        entries.push_back(parse_entry(tok));
        before.push_back(pending);
        pending = 0;
    }
    StarredPermutation s{Permutation(std::move(entries)), std::move(before), 0};
    if (s.base.empty()) {
        s.stars_after_max = pending;
        return s;
    }
    const auto max_pos = static_cast<std::size_t>(
        std::max_element(s.base.begin(), s.base.end()) - s.base.begin());
    if (max_pos + 1 == s.base.size()) {
        s.stars_after_max = pending;
    } else {
        if (pending) throw InvalidInput("malformed starred text: trailing stars must follow the maximum");
        s.stars_after_max = s.stars_before[max_pos + 1];
        s.stars_before[max_pos + 1] = 0;
    }
    return s;
}

std::string format_starred(const StarredPermutation& s) {
    std::vector<std::string> toks;
    const Entry top = s.base.max();
    for (std::size_t i = 0; i < s.base.size(); ++i) {
        toks.insert(toks.end(), i < s.stars_before.size() ? s.stars_before[i] : 0u, "*");
        toks.push_back(std::to_string(s.base[i]));
        if (s.base[i] == top) toks.insert(toks.end(), s.stars_after_max, "*");
    }
    if (s.base.empty()) toks.insert(toks.end(), s.stars_after_max, "*");
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += ' ';
        out += toks[i];
    }
    return out;
}

PermList parse_list(std::string_view text) {
    PermList list;
    std::size_t start = 0;
    while (true) {
        const std::size_t slash = text.find('/', start);
        list.push_back(parse_permutation(text.substr(start, slash == std::string_view::npos ? slash : slash - start)));
        if (slash == std::string_view::npos) break;
        start = slash + 1;
    }
    return list;
}

std::string format_list(const PermList& list) {
    std::vector<std::string> toks;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) toks.emplace_back("/");
        if (!list[i].empty()) toks.push_back(format_permutation(list[i].entries()));
    }
    std::string s;
    for (const std::string& t : toks) s += (s.empty() ? "" : " ") + t;
    return s;
}

EigenPair parse_eigen_pair(std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) throw InvalidInput("malformed eigen pair: expected 'rho ; item / item ...'");
    return EigenPair{parse_permutation(text.substr(0, semi)), parse_list(text.substr(semi + 1))};
}

std::string format_eigen_pair(const EigenPair& pair) {
    const std::string rho = format_permutation(pair.rho.entries());
    const std::string list = format_list(pair.items);
    return (rho.empty() ? ";" : rho + " ;") + (list.empty() ? "" : " " + list);
}

Json to_json(std::span<const Entry> p) { return Json(std::vector<Entry>(p.begin(), p.end())); }

Json to_json(const MarkedPermutation& m) {
    return Json{{"permutation", to_json(m.base.entries())}, {"marks", Json(m.marks)}};
}

Json to_json(const PermList& list) {
    Json items = Json::array();
    for (const Permutation& p : list) items.push_back(to_json(p.entries()));
    return Json{{"items", items}};
}

Json to_json(const EigenPair& pair) {
    Json j = to_json(pair.items);
    j["rho"] = to_json(pair.rho.entries());
    return j;
}

Json sequence_to_json(std::span<const BigInt> values, std::size_t first_index) {
    Json out = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back(Json{{"n", first_index + i}, {"value", values[i].get_str()}});
    }
    return out;
}

Json to_json(const std::vector<PatternClass>& classes) {
    Json out = Json::array();
    for (const PatternClass& c : classes) {
        Json members = Json::array();
        for (const UnderlinedPattern& m : c.members) members.push_back(m.to_string());
        out.push_back(Json{{"representative", c.representative.to_string()},
                           {"members", members},
                           {"label", std::string(to_string(c.label))},
                           {"trivial", c.trivial},
                           {"counts", sequence_to_json(c.counts, 0)}});
    }
    return out;
}

Permutation permutation_from_json(const Json& j) {
    if (j.is_object() && j.contains("permutation")) return permutation_from_json(j["permutation"]);
    return Permutation(entries_from_json(j, "permutation"));
}

MarkedPermutation marked_from_json(const Json& j) {
    MarkedPermutation m{permutation_from_json(j), {}};
    if (j.is_object() && j.contains("marks")) m.marks = entries_from_json(j["marks"], "marks");
    std::sort(m.marks.begin(), m.marks.end());
    validate_marks(m);
    return m;
}

PermList list_from_json(const Json& j) {
    const Json& items = j.is_object() && j.contains("items") ? j["items"] : j;
    if (!items.is_array()) throw InvalidInput("malformed JSON: expected {\"items\": [[...], ...]}");
    PermList list;
    for (const Json& item : items) list.push_back(Permutation(entries_from_json(item, "list item")));
    return list;
}

EigenPair eigen_pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rho") || !j.contains("items")) {
        throw InvalidInput("malformed JSON: expected {\"rho\": [...], \"items\": [[...], ...]}");
    }
    return EigenPair{Permutation(entries_from_json(j["rho"], "rho")), list_from_json(j)};
}

std::vector<BigInt> sequence_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("malformed JSON: sequence must be an array");
    std::vector<BigInt> out;
    for (const Json& rec : j) {
        if (!rec.is_object() || !rec.contains("value")) {
            throw InvalidInput("malformed JSON: sequence records need a value");
        }
        out.push_back(big_from_json(rec["value"]));
    }
    return out;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

bool looks_like_json(std::string_view text) {
    const std::string t = trim(text);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

std::string format_bfile(std::span<const BigInt> values, std::size_t first_index) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(first_index + i) + ' ' + values[i].get_str() + '\n';
    }
    return out;
}

} // namespace eigencomp
