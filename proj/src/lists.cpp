#include "flexicolor/lists.hpp"
#include "flexicolor/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace flexicolor {

std::optional<int> ListAssignment::uniform_size() const {
    if (lists.empty())
        return std::nullopt;
    std::size_t k = lists[0].size();
    for (const auto& list : lists)
        if (list.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

std::vector<int> ListAssignment::palette() const {
    std::vector<int> all;
    for (const auto& list : lists)
        all.insert(all.end(), list.begin(), list.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool ListAssignment::contains(int v, int color) const {
    const auto& list = lists[v];
    return std::binary_search(list.begin(), list.end(), color);
}

ListAssignment ListAssignment::uniform(int n, std::vector<int> colors) {
    std::sort(colors.begin(), colors.end());
    ListAssignment L;
    L.lists.assign(n, colors);
    return L;
}

bool Request::has(int v) const {
    return color_of(v) >= 0;
}

int Request::color_of(int v) const {
    auto it = std::lower_bound(entries.begin(), entries.end(),
                               std::make_pair(v, -1));
    if (it != entries.end() && it->first == v)
        return it->second;
    return -1;
}

void Request::set(int v, int color) {
    auto it = std::lower_bound(entries.begin(), entries.end(),
                               std::make_pair(v, -1));
    if (it != entries.end() && it->first == v)
        it->second = color;
    else
        entries.insert(it, {v, color});
}

std::vector<int> Request::domain() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (auto& [v, c] : entries)
        out.push_back(v);
    return out;
}

ValidationReport validate(const Graph& g, const ListAssignment& L,
                          const Request* r) {
    ValidationReport report;
    auto flag = [&](const std::string& kind, int v) {
        report.violations.push_back(kind + "(" + std::to_string(v) + ")");
    };
    if (L.size() != g.vertex_count())
        report.violations.push_back(
            "list-count-mismatch(" + std::to_string(L.size()) + " lists, " +
            std::to_string(g.vertex_count()) + " vertices)");
    int n = std::min(L.size(), g.vertex_count());
    for (int v = 0; v < n; ++v) {
        const auto& list = L.lists[v];
        if (list.empty())
            flag("empty-list", v);
        if (!std::is_sorted(list.begin(), list.end()))
            flag("unsorted-list", v);
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            flag("duplicate-color", v);
        for (int c : list)
            if (c < 0) {
                flag("negative-color", v);
                break;
            }
    }
    if (r) {
        if (r->entries.empty())
            report.violations.push_back("empty-request-domain");
        for (auto& [v, c] : r->entries) {
            if (v < 0 || v >= g.vertex_count()) {
                flag("request-vertex-out-of-range", v);
                continue;
            }
            if (v < L.size() && !L.contains(v, c))
                flag("request-color-not-in-list", v);
        }
    }
    return report;
}

// --- text formats -----------------------------------------------------------

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    return line;
}

[[noreturn]] void parse_fail(const std::string& what, int line) {
    throw input_error(what + " at line " + std::to_string(line));
}

} // namespace

ListAssignment parse_lists(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::map<int, std::vector<int>> by_vertex;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = body.find(':');
        if (colon == std::string::npos)
            parse_fail("lists: missing ':'", lineno);
        int v;
        try {
            v = std::stoi(body.substr(0, colon));
        } catch (const std::exception&) {
            parse_fail("lists: bad vertex index", lineno);
        }
        if (v < 0)
            parse_fail("lists: negative vertex", lineno);
        if (by_vertex.count(v))
            parse_fail("lists: duplicate vertex " + std::to_string(v), lineno);
        std::istringstream rest(body.substr(colon + 1));
        std::vector<int> colors;
        long long c;
        while (rest >> c) {
            if (c < 0)
                parse_fail("lists: negative color", lineno);
            colors.push_back(static_cast<int>(c));
        }
        std::string leftover;
        rest.clear();
        if (rest >> leftover)
            parse_fail("lists: unexpected token '" + leftover + "'", lineno);
        if (colors.empty())
            parse_fail("empty-list", lineno);
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
            parse_fail("lists: duplicate color", lineno);
        by_vertex[v] = std::move(colors);
        max_vertex = std::max(max_vertex, v);
    }
    ListAssignment L;
    L.lists.assign(max_vertex + 1, {});
    for (auto& [v, colors] : by_vertex)
        L.lists[v] = std::move(colors);
    for (int v = 0; v <= max_vertex; ++v)
        if (L.lists[v].empty())
            throw input_error("lists: vertex " + std::to_string(v) +
                              " has no line");
    return L;
}

std::string serialize_lists(const ListAssignment& L) {
    std::ostringstream out;
    for (int v = 0; v < L.size(); ++v) {
        out << v << ':';
        for (int c : L.lists[v])
            out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

Request parse_request(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Request r;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        long long v, c;
        if (!(ls >> v))
            continue;
        if (!(ls >> c))
            parse_fail("request: expected \"v c\"", lineno);
        if (v < 0 || c < 0)
            parse_fail("request: negative value", lineno);
        if (r.has(static_cast<int>(v)))
            parse_fail("request: duplicate vertex " + std::to_string(v), lineno);
        r.set(static_cast<int>(v), static_cast<int>(c));
    }
    return r;
}

std::string serialize_request(const Request& r) {
    std::ostringstream out;
    for (auto& [v, c] : r.entries)
        out << v << ' ' << c << '\n';
    return out.str();
}

// --- canonical enumeration -----------------------------------------------------

namespace {

using Mask = std::uint32_t;

// Order on color types = lexicographic on the sorted vertex sequence, so a
// type whose first vertex is smaller sorts first and prefixes sort before
// their extensions.
bool type_less(Mask a, Mask b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb)
            return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

} // namespace

ListAssignment assignment_from_types(int n, const std::vector<Mask>& types) {
    ListAssignment L;
    L.lists.assign(n, {});
    for (std::size_t color = 0; color < types.size(); ++color)
        for (Mask m = types[color]; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            L.lists[v].push_back(static_cast<int>(color));
        }
    return L;
}

ListAssignment canonical_form(const ListAssignment& L) {
    int n = L.size();
    if (n > 31)
        throw budget_error("canonical_form: n > 31");
    std::map<int, Mask> type_of; // color -> vertex set
    for (int v = 0; v < n; ++v)
        for (int c : L.lists[v])
            type_of[c] |= Mask(1) << v;
    std::vector<Mask> types;
    types.reserve(type_of.size());
    for (auto& [c, mask] : type_of)
        types.push_back(mask);
    std::sort(types.begin(), types.end(), type_less);
    return assignment_from_types(n, types);
}

ListAssignment rename_colors(const ListAssignment& L,
                             const std::vector<int>& perm) {
    ListAssignment out;
    out.lists.reserve(L.lists.size());
    for (const auto& list : L.lists) {
        std::vector<int> renamed;
        renamed.reserve(list.size());
        for (int c : list) {
            if (c < 0 || c >= static_cast<int>(perm.size()))
                throw input_error("rename_colors: color outside permutation");
            renamed.push_back(perm[c]);
        }
        std::sort(renamed.begin(), renamed.end());
        out.lists.push_back(std::move(renamed));
    }
    return out;
}

ListAssignment permute_vertices(const ListAssignment& L,
                                const std::vector<int>& sigma) {
    ListAssignment out;
    out.lists.assign(L.lists.size(), {});
    for (int v = 0; v < L.size(); ++v)
        out.lists[sigma[v]] = L.lists[v];
    return out;
}

namespace {

struct CanonicalEnumerator {
    int n;
    std::uint64_t cap;
    const std::function<bool(const std::vector<Mask>&)>& fn;
    std::vector<int> remaining;   // per-vertex slots still uncovered
    std::vector<Mask> chosen;     // type multiset, nondecreasing in type_less
    std::uint64_t emitted = 0;
    bool stopped = false;

    bool emit() {
        if (emitted == cap)
            throw budget_error("canonical assignment stream exceeded cap of " +
                               std::to_string(cap));
        ++emitted;
        if (!fn(chosen))
            stopped = true;
        return stopped;
    }

    void go(Mask prev) {
        int v0 = -1;
        for (int v = 0; v < n; ++v)
            if (remaining[v] > 0) {
                v0 = v;
                break;
            }
        if (v0 < 0) {
            emit();
            return;
        }
        // Every remaining type must contain the first uncovered vertex:
        // types are chosen in nondecreasing order and any type avoiding v0
        // sorts after all types through v0.
        Mask support = 0;
        for (int v = v0 + 1; v < n; ++v)
            if (remaining[v] > 0)
                support |= Mask(1) << v;
        Mask base = Mask(1) << v0;
        // iterate submasks of support in ascending numeric order; filter by
        // the multiset order constraint
        Mask sub = 0;
        while (true) {
            Mask type = base | sub;
            // support only holds uncovered vertices, so `type` is feasible;
            // the multiset-order constraint is the one real filter
            if (!type_less(type, prev)) {
                for (Mask m = type; m;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    --remaining[v];
                }
                chosen.push_back(type);
                go(type);
                chosen.pop_back();
                for (Mask m = type; m;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    ++remaining[v];
                }
                if (stopped)
                    return;
            }
            if (sub == support)
                break;
            sub = (sub - support) & support;
        }
    }
};

} // namespace

std::uint64_t for_each_canonical_types(
    int n, int k, std::uint64_t cap,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    if (n < 1)
        throw input_error("canonical enumeration: empty graph");
    if (k < 1)
        throw input_error("canonical enumeration: k must be >= 1");
    if (n > 31)
        throw budget_error("canonical enumeration: n > 31");
    CanonicalEnumerator en{n, cap, fn, std::vector<int>(n, k), {}, 0, false};
    en.go(0);
    return en.emitted;
}

std::uint64_t for_each_canonical_assignment(
    int n, int k, std::uint64_t cap,
    const std::function<bool(const ListAssignment&)>& fn) {
    return for_each_canonical_types(
        n, k, cap, [&](const std::vector<Mask>& types) {
            return fn(assignment_from_types(n, types));
        });
}

std::uint64_t count_canonical_assignments(int n, int k, std::uint64_t cap) {
    return for_each_canonical_types(
        n, k, cap, [](const std::vector<Mask>&) { return true; });
}

} // namespace flexicolor
