#include "flexicolor/packing.hpp"
#include "flexicolor/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

namespace flexicolor {

FamilyReport verify_family(const Graph& g, const ListAssignment& L,
                           const std::vector<Coloring>& members,
                           bool check_proper, bool check_disjoint,
                           bool check_balanced) {
    FamilyReport report;
    int n = g.vertex_count();

    if (check_proper) {
        report.proper_each = true;
        for (std::size_t i = 0; i < members.size() && report.proper_each; ++i) {
            if (static_cast<int>(members[i].size()) != n) {
                report.proper_each = false;
                report.violations.push_back({"member-not-total",
                                             static_cast<int>(i), -1});
                break;
            }
            for (int v = 0; v < n && report.proper_each; ++v) {
                if (!L.contains(v, members[i][v])) {
                    report.proper_each = false;
                    report.violations.push_back({"color-not-in-list",
                                                 static_cast<int>(i), v});
                }
                for (int u : g.neighbors(v))
                    if (u > v && members[i][u] == members[i][v]) {
                        report.proper_each = false;
                        report.violations.push_back({"improper-member",
                                                     static_cast<int>(i), v});
                        break;
                    }
            }
        }
    }

    if (check_disjoint) {
        report.vertex_disjoint = true;
        for (std::size_t i = 0;
             i < members.size() && report.vertex_disjoint; ++i)
            for (std::size_t j = i + 1;
                 j < members.size() && report.vertex_disjoint; ++j)
                for (int v = 0; v < n; ++v)
                    if (members[i][v] == members[j][v]) {
                        report.vertex_disjoint = false;
                        report.violations.push_back({"disjointness",
                                                     static_cast<int>(j), v});
                        break;
                    }
    }

    if (check_balanced) {
        report.balanced = true;
        auto k = L.uniform_size();
        if (!k || *k == 0 || members.size() % *k != 0) {
            report.balanced = false;
            report.violations.push_back({"balance-shape", -1, -1});
        } else {
            int m = static_cast<int>(members.size()) / *k;
            report.balance_multiplicity = m;
            for (int v = 0; v < n && report.balanced; ++v)
                for (int c : L.lists[v]) {
                    int uses = 0;
                    for (const auto& f : members)
                        uses += (f[v] == c);
                    if (uses != m) {
                        report.balanced = false;
                        report.violations.push_back({"balance", -1, v});
                        break;
                    }
                }
        }
    }
    return report;
}

namespace {

// Two pointwise-distinct proper colorings of a path given per-position
// 2-lists; deterministic (lexicographically smallest feasible state chain).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_packing_seq(const std::vector<std::vector<int>>& lists) {
    int len = static_cast<int>(lists.size());
    // states per position: (a,b) with a != b, both in the list
    std::vector<std::vector<std::pair<int, int>>> states(len);
    for (int i = 0; i < len; ++i) {
        for (int a : lists[i])
            for (int b : lists[i])
                if (a != b)
                    states[i].emplace_back(a, b);
        if (states[i].empty())
            return std::nullopt;
        std::sort(states[i].begin(), states[i].end());
    }
    // feasible[i][s]: state s at position i extends to the end
    std::vector<std::vector<char>> feasible(len);
    for (int i = len; i-- > 0;) {
        feasible[i].assign(states[i].size(), 0);
        for (std::size_t s = 0; s < states[i].size(); ++s) {
            if (i == len - 1) {
                feasible[i][s] = 1;
                continue;
            }
            for (std::size_t t = 0; t < states[i + 1].size(); ++t)
                if (feasible[i + 1][t] &&
                    states[i][s].first != states[i + 1][t].first &&
                    states[i][s].second != states[i + 1][t].second) {
                    feasible[i][s] = 1;
                    break;
                }
        }
    }
    std::vector<int> f1(len), f2(len);
    std::pair<int, int> prev{-1, -1};
    for (int i = 0; i < len; ++i) {
        bool placed = false;
        for (std::size_t s = 0; s < states[i].size() && !placed; ++s) {
            if (!feasible[i][s])
                continue;
            if (i > 0 && (states[i][s].first == prev.first ||
                          states[i][s].second == prev.second))
                continue;
            prev = states[i][s];
            f1[i] = prev.first;
            f2[i] = prev.second;
            placed = true;
        }
        if (!placed)
            return std::nullopt;
    }
    return std::make_pair(std::move(f1), std::move(f2));
}

void require_canonical_path(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != n - 1)
        throw input_error("path packing: graph is not a canonical path");
    for (int v = 0; v + 1 < n; ++v)
        if (!g.has_edge(v, v + 1))
            throw input_error("path packing: graph is not a canonical path");
}

} // namespace

std::vector<Coloring> path_two_packing(const Graph& path,
                                       const ListAssignment& two_lists) {
    require_canonical_path(path);
    if (two_lists.size() != path.vertex_count())
        throw input_error("path packing: list count mismatch");
    for (int v = 0; v < two_lists.size(); ++v)
        if (two_lists.lists[v].size() != 2)
            throw input_error("path packing: list at vertex " +
                              std::to_string(v) + " must have exactly 2 colors");
    auto pair = two_packing_seq(two_lists.lists);
    if (!pair)
        throw falsification_alarm(
            "path packing: no disjoint pair found, contradicting the "
            "2-list packing property of paths");
    return {pair->first, pair->second};
}

std::vector<Coloring> grid_balanced_family(int rows, int cols,
                                           const ListAssignment& L) {
    if (rows < 1 || cols < 1)
        throw input_error("grid family: dimensions must be >= 1");
    int n = rows * cols;
    if (L.size() != n)
        throw input_error("grid family: list count mismatch");
    for (int v = 0; v < n; ++v)
        if (L.lists[v].size() != 3)
            throw input_error("grid family: list at vertex " +
                              std::to_string(v) + " must have exactly 3 colors");
    auto idx = [rows](int i, int j) { return (j - 1) * rows + (i - 1); };

    // column 1: one greedy coloring, then packing over the removed colors
    std::vector<Coloring> family;
    {
        std::vector<int> greedy(rows);
        for (int i = 0; i < rows; ++i) {
            const auto& lv = L.lists[idx(i + 1, 1)];
            int pick = lv[0];
            if (i > 0 && pick == greedy[i - 1])
                pick = lv[0] == greedy[i - 1] ? lv[1] : lv[0];
            greedy[i] = pick;
        }
        std::vector<std::vector<int>> residual(rows);
        for (int i = 0; i < rows; ++i) {
            for (int c : L.lists[idx(i + 1, 1)])
                if (c != greedy[i])
                    residual[i].push_back(c);
        }
        auto pair = two_packing_seq(residual);
        if (!pair)
            throw falsification_alarm(
                "grid family: base column packing failed");
        Coloring m0(n, -1), m1(n, -1), m2(n, -1);
        for (int i = 0; i < rows; ++i) {
            m0[idx(i + 1, 1)] = greedy[i];
            m1[idx(i + 1, 1)] = pair->first[i];
            m2[idx(i + 1, 1)] = pair->second[i];
        }
        family = {m0, m1, m2};
    }

    for (int j = 2; j <= cols; ++j) {
        // bijection previous-column list -> new-column list: identity on
        // common colors, the rest matched in ascending order
        std::vector<std::map<int, int>> bij(rows);
        for (int i = 1; i <= rows; ++i) {
            const auto& from = L.lists[idx(i, j - 1)];
            const auto& to = L.lists[idx(i, j)];
            std::vector<int> from_rest, to_rest;
            for (int c : from)
                if (!std::binary_search(to.begin(), to.end(), c))
                    from_rest.push_back(c);
                else
                    bij[i - 1][c] = c;
            for (int c : to)
                if (!std::binary_search(from.begin(), from.end(), c))
                    to_rest.push_back(c);
            for (std::size_t t = 0; t < from_rest.size(); ++t)
                bij[i - 1][from_rest[t]] = to_rest[t];
        }
        std::vector<Coloring> extended;
        extended.reserve(family.size() * 2);
        for (const auto& base : family) {
            std::vector<std::vector<int>> residual(rows);
            for (int i = 1; i <= rows; ++i) {
                int banned = bij[i - 1].at(base[idx(i, j - 1)]);
                for (int c : L.lists[idx(i, j)])
                    if (c != banned)
                        residual[i - 1].push_back(c);
            }
            auto pair = two_packing_seq(residual);
            if (!pair)
                throw falsification_alarm(
                    "grid family: column extension packing failed");
            Coloring e1 = base, e2 = base;
            for (int i = 1; i <= rows; ++i) {
                e1[idx(i, j)] = pair->first[i - 1];
                e2[idx(i, j)] = pair->second[i - 1];
            }
            extended.push_back(std::move(e1));
            extended.push_back(std::move(e2));
        }
        family = std::move(extended);
    }
    return family;
}

Coloring best_of_family(const Graph& g, const ListAssignment& L,
                        const std::vector<Coloring>& family,
                        const Request& r) {
    if (family.empty())
        throw input_error("best_of_family: empty family");
    auto report = verify_family(g, L, family, true, false, true);
    if (!report.balanced || !report.proper_each)
        throw input_error(
            "best_of_family: family must verify proper and balanced");
    int best = -1, best_count = -1;
    for (std::size_t i = 0; i < family.size(); ++i) {
        int got = count_satisfied(r, family[i]);
        if (got > best_count) {
            best_count = got;
            best = static_cast<int>(i);
        }
    }
    int k = *L.uniform_size();
    int floor = (r.size() + k - 1) / k;
    if (best_count < floor)
        throw falsification_alarm(
            "best_of_family: pigeonhole floor missed on a balanced family");
    return family[best];
}

// --- ladder -------------------------------------------------------------------

namespace {

// Recursive solver over the two ladder families.  Rows/columns are
// 1-based; `sw` flips rows so "missing corner" is always local (2, cols).
struct LadderSolver {
    const ListAssignment& L;
    const Request& r;
    std::vector<int>& f; // original indexing
    LadderStats stats;

    static int vid(int i, int j, bool sw) {
        int row = sw ? 3 - i : i;
        return (j - 1) * 2 + (row - 1);
    }
    const std::vector<int>& lists(int i, int j, bool sw) const {
        return L.lists[vid(i, j, sw)];
    }
    bool in_domain(int i, int j, bool sw) const {
        return r.has(vid(i, j, sw));
    }
    int requested(int i, int j, bool sw) const {
        return r.color_of(vid(i, j, sw));
    }
    int& color(int i, int j, bool sw) { return f[vid(i, j, sw)]; }

    static int pick(const std::vector<int>& list, int preferred, int avoid1,
                    int avoid2 = -1) {
        if (preferred >= 0 && preferred != avoid1 && preferred != avoid2 &&
            std::binary_search(list.begin(), list.end(), preferred))
            return preferred;
        for (int c : list)
            if (c != avoid1 && c != avoid2)
                return c;
        return -1;
    }

    // all vertices of the sub-instance, local coordinates
    std::vector<std::pair<int, int>> cells(int cols, bool minus) const {
        std::vector<std::pair<int, int>> out;
        for (int j = 1; j <= cols; ++j)
            for (int i = 1; i <= 2; ++i)
                if (!(minus && i == 2 && j == cols))
                    out.push_back({i, j});
        return out;
    }

    int domain_size(int cols, bool minus, bool sw) const {
        int d = 0;
        for (auto [i, j] : cells(cols, minus))
            d += in_domain(i, j, sw);
        return d;
    }

    // exact brute force over the sub-instance (bases: at most 4 vertices)
    int brute(int cols, bool minus, bool sw) {
        auto cell = cells(cols, minus);
        int count = static_cast<int>(cell.size());
        std::vector<int> choice(count, 0), best_choice;
        int best = -1;
        std::vector<int> cur(count, -1);

        auto adjacent = [&](int a, int b) {
            auto [ia, ja] = cell[a];
            auto [ib, jb] = cell[b];
            return (ia == ib && std::abs(ja - jb) == 1) ||
                   (ja == jb && std::abs(ia - ib) == 1);
        };
        std::function<void(int, int)> go = [&](int at, int sat) {
            if (at == count) {
                if (sat > best) {
                    best = sat;
                    best_choice = cur;
                }
                return;
            }
            auto [i, j] = cell[at];
            for (int c : lists(i, j, sw)) {
                bool ok = true;
                for (int b = 0; b < at && ok; ++b)
                    if (adjacent(at, b) && cur[b] == c)
                        ok = false;
                if (!ok)
                    continue;
                cur[at] = c;
                int bonus = in_domain(i, j, sw) && requested(i, j, sw) == c;
                go(at + 1, sat + bonus);
                cur[at] = -1;
            }
        };
        go(0, 0);
        if (best < 0)
            throw falsification_alarm(
                "ladder: base instance has no proper coloring from 3-lists");
        for (int a = 0; a < count; ++a) {
            auto [i, j] = cell[a];
            color(i, j, sw) = best_choice[a];
        }
        return best;
    }

    // re-verification of a sub-solve, with exact fallback on any gap
    int verified(int cols, bool minus, bool sw, int claimed) {
        int sat = 0;
        bool proper = true;
        auto cell = cells(cols, minus);
        for (auto [i, j] : cell) {
            int c = color(i, j, sw);
            if (c < 0 ||
                !std::binary_search(lists(i, j, sw).begin(),
                                    lists(i, j, sw).end(), c)) {
                proper = false;
                break;
            }
            if (in_domain(i, j, sw) && requested(i, j, sw) == c)
                ++sat;
            if (i == 1 && !(minus && j == cols) &&
                c == color(2, j, sw) && color(2, j, sw) >= 0)
                proper = false;
            if (j > 1 && c == color(i, j - 1, sw))
                proper = false;
        }
        int need = (domain_size(cols, minus, sw) + 1) / 2;
        if (proper && sat == claimed && sat >= need)
            return sat;
        ++stats.alarms;
        stats.oracle_fallback = true;
        std::cerr << "[flexicolor] ladder falsification alarm: case analysis "
                     "gap at cols="
                  << cols << " minus=" << minus << ", answering exactly\n";
        return oracle(cols, minus, sw);
    }

    int oracle(int cols, bool minus, bool sw) {
        auto cell = cells(cols, minus);
        std::vector<int> verts;
        for (auto [i, j] : cell)
            verts.push_back(vid(i, j, sw));
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < cell.size(); ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
                auto [ia, ja] = cell[a];
                auto [ib, jb] = cell[b];
                if ((ia == ib && std::abs(ja - jb) == 1) ||
                    (ja == jb && ia != ib))
                    edges.emplace_back(static_cast<int>(a),
                                       static_cast<int>(b));
            }
        Graph sub = Graph::from_edges(static_cast<int>(cell.size()), edges);
        ListAssignment subL;
        Request subR;
        for (std::size_t a = 0; a < cell.size(); ++a) {
            subL.lists.push_back(L.lists[verts[a]]);
            if (r.has(verts[a]))
                subR.set(static_cast<int>(a), r.color_of(verts[a]));
        }
        SatisfyResult result = subR.empty()
                                   ? SatisfyResult{0, find_proper_coloring(
                                                          sub, subL)}
                                   : satisfy_max(sub, subL, subR);
        if (result.count < 0 || !result.witness)
            throw falsification_alarm("ladder: oracle found no coloring");
        for (std::size_t a = 0; a < cell.size(); ++a)
            f[verts[a]] = (*result.witness)[a];
        return count_in(cols, minus, sw);
    }

    int count_in(int cols, bool minus, bool sw) const {
        int sat = 0;
        for (auto [i, j] : cells(cols, minus))
            if (in_domain(i, j, sw) &&
                color_const(i, j, sw) == requested(i, j, sw))
            ++sat;
        return sat;
    }
    int color_const(int i, int j, bool sw) const { return f[vid(i, j, sw)]; }

    int solve(int cols, bool minus, bool sw) {
        return verified(cols, minus, sw, solve_cases(cols, minus, sw));
    }

    int solve_cases(int cols, bool minus, bool sw) {
        if (cols <= 2)
            return brute(cols, minus, sw); // paths and C_4
        return minus ? solve_minus(cols, sw) : solve_full(cols, sw);
    }

    int solve_minus(int cols, bool sw) {
        // sub-instance: both rows on columns 1..cols, except (2, cols)
        if (!in_domain(1, cols, sw)) {
            int sat = solve(cols - 1, false, sw);
            color(1, cols, sw) =
                pick(lists(1, cols, sw), -1, color(1, cols - 1, sw));
            return sat;
        }
        int c1 = requested(1, cols, sw);
        bool e1 = in_domain(1, cols - 1, sw);
        bool e2 = in_domain(2, cols - 1, sw);
        if (!(e1 && e2)) {
            // color the endpoint first, then the two middles greedily
            int sat = solve(cols - 2, false, sw) + 1;
            color(1, cols, sw) = c1;
            int x =
                pick(lists(1, cols - 1, sw),
                     e1 ? requested(1, cols - 1, sw) : -1,
                     color(1, cols - 2, sw), c1);
            color(1, cols - 1, sw) = x;
            sat += e1 && x == requested(1, cols - 1, sw);
            int y =
                pick(lists(2, cols - 1, sw),
                     e2 ? requested(2, cols - 1, sw) : -1,
                     color(2, cols - 2, sw), x);
            color(2, cols - 1, sw) = y;
            sat += e2 && y == requested(2, cols - 1, sw);
            return sat;
        }
        if (requested(1, cols - 1, sw) == c1) {
            // drop the two same-request endpoints; the rest is the mirrored
            // shorter family member
            int sat = solve(cols - 1, true, !sw);
            int x = pick(lists(1, cols - 1, sw), c1,
                         color(1, cols - 2, sw), color(2, cols - 1, sw));
            color(1, cols - 1, sw) = x;
            sat += x == c1;
            int y = pick(lists(1, cols, sw), x == c1 ? -1 : c1, x);
            color(1, cols, sw) = y;
            sat += y == c1;
            return sat;
        }
        // requested(1, cols-1) differs from the endpoint request
        int rho = requested(1, cols - 1, sw);
        int sat = solve(cols - 1, true, sw);
        if (color(1, cols - 1, sw) == c1) {
            // degree-1 inside the sub-instance: two colors beat its only
            // neighbor, recolor off c1 (preferring its own request)
            int x = pick(lists(1, cols - 1, sw), rho,
                         color(1, cols - 2, sw), c1);
            color(1, cols - 1, sw) = x;
            sat += x == rho;
        }
        color(1, cols, sw) = c1;
        ++sat;
        int y = pick(lists(2, cols - 1, sw), requested(2, cols - 1, sw),
                     color(2, cols - 2, sw), color(1, cols - 1, sw));
        color(2, cols - 1, sw) = y;
        sat += y == requested(2, cols - 1, sw);
        return sat;
    }

    int solve_full(int cols, bool sw) {
        bool d1 = in_domain(1, cols, sw);
        bool d2 = in_domain(2, cols, sw);
        if (!d2) {
            int sat = solve(cols, true, sw);
            color(2, cols, sw) = pick(lists(2, cols, sw), -1,
                                      color(1, cols, sw),
                                      color(2, cols - 1, sw));
            return sat;
        }
        if (!d1) {
            int sat = solve(cols, true, !sw);
            color(1, cols, sw) = pick(lists(1, cols, sw), -1,
                                      color(2, cols, sw),
                                      color(1, cols - 1, sw));
            return sat;
        }
        int c1 = requested(1, cols, sw);
        int c2 = requested(2, cols, sw);
        if (c1 == c2) {
            int sat = solve(cols - 1, false, sw);
            int i = color(1, cols - 1, sw) != c1 ? 1 : 2;
            color(i, cols, sw) = c1;
            ++sat;
            int o = 3 - i;
            color(o, cols, sw) =
                pick(lists(o, cols, sw), -1, color(o, cols - 1, sw), c1);
            return sat;
        }
        // distinct corner requests: try to finish over the 2x2 back block
        int sat = solve(cols - 2, false, sw);
        int a = color(1, cols - 2, sw);
        int b = color(2, cols - 2, sw);
        std::vector<int> s1, s2;
        for (int c : lists(1, cols - 1, sw))
            if (c != a && c != c1)
                s1.push_back(c);
        for (int c : lists(2, cols - 1, sw))
            if (c != b && c != c2)
                s2.push_back(c);
        bool obstructed = s1.size() == 1 && s2.size() == 1 && s1[0] == s2[0];
        if (!obstructed) {
            // both corner requests are grantable; choose middles maximizing
            // their own requests, lexicographically smallest on ties
            int bx = -1, by = -1, bonus = -1;
            for (int x : s1)
                for (int y : s2) {
                    if (x == y)
                        continue;
                    int got = (in_domain(1, cols - 1, sw) &&
                               requested(1, cols - 1, sw) == x) +
                              (in_domain(2, cols - 1, sw) &&
                               requested(2, cols - 1, sw) == y);
                    if (got > bonus) {
                        bonus = got;
                        bx = x;
                        by = y;
                    }
                }
            color(1, cols - 1, sw) = bx;
            color(2, cols - 1, sw) = by;
            color(1, cols, sw) = c1;
            color(2, cols, sw) = c2;
            return sat + 2 + bonus;
        }

        int c = s1[0];
        bool e1 = in_domain(1, cols - 1, sw);
        bool e2 = in_domain(2, cols - 1, sw);
        if (!e1 && !e2) {
            // grant the top corner, thread the forced colors through
            color(1, cols, sw) = c1;
            color(1, cols - 1, sw) = c;
            color(2, cols - 1, sw) =
                pick(lists(2, cols - 1, sw), -1, b, c);
            int y = pick(lists(2, cols, sw), c2,
                         color(2, cols - 1, sw), c1);
            color(2, cols, sw) = y;
            return sat + 1 + (y == c2);
        }
        // mirror so that row 1 holds a middle request
        bool fl = (!e1 && e2);
        bool s = fl ? !sw : sw; // flipped coordinate view for this block
        int C1 = fl ? c2 : c1;
        int C2 = fl ? c1 : c2;
        int rho1 = requested(1, cols - 1, s);
        if (rho1 == C1) {
            color(1, cols - 1, s) = C1;
            color(2, cols - 1, s) = c;
            color(2, cols, s) = C2;
            color(1, cols, s) =
                pick(lists(1, cols, s), -1, C1, C2);
            return sat + 2 +
                   (in_domain(2, cols - 1, s) &&
                    requested(2, cols - 1, s) == c);
        }
        // the under-specified recolor step: re-solve the shorter full
        // ladder, then finish (or locally maximize the whole back block
        // when the prose's recoloring move is blocked)
        int sat2 = solve(cols - 1, false, sw);
        if (color(1, cols - 1, s) != C1) {
            color(1, cols, s) = C1;
            ++sat2;
            int y = pick(lists(2, cols, s), C2, color(2, cols - 1, s), C1);
            color(2, cols, s) = y;
            sat2 += y == C2;
            return sat2;
        }
        return local_block_max(cols, sw, sat2);
    }

    // exhaustive repair over the last two columns, keeping the prefix
    // coloring fixed; covers every move the prose case analysis makes
    int local_block_max(int cols, bool sw, int /*claimed*/) {
        int prefix_sat = 0;
        for (int j = 1; j <= cols - 2; ++j)
            for (int i = 1; i <= 2; ++i)
                if (in_domain(i, j, sw) &&
                    color(i, j, sw) == requested(i, j, sw))
                    ++prefix_sat;
        std::array<std::pair<int, int>, 4> cell = {
            std::pair<int, int>{1, cols - 1}, {2, cols - 1}, {1, cols},
            {2, cols}};
        int best = -1;
        std::array<int, 4> cur{}, best_cur{};
        std::function<void(int, int)> go = [&](int at, int got) {
            if (at == 4) {
                if (got > best) {
                    best = got;
                    best_cur = cur;
                }
                return;
            }
            auto [i, j] = cell[at];
            for (int cc : lists(i, j, sw)) {
                // conflicts: left neighbor (fixed prefix or cell 0/1),
                // vertical partner within the block
                if (j == cols - 1 && cc == color(i, j - 1, sw))
                    continue;
                if (at == 1 && cc == cur[0])
                    continue;
                if (at == 2 && cc == cur[0])
                    continue;
                if (at == 3 && (cc == cur[1] || cc == cur[2]))
                    continue;
                cur[at] = cc;
                int bonus = in_domain(i, j, sw) && requested(i, j, sw) == cc;
                go(at + 1, got + bonus);
            }
        };
        go(0, 0);
        if (best < 0)
            throw falsification_alarm("ladder: block repair found no coloring");
        for (int t = 0; t < 4; ++t) {
            auto [i, j] = cell[t];
            color(i, j, sw) = best_cur[t];
        }
        return prefix_sat + best;
    }
};

} // namespace

Coloring ladder_flexible_color(bool minus_corner, int cols,
                               const ListAssignment& L, const Request& r,
                               LadderStats* stats) {
    if (cols < 1)
        throw input_error("ladder: cols must be >= 1");
    GeneratedGraph gen =
        generate((minus_corner ? "ladderminus:" : "ladder:") +
                 std::to_string(cols));
    const Graph& g = gen.graph;
    auto report = validate(g, L, &r);
    if (!report.ok())
        throw input_error("ladder: invalid instance: " +
                          report.violations.front());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (L.lists[v].size() != 3)
            throw input_error("ladder: list at vertex " + std::to_string(v) +
                              " must have exactly 3 colors");

    // canonicalize over the ladder symmetries so the solver is equivariant:
    // solving sigma(L),sigma(r) gives sigma of the solution
    struct Transform {
        bool row_swap;
        bool col_reflect;
    };
    std::vector<Transform> group{{false, false}};
    if (!minus_corner && cols >= 1) {
        group.push_back({true, false});
        if (cols >= 2) {
            group.push_back({false, true});
            group.push_back({true, true});
        }
    }
    int n = g.vertex_count();
    auto apply = [&](const Transform& t, int v) {
        int j = v / 2 + 1, i = v % 2 + 1;
        if (t.row_swap)
            i = 3 - i;
        if (t.col_reflect)
            j = cols + 1 - j;
        return (j - 1) * 2 + (i - 1);
    };
    auto transformed = [&](const Transform& t) {
        ListAssignment Lt;
        Lt.lists.assign(n, {});
        Request rt;
        for (int v = 0; v < n; ++v)
            Lt.lists[apply(t, v)] = L.lists[v];
        for (auto& [v, c] : r.entries)
            rt.set(apply(t, v), c);
        return std::make_pair(std::move(Lt), std::move(rt));
    };
    std::size_t chosen = 0;
    auto best = transformed(group[0]);
    for (std::size_t t = 1; t < group.size(); ++t) {
        auto cand = transformed(group[t]);
        if (cand.first.lists < best.first.lists ||
            (cand.first.lists == best.first.lists &&
             cand.second.entries < best.second.entries)) {
            best = std::move(cand);
            chosen = t;
        }
    }

    std::vector<int> f(n, -1);
    LadderSolver solver{best.first, best.second, f, {}};
    solver.solve(cols, minus_corner, false);
    if (stats)
        *stats = solver.stats;

    // map back through the chosen symmetry
    Coloring out(n, -1);
    for (int v = 0; v < n; ++v)
        out[v] = f[apply(group[chosen], v)];

    if (!is_proper(g, out) || !respects_lists(L, out))
        throw falsification_alarm("ladder: output failed validation");
    int need = (r.size() + 1) / 2;
    if (count_satisfied(r, out) < need)
        throw falsification_alarm(
            "ladder: satisfied fewer than ceil(|D|/2) requests");
    return out;
}

// --- family JSON ----------------------------------------------------------------

std::string serialize_family_json(const std::vector<Coloring>& members) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : members)
        out.push_back(f);
    return out.dump();
}

std::vector<Coloring> parse_family_json(std::string_view text) {
    nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array())
        throw input_error("family JSON: expected an array of color arrays");
    std::vector<Coloring> out;
    for (const auto& member : parsed) {
        if (!member.is_array())
            throw input_error("family JSON: member is not an array");
        out.push_back(member.get<Coloring>());
    }
    return out;
}

} // namespace flexicolor
