#include "flexicolor/flex_algorithms.hpp"
#include "flexicolor/errors.hpp"
#include "flexicolor/graph_params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace flexicolor {

namespace {

void require_valid(const Graph& g, const ListAssignment& L, const Request& r) {
    auto report = validate(g, L, &r);
    if (!report.ok())
        throw input_error("invalid instance: " + report.violations.front());
}

void check_output(const Graph& g, const ListAssignment& L, const Coloring& f,
                  const char* who) {
    if (!is_proper(g, f) || !respects_lists(L, f))
        throw falsification_alarm(std::string(who) +
                                  ": emitted coloring failed validation");
}

int smallest_free_color(const ListAssignment& L, const Graph& g,
                        const Coloring& f, int v) {
    for (int c : L.lists[v]) {
        bool clash = false;
        for (int u : g.neighbors(v))
            if (f[u] == c) {
                clash = true;
                break;
            }
        if (!clash)
            return c;
    }
    return -1;
}

} // namespace

Coloring greedy_flexible(const Graph& g, const ListAssignment& L,
                         const Request& r) {
    require_valid(g, L, r);
    int delta = g.max_degree();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(L.lists[v].size()) < delta + 1)
            throw input_error("greedy_flexible: list at vertex " +
                              std::to_string(v) + " smaller than " +
                              std::to_string(delta + 1));

    std::vector<int> domain = r.domain();
    Graph gd = g.induced(domain);
    std::vector<int> ind = max_independent_set(gd);

    Coloring f(g.vertex_count(), -1);
    for (int i : ind)
        f[domain[i]] = r.color_of(domain[i]);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= 0)
            continue;
        int c = smallest_free_color(L, g, f, v);
        if (c < 0)
            throw falsification_alarm(
                "greedy_flexible: no free color despite max_degree+1 lists");
        f[v] = c;
    }
    check_output(g, L, f, "greedy_flexible");
    if (count_satisfied(r, f) < static_cast<int>(ind.size()))
        throw falsification_alarm(
            "greedy_flexible: lost a request from the independent set");
    return f;
}

Coloring random_degenerate_color(const Graph& g, const ListAssignment& L,
                                 const Request& r, RandomSource& rng) {
    require_valid(g, L, r);
    auto degen = degeneracy_order(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(L.lists[v].size()) < degen.d + 2)
            throw input_error("random_degenerate_color: list at vertex " +
                              std::to_string(v) + " needs >= " +
                              std::to_string(degen.d + 2) + " colors");

    Coloring f(g.vertex_count(), -1);
    for (int v : degen.order) {
        // color order: requested color first, the rest ascending
        int want = r.color_of(v);
        int found = 0;
        int pair[2] = {-1, -1};
        auto consider = [&](int c) {
            if (found == 2)
                return;
            for (int u : g.neighbors(v))
                if (f[u] == c)
                    return;
            pair[found++] = c;
        };
        if (want >= 0)
            consider(want);
        for (int c : L.lists[v])
            if (c != want)
                consider(c);
        if (found < 2)
            throw falsification_alarm(
                "random_degenerate_color: fewer than two unused colors");
        f[v] = pair[rng.below(2)];
    }
    check_output(g, L, f, "random_degenerate_color");
    return f;
}

Coloring square_class_color(const Graph& g, const ListAssignment& L,
                            const Request& r, int s) {
    require_valid(g, L, r);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(L.lists[v].size()) < s + 1)
            throw input_error("square_class_color: list at vertex " +
                              std::to_string(v) + " smaller than s+1");

    Graph g2 = square_graph(g);
    std::vector<int> classes = optimal_coloring(g2);
    int chi2 = classes.empty()
                   ? 0
                   : 1 + *std::max_element(classes.begin(), classes.end());

    // class with the most requested vertices; ties to the lowest class id
    std::vector<int> hits(chi2, 0);
    for (auto& [v, c] : r.entries)
        ++hits[classes[v]];
    int best_class =
        static_cast<int>(std::max_element(hits.begin(), hits.end()) -
                         hits.begin());

    std::vector<int> granted; // C cap D
    for (auto& [v, c] : r.entries)
        if (classes[v] == best_class)
            granted.push_back(v);

    Coloring f(g.vertex_count(), -1);
    for (int v : granted)
        f[v] = r.color_of(v);

    // vertices of the same square-coloring class share no neighbor, so each
    // uncolored list loses at most one color
    std::vector<int> rest;
    ListAssignment pruned;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= 0)
            continue;
        std::vector<int> lv = L.lists[v];
        for (int u : g.neighbors(v))
            if (f[u] >= 0)
                std::erase(lv, f[u]);
        rest.push_back(v);
        pruned.lists.push_back(std::move(lv));
    }
    Graph sub = g.induced(rest);
    auto completion = find_proper_coloring(sub, pruned);
    if (!completion)
        throw input_error(
            "square_class_color: s-choosability assumption violated");
    for (std::size_t i = 0; i < rest.size(); ++i)
        f[rest[i]] = (*completion)[i];

    check_output(g, L, f, "square_class_color");
    int floor = (r.size() + chi2 - 1) / chi2;
    if (count_satisfied(r, f) < floor)
        throw falsification_alarm("square_class_color: pigeonhole floor missed");
    return f;
}

BoundedPaletteResult bounded_palette_color(const Graph& g,
                                           const ListAssignment& L,
                                           const Request& r, int s,
                                           std::uint64_t exhaust_limit,
                                           std::uint64_t seed) {
    require_valid(g, L, r);
    std::set<int> palette_set;
    for (auto& [v, c] : r.entries)
        palette_set.insert(c);
    std::vector<int> requested(palette_set.begin(), palette_set.end());
    int k = static_cast<int>(requested.size());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(L.lists[v].size()) < s + k)
            throw input_error("bounded_palette_color: list at vertex " +
                              std::to_string(v) + " smaller than s+|r(D)|");

    std::vector<int> classes = optimal_coloring(g);
    int chi = classes.empty()
                  ? 1
                  : 1 + *std::max_element(classes.begin(), classes.end());

    // count granted requests for one palette-color -> class assignment
    auto score = [&](const std::vector<int>& assign) {
        int got = 0;
        for (auto& [v, c] : r.entries) {
            int idx = static_cast<int>(
                std::lower_bound(requested.begin(), requested.end(), c) -
                requested.begin());
            if (assign[idx] == classes[v])
                ++got;
        }
        return got;
    };

    double combos = std::pow(static_cast<double>(chi), k);
    bool exhaustive = combos <= static_cast<double>(exhaust_limit);
    std::vector<int> assign(k, 0), best_assign(k, 0);
    int best = -1;
    std::uint64_t tried = 0;
    if (exhaustive) {
        // odometer over chi^k assignments
        while (true) {
            ++tried;
            int got = score(assign);
            if (got > best) {
                best = got;
                best_assign = assign;
            }
            int pos = k - 1;
            while (pos >= 0 && ++assign[pos] == chi)
                assign[pos--] = 0;
            if (pos < 0 || k == 0)
                break;
        }
    } else {
        RandomSource rng(seed);
        for (std::uint64_t t = 0; t < exhaust_limit; ++t) {
            for (int i = 0; i < k; ++i)
                assign[i] = static_cast<int>(rng.below(chi));
            ++tried;
            int got = score(assign);
            if (got > best) {
                best = got;
                best_assign = assign;
            }
        }
    }

    Coloring f(g.vertex_count(), -1);
    for (auto& [v, c] : r.entries) {
        int idx = static_cast<int>(
            std::lower_bound(requested.begin(), requested.end(), c) -
            requested.begin());
        if (best_assign[idx] == classes[v])
            f[v] = c;
    }

    // complete from lists with the whole requested palette removed
    std::vector<int> rest;
    ListAssignment pruned;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= 0)
            continue;
        std::vector<int> lv;
        for (int c : L.lists[v])
            if (!std::binary_search(requested.begin(), requested.end(), c))
                lv.push_back(c);
        rest.push_back(v);
        pruned.lists.push_back(std::move(lv));
    }
    Graph sub = g.induced(rest);
    auto completion = find_proper_coloring(sub, pruned);
    if (!completion)
        throw input_error(
            "bounded_palette_color: s-choosability assumption violated");
    for (std::size_t i = 0; i < rest.size(); ++i)
        f[rest[i]] = (*completion)[i];

    BoundedPaletteResult out{std::move(f), exhaustive, tried, 0};
    check_output(g, L, out.coloring, "bounded_palette_color");
    out.satisfied = count_satisfied(r, out.coloring);
    if (exhaustive && out.satisfied < (r.size() + chi - 1) / chi)
        throw falsification_alarm(
            "bounded_palette_color: exhaustive mode missed its floor");
    return out;
}

Coloring cartesian_flexible_color(const Graph& g, const Graph& h,
                                  const ListAssignment& L, const Request& r,
                                  const InnerSolver& inner) {
    Graph product = cartesian_product(g, h);
    require_valid(product, L, r);
    int ng = g.vertex_count();

    Budget budget;
    int chi_list_g = list_chromatic_number(g, budget);
    int need = h.max_degree() + chi_list_g;
    for (int v = 0; v < product.vertex_count(); ++v)
        if (static_cast<int>(L.lists[v].size()) < need)
            throw input_error("cartesian_flexible_color: list at vertex " +
                              std::to_string(v) + " smaller than " +
                              "max_degree(h)+list_chromatic(g)");

    std::vector<int> h_classes = optimal_coloring(h);
    int chi_h = h_classes.empty()
                    ? 1
                    : 1 + *std::max_element(h_classes.begin(), h_classes.end());
    std::vector<int> hits(chi_h, 0);
    for (auto& [pv, c] : r.entries)
        ++hits[h_classes[pv / ng]];
    int best_class =
        static_cast<int>(std::max_element(hits.begin(), hits.end()) -
                         hits.begin());

    Coloring f(product.vertex_count(), -1);

    auto copy_lists = [&](int hv) {
        ListAssignment Lv;
        Lv.lists.reserve(ng);
        for (int u = 0; u < ng; ++u)
            Lv.lists.push_back(L.lists[hv * ng + u]);
        return Lv;
    };

    // solve every copy in the winning class with the inner routine
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
        if (h_classes[hv] != best_class)
            continue;
        ListAssignment Lv = copy_lists(hv);
        Request rv;
        for (auto& [pv, c] : r.entries)
            if (pv / ng == hv)
                rv.set(pv % ng, c);
        Coloring fv;
        if (rv.empty()) {
            auto found = find_proper_coloring(g, Lv);
            if (!found)
                throw falsification_alarm(
                    "cartesian_flexible_color: request-free copy failed to "
                    "color from ample lists");
            fv = *found;
        } else {
            fv = inner(g, Lv, rv);
            if (!is_proper(g, fv) || !respects_lists(Lv, fv))
                throw input_error(
                    "cartesian_flexible_color: inner solver emitted an "
                    "invalid coloring");
        }
        for (int u = 0; u < ng; ++u)
            f[hv * ng + u] = fv[u];
    }

    // complete the remaining copies, pruning colors of finished neighbors
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
        if (h_classes[hv] == best_class)
            continue;
        ListAssignment Lv = copy_lists(hv);
        for (int u = 0; u < ng; ++u)
            for (int hu : h.neighbors(hv))
                if (f[hu * ng + u] >= 0)
                    std::erase(Lv.lists[u], f[hu * ng + u]);
        auto fv = find_proper_coloring(g, Lv);
        if (!fv)
            throw falsification_alarm(
                "cartesian_flexible_color: completion failed with >= "
                "list_chromatic(g) colors per list");
        for (int u = 0; u < ng; ++u)
            f[hv * ng + u] = (*fv)[u];
    }

    check_output(product, L, f, "cartesian_flexible_color");
    return f;
}

JoinSplitResult join_split_color(const GeneratedGraph& joined,
                                 const ListAssignment& L, const Request& r,
                                 int s, RandomSource& rng, int retry_cap) {
    const Graph& g = joined.graph;
    if (joined.info.kind != GenKind::join)
        throw input_error("join_split_color: input must come from join:A|B");
    if (joined.info.children.size() != 2 ||
        joined.info.children[0] != joined.info.children[1])
        throw input_error(
            "join_split_color: the two joined halves must be the same spec");
    require_valid(g, L, r);

    int n = joined.info.left_size;
    std::vector<int> left_ids(n), right_ids(n);
    for (int i = 0; i < n; ++i) {
        left_ids[i] = i;
        right_ids[i] = n + i;
    }
    Graph half = g.induced(left_ids);

    int d_left = 0, d_right = 0;
    for (auto& [v, c] : r.entries)
        (v < n ? d_left : d_right) += 1;
    bool swapped = d_left < d_right;
    // work on "first" = the request-richer half via an index map
    auto to_global = [&](int local, bool first_half) {
        bool left = first_half != swapped;
        return left ? local : n + local;
    };

    Rational rho = hall_ratio(half);
    long long keep_count = (Rational(n) / rho).ceil();
    int rich = std::max(d_left, d_right);
    long long need_kept = (Rational(rich) / rho).ceil();

    ListAssignment L1;
    Request r1;
    for (int i = 0; i < n; ++i)
        L1.lists.push_back(L.lists[to_global(i, true)]);
    for (auto& [v, c] : r.entries) {
        bool in_first = (v < n) != swapped;
        if (in_first)
            r1.set(swapped ? v - n : v, c);
    }

    // the richer half gets the best coloring the exact engine can find
    Coloring f1;
    int sat1 = 0;
    if (r1.empty()) {
        auto found = find_proper_coloring(half, L1);
        if (!found)
            throw input_error("join_split_color: half is not L-colorable");
        f1 = *found;
    } else {
        auto result = satisfy_max(half, L1, r1);
        if (result.count < 0)
            throw input_error("join_split_color: half is not L-colorable");
        f1 = *result.witness;
        sat1 = result.count;
    }
    if (sat1 < need_kept)
        throw falsification_alarm(
            "join_split_color: half solver satisfied fewer than "
            "ceil(|D1|/rho) requests, contradicting flexibility of the half");

    // keep exactly `keep_count` colored vertices: satisfied requests first,
    // then lowest indices
    std::vector<int> kept;
    int kept_satisfied = 0;
    for (int i = 0; i < n && static_cast<long long>(kept.size()) < keep_count;
         ++i)
        if (r1.has(i) && f1[i] == r1.color_of(i)) {
            kept.push_back(i);
            ++kept_satisfied;
        }
    for (int i = 0; i < n && static_cast<long long>(kept.size()) < keep_count;
         ++i)
        if (!(r1.has(i) && f1[i] == r1.color_of(i)))
            kept.push_back(i);
    std::sort(kept.begin(), kept.end());

    Coloring f(g.vertex_count(), -1);
    for (int i : kept)
        f[to_global(i, true)] = f1[i];

    // prune kept colors from every uncolored list
    std::vector<std::vector<int>> pruned(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= 0)
            continue;
        pruned[v] = L.lists[v];
        for (int u : g.neighbors(v))
            if (f[u] >= 0)
                std::erase(pruned[v], f[u]);
    }

    std::vector<int> first_rest, second_all;
    for (int i = 0; i < n; ++i) {
        int gv = to_global(i, true);
        if (f[gv] < 0)
            first_rest.push_back(gv);
        second_all.push_back(to_global(i, false));
    }

    std::vector<int> palette;
    for (int v : first_rest)
        palette.insert(palette.end(), pruned[v].begin(), pruned[v].end());
    for (int v : second_all)
        palette.insert(palette.end(), pruned[v].begin(), pruned[v].end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

    JoinSplitResult out;
    for (int attempt = 0; attempt <= retry_cap; ++attempt) {
        if (attempt == retry_cap) {
            throw input_error(
                "join_split_color: palette split retry cap (" +
                std::to_string(retry_cap) + ") exhausted after " +
                std::to_string(out.retries) + " rejected splits");
        }
        std::set<int> side1;
        for (int c : palette)
            if (rng.coin())
                side1.insert(c);
        auto count_in = [&](int v, bool in_side1) {
            int got = 0;
            for (int c : pruned[v])
                if (side1.count(c) == static_cast<std::size_t>(in_side1))
                    ++got;
            return got;
        };
        bool good = true;
        for (int v : first_rest)
            if (count_in(v, true) < s) {
                good = false;
                break;
            }
        if (good)
            for (int v : second_all)
                if (count_in(v, false) < s) {
                    good = false;
                    break;
                }
        if (!good) {
            ++out.retries;
            continue;
        }

        // complete both sides from their palette halves by exact search
        auto complete = [&](const std::vector<int>& verts, bool in_side1) {
            if (verts.empty())
                return;
            ListAssignment Ls;
            for (int v : verts) {
                std::vector<int> lv;
                for (int c : pruned[v])
                    if (side1.count(c) == static_cast<std::size_t>(in_side1))
                        lv.push_back(c);
                Ls.lists.push_back(std::move(lv));
            }
            Graph sub = g.induced(verts);
            auto fv = find_proper_coloring(sub, Ls);
            if (!fv)
                throw input_error(
                    "join_split_color: s-choosability assumption violated");
            for (std::size_t i = 0; i < verts.size(); ++i)
                f[verts[i]] = (*fv)[i];
        };
        complete(first_rest, true);
        complete(second_all, false);
        break;
    }

    check_output(g, L, f, "join_split_color");
    long long floor = (Rational(r.size()) / (Rational(2) * rho)).ceil();
    if (count_satisfied(r, f) < floor)
        throw falsification_alarm(
            "join_split_color: output below ceil(|D|/(2 rho))");
    out.coloring = std::move(f);
    out.kept_satisfied = kept_satisfied;
    return out;
}

// --- bound evaluators ---------------------------------------------------------

namespace {

double binary_entropy(double p) {
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

} // namespace

JoinBoundResult join_bound(long long n, long long s, long long m, long long l,
                           double r_param) {
    if (n < 2)
        throw input_error("join_bound: n must be >= 2");
    if (!(r_param > 2.0))
        throw input_error("join_bound: r must exceed 2");
    JoinBoundResult out;
    double h = binary_entropy(1.0 / r_param);
    out.entropy_term =
        static_cast<double>(l) +
        std::log2(static_cast<double>(2 * n - l)) / (1.0 - h);
    out.spread_term = r_param * static_cast<double>(s - 1) +
                      static_cast<double>(l);
    out.flex_term = m;

    auto ceil_ll = [](double x) {
        return static_cast<long long>(std::ceil(x));
    };
    long long t1 = ceil_ll(out.entropy_term);
    long long t2 = ceil_ll(out.spread_term);
    long long t1g = ceil_ll(out.entropy_term - 1e-9);
    long long t2g = ceil_ll(out.spread_term - 1e-9);
    out.bound = std::max({t1, t2, m});
    out.bound_guarded = std::max({t1g, t2g, m});
    out.ambiguous = out.bound != out.bound_guarded;
    return out;
}

ConditionResult joinpath_condition(long long n, double p, long long k) {
    if (n < 2 || n % 2 != 0)
        throw input_error("joinpath_condition: n must be a positive even integer");
    if (!(p > 0.0 && p < 1.0))
        throw input_error("joinpath_condition: p must lie in (0,1)");
    if (k <= std::max<long long>(2, n / 2))
        throw input_error("joinpath_condition: k must exceed max(2, n/2)");
    ConditionResult out;
    double half = static_cast<double>(n) / 2.0;
    out.term1 = half * std::pow(1.0 - p, static_cast<double>(k - 2));
    out.term2 = static_cast<double>(n) *
                std::pow(p, static_cast<double>(k - 1) - half) *
                (p + (static_cast<double>(k) - half) * (1.0 - p));
    out.term2_log = std::log(out.term2);
    out.lhs = out.term1 + out.term2;
    out.margin = 1.0 - out.lhs;
    out.holds = out.lhs <= 1.0;
    out.near_boundary = std::fabs(out.margin) < 1e-6;
    return out;
}

ConditionResult oddrequest_condition(long long l, double p, long long k) {
    if (l < 1)
        throw input_error("oddrequest_condition: l must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw input_error("oddrequest_condition: p must lie in (0,1)");
    ConditionResult out;
    double dl = static_cast<double>(l);
    out.term1 = (2 * dl + 1) *
                std::exp(static_cast<double>(k) * std::log1p(-p));
    // (2l)^l * 2^(2l+1) * p^k, kept in log space
    out.term2_log = dl * std::log(2 * dl) +
                    (2 * dl + 1) * std::log(2.0) +
                    static_cast<double>(k) * std::log(p);
    if (out.term2_log > 700.0) {
        out.term2 = std::numeric_limits<double>::infinity();
        out.lhs = std::numeric_limits<double>::infinity();
        out.margin = -std::numeric_limits<double>::infinity();
        out.holds = false;
        out.near_boundary = false;
        return out;
    }
    out.term2 = std::exp(out.term2_log);
    out.lhs = out.term1 + out.term2;
    out.margin = 1.0 - out.lhs;
    out.holds = out.lhs < 1.0;
    out.near_boundary = std::fabs(out.margin) < 1e-6;
    return out;
}

} // namespace flexicolor
