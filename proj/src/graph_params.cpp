#include "flexicolor/graph_params.hpp"
#include "flexicolor/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace flexicolor {

DegeneracyOrder degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        throw input_error("degeneracy_order: empty graph");

    // Repeated minimum-degree removal.  The removal sequence, reversed,
    // gives the ordering where every vertex has at most d earlier neighbors.
    // Ties go to the lowest vertex index for determinism.
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<int> removal;
    removal.reserve(n);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && (v < 0 || deg[u] < deg[v]))
                v = u;
        removed[v] = 1;
        removal.push_back(v);
        d = std::max(d, deg[v]);
        for (int u : g.neighbors(v))
            if (!removed[u])
                --deg[u];
    }

    DegeneracyOrder out;
    out.order.assign(removal.rbegin(), removal.rend());
    out.position.assign(n, 0);
    out.back_degrees.assign(n, 0);
    out.d = d;
    for (int i = 0; i < n; ++i)
        out.position[out.order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int u : g.neighbors(out.order[i]))
            if (out.position[u] < i)
                ++count;
        out.back_degrees[i] = count;
    }
    return out;
}

namespace {

using Mask = std::uint64_t;

struct MisSearcher {
    const Graph& g;
    std::vector<Mask> nbr;
    int best_size = -1;
    Mask best_set = 0;

    explicit MisSearcher(const Graph& graph) : g(graph) {
        int n = g.vertex_count();
        nbr.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                nbr[v] |= Mask(1) << u;
    }

    void run(Mask candidates, Mask chosen, int size) {
        if (size + std::popcount(candidates) <= best_size)
            return;
        if (candidates == 0) {
            if (size > best_size) {
                best_size = size;
                best_set = chosen;
            }
            return;
        }
        // branch vertex: maximum degree within the candidate set, lowest
        // index on ties
        int pick = -1, pick_deg = -1;
        for (Mask m = candidates; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int dv = std::popcount(nbr[v] & candidates);
            if (dv > pick_deg) {
                pick_deg = dv;
                pick = v;
            }
        }
        // include pick
        run(candidates & ~(nbr[pick] | (Mask(1) << pick)),
            chosen | (Mask(1) << pick), size + 1);
        // exclude pick
        run(candidates & ~(Mask(1) << pick), chosen, size);
    }
};

} // namespace

std::vector<int> max_independent_set(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return {};
    if (n > 62)
        throw budget_error("max_independent_set: n > 62");
    MisSearcher searcher(g);
    searcher.run((n == 64 ? ~Mask(0) : (Mask(1) << n) - 1), 0, 0);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (searcher.best_set >> v & 1)
            out.push_back(v);
    return out;
}

int independence_number(const Graph& g) {
    return static_cast<int>(max_independent_set(g).size());
}

namespace {

// Greedy clique on degree-sorted vertices; a lower bound for chi.
std::vector<int> greedy_clique(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<int> clique;
    for (int v : verts) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](int u) { return g.has_edge(u, v); });
        if (fits)
            clique.push_back(v);
    }
    return clique;
}

// k-colorability decision, DSATUR-style ordering with new-color symmetry
// breaking.  Fills `out` on success.
bool k_colorable(const Graph& g, int k, std::vector<int>& out) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<std::uint64_t> forbid(n, 0); // colors on neighbors
    int max_used = -1;

    auto pick = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            int sat = std::popcount(forbid[v]);
            int dv = g.degree(v);
            if (sat > best_sat || (sat == best_sat && dv > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = dv;
            }
        }
        return best;
    };

    std::vector<int> trail;
    std::vector<std::vector<int>> touched(n);

    std::function<bool(int)> go = [&](int colored) -> bool {
        if (colored == n)
            return true;
        int v = pick();
        int limit = std::min(k - 1, max_used + 1); // first use of a new color
        for (int c = 0; c <= limit; ++c) {
            if (forbid[v] >> c & 1)
                continue;
            color[v] = c;
            int prev_max = max_used;
            max_used = std::max(max_used, c);
            auto& mine = touched[v];
            mine.clear();
            for (int u : g.neighbors(v))
                if (color[u] < 0 && !(forbid[u] >> c & 1)) {
                    forbid[u] |= std::uint64_t(1) << c;
                    mine.push_back(u);
                }
            if (go(colored + 1))
                return true;
            for (int u : mine)
                forbid[u] &= ~(std::uint64_t(1) << c);
            max_used = prev_max;
            color[v] = -1;
        }
        return false;
    };

    if (!go(0))
        return false;
    out = color;
    return true;
}

} // namespace

int chromatic_number(const Graph& g) {
    auto coloring = optimal_coloring(g);
    if (coloring.empty())
        return 0;
    return 1 + *std::max_element(coloring.begin(), coloring.end());
}

std::vector<int> optimal_coloring(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return {};
    if (n > 64)
        throw budget_error("optimal_coloring: n > 64");
    if (g.edge_count() == 0)
        return std::vector<int>(n, 0);
    int lower = static_cast<int>(greedy_clique(g).size());
    for (int k = std::max(lower, 1); k <= n; ++k) {
        std::vector<int> coloring;
        if (k_colorable(g, k, coloring))
            return coloring;
    }
    throw falsification_alarm("optimal_coloring: no n-coloring found");
}

std::vector<std::uint8_t> independence_table(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        throw input_error("independence_table: empty graph");
    if (n > 24)
        throw budget_error(
            "independence_table: n > 24 exceeds the subset-DP budget");
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = std::uint32_t(1) << v;
        for (int u : g.neighbors(v))
            closed[v] |= std::uint32_t(1) << u;
    }
    std::size_t total = std::size_t(1) << n;
    std::vector<std::uint8_t> alpha(total, 0);
    for (std::uint32_t s = 1; s < total; ++s) {
        int v = std::countr_zero(s);
        std::uint8_t skip = alpha[s & (s - 1)];
        std::uint8_t take =
            static_cast<std::uint8_t>(1 + alpha[s & ~closed[v]]);
        alpha[s] = std::max(skip, take);
    }
    return alpha;
}

// among subgraphs on a fixed vertex set the induced one minimizes alpha,
// so scanning induced subsets suffices
Rational hall_ratio(const Graph& g) {
    auto alpha = independence_table(g);
    std::int64_t best_size = 1, best_alpha = 1; // singleton ratio 1/1
    for (std::uint32_t s = 1; s < alpha.size(); ++s) {
        std::int64_t size = std::popcount(s);
        if (size * best_alpha > best_size * alpha[s]) {
            best_size = size;
            best_alpha = alpha[s];
        }
    }
    return Rational(best_size, best_alpha);
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> autos;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);

    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            autos.push_back(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(image[u], w))
                    ok = false;
            if (!ok)
                continue;
            image[v] = w;
            used[w] = 1;
            go(v + 1);
            used[w] = 0;
            image[v] = -1;
        }
    };
    go(0);
    return autos;
}

} // namespace flexicolor
