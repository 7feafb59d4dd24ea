#include "flexicolor/orientation.hpp"
#include "flexicolor/errors.hpp"
#include "flexicolor/graph_params.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace flexicolor {

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int start = 0; start < n; ++start) {
        if (side[start] >= 0)
            continue;
        side[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Orientation sink_orientation(const Graph& g, int d, int target) {
    int n = g.vertex_count();
    if (target < 0 || target >= n)
        throw input_error("sink_orientation: target out of range");
    auto degen = degeneracy_order(g);
    if (degen.d > d)
        throw input_error("sink_orientation: graph is " +
                          std::to_string(degen.d) + "-degenerate, above d=" +
                          std::to_string(d));

    // order with <= d neighbors AFTER each vertex; orient earlier -> later
    std::vector<int> order = degen.following_view();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;

    // arc directions as a map edge -> oriented (from,to)
    std::map<std::pair<int, int>, std::pair<int, int>> arc;
    for (auto [u, v] : g.edges())
        arc[{u, v}] = pos[u] < pos[v] ? std::make_pair(u, v)
                                      : std::make_pair(v, u);

    // max-flow on the suffix starting at the target's position, plus an
    // auxiliary sink; capacities 1 on real arcs, d - outdeg padding to sink
    int k = pos[target];
    int sink = n; // auxiliary vertex id
    struct Arc {
        int to;
        int cap;
        int rev;          // index of the reverse arc in adj[to]
        bool real;        // corresponds to a graph edge (from->to direction)
        int eu, ev;       // the underlying undirected edge, eu < ev
    };
    std::vector<std::vector<Arc>> net(n + 1);
    auto add_arc = [&](int from, int to, int cap, bool real, int eu, int ev) {
        net[from].push_back({to, cap, static_cast<int>(net[to].size()), real,
                             eu, ev});
        net[to].push_back({from, 0,
                           static_cast<int>(net[from].size()) - 1, false, eu,
                           ev});
    };
    for (int i = k; i < n; ++i) {
        int v = order[i];
        int outdeg = 0;
        for (int u : g.neighbors(v))
            if (pos[u] > i) {
                add_arc(v, u, 1, true, std::min(u, v), std::max(u, v));
                ++outdeg;
            }
        if (outdeg > d)
            throw falsification_alarm(
                "sink_orientation: ordering exceeded out-degree d");
        if (d - outdeg > 0)
            add_arc(v, sink, d - outdeg, false, -1, -1);
    }

    // d BFS augmentations from target to the auxiliary sink
    int flow = 0;
    while (flow < d) {
        std::vector<std::pair<int, int>> parent(n + 1, {-1, -1});
        std::deque<int> queue{target};
        parent[target] = {target, -1};
        while (!queue.empty() && parent[sink].first < 0) {
            int v = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < net[v].size(); ++i) {
                const Arc& e = net[v][i];
                if (e.cap > 0 && parent[e.to].first < 0) {
                    parent[e.to] = {v, static_cast<int>(i)};
                    queue.push_back(e.to);
                }
            }
        }
        if (parent[sink].first < 0)
            break;
        for (int v = sink; v != target;) {
            auto [p, idx] = parent[v];
            net[p][idx].cap -= 1;
            net[v][net[p][idx].rev].cap += 1;
            v = p;
        }
        ++flow;
    }
    if (flow < d)
        throw falsification_alarm(
            "sink_orientation: only " + std::to_string(flow) +
            " edge-disjoint paths found, " + std::to_string(d) +
            " are guaranteed");

    // real arcs whose capacity was consumed carried flow: reverse them
    for (int from = 0; from <= n; ++from)
        for (const Arc& e : net[from])
            if (e.real && e.cap == 0) {
                auto key = std::make_pair(e.eu, e.ev);
                arc[key] = {e.to, from}; // reversed
            }

    Orientation out;
    out.out_degree.assign(n, 0);
    for (auto& [edge, dir] : arc) {
        out.directed_edges.push_back(dir);
        ++out.out_degree[dir.first];
    }

    if (out.out_degree[target] != 0)
        throw falsification_alarm(
            "sink_orientation: target kept positive out-degree");
    for (int v = 0; v < n; ++v)
        if (out.out_degree[v] > d)
            throw falsification_alarm(
                "sink_orientation: out-degree above d after reversal");
    if (static_cast<int>(out.directed_edges.size()) != g.edge_count())
        throw falsification_alarm("sink_orientation: edge set changed");
    return out;
}

Coloring single_request_color(const Graph& g, const ListAssignment& L,
                              const Request& r) {
    if (r.size() != 1)
        throw input_error("single_request_color: request domain must be one "
                          "vertex");
    if (!is_bipartite(g))
        throw input_error("single_request_color: graph must be bipartite");
    auto k = L.uniform_size();
    if (!k || *k < 1)
        throw input_error("single_request_color: lists must share one size");
    int d = *k - 1;
    auto degen = degeneracy_order(g);
    if (degen.d > d)
        throw input_error("single_request_color: lists of size " +
                          std::to_string(*k) + " need degeneracy <= " +
                          std::to_string(d) + ", graph has " +
                          std::to_string(degen.d));
    auto report = validate(g, L, &r);
    if (!report.ok())
        throw input_error("single_request_color: " +
                          report.violations.front());

    int target = r.entries.front().first;
    int want = r.entries.front().second;
    Orientation orient = sink_orientation(g, d, target);

    // variable order: each vertex after its out-neighbors where possible
    // (the orientation may contain cycles; stall-breaking picks the vertex
    // with the fewest unplaced out-neighbors)
    int n = g.vertex_count();
    std::vector<std::vector<int>> out_adj(n);
    for (auto [a, b] : orient.directed_edges)
        out_adj[a].push_back(b);
    std::vector<char> placed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_missing = n + 1;
        for (int v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            int missing = 0;
            for (int u : out_adj[v])
                missing += !placed[u];
            if (missing < best_missing) {
                best_missing = missing;
                best = v;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }

    // exhaustive backtracking in that order, requested vertex pinned
    std::vector<int> color(n, -1);
    std::function<bool(int)> go = [&](int at) -> bool {
        if (at == n)
            return true;
        int v = order[at];
        if (v == target) {
            for (int u : g.neighbors(v))
                if (color[u] == want)
                    return false;
            color[v] = want;
            if (go(at + 1))
                return true;
            color[v] = -1;
            return false;
        }
        for (int c : L.lists[v]) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            if (go(at + 1))
                return true;
            color[v] = -1;
        }
        return false;
    };
    if (!go(0))
        throw falsification_alarm(
            "single_request_color: no extension exists, contradicting the "
            "single-request guarantee for bipartite d-degenerate graphs");
    if (!is_proper(g, color) || !respects_lists(L, color) ||
        color[target] != want)
        throw falsification_alarm("single_request_color: invalid output");
    return color;
}

std::string serialize_orientation(const Orientation& o) {
    std::ostringstream out;
    for (auto [from, to] : o.directed_edges)
        out << from << '>' << to << '\n';
    return out.str();
}

} // namespace flexicolor
