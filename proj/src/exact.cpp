#include "flexicolor/exact.hpp"
#include "flexicolor/errors.hpp"
#include "flexicolor/graph_params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace flexicolor {

bool is_proper(const Graph& g, const Coloring& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        return false;
    for (auto [u, v] : g.edges())
        if (f[u] == f[v])
            return false;
    return true;
}

bool respects_lists(const ListAssignment& L, const Coloring& f) {
    if (f.size() != static_cast<std::size_t>(L.size()))
        return false;
    for (int v = 0; v < L.size(); ++v)
        if (!L.contains(v, f[v]))
            return false;
    return true;
}

int count_satisfied(const Request& r, const Coloring& f) {
    int count = 0;
    for (auto& [v, c] : r.entries)
        if (v >= 0 && v < static_cast<int>(f.size()) && f[v] == c)
            ++count;
    return count;
}

namespace {

constexpr int MAX_PALETTE = 64;

// One (G,L) pair with colors remapped to dense indices so availability
// fits in a 64-bit mask.  Requests plug in and out between searches.
struct SatInstance {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<std::uint64_t> list_mask;
    std::vector<int> orig_color; // sorted palette; dense index -> color
    std::vector<int> degen_pos;
    std::vector<int> request;    // dense color or -1
    int domain_size = 0;

    // degen_positions may be shared across many assignments on one graph.
    void build(const Graph& graph, const ListAssignment& L,
               const std::vector<int>* degen_positions = nullptr) {
        g = &graph;
        n = graph.vertex_count();
        if (L.size() != n)
            throw input_error("exact engine: list count != vertex count");
        orig_color = L.palette();
        if (orig_color.size() > MAX_PALETTE)
            throw budget_error("exact engine: palette exceeds 64 colors");
        list_mask.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            if (L.lists[v].empty())
                throw input_error("exact engine: empty list at vertex " +
                                  std::to_string(v));
            for (int c : L.lists[v])
                list_mask[v] |= std::uint64_t(1) << dense_of(c);
        }
        if (degen_positions)
            degen_pos = *degen_positions;
        else
            degen_pos = n > 0 ? degeneracy_order(graph).position
                              : std::vector<int>{};
        request.assign(n, -1);
        domain_size = 0;
    }

    int dense_of(int color) const {
        auto it = std::lower_bound(orig_color.begin(), orig_color.end(), color);
        if (it == orig_color.end() || *it != color)
            return -1;
        return static_cast<int>(it - orig_color.begin());
    }

    void set_request(const Request& r) {
        for (auto& [v, c] : r.entries) {
            if (v < 0 || v >= n)
                throw input_error("exact engine: request vertex out of range");
            int dc = dense_of(c);
            if (dc < 0 || !(list_mask[v] >> dc & 1))
                throw input_error(
                    "exact engine: request color not in list at vertex " +
                    std::to_string(v));
            request[v] = dc;
        }
        domain_size = static_cast<int>(r.entries.size());
    }

    void clear_request(const Request& r) {
        for (auto& [v, c] : r.entries)
            request[v] = -1;
        domain_size = 0;
    }

    Coloring to_original(const std::vector<int>& dense) const {
        Coloring out(dense.size());
        for (std::size_t v = 0; v < dense.size(); ++v)
            out[v] = orig_color[dense[v]];
        return out;
    }
};

struct SatSearcher {
    const SatInstance& inst;
    std::uint64_t* nodes;
    std::uint64_t node_cap;
    int target;

    std::vector<std::uint64_t> avail;
    std::vector<int> color;
    std::vector<std::vector<int>> touched;
    int best = -1;
    std::vector<int> best_color;
    int sat = 0;
    int undecided = 0;
    int colored = 0;
    bool done = false;

    SatSearcher(const SatInstance& instance, int target_count,
                std::uint64_t* node_counter, std::uint64_t cap)
        : inst(instance), nodes(node_counter), node_cap(cap),
          target(target_count) {
        avail = inst.list_mask;
        color.assign(inst.n, -1);
        touched.assign(inst.n, {});
        undecided = inst.domain_size;
    }

    int pick() const {
        int best_v = -1;
        int best_cnt = MAX_PALETTE + 1;
        int best_d = 2;
        int best_pos = 1 << 30;
        for (int v = 0; v < inst.n; ++v) {
            if (color[v] >= 0)
                continue;
            int cnt = std::popcount(avail[v]);
            int is_d = inst.request[v] >= 0 ? 0 : 1;
            int pos = inst.degen_pos[v];
            if (cnt < best_cnt ||
                (cnt == best_cnt &&
                 (is_d < best_d || (is_d == best_d && pos < best_pos)))) {
                best_v = v;
                best_cnt = cnt;
                best_d = is_d;
                best_pos = pos;
            }
        }
        return best_v;
    }

    void run() {
        if (++*nodes > node_cap)
            throw budget_error("exact engine: search node budget exceeded (" +
                               std::to_string(node_cap) + ")");
        if (sat + undecided <= best)
            return; // cannot beat the incumbent
        if (colored == inst.n) {
            best = sat;
            best_color = color;
            if (best >= target)
                done = true;
            return;
        }
        int v = pick();
        std::uint64_t options = avail[v];
        if (options == 0)
            return;
        bool in_domain = inst.request[v] >= 0;
        int preferred = in_domain ? inst.request[v] : -1;

        auto try_color = [&](int c) {
            color[v] = c;
            ++colored;
            bool satisfied = in_domain && c == preferred;
            if (in_domain) {
                --undecided;
                if (satisfied)
                    ++sat;
            }
            auto& mine = touched[v];
            mine.clear();
            std::uint64_t bit = std::uint64_t(1) << c;
            for (int u : inst.g->neighbors(v))
                if (color[u] < 0 && (avail[u] & bit)) {
                    avail[u] &= ~bit;
                    mine.push_back(u);
                }
            run();
            for (int u : mine)
                avail[u] |= bit;
            if (in_domain) {
                ++undecided;
                if (satisfied)
                    --sat;
            }
            --colored;
            color[v] = -1;
        };

        if (preferred >= 0 && (options >> preferred & 1)) {
            try_color(preferred);
            if (done)
                return;
            options &= ~(std::uint64_t(1) << preferred);
        }
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            try_color(c);
            if (done)
                return;
        }
    }
};

SatisfyResult run_search(const SatInstance& inst, int target,
                         std::uint64_t* nodes, std::uint64_t node_cap) {
    SatSearcher searcher(inst, target, nodes, node_cap);
    searcher.run();
    SatisfyResult out;
    out.count = searcher.best;
    if (searcher.best >= 0)
        out.witness = inst.to_original(searcher.best_color);
    return out;
}

// Single greedy pass in degeneracy order, preferring requested colors; a
// cheap lower bound that short-circuits most threshold checks.
int greedy_lower_bound(const SatInstance& inst,
                       const std::vector<int>& order) {
    thread_local std::vector<std::uint64_t> avail;
    thread_local std::vector<int> color;
    avail = inst.list_mask;
    color.assign(inst.n, -1);
    int sat = 0;
    for (int v : order) {
        std::uint64_t options = avail[v];
        if (options == 0)
            return -1; // greedy got stuck; caller falls back to search
        int c;
        if (inst.request[v] >= 0 && (options >> inst.request[v] & 1)) {
            c = inst.request[v];
            ++sat;
        } else {
            c = std::countr_zero(options);
        }
        color[v] = c;
        std::uint64_t bit = std::uint64_t(1) << c;
        for (int u : inst.g->neighbors(v))
            if (color[u] < 0)
                avail[u] &= ~bit;
    }
    return sat;
}

void check_witness(const Graph& g, const ListAssignment& L, const Request& r,
                   const SatisfyResult& result, bool exact) {
    if (!result.witness)
        return;
    const Coloring& f = *result.witness;
    if (!is_proper(g, f) || !respects_lists(L, f))
        throw falsification_alarm("satisfy witness fails validity check");
    int got = count_satisfied(r, f);
    if (exact ? got != result.count : got < result.count)
        throw falsification_alarm("satisfy witness does not attain its count");
}

} // namespace

std::optional<Coloring> find_proper_coloring(const Graph& g,
                                             const ListAssignment& L) {
    SatInstance inst;
    inst.build(g, L);
    std::uint64_t nodes = 0;
    Budget budget;
    auto result = run_search(inst, 0, &nodes, budget.max_search_nodes);
    if (result.count < 0)
        return std::nullopt;
    return result.witness;
}

SatisfyResult satisfy_max(const Graph& g, const ListAssignment& L,
                          const Request& r) {
    SatInstance inst;
    inst.build(g, L);
    inst.set_request(r);
    std::uint64_t nodes = 0;
    Budget budget;
    auto result =
        run_search(inst, inst.domain_size + 1, &nodes, budget.max_search_nodes);
    check_witness(g, L, r, result, true);
    return result;
}

SatisfyResult satisfy_at_least(const Graph& g, const ListAssignment& L,
                               const Request& r, int target) {
    SatInstance inst;
    inst.build(g, L);
    inst.set_request(r);
    std::uint64_t nodes = 0;
    Budget budget;
    auto result = run_search(inst, target, &nodes, budget.max_search_nodes);
    check_witness(g, L, r, result, false);
    return result;
}

namespace {

// Shared core of flex_value / epsilon_of / is_flexible: scans every request
// of L (domains by descending size, colors lexicographically) keeping the
// running exact minimum `m`.  A request is searched only up to the smallest
// count that would fail to lower m, so passing requests stay cheap.
struct FlexScanner {
    const Graph& g;
    std::vector<int> order; // degeneracy order, shared by all greedy passes
    std::uint64_t* nodes;
    std::uint64_t node_cap;

    // When every list has >= max_degree+1 colors, coloring a maximum
    // independent set of G[D] with its requests and extending greedily
    // cannot fail, so satisfy_max >= alpha(G[D]).  That admissible bound
    // (exact subset DP) skips requests that provably cannot lower m.
    const std::vector<std::uint8_t>* alpha_table = nullptr;

    Rational m = Rational(1);
    Request worst_request;
    Coloring worst_coloring;
    bool have_witness = false;

    FlexScanner(const Graph& graph, std::uint64_t* node_counter,
                std::uint64_t cap)
        : g(graph), order(degeneracy_order(graph).order),
          nodes(node_counter), node_cap(cap) {}

    // Returns false if the scan hit `floor` (m < floor or m == 0), meaning
    // the caller can stop early.
    bool scan(SatInstance& inst, const ListAssignment& L, Rational floor) {
        int n = inst.n;
        std::vector<int> domain;
        Request r;

        std::function<bool(int, int, std::uint32_t)> over_domains =
            [&](int next, int want, std::uint32_t mask) -> bool {
            if (want == 0) {
                if (alpha_table) {
                    // smallest count that would lower m; alpha bound says
                    // satisfy_max >= alpha(G[D]) for every request on D
                    int s = static_cast<int>(domain.size());
                    std::int64_t t = (m.num() * s + m.den() - 1) / m.den();
                    if ((*alpha_table)[mask] >= t)
                        return true;
                }
                return over_tuples(inst, L, domain, r, 0, floor);
            }
            for (int v = next; v <= n - want; ++v) {
                domain.push_back(v);
                bool keep =
                    over_domains(v + 1, want - 1, mask | (std::uint32_t(1) << v));
                domain.pop_back();
                if (!keep)
                    return false;
            }
            return true;
        };

        for (int size = n; size >= 1; --size) {
            if (!over_domains(0, size, 0))
                return false;
        }
        return true;
    }

private:
    bool over_tuples(SatInstance& inst, const ListAssignment& L,
                     const std::vector<int>& domain, Request& r,
                     std::size_t idx, Rational floor) {
        if (idx == domain.size()) {
            return check_request(inst, r, floor);
        }
        int v = domain[idx];
        for (int c : L.lists[v]) {
            r.set(v, c);
            bool keep = over_tuples(inst, L, domain, r, idx + 1, floor);
            r.entries.erase(
                std::lower_bound(r.entries.begin(), r.entries.end(),
                                 std::make_pair(v, -1)));
            if (!keep)
                return false;
        }
        return true;
    }

    bool check_request(SatInstance& inst, const Request& r, Rational floor) {
        int s = r.size();
        // smallest count whose ratio would NOT lower m
        std::int64_t t = (m.num() * s + m.den() - 1) / m.den();
        if (t <= 0)
            return true; // nothing below m is possible here
        inst.set_request(r);
        int lb = greedy_lower_bound(inst, order);
        if (lb >= t) {
            inst.clear_request(r);
            return true;
        }
        auto result =
            run_search(inst, static_cast<int>(t), nodes, node_cap);
        inst.clear_request(r);
        if (result.count < t) {
            m = Rational(result.count < 0 ? -1 : result.count, s);
            worst_request = r;
            if (result.witness)
                worst_coloring = *result.witness;
            have_witness = true;
            if (m.num() <= 0 || m < floor)
                return false;
        }
        return true;
    }
};

} // namespace

Rational flex_value(const Graph& g, const ListAssignment& L) {
    if (!find_proper_coloring(g, L))
        return Rational(-1);
    SatInstance inst;
    inst.build(g, L);
    Budget budget;
    std::uint64_t nodes = 0;
    FlexScanner scanner(g, &nodes, budget.max_search_nodes);
    scanner.scan(inst, L, Rational(0));
    return scanner.m;
}

namespace {

using Mask = std::uint32_t;

FlexReport epsilon_search(const Graph& g, int k, Rational floor,
                          const Budget& budget) {
    int n = g.vertex_count();
    if (n < 1)
        throw input_error("epsilon search: empty graph");
    if (k < 1)
        throw input_error("epsilon search: k must be >= 1");

    auto degen = degeneracy_order(g);
    const auto& degen_positions = degen.position;
    const auto& order = degen.order;

    // With k >= max_degree+1 every assignment is greedily colorable and the
    // alpha(G[D]) request bound applies; both make the scan nearly free once
    // m has reached 1/hall_ratio (nothing below it can exist).
    bool greedy_safe = (k >= g.max_degree() + 1) && n <= 24;
    std::vector<std::uint8_t> alpha;
    Rational rho_floor(0);
    if (greedy_safe) {
        alpha = independence_table(g);
        rho_floor = hall_ratio(g).reciprocal();
    }

    FlexReport report;
    std::uint64_t nodes = 0;
    FlexScanner scanner(g, &nodes, budget.max_search_nodes);
    if (greedy_safe)
        scanner.alpha_table = &alpha;
    std::vector<Mask> worst_types;
    bool worst_uncolorable = false;

    // scratch for the mask-level greedy colorability certificate
    std::vector<std::uint64_t> cert_mask(n);

    for_each_canonical_types(
        n, k, budget.max_assignments, [&](const std::vector<Mask>& types) {
            ++report.assignments_checked;

            if (greedy_safe) {
                // constructive colorability certificate straight off the
                // type masks, no per-assignment allocation
                std::fill(cert_mask.begin(), cert_mask.end(), 0);
                for (std::size_t c = 0; c < types.size(); ++c)
                    for (Mask t = types[c]; t;) {
                        int v = std::countr_zero(t);
                        t &= t - 1;
                        cert_mask[v] |= std::uint64_t(1) << c;
                    }
                for (int v : order) {
                    std::uint64_t options = cert_mask[v];
                    if (options == 0)
                        throw falsification_alarm(
                            "epsilon search: greedy ran dry despite "
                            "max_degree+1 lists");
                    int c = std::countr_zero(options);
                    for (int u : g.neighbors(v))
                        cert_mask[u] &= ~(std::uint64_t(1) << c);
                    cert_mask[v] = options; // keep own options intact
                }
                // no request can score below alpha(G[D])/|D| >= 1/rho, so
                // once m is there the whole scan is provably moot
                if (scanner.m <= rho_floor)
                    return !(scanner.m < floor || scanner.m.num() == 0);
            }

            ListAssignment L = assignment_from_types(n, types);
            SatInstance inst;
            inst.build(g, L, &degen_positions);
            if (!greedy_safe &&
                run_search(inst, 0, &nodes, budget.max_search_nodes).count <
                    0) {
                scanner.m = Rational(0);
                scanner.have_witness = false;
                worst_types = types;
                worst_uncolorable = true;
                return false; // nothing can be below 0
            }
            Rational before = scanner.m;
            bool keep = scanner.scan(inst, L, floor);
            if (scanner.m < before) {
                worst_types = types;
                worst_uncolorable = false;
            }
            return keep;
        });

    report.value = scanner.m;
    report.uncolorable_witness = worst_uncolorable;
    if (!worst_types.empty())
        report.witness_assignment = assignment_from_types(n, worst_types);
    if (scanner.have_witness) {
        report.witness_request = scanner.worst_request;
        report.witness_coloring = scanner.worst_coloring;
    }
    return report;
}

} // namespace

std::pair<bool, FlexReport> is_flexible(const Graph& g, int k, Rational eps,
                                        const Budget& budget) {
    FlexReport report = epsilon_search(g, k, eps, budget);
    return {report.value >= eps, report};
}

FlexReport epsilon_of_report(const Graph& g, int k, const Budget& budget) {
    return epsilon_search(g, k, Rational(0), budget);
}

Rational epsilon_of(const Graph& g, int k, const Budget& budget) {
    return epsilon_of_report(g, k, budget).value;
}

int list_chromatic_number(const Graph& g, const Budget& budget) {
    int n = g.vertex_count();
    if (n < 1)
        throw input_error("list_chromatic_number: empty graph");
    if (g.edge_count() == 0)
        return 1;
    int lower = chromatic_number(g);
    int upper = g.max_degree() + 1;
    for (int k = lower; k <= upper; ++k) {
        bool all_colorable = true;
        for_each_canonical_assignment(
            n, k, budget.max_assignments, [&](const ListAssignment& L) {
                if (!find_proper_coloring(g, L)) {
                    all_colorable = false;
                    return false;
                }
                return true;
            });
        if (all_colorable)
            return k;
    }
    throw falsification_alarm(
        "list_chromatic_number: exceeded max_degree+1, contradicting the "
        "greedy bound");
}

std::optional<std::vector<Coloring>> find_packing(const Graph& g,
                                                  const ListAssignment& L,
                                                  int k, const Budget& budget) {
    int n = g.vertex_count();
    if (L.size() != n)
        throw input_error("find_packing: list count != vertex count");
    auto order = degeneracy_order(g).order;

    // rows[i][v] = dense color of vertex `order[v]` in member i
    SatInstance inst;
    inst.build(g, L);
    std::vector<std::vector<int>> rows(k, std::vector<int>(n, -1));
    std::uint64_t nodes = 0;

    std::function<bool(int, int, std::uint64_t)> place =
        [&](int pos, int row, std::uint64_t used_here) -> bool {
        if (++nodes > budget.max_search_nodes)
            throw budget_error("find_packing: search node budget exceeded");
        if (row == k)
            return place(pos + 1, 0, 0);
        if (pos == n)
            return true;
        int v = order[pos];
        std::uint64_t options = inst.list_mask[v] & ~used_here;
        for (int u : g.neighbors(v)) {
            // only earlier-ordered neighbors constrain this row
            int up = inst.degen_pos[u];
            if (up < pos)
                options &= ~(std::uint64_t(1) << rows[row][up]);
        }
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            // member order is irrelevant: force ascending colors on the
            // first vertex to kill the k! row symmetry
            if (pos == 0 && row > 0 && c <= rows[row - 1][0])
                continue;
            rows[row][pos] = c;
            if (place(pos, row + 1, used_here | (std::uint64_t(1) << c)))
                return true;
            rows[row][pos] = -1;
        }
        return false;
    };

    if (place(0, 0, 0) == false)
        return std::nullopt;

    std::vector<Coloring> out(k, Coloring(n));
    for (int i = 0; i < k; ++i) {
        std::vector<int> dense(n);
        for (int pos = 0; pos < n; ++pos)
            dense[order[pos]] = rows[i][pos];
        out[i] = inst.to_original(dense);
    }
    return out;
}

int list_packing_number(const Graph& g, const Budget& budget) {
    int n = g.vertex_count();
    if (n < 1)
        throw input_error("list_packing_number: empty graph");
    int lower = g.edge_count() == 0 ? 1 : list_chromatic_number(g, budget);
    for (int k = lower; k <= n + 1; ++k) {
        bool all_packable = true;
        for_each_canonical_assignment(
            n, k, budget.max_assignments, [&](const ListAssignment& L) {
                if (!find_packing(g, L, k, budget)) {
                    all_packable = false;
                    return false;
                }
                return true;
            });
        if (all_packable)
            return k;
    }
    throw budget_error("list_packing_number: no packing found for any k <= " +
                       std::to_string(n + 1));
}

int chi_flex(const Graph& g, const Budget& budget) {
    Rational eps = hall_ratio(g).reciprocal();
    int lower = list_chromatic_number(g, budget);
    int upper = g.max_degree() + 1;
    for (int k = lower; k <= upper; ++k)
        if (is_flexible(g, k, eps, budget).first)
            return k;
    throw falsification_alarm(
        "chi_flex: not flexible even at max_degree+1, contradicting the "
        "greedy argument");
}

} // namespace flexicolor
