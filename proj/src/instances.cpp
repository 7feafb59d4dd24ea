#include "flexicolor/instances.hpp"
#include "flexicolor/errors.hpp"
#include "flexicolor/graph_params.hpp"
#include "flexicolor/random.hpp"
#include "flexicolor/sampling.hpp"

#include <algorithm>
#include <set>

namespace flexicolor {

BigNat t0_value(int l) {
    if (l < 1)
        throw input_error("t0: l must be >= 1");
    BigNat total(0);
    for (int i = 0; i <= l; ++i) {
        BigNat term = BigNat::binomial(2 * l + 1, 2 * l + 1 - i);
        for (int j = 0; j < i; ++j)
            term.mul_small(static_cast<std::uint64_t>(2 * l));
        total += term;
    }
    return total;
}

AdversaryInstance oddrequest_instance(int l, long long t) {
    if (l < 1)
        throw input_error("oddrequest_instance: l must be >= 1");
    BigNat t0 = t0_value(l);
    if (!t0.fits_u64() ||
        static_cast<std::uint64_t>(t) < t0.to_u64())
        throw input_error("oddrequest_instance: t must be >= t0(l) = " +
                          t0.str());
    long long t0v = static_cast<long long>(t0.to_u64());

    int x = 2 * l + 1;
    AdversaryInstance out;
    out.x_size = x;
    out.y_size = t;
    out.graph = generate("kbip:" + std::to_string(x) + "," +
                         std::to_string(t))
                    .graph;

    // colors 1..2l+1 are the requested ones; the disjoint 2l-blocks A_i
    // follow consecutively
    out.lists.lists.assign(x + t, {});
    for (int i = 1; i <= x; ++i) {
        std::vector<int>& list = out.lists.lists[i - 1];
        list.push_back(i);
        int base = x + (i - 1) * 2 * l;
        for (int j = 1; j <= 2 * l; ++j)
            list.push_back(base + j);
        std::sort(list.begin(), list.end());
        out.request.set(i - 1, i);
    }

    // Y-lists: every C with |C| = 2l+1 containing some B in R (the size
    // >= l+1 subsets of the requested palette) and exactly one color from
    // each A_j with j outside B.  B enumerated size-descending then
    // lexicographic; the A-choices odometer lexicographically.
    std::vector<std::vector<int>> all_b;
    for (int size = x; size >= l + 1; --size) {
        std::vector<int> pickb;
        std::function<void(int, int)> combos = [&](int next, int want) {
            if (want == 0) {
                all_b.push_back(pickb);
                return;
            }
            for (int v = next; v <= x - want; ++v) {
                pickb.push_back(v + 1); // colors are 1-based
                combos(v + 1, want - 1);
                pickb.pop_back();
            }
        };
        combos(0, size);
    }

    long long yi = 0;
    for (const auto& b : all_b) {
        std::vector<int> outside;
        for (int i = 1; i <= x; ++i)
            if (!std::binary_search(b.begin(), b.end(), i))
                outside.push_back(i);
        std::vector<int> choice(outside.size(), 0);
        while (true) {
            std::vector<int> list = b;
            for (std::size_t j = 0; j < outside.size(); ++j) {
                int base = x + (outside[j] - 1) * 2 * l;
                list.push_back(base + 1 + choice[j]);
            }
            std::sort(list.begin(), list.end());
            out.lists.lists[x + yi] = std::move(list);
            ++yi;
            int pos = static_cast<int>(outside.size()) - 1;
            while (pos >= 0 && ++choice[pos] == 2 * l)
                choice[pos--] = 0;
            if (pos < 0)
                break;
        }
    }
    if (yi != t0v)
        throw falsification_alarm(
            "oddrequest_instance: built " + std::to_string(yi) +
            " special lists, t0 = " + std::to_string(t0v));

    // padding Y-lists: the requested palette itself
    std::vector<int> base_palette(x);
    for (int i = 0; i < x; ++i)
        base_palette[i] = i + 1;
    for (long long j = t0v; j < t; ++j)
        out.lists.lists[x + j] = base_palette;

    return out;
}

namespace {

int pick_not(const std::vector<int>& list, int avoid1, int avoid2 = -1,
             int avoid3 = -1) {
    for (int c : list)
        if (c != avoid1 && c != avoid2 && c != avoid3)
            return c;
    return -1;
}

} // namespace

Coloring k37_single_request_color(const ListAssignment& L, const Request& r) {
    Graph g = generate("kbip:3,7").graph;
    auto report = validate(g, L, &r);
    if (!report.ok())
        throw input_error("k37: invalid instance: " + report.violations.front());
    if (r.size() != 1)
        throw input_error("k37: request domain must be a single vertex");
    for (int v = 0; v < 10; ++v)
        if (L.lists[v].size() != 3)
            throw input_error("k37: all lists must have exactly 3 colors");

    int z = r.entries.front().first;
    int c = r.entries.front().second;
    Coloring f(10, -1);
    f[z] = c;

    if (z < 3) {
        // request on the small side; xa, xb are the other two
        int xa = z == 0 ? 1 : 0;
        int xb = z == 2 ? 1 : 2;
        std::vector<int> common;
        for (int cc : L.lists[xa])
            if (std::binary_search(L.lists[xb].begin(), L.lists[xb].end(), cc))
                common.push_back(cc);
        if (!common.empty()) {
            f[xa] = f[xb] = common.front();
            for (int y = 3; y < 10; ++y) {
                f[y] = pick_not(L.lists[y], c, f[xa]);
                if (f[y] < 0)
                    throw falsification_alarm("k37: greedy ran dry (X common)");
            }
        } else {
            // 9 cross pairs versus at most 7 reduced Y-lists
            int ca = -1, cb = -1;
            for (int a : L.lists[xa]) {
                for (int b : L.lists[xb]) {
                    bool hit = false;
                    for (int y = 3; y < 10 && !hit; ++y) {
                        std::vector<int> reduced;
                        for (int cc : L.lists[y])
                            if (cc != c)
                                reduced.push_back(cc);
                        if (reduced.size() == 2 &&
                            ((reduced[0] == a && reduced[1] == b) ||
                             (reduced[0] == b && reduced[1] == a)))
                            hit = true;
                    }
                    if (!hit) {
                        ca = a;
                        cb = b;
                        break;
                    }
                }
                if (ca >= 0)
                    break;
            }
            if (ca < 0)
                throw falsification_alarm(
                    "k37: no good pair among 9 candidates, contradicting the "
                    "counting step");
            f[xa] = ca;
            f[xb] = cb;
            for (int y = 3; y < 10; ++y) {
                f[y] = pick_not(L.lists[y], c, ca, cb);
                if (f[y] < 0)
                    throw falsification_alarm("k37: empty reduced Y-list");
            }
        }
    } else {
        // request on the big side
        std::vector<std::vector<int>> reduced(3);
        for (int x = 0; x < 3; ++x)
            for (int cc : L.lists[x])
                if (cc != c)
                    reduced[x].push_back(cc);
        int pi = -1, pj = -1, shared = -1;
        for (int i = 0; i < 3 && shared < 0; ++i)
            for (int j = i + 1; j < 3 && shared < 0; ++j)
                for (int cc : reduced[i])
                    if (std::binary_search(reduced[j].begin(),
                                           reduced[j].end(), cc)) {
                        pi = i;
                        pj = j;
                        shared = cc;
                        break;
                    }
        if (shared >= 0) {
            f[pi] = f[pj] = shared;
            int pk = 3 - pi - pj;
            f[pk] = reduced[pk].front();
            for (int y = 3; y < 10; ++y) {
                if (y == z)
                    continue;
                f[y] = pick_not(L.lists[y], shared, f[pk]);
                if (f[y] < 0)
                    throw falsification_alarm("k37: greedy ran dry (Y shared)");
            }
        } else {
            // reduced X-lists pairwise disjoint: >= 8 triples versus 6 other
            // Y-lists
            int ca = -1, cb = -1, cd = -1;
            for (int a : reduced[0]) {
                for (int b : reduced[1]) {
                    for (int d : reduced[2]) {
                        std::set<int> triple{a, b, d};
                        bool hit = false;
                        for (int y = 3; y < 10 && !hit; ++y) {
                            if (y == z)
                                continue;
                            std::set<int> ylist(L.lists[y].begin(),
                                                L.lists[y].end());
                            if (ylist == triple)
                                hit = true;
                        }
                        if (!hit) {
                            ca = a;
                            cb = b;
                            cd = d;
                            break;
                        }
                    }
                    if (ca >= 0)
                        break;
                }
                if (ca >= 0)
                    break;
            }
            if (ca < 0)
                throw falsification_alarm(
                    "k37: no good triple among >= 8 candidates");
            f[0] = ca;
            f[1] = cb;
            f[2] = cd;
            for (int y = 3; y < 10; ++y) {
                if (y == z)
                    continue;
                f[y] = pick_not(L.lists[y], ca, cb, cd);
                if (f[y] < 0)
                    throw falsification_alarm("k37: empty thrice-reduced list");
            }
        }
    }

    if (!is_proper(g, f) || !respects_lists(L, f) || f[z] != c)
        throw falsification_alarm("k37: output failed validation");
    return f;
}

K37Report verify_k37_flexibility(std::uint64_t trials, std::uint64_t seed) {
    K37Report out;
    Graph g = generate("kbip:3,7").graph;
    out.rho = hall_ratio(g);

    // (a) constructive single-request satisfaction on random 3-assignments
    out.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomSource rng = RandomSource::derived(seed, t);
        ListAssignment L = random_k_assignment(10, 3, 6, rng);
        int v = static_cast<int>(rng.below(10));
        int c = L.lists[v][rng.below(3)];
        Request r;
        r.set(v, c);
        try {
            Coloring f = k37_single_request_color(L, r);
            if (f[v] != c)
                ++out.failures;
        } catch (const falsification_alarm&) {
            ++out.failures;
        }
    }

    // (b) the l=1 certificate: satisfy_max = 1 on the triple request, below
    // the ceil(|D| * 1/rho) threshold needed for flexibility at 1/rho
    AdversaryInstance hard = oddrequest_instance(1, 7);
    auto result = satisfy_max(hard.graph, hard.lists, hard.request);
    out.certificate_satisfy_max = result.count;
    Rational inv_rho = out.rho.reciprocal();
    out.flex_threshold = static_cast<int>(
        (inv_rho * Rational(hard.request.size())).ceil());
    out.chi_flex_exceeds_3 =
        out.certificate_satisfy_max < out.flex_threshold;
    return out;
}

} // namespace flexicolor
