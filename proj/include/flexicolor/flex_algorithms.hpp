#ifndef FLEXICOLOR_FLEX_ALGORITHMS_HPP
#define FLEXICOLOR_FLEX_ALGORITHMS_HPP

#include "flexicolor/exact.hpp"
#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"
#include "flexicolor/random.hpp"
#include "flexicolor/rational.hpp"

#include <cstdint>
#include <functional>

namespace flexicolor {

// Colors a maximum independent set of G[D] with its requested colors and
// extends greedily.  Requires |L(v)| >= max_degree+1 for every v; satisfies
// at least ceil(|D| / hall_ratio(g)) requests.
Coloring greedy_flexible(const Graph& g, const ListAssignment& L,
                         const Request& r);

// Processes vertices in degeneracy order; at each vertex the first two
// colors unused on earlier neighbors (requested color first) form the
//2-element candidate set, decided by one coin flip.  Requires
// |L(v)| >= degeneracy+2; always proper; satisfies each request with
// probability >= 1/2^(d+1).
Coloring random_degenerate_color(const Graph& g, const ListAssignment& L,
                                 const Request& r, RandomSource& rng);

// Optimally colors G^2, grants requests on the class holding the most of D,
// and completes by exact search from lists pruned of granted colors.
// `s` is the caller's claimed choosability of g; completion failure
// falsifies it.  Requires |L(v)| >= s+1; satisfies >= ceil(|D|/chi(G^2)).
Coloring square_class_color(const Graph& g, const ListAssignment& L,
                            const Request& r, int s);

struct BoundedPaletteResult {
    Coloring coloring;
    bool exhaustive = true;       // exhausted all class assignments?
    std::uint64_t assignments_tried = 0;
    int satisfied = 0;
};

// Assigns each requested color to one class of a fixed optimal proper
// coloring (exhaustively when chi^|r(D)| <= exhaust_limit, else seeded
// sampling), grants matching requests, completes from L(v) - r(D).
// Requires |L(v)| >= s + |r(D)|; the exhaustive mode satisfies
// >= ceil(|D|/chi(g)).
BoundedPaletteResult bounded_palette_color(
    const Graph& g, const ListAssignment& L, const Request& r, int s,
    std::uint64_t exhaust_limit = 1'000'000, std::uint64_t seed = 0);

// Flexible coloring of the Cartesian product g x h (vertex (u,v) at index
// v*|V(g)|+u).  chi(h)-colors h, solves the copies of g holding the most
// requests with `inner`, completes the rest by exact list coloring.
using InnerSolver = std::function<Coloring(
    const Graph&, const ListAssignment&, const Request&)>;
Coloring cartesian_flexible_color(const Graph& g, const Graph& h,
                                  const ListAssignment& L, const Request& r,
                                  const InnerSolver& inner);

struct JoinSplitResult {
    Coloring coloring;
    int retries = 0;           // failed palette splits before success
    int kept_satisfied = 0;    // requests preserved through uncoloring
};

// The join-of-two-copies algorithm: solve the request-richer half, uncolor
// down to l = ceil(n/rho) kept vertices, split the remaining palette into
// two random halves until both sides retain s colors per list, then
// complete each side by exact list coloring.  Input must come from a
// join:spec|spec generator with identical halves.
JoinSplitResult join_split_color(const GeneratedGraph& joined,
                                 const ListAssignment& L, const Request& r,
                                 int s, RandomSource& rng,
                                 int retry_cap = 1000);

// --- closed-form bound evaluators (the only floating-point code) ------------

struct JoinBoundResult {
    long long bound = 0;       // max of the three terms, ceilinged
    long long bound_guarded = 0; // same with ceil(x - 1e-9); differs -> ambiguous
    bool ambiguous = false;
    double entropy_term = 0;   // l + log2(2n-l)/(1-H(1/r))
    double spread_term = 0;    // r(s-1) + l
    long long flex_term = 0;   // m
};

// max{ ceil(l + log2(2n-l)/(1-H(1/r))), ceil(r(s-1)+l), m } with the
// documented +-1e-9 ceiling guard; r_param must exceed 2.
JoinBoundResult join_bound(long long n, long long s, long long m, long long l,
                           double r_param);

struct ConditionResult {
    bool holds = false;
    double lhs = 0;            // may be +inf when term2 overflows
    double margin = 0;         // 1 - lhs
    double term1 = 0;
    double term2 = 0;          // exp(term2_log) when representable
    double term2_log = 0;      // natural log, always finite
    bool near_boundary = false; // |margin| < 1e-6: re-check at high precision
};

// (n/2)(1-p)^(k-2) + n p^(k-1-n/2) (p + (k-n/2)(1-p)) <= 1
// for even n, p in (0,1), k > max(2, n/2).
ConditionResult joinpath_condition(long long n, double p, long long k);

// (2l+1)(1-p)^k + (2l)^l 2^(2l+1) p^k < 1, evaluated in log space (the
// second term overflows naively).
ConditionResult oddrequest_condition(long long l, double p, long long k);

} // namespace flexicolor

#endif
