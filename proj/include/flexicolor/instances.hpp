#ifndef FLEXICOLOR_INSTANCES_HPP
#define FLEXICOLOR_INSTANCES_HPP

#include "flexicolor/bignat.hpp"
#include "flexicolor/exact.hpp"
#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"
#include "flexicolor/rational.hpp"

#include <cstdint>

namespace flexicolor {

// sum_{i=0..l} C(2l+1, 2l+1-i) * (2l)^i, exactly.
BigNat t0_value(int l);

struct AdversaryInstance {
    Graph graph;            // K_{2l+1, t}, X = 0..2l, Y = 2l+1..2l+t
    ListAssignment lists;   // (2l+1)-assignment
    Request request;        // r(x_i) = i on all of X (1-based colors)
    int x_size = 0;
    long long y_size = 0;
};

// The hard complete-bipartite instance: no proper coloring satisfies half
// of the X-side requests.  Requires t >= t0_value(l); sized for l <= 2.
AdversaryInstance oddrequest_instance(int l, long long t);

// Constructive single-request solver on K_{3,7} with 3-lists (canonical
// numbering, X = 0..2, Y = 3..9): case analysis on which side holds the
// request, with greedy completions.  Guaranteed to succeed; an exhausted
// case raises a falsification alarm.
Coloring k37_single_request_color(const ListAssignment& L, const Request& r);

struct K37Report {
    Rational rho;                   // hall ratio of K_{3,7}
    int certificate_satisfy_max = 0; // exact max on the l=1 instance
    int flex_threshold = 0;          // ceil(|D| / rho) the certificate misses
    bool chi_flex_exceeds_3 = false;
    std::uint64_t trials = 0;        // part (a) sampled single requests
    std::uint64_t failures = 0;
};

// Fixed experiment: (a) sampled random 3-assignments with single requests
// all satisfied constructively; (b) the l=1 certificate shows satisfy_max
// = 1 < ceil(3/rho-threshold), so flexibility at 1/rho fails at k=3.
K37Report verify_k37_flexibility(std::uint64_t trials = 1000,
                                 std::uint64_t seed = 0);

} // namespace flexicolor

#endif
