#ifndef FLEXICOLOR_GRAPH_PARAMS_HPP
#define FLEXICOLOR_GRAPH_PARAMS_HPP

#include "flexicolor/graph.hpp"
#include "flexicolor/rational.hpp"

#include <cstdint>
#include <vector>

namespace flexicolor {

// Ordering achieving the exact degeneracy d: position i of `order` has at
// most d neighbors at earlier positions (back_degrees[i] of them).
// following_view() reverses it for the convention where each vertex has at
// most d neighbors later in the ordering.
struct DegeneracyOrder {
    std::vector<int> order;
    std::vector<int> back_degrees;
    std::vector<int> position; // position[v] = index of v in `order`
    int d = 0;

    std::vector<int> following_view() const {
        return std::vector<int>(order.rbegin(), order.rend());
    }
};

DegeneracyOrder degeneracy_order(const Graph& g);

// Exact maximum independent set by branch and bound (branch on a
// maximum-degree vertex, ties to the lowest index).  Intended for n <= ~30.
std::vector<int> max_independent_set(const Graph& g);
int independence_number(const Graph& g);

// Exact chromatic number: clique lower bound, then k-colorability decision
// searches for increasing k.  optimal_coloring returns a chi(g)-coloring.
int chromatic_number(const Graph& g);
std::vector<int> optimal_coloring(const Graph& g);

// alpha(G[S]) for every vertex subset S (bit i = vertex i), by subset
// dynamic programming; guarded for n <= 24.
std::vector<std::uint8_t> independence_table(const Graph& g);

// max over nonempty S of |S| / alpha(G[S]), exact.  Subset dynamic program
// over induced subgraphs; guarded for n <= 24.
Rational hall_ratio(const Graph& g);

// All adjacency-preserving vertex permutations, found by backtracking.
// Intended for small n; used to shard exact searches by symmetry.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

} // namespace flexicolor

#endif
