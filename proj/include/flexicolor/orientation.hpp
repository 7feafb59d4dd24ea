#ifndef FLEXICOLOR_ORIENTATION_HPP
#define FLEXICOLOR_ORIENTATION_HPP

#include "flexicolor/exact.hpp"
#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"

#include <string>
#include <vector>

namespace flexicolor {

struct Orientation {
    std::vector<std::pair<int, int>> directed_edges; // (from, to)
    std::vector<int> out_degree;
};

// Orients a d-degenerate graph so `target` has out-degree 0 and every
// vertex has out-degree at most d: orient along a degeneracy order, then
// reverse d edge-disjoint target-to-auxiliary-sink paths found by
// unit-capacity max-flow.
Orientation sink_orientation(const Graph& g, int d, int target);

// Satisfies a single request on a bipartite graph with (d+1)-lists, where
// d = list size - 1 must cover the degeneracy: fixes the requested color,
// then searches in the reverse-topological order of the sink orientation.
// Existence is guaranteed, so exhaustion raises a falsification alarm.
Coloring single_request_color(const Graph& g, const ListAssignment& L,
                              const Request& r);

bool is_bipartite(const Graph& g);

// "u>v" per line.
std::string serialize_orientation(const Orientation& o);

} // namespace flexicolor

#endif
