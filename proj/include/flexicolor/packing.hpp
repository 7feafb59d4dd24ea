#ifndef FLEXICOLOR_PACKING_HPP
#define FLEXICOLOR_PACKING_HPP

#include "flexicolor/exact.hpp"
#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flexicolor {

struct FamilyViolation {
    std::string what; // "improper-member", "disjointness", "balance"
    int member = -1;
    int vertex = -1;
};

struct FamilyReport {
    bool proper_each = false;
    bool vertex_disjoint = false;
    bool balanced = false;
    int balance_multiplicity = 0; // m with |family| = m * k when balanced
    std::vector<FamilyViolation> violations; // first violation per failed flag
};

// Checks the requested flags exhaustively; verification is the result, so
// nothing throws on failure.
FamilyReport verify_family(const Graph& g, const ListAssignment& L,
                           const std::vector<Coloring>& members,
                           bool check_proper, bool check_disjoint,
                           bool check_balanced);

// Two pairwise vertex-disjoint proper colorings of a path from 2-lists
// (always possible on paths); the input graph must be the canonical path
// 0-1-...-(n-1).
std::vector<Coloring> path_two_packing(const Graph& path,
                                       const ListAssignment& two_lists);

// The balanced family of 3*2^(cols-1) proper colorings of the rows x cols
// grid from 3-lists: every color of every list is used by exactly one third
// of the members.  Built by column induction: one greedy coloring plus a
// residual path packing for the first column, then two packing extensions
// per member and column, pruning the image of the previous column's color
// under a bijection that fixes common colors.
std::vector<Coloring> grid_balanced_family(int rows, int cols,
                                           const ListAssignment& L);

// Pigeonhole selector: the member satisfying the most requests; requires a
// verified balanced family and guarantees ceil(|D|/k) satisfied.
Coloring best_of_family(const Graph& g, const ListAssignment& L,
                        const std::vector<Coloring>& family,
                        const Request& r);

struct LadderStats {
    int alarms = 0;          // case-analysis gaps hit (each logged)
    bool oracle_fallback = false;
};

// Flexible coloring of the 2 x cols ladder (or the ladder missing its last
// corner) from 3-lists: recursion on the two graph families with exact
// solves at the small bases; satisfies >= ceil(|D|/2).  Any reconstructed
// case that fails its re-verification is answered by the exact engine and
// counted in stats.
Coloring ladder_flexible_color(bool minus_corner, int cols,
                               const ListAssignment& L, const Request& r,
                               LadderStats* stats = nullptr);

// Families as JSON arrays of per-vertex color arrays.
std::string serialize_family_json(const std::vector<Coloring>& members);
std::vector<Coloring> parse_family_json(std::string_view text);

} // namespace flexicolor

#endif
