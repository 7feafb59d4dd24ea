#ifndef FLEXICOLOR_EXACT_HPP
#define FLEXICOLOR_EXACT_HPP

#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"
#include "flexicolor/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace flexicolor {

// Total vertex -> color map.  Properness and list membership are checkable
// predicates, never assumed.
using Coloring = std::vector<int>;

bool is_proper(const Graph& g, const Coloring& f);
bool respects_lists(const ListAssignment& L, const Coloring& f);
int count_satisfied(const Request& r, const Coloring& f);

// Hard caps for the exhaustive engines.  Exceeding one raises budget_error
// with the exact count; nothing is silently truncated.
struct Budget {
    std::uint64_t max_assignments = 20'000'000;
    std::uint64_t max_search_nodes = 20'000'000'000ULL;
};

struct SatisfyResult {
    int count = -1;                   // -1: no proper L-coloring at all
    std::optional<Coloring> witness;  // attains `count` when count >= 0
};

// Deterministic backtracking search for a proper L-coloring
// (most-constrained vertex first, degeneracy position as tie-break).
std::optional<Coloring> find_proper_coloring(const Graph& g,
                                             const ListAssignment& L);

// Exact maximum, over proper L-colorings, of the number of satisfied
// requests; -1 if no proper L-coloring exists.
SatisfyResult satisfy_max(const Graph& g, const ListAssignment& L,
                          const Request& r);

// Like satisfy_max, but may stop early once `target` satisfied requests are
// reached (the returned count is then only a witness that count >= target;
// below target it is exact).
SatisfyResult satisfy_at_least(const Graph& g, const ListAssignment& L,
                               const Request& r, int target);

// min over requests r of satisfy_max / |D| as an exact Rational; 0/1 when
// some request is fully blocked, -1/1 when L is not colorable at all.
Rational flex_value(const Graph& g, const ListAssignment& L);

struct FlexReport {
    Rational value = Rational(1);
    std::optional<ListAssignment> witness_assignment;
    std::optional<Request> witness_request;
    std::optional<Coloring> witness_coloring;
    bool uncolorable_witness = false; // some k-assignment had no coloring
    std::uint64_t assignments_checked = 0;
};

// true iff min over canonical k-assignments of flex_value >= eps; the
// report carries the minimizing witnesses (on failure) or the exact worst
// value found (on success).
std::pair<bool, FlexReport> is_flexible(const Graph& g, int k, Rational eps,
                                        const Budget& budget = {});

// Exact epsilon_G(k): min over canonical k-assignments of flex_value, with
// uncolorable assignments mapped to 0 and flagged.
FlexReport epsilon_of_report(const Graph& g, int k, const Budget& budget = {});
Rational epsilon_of(const Graph& g, int k, const Budget& budget = {});

// Least k such that every canonical k-assignment is colorable.
int list_chromatic_number(const Graph& g, const Budget& budget = {});

// Least k such that every canonical k-assignment admits k pairwise
// vertex-disjoint proper colorings.
int list_packing_number(const Graph& g, const Budget& budget = {});

// Search for a proper L-packing of size k (pairwise vertex-disjoint).
std::optional<std::vector<Coloring>> find_packing(const Graph& g,
                                                  const ListAssignment& L,
                                                  int k,
                                                  const Budget& budget = {});

// Smallest k with is_flexible(g, k, 1/hall_ratio(g)); searched from the
// list chromatic number up to max_degree+1.
int chi_flex(const Graph& g, const Budget& budget = {});

} // namespace flexicolor

#endif
