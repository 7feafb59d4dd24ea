#ifndef FLEXICOLOR_LISTS_HPP
#define FLEXICOLOR_LISTS_HPP

#include "flexicolor/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flexicolor {

// Per-vertex color lists.  Colors are opaque nonnegative integers, sorted
// ascending and distinct within each list.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    int size() const { return static_cast<int>(lists.size()); }

    // k if every list has exactly k colors, otherwise nothing.
    std::optional<int> uniform_size() const;

    // Sorted union of all lists.
    std::vector<int> palette() const;

    bool contains(int v, int color) const;

    static ListAssignment uniform(int n, std::vector<int> colors);
};

// Partial map vertex -> preferred color, kept sorted by vertex.
struct Request {
    std::vector<std::pair<int, int>> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool empty() const { return entries.empty(); }
    bool has(int v) const;
    int color_of(int v) const; // -1 when absent

    void set(int v, int color);
    std::vector<int> domain() const;
};

// --- validation -------------------------------------------------------------

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Never throws on bad data; every problem becomes one violation entry such
// as "empty-list(3)" or "request-color-not-in-list(2)".
ValidationReport validate(const Graph& g, const ListAssignment& L,
                          const Request* r = nullptr);

// --- text formats -------------------------------------------------------------
// List file: one line per vertex, "v: c1 c2 ... ck".
// Request file: lines "v c".  '#' comments and blank lines allowed.

ListAssignment parse_lists(std::string_view text);
std::string serialize_lists(const ListAssignment& L);
Request parse_request(std::string_view text);
std::string serialize_request(const Request& r);

// --- canonical enumeration ----------------------------------------------------
//
// Two k-assignments are equivalent when one is a color renaming of the
// other; the class is captured by the multiset of color "types" (the set of
// vertices whose list holds the color).  canonical_form sorts the type
// multiset and relabels colors 0,1,2,... in that order, so colors are
// introduced in first-use order scanning vertices 0..n-1 with each list
// ascending.  The enumerator emits exactly the fixed points of
// canonical_form, one per equivalence class.

ListAssignment canonical_form(const ListAssignment& L);

// Applies a color permutation; `perm` maps old color -> new color and must
// cover the palette.
ListAssignment rename_colors(const ListAssignment& L,
                             const std::vector<int>& perm);

// Relabels vertices: result list of vertex sigma[v] is L(v).
ListAssignment permute_vertices(const ListAssignment& L,
                                const std::vector<int>& sigma);

// Calls fn for each canonical k-assignment on n vertices, in a fixed
// deterministic order; returns how many were emitted.  Throws budget_error
// when more than `cap` assignments would be produced.  fn may return false
// to stop early (the count so far is returned).
std::uint64_t for_each_canonical_assignment(
    int n, int k, std::uint64_t cap,
    const std::function<bool(const ListAssignment&)>& fn);

std::uint64_t count_canonical_assignments(int n, int k, std::uint64_t cap);

// Lower-level stream over the type multisets themselves (bit i of a mask =
// vertex i in that color's type), sorted in the canonical order.  The
// ListAssignment stream wraps this one.
std::uint64_t for_each_canonical_types(
    int n, int k, std::uint64_t cap,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn);

ListAssignment assignment_from_types(int n,
                                     const std::vector<std::uint32_t>& types);

} // namespace flexicolor

#endif
