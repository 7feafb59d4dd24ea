#ifndef FLEXICOLOR_GRAPH_HPP
#define FLEXICOLOR_GRAPH_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flexicolor {

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted ascending; adjacency is symmetric with no
// self-loops or duplicate edges (enforced at construction).
class Graph {
public:
    Graph() : n_(0), m_(0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `verts` (which need not be sorted); vertex i of
    // the result corresponds to verts[i].
    Graph induced(const std::vector<int>& verts) const;

    Graph complement() const;

    // Re-checks the structural invariants; returns a list of violations
    // (empty when the graph is well formed).
    std::vector<std::string> check_invariants() const;

private:
    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
};

// --- text format -----------------------------------------------------------
// Line 1: "n m", then m lines "u v" with 0 <= u < v < n.  '#' starts a
// comment; blank lines are ignored.

Graph parse_graph_text(std::string_view text);
std::string serialize_graph_text(const Graph& g);

// --- generators -------------------------------------------------------------
// Descriptors: path:n, cycle:n (n>=3), complete:n, kbip:a,b, grid:n,m,
// ladder:n (= grid:2,n), ladderminus:n (grid:2,n minus its last vertex),
// join:spec1|spec2, cartesian:spec1|spec2.  Composite arguments may be
// parenthesized, e.g. join:(join:path:2|path:2)|path:3.
//
// Vertex numbering is part of the contract:
//   grid:n,m      vertex (i,j), 1<=i<=n rows, 1<=j<=m cols -> (j-1)*n+(i-1)
//   kbip:a,b      X = 0..a-1, Y = a..a+b-1
//   join          left part first, then right part
//   cartesian     (u,v) -> v*|V(left)| + u  (right-coordinate-major)

enum class GenKind {
    path, cycle, complete, kbip, grid, ladder, ladderminus, join, cartesian
};

struct GeneratorInfo {
    std::string spec;              // normalized descriptor
    GenKind kind;
    std::vector<long long> params; // sizes for the leaf generators
    std::vector<std::string> children; // subspecs for join/cartesian
    int left_size = 0;             // vertex count of the left operand
};

struct GeneratedGraph {
    Graph graph;
    GeneratorInfo info;
};

GeneratedGraph generate(std::string_view spec);

// --- operators ---------------------------------------------------------------

// G^2: same vertices, edges between pairs at distance 1 or 2.
Graph square_graph(const Graph& g);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph join_graphs(const Graph& g, const Graph& h);

} // namespace flexicolor

#endif
