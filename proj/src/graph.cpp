#include "flexicolor/graph.hpp"
#include "flexicolor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flexicolor {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw input_error("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("graph: edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range");
        if (u == v)
            throw input_error("graph: self-loop at " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw input_error("graph: duplicate edge at vertex " + std::to_string(v));
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> where(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        where[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int v : adj_[u])
            if (u < v && where[v] >= 0 && where[u] >= 0)
                es.emplace_back(where[u], where[v]);
    return from_edges(static_cast<int>(verts.size()), es);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                es.emplace_back(u, v);
    return from_edges(n_, es);
}

std::vector<std::string> Graph::check_invariants() const {
    std::vector<std::string> bad;
    int half_edges = 0;
    for (int v = 0; v < n_; ++v) {
        const auto& nb = adj_[v];
        if (!std::is_sorted(nb.begin(), nb.end()))
            bad.push_back("unsorted-neighbors(" + std::to_string(v) + ")");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            bad.push_back("duplicate-edge(" + std::to_string(v) + ")");
        for (int u : nb) {
            if (u == v)
                bad.push_back("self-loop(" + std::to_string(v) + ")");
            else if (u < 0 || u >= n_)
                bad.push_back("neighbor-out-of-range(" + std::to_string(v) + ")");
            else if (!has_edge(u, v))
                bad.push_back("asymmetric-adjacency(" + std::to_string(v) + "," +
                              std::to_string(u) + ")");
        }
        half_edges += degree(v);
    }
    if (half_edges != 2 * m_)
        bad.push_back("edge-count-mismatch");
    return bad;
}

// --- text format -------------------------------------------------------------

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    return line;
}

} // namespace

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (!(ls >> n >> m)) {
                ls.clear();
                std::string tok;
                if (!(ls >> tok))
                    continue; // blank or comment-only line before the header
                throw input_error("graph: expected \"n m\" at line " +
                                  std::to_string(lineno));
            }
            if (n < 0 || m < 0)
                throw input_error("graph: negative header at line " +
                                  std::to_string(lineno));
            continue;
        }
        long long u, v;
        if (!(ls >> u)) {
            continue;
        }
        if (!(ls >> v))
            throw input_error("graph: expected \"u v\" at line " +
                              std::to_string(lineno));
        if (!(u < v))
            throw input_error("graph: edges must satisfy u < v at line " +
                              std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw input_error("graph: missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw input_error("graph: header announces " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// --- generators ---------------------------------------------------------------

namespace {

struct SpecParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw input_error("generator spec: " + what + " at offset " +
                          std::to_string(pos) + " in '" + std::string(text) + "'");
    }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalpha(static_cast<unsigned char>(text[pos])) != 0))
            ++pos;
        if (pos == start)
            fail("expected generator name");
        return std::string(text.substr(start, pos - start));
    }

    long long number() {
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])) != 0)
            ++pos;
        if (pos == start)
            fail("expected number");
        long long value = 0;
        auto sub = text.substr(start, pos - start);
        std::from_chars(sub.data(), sub.data() + sub.size(), value);
        return value;
    }

    GeneratedGraph parse_spec();
    GeneratedGraph parse_operand();
};

GeneratedGraph make_path(long long n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return {Graph::from_edges(static_cast<int>(n), es), {}};
}

GeneratedGraph make_grid(long long rows, long long cols) {
    // vertex (i,j), 1-based, maps to (j-1)*rows + (i-1)
    auto id = [rows](long long i, long long j) {
        return static_cast<int>((j - 1) * rows + (i - 1));
    };
    std::vector<std::pair<int, int>> es;
    for (long long j = 1; j <= cols; ++j)
        for (long long i = 1; i <= rows; ++i) {
            if (i < rows)
                es.emplace_back(id(i, j), id(i + 1, j));
            if (j < cols)
                es.emplace_back(id(i, j), id(i, j + 1));
        }
    return {Graph::from_edges(static_cast<int>(rows * cols), es), {}};
}

GeneratedGraph SpecParser::parse_operand() {
    if (eat('(')) {
        GeneratedGraph inner = parse_spec();
        if (!eat(')'))
            fail("expected ')'");
        return inner;
    }
    return parse_spec();
}

GeneratedGraph SpecParser::parse_spec() {
    std::size_t start = pos;
    std::string name = ident();
    GeneratedGraph out;
    GeneratorInfo& info = out.info;

    auto require_colon = [&] {
        if (!eat(':'))
            fail("expected ':' after '" + name + "'");
    };

    if (name == "path" || name == "cycle" || name == "complete" ||
        name == "ladder" || name == "ladderminus") {
        require_colon();
        long long n = number();
        if (n < 1)
            fail("size must be >= 1");
        info.params = {n};
        if (name == "path") {
            info.kind = GenKind::path;
            out.graph = make_path(n).graph;
        } else if (name == "cycle") {
            info.kind = GenKind::cycle;
            if (n < 3)
                fail("cycle needs n >= 3 to stay simple");
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i + 1 < n; ++i)
                es.emplace_back(i, i + 1);
            es.emplace_back(0, static_cast<int>(n - 1));
            out.graph = Graph::from_edges(static_cast<int>(n), es);
        } else if (name == "complete") {
            info.kind = GenKind::complete;
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    es.emplace_back(i, j);
            out.graph = Graph::from_edges(static_cast<int>(n), es);
        } else if (name == "ladder") {
            info.kind = GenKind::ladder;
            out.graph = make_grid(2, n).graph;
        } else { // ladderminus: grid:2,n without its corner vertex v_{2n}
            info.kind = GenKind::ladderminus;
            Graph full = make_grid(2, n).graph;
            std::vector<int> keep;
            for (int v = 0; v + 1 < full.vertex_count(); ++v)
                keep.push_back(v);
            out.graph = full.induced(keep);
        }
    } else if (name == "kbip" || name == "grid") {
        require_colon();
        long long a = number();
        if (!eat(','))
            fail("expected ','");
        long long b = number();
        if (a < 1 || b < 1)
            fail("sizes must be >= 1");
        info.params = {a, b};
        if (name == "kbip") {
            info.kind = GenKind::kbip;
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    es.emplace_back(i, static_cast<int>(a) + j);
            out.graph = Graph::from_edges(static_cast<int>(a + b), es);
        } else {
            info.kind = GenKind::grid;
            out.graph = make_grid(a, b).graph;
        }
    } else if (name == "join" || name == "cartesian") {
        require_colon();
        GeneratedGraph left = parse_operand();
        if (!eat('|'))
            fail("expected '|' between operands");
        GeneratedGraph right = parse_operand();
        info.kind = (name == "join") ? GenKind::join : GenKind::cartesian;
        info.children = {left.info.spec, right.info.spec};
        info.left_size = left.graph.vertex_count();
        out.graph = (name == "join")
                        ? join_graphs(left.graph, right.graph)
                        : cartesian_product(left.graph, right.graph);
    } else {
        fail("unknown generator '" + name + "'");
    }

    info.spec = std::string(text.substr(start, pos - start));
    return out;
}

} // namespace

GeneratedGraph generate(std::string_view spec) {
    SpecParser parser{spec};
    GeneratedGraph out = parser.parse_spec();
    if (parser.pos != spec.size())
        throw input_error("generator spec: trailing garbage '" +
                          std::string(spec.substr(parser.pos)) + "'");
    out.info.spec = std::string(spec);
    return out;
}

// --- operators -----------------------------------------------------------------

Graph square_graph(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    std::vector<char> mark(n, 0);
    for (int v = 0; v < n; ++v) {
        // everything at distance 1 or 2 from v
        for (int u : g.neighbors(v)) {
            if (u > v)
                mark[u] = 1;
            for (int w : g.neighbors(u))
                if (w > v)
                    mark[w] = 1;
        }
        for (int u = v + 1; u < n; ++u)
            if (mark[u]) {
                es.emplace_back(v, u);
                mark[u] = 0;
            }
    }
    return Graph::from_edges(n, es);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    auto id = [ng](int u, int v) { return v * ng + u; };
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < nh; ++v)
        for (auto [a, b] : g.edges())
            es.emplace_back(id(a, v), id(b, v));
    for (int u = 0; u < ng; ++u)
        for (auto [a, b] : h.edges())
            es.emplace_back(std::min(id(u, a), id(u, b)),
                            std::max(id(u, a), id(u, b)));
    return Graph::from_edges(ng * nh, es);
}

Graph join_graphs(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto [a, b] : h.edges())
        es.emplace_back(ng + a, ng + b);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v)
            es.emplace_back(u, ng + v);
    return Graph::from_edges(ng + nh, es);
}

} // namespace flexicolor
