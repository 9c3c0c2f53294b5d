#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nkg {

using Vertex = int;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exponential scan or enumeration would exceed its configured limit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Throws GraphError on out-of-range endpoints, loops or duplicate edges.
    Graph(int order, const std::vector<Edge>& edges);

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges sorted lexicographically; an edge's position is its index.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex a, Vertex b) const;
    /// Index of edge {a,b} in edges(), or -1.
    int edge_index(Vertex a, Vertex b) const;

    int min_degree() const;
    bool is_connected() const;
    bool is_complete() const { return edge_count() == static_cast<std::size_t>(order_) * (order_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> edge_id_;  // order*order, -1 when absent
};

/// Sorted set of distinct vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    /// Throws GraphError if a member is out of range for g.
    void check_within(const Graph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Set of pairwise disjoint edges.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    VertexSet covered() const;
    /// Pairwise disjoint and every edge present in g.
    bool is_valid_in(const Graph& g) const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

std::string to_string(const VertexSet& s);   // "{0, 2}"
std::string to_string(const Matching& m);    // "{0-1, 3-4}"

// ---- ingestion -------------------------------------------------------------

enum class GraphFormat { graph6, edge_list, automatic };

GraphFormat parse_graph_format(std::string_view name);

/// Throws GraphError on malformed input.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);
Graph parse_graph6(std::string_view text);
/// Lines "u v", 0-based, '#' comments. An optional "n <order>" line fixes the order;
/// otherwise the order is one more than the largest label.
Graph parse_edge_list(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

// ---- generators ------------------------------------------------------------

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph icosahedron();
Graph petersen();
/// G(n, p) with a portable bit-exact generator; identical output on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);
/// A random connected graph: a random spanning tree plus G(n, p) edges.
Graph random_connected_graph(int n, double p, std::uint64_t seed);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Parses a family description: "complete 6", "cycle 6", "path 4", "complete-bipartite 3 3",
/// "icosahedron", "petersen", "random 10 0.5 42".
Graph generate(std::string_view description);

// ---- algorithms ------------------------------------------------------------

/// Maximum cardinality matching (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

/// kappa(G); order-1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph& g);

/// Proper 2-colouring, when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Largest induced bipartite subgraph, by exhaustive subset scan. Requires order <= cap.
int max_induced_bipartite_order(const Graph& g, int cap = 24);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new index -> original label
};

/// G - S, with the remapping back to original labels.
InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed);

}  // namespace nkg
