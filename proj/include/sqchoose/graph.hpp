#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqchoose {

/// Dense 0-based vertex index.
using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Throws PreconditionError on loops, parallel edges or out-of-range ids.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    int edge_count_ = 0;
};

/// A derived graph together with the id mapping back to its parent.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent;    // new id -> parent id
    std::vector<VertexId> from_parent;  // parent id -> new id, or -1 if dropped
};

/// Subgraph induced on `keep`; new ids follow ascending parent ids.
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Subgraph delete_vertices(const Graph& g, std::span<const VertexId> removed);

/// uv is an edge iff 1 <= dist(u, v) <= 2.
Graph square(const Graph& g);

/// Sorted vertices at distance 1 or 2 from v.
std::vector<VertexId> square_neighbors(const Graph& g, VertexId v);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

int max_degree(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

// ---------------------------------------------------------------------------
// I/O: plain edge-list text (`n m` then `u v` lines, `#` comments) or graph6.

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string to_text(const Graph& g);

Graph parse_graph6(std::string_view encoded);
std::string to_graph6(const Graph& g);

}  // namespace sqchoose
