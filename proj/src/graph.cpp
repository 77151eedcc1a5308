#include "sqchoose/graph.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace sqchoose {

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges)
{
    if (vertex_count < 0) {
        throw PreconditionError("negative vertex count");
    }
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) +
                                    " out of range");
        }
        if (u == v) {
            throw PreconditionError("loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
            throw PreconditionError("parallel edge at vertex " + std::to_string(v));
        }
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep)
{
    Subgraph sub;
    sub.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        sub.from_parent[v] = static_cast<VertexId>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (VertexId v : sorted) {
        for (VertexId w : g.neighbors(v)) {
            if (v < w && sub.from_parent[w] >= 0) {
                edges.emplace_back(sub.from_parent[v], sub.from_parent[w]);
            }
        }
    }
    sub.graph = Graph::from_edges(static_cast<int>(sorted.size()), edges);
    return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const VertexId> removed)
{
    std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : removed) gone[v] = 1;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!gone[v]) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

std::vector<VertexId> square_neighbors(const Graph& g, VertexId v)
{
    std::vector<VertexId> out;
    for (VertexId w : g.neighbors(v)) {
        out.push_back(w);
        for (VertexId x : g.neighbors(w)) {
            if (x != v) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph square(const Graph& g)
{
    std::vector<Edge> edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w : square_neighbors(g, v)) {
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<VertexId> parent(static_cast<std::size_t>(n));
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop();
            if (2 * dist[u] + 1 >= best) break;
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::vector<VertexId>> components(const Graph& g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (VertexId w : g.neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool looks_like_graph6(const std::string& line)
{
    if (line.empty()) return false;
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

Graph parse_graph(std::istream& in)
{
    std::string line;
    std::string header;
    while (std::getline(in, line)) {
        if (line.rfind(graph6_header, 0) == 0) {
            return parse_graph6(strip_comment(line.substr(graph6_header.size())));
        }
        header = strip_comment(line);
        if (!header.empty()) break;
    }
    if (header.empty()) {
        throw PreconditionError("empty graph file");
    }
    std::istringstream head(header);
    long n = -1;
    long m = -1;
    std::string extra;
    if (!(head >> n >> m) || (head >> extra)) {
        if (looks_like_graph6(header)) return parse_graph6(header);
        throw PreconditionError("expected 'n m' header, got '" + header + "'");
    }
    if (n < 0 || m < 0) {
        throw PreconditionError("negative counts in header");
    }
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto body = strip_comment(line);
        if (body.empty()) continue;
        std::istringstream row(body);
        long u = 0;
        long v = 0;
        if (!(row >> u >> v) || (row >> extra)) {
            throw PreconditionError("bad edge line '" + body + "'");
        }
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (static_cast<long>(edges.size()) != m) {
        throw PreconditionError("header promises " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open " + path);
    }
    return parse_graph(in);
}

std::string to_text(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view s)
{
    if (s.rfind(graph6_header, 0) == 0) s.remove_prefix(graph6_header.size());
    std::size_t pos = 0;
    auto next = [&]() -> long {
        if (pos >= s.size()) throw PreconditionError("truncated graph6 string");
        long c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw PreconditionError("invalid graph6 character");
        return c - 63;
    };
    long n = next();
    if (n == 63) {
        n = next();
        int groups = 3;
        if (n == 63) {
            n = 0;
            groups = 6;
        } else {
            groups = 2;
        }
        for (int i = 0; i < groups; ++i) n = (n << 6) | next();
    }
    std::vector<Edge> edges;
    long bit = 0;
    long chunk = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i) {
            if (bit % 6 == 0) chunk = next();
            bool set = (chunk >> (5 - bit % 6)) & 1;
            ++bit;
            if (set) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    if (pos != s.size()) throw PreconditionError("trailing data after graph6 string");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g)
{
    std::string out;
    const long n = g.vertex_count();
    auto put = [&](long v) { out.push_back(static_cast<char>(v + 63)); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        put(63);
        for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
    } else {
        put(63);
        put(63);
        for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
    }
    long bit = 0;
    long chunk = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1 : 0);
            if (++bit % 6 == 0) {
                put(chunk);
                chunk = 0;
            }
        }
    }
    if (bit % 6 != 0) put(chunk << (6 - bit % 6));
    return out;
}

}  // namespace sqchoose
