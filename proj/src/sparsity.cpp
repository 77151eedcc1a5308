#include "sqchoose/sparsity.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

namespace sqchoose {

namespace {

/// Dinic max-flow on a small dense-id network.
class FlowNetwork {
public:
    static constexpr std::int64_t infinity = std::numeric_limits<std::int64_t>::max() / 4;

    explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_edge(int from, int to, std::int64_t capacity)
    {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t max_flow(int source, int sink)
    {
        std::int64_t total = 0;
        while (build_levels(source, sink)) {
            cursor_ = head_;
            while (std::int64_t pushed = augment(source, sink, infinity)) total += pushed;
        }
        return total;
    }

    /// Nodes that can still reach `sink` in the residual network.
    std::vector<char> reaches(int sink) const
    {
        std::vector<char> mark(head_.size(), 0);
        std::vector<int> stack{sink};
        mark[sink] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                // arc a is v->u; its reverse u->v has residual arcs_[a^1].cap
                int u = arcs_[a].to;
                if (!mark[u] && arcs_[a ^ 1].cap > 0) {
                    mark[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        return mark;
    }

    /// Nodes reachable from `source` in the residual network.
    std::vector<char> reachable(int source) const
    {
        std::vector<char> mark(head_.size(), 0);
        std::vector<int> stack{source};
        mark[source] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (!mark[arcs_[a].to] && arcs_[a].cap > 0) {
                    mark[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return mark;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool build_levels(int source, int sink)
    {
        level_.assign(head_.size(), -1);
        level_[source] = 0;
        std::queue<int> queue;
        queue.push(source);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    queue.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    std::int64_t augment(int v, int sink, std::int64_t limit)
    {
        if (v == sink) return limit;
        for (int& a = cursor_[v]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
            if (std::int64_t got = augment(arc.to, sink, std::min(limit, arc.cap))) {
                arc.cap -= got;
                arcs_[a ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> cursor_;
    std::vector<int> level_;
    std::vector<Arc> arcs_;
};

/// Max-closure formulation of max_S (2q|E(S)| - p|S|). Node layout: source,
/// sink, one node per edge, one node per vertex.
struct ClosureProblem {
    const Graph& g;
    std::vector<Edge> edges;

    explicit ClosureProblem(const Graph& graph) : g(graph), edges(graph.edges()) {}

    int vertex_node(VertexId v) const { return 2 + static_cast<int>(edges.size()) + v; }

    FlowNetwork build(const Rational& density, std::optional<VertexId> forced) const
    {
        const std::int64_t p = density.numerator();
        const std::int64_t q = density.denominator();
        FlowNetwork net(2 + static_cast<int>(edges.size()) + g.vertex_count());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int node = 2 + static_cast<int>(i);
            net.add_edge(0, node, 2 * q);
            net.add_edge(node, vertex_node(edges[i].first), FlowNetwork::infinity);
            net.add_edge(node, vertex_node(edges[i].second), FlowNetwork::infinity);
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) net.add_edge(vertex_node(v), 1, p);
        if (forced) net.add_edge(0, vertex_node(*forced), FlowNetwork::infinity);
        return net;
    }

    /// Largest maximizer of 2|E(S)| - density*|S|.
    std::vector<VertexId> maximal_optimum(const Rational& density) const
    {
        FlowNetwork net = build(density, std::nullopt);
        net.max_flow(0, 1);
        auto to_sink = net.reaches(1);
        std::vector<VertexId> out;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!to_sink[vertex_node(v)]) out.push_back(v);
        }
        return out;
    }

    /// Smallest set containing v maximizing 2|E(S)| - density*|S|.
    std::vector<VertexId> minimal_optimum_with(const Rational& density, VertexId v) const
    {
        FlowNetwork net = build(density, v);
        net.max_flow(0, 1);
        auto from_source = net.reachable(0);
        std::vector<VertexId> out;
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            if (from_source[vertex_node(w)]) out.push_back(w);
        }
        return out;
    }
};

std::int64_t induced_edges(const Graph& g, std::span<const VertexId> vertices)
{
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : vertices) in[v] = 1;
    std::int64_t count = 0;
    for (VertexId v : vertices) {
        for (VertexId w : g.neighbors(v)) {
            if (v < w && in[w]) ++count;
        }
    }
    return count;
}

/// Returns mad and the union of densest sets.
MadResult dinkelbach(const Graph& g, const ClosureProblem& problem)
{
    if (g.vertex_count() == 0) {
        throw PreconditionError("empty graph has undefined mad");
    }
    std::vector<VertexId> all(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
    Rational density = induced_density(g, all);
    std::vector<VertexId> best = all;
    for (;;) {
        auto candidate = problem.maximal_optimum(density);
        if (candidate.empty()) break;
        Rational d = induced_density(g, candidate);
        if (d <= density) {
            // profit zero: candidate is the union of all densest sets
            if (d == density) best = std::move(candidate);
            break;
        }
        density = d;
        best = std::move(candidate);
    }
    if (density == Rational(0)) best = {0};
    return {density, best};
}

}  // namespace

Rational induced_density(const Graph& g, std::span<const VertexId> vertices)
{
    if (vertices.empty()) return Rational(0);
    return Rational(2 * induced_edges(g, vertices), static_cast<std::int64_t>(vertices.size()));
}

MadResult mad_with_maximal_witness(const Graph& g)
{
    ClosureProblem problem(g);
    return dinkelbach(g, problem);
}

MadResult mad_exact(const Graph& g)
{
    ClosureProblem problem(g);
    MadResult result = dinkelbach(g, problem);
    if (result.value == Rational(0)) return result;

    std::vector<VertexId> best = result.witness;
    for (VertexId v : result.witness) {
        auto candidate = problem.minimal_optimum_with(result.value, v);
        if (induced_density(g, candidate) != result.value) continue;
        if (candidate.size() < best.size() || (candidate.size() == best.size() && candidate < best)) {
            best = std::move(candidate);
        }
    }
    result.witness = std::move(best);
    return result;
}

Fact1Verdict check_fact1(const Graph& g, const RotationSystem& embedding)
{
    faces_of(g, embedding);
    Fact1Verdict verdict;
    verdict.girth = girth(g);
    verdict.mad = mad_with_maximal_witness(g).value;
    if (verdict.girth) {
        const std::int64_t gamma = *verdict.girth;
        verdict.bound = Rational(2 * gamma, gamma - 2);
        verdict.holds = verdict.mad < *verdict.bound;
    }
    return verdict;
}

std::optional<LemmaProfile> profile_for(const Graph& g, const ProfileTable& table)
{
    if (max_degree(g) > 4) {
        throw PreconditionError("theorem hypothesis violated: maximum degree " +
                                std::to_string(max_degree(g)) + " exceeds 4");
    }
    if (g.vertex_count() == 0) return table.route(Rational(0));
    return table.route(mad_with_maximal_witness(g).value);
}

}  // namespace sqchoose
