#include "sqchoose/structure.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace sqchoose {

ThreadDecomposition enumerate_threads(const Graph& g)
{
    const int n = g.vertex_count();
    ThreadDecomposition out;
    out.thread_of.assign(static_cast<std::size_t>(n), -1);
    for (VertexId a = 0; a < n; ++a) {
        if (g.degree(a) == 2) continue;
        for (VertexId start : g.neighbors(a)) {
            if (g.degree(start) != 2 || out.thread_of[start] >= 0) continue;
            Thread t;
            t.first = a;
            VertexId prev = a;
            VertexId cur = start;
            const int index = static_cast<int>(out.threads.size());
            while (g.degree(cur) == 2) {
                out.thread_of[cur] = index;
                t.interior.push_back(cur);
                auto nb = g.neighbors(cur);
                VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            t.last = cur;
            out.threads.push_back(std::move(t));
        }
    }
    for (VertexId s = 0; s < n; ++s) {
        if (g.degree(s) != 2 || out.thread_of[s] != -1) continue;
        // every vertex of this component has degree 2; walk the cycle
        std::vector<VertexId> cycle{s};
        out.thread_of[s] = -2;
        VertexId prev = s;
        VertexId cur = g.neighbors(s)[0];
        while (cur != s) {
            cycle.push_back(cur);
            out.thread_of[cur] = -2;
            auto nb = g.neighbors(cur);
            VertexId next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        out.degenerate.push_back(std::move(cycle));
    }
    for (auto& t : out.thread_of) {
        if (t == -2) t = -1;
    }
    return out;
}

std::vector<VertexId> orient_pseudoforest(int vertex_count, const std::vector<Edge>& edges)
{
    const auto n = static_cast<std::size_t>(vertex_count);
    std::vector<std::vector<int>> incident(n);
    std::vector<int> degree(n, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        incident[a].push_back(static_cast<int>(e));
        ++degree[a];
        if (a != b) incident[b].push_back(static_cast<int>(e));
        ++degree[b];
    }
    std::vector<VertexId> tail(edges.size(), -1);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < vertex_count; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        VertexId v = leaves.top();
        leaves.pop();
        if (degree[v] != 1) continue;
        for (int e : incident[v]) {
            if (tail[e] >= 0) continue;
            tail[e] = v;
            auto [a, b] = edges[e];
            VertexId other = a == v ? b : a;
            --degree[v];
            --degree[other];
            if (degree[other] == 1) leaves.push(other);
            break;
        }
    }
    for (VertexId v = 0; v < vertex_count; ++v) {
        if (degree[v] > 2) {
            throw InvariantError("reducible configuration missed: sponsorship graph component at vertex " +
                                 std::to_string(v) + " has more edges than vertices");
        }
    }
    // What is left is a disjoint union of cycles; orient each one around.
    for (VertexId s = 0; s < vertex_count; ++s) {
        if (degree[s] == 0) continue;
        VertexId cur = s;
        do {
            int chosen = -1;
            for (int e : incident[cur]) {
                if (tail[e] < 0) {
                    chosen = e;
                    break;
                }
            }
            tail[chosen] = cur;
            degree[cur] -= edges[chosen].first == edges[chosen].second ? 2 : 1;
            auto [a, b] = edges[chosen];
            VertexId next = a == cur ? b : a;
            if (next != cur) --degree[next];
            cur = next;
        } while (cur != s);
    }
    return tail;
}

namespace {

const char* const roman[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

/// A cycle in a multigraph: vertices[i] --edges[i]-- vertices[i+1 mod k].
struct MultiCycle {
    std::vector<VertexId> vertices;
    std::vector<int> edges;
};

struct Multigraph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    std::vector<std::vector<std::pair<VertexId, int>>> adjacency() const
    {
        std::vector<std::vector<std::pair<VertexId, int>>> adj(static_cast<std::size_t>(vertex_count));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            adj[a].emplace_back(b, static_cast<int>(e));
            if (a != b) adj[b].emplace_back(a, static_cast<int>(e));
        }
        return adj;
    }
};

/// Adds edges in order; the first edge closing a cycle in a component yields
/// that cycle (the tree path plus the edge). One cycle per component.
std::vector<MultiCycle> component_cycles(const Multigraph& mg)
{
    const auto n = static_cast<std::size_t>(mg.vertex_count);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<char> has_cycle(n, 0);
    std::vector<std::vector<std::pair<VertexId, int>>> forest(n);
    std::vector<MultiCycle> out;
    for (std::size_t e = 0; e < mg.edges.size(); ++e) {
        auto [a, b] = mg.edges[e];
        int ra = find(a);
        int rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            has_cycle[rb] = has_cycle[rb] || has_cycle[ra];
            forest[a].emplace_back(b, static_cast<int>(e));
            forest[b].emplace_back(a, static_cast<int>(e));
            continue;
        }
        if (has_cycle[ra]) continue;
        has_cycle[ra] = 1;
        MultiCycle cycle;
        if (a == b) {
            cycle.vertices = {a};
            cycle.edges = {static_cast<int>(e)};
            out.push_back(std::move(cycle));
            continue;
        }
        // tree path b -> a, then edge e closes a -> b
        std::vector<std::pair<VertexId, int>> via(n, {-1, -1});
        std::vector<char> seen(n, 0);
        std::queue<VertexId> queue;
        queue.push(b);
        seen[b] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            if (v == a) break;
            for (auto [w, id] : forest[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    via[w] = {v, id};
                    queue.push(w);
                }
            }
        }
        std::vector<VertexId> path_vertices{a};
        std::vector<int> path_edges;
        for (VertexId v = a; v != b; v = via[v].first) {
            path_edges.push_back(via[v].second);
            path_vertices.push_back(via[v].first);
        }
        // path_vertices: a ... b, path_edges between them; close with e
        cycle.vertices = path_vertices;
        cycle.edges = path_edges;
        cycle.edges.push_back(static_cast<int>(e));
        out.push_back(std::move(cycle));
    }
    return out;
}

/// Interior of thread t read starting from endpoint `from`.
std::vector<VertexId> interior_from(const Thread& t, VertexId from, bool reversed_loop = false)
{
    std::vector<VertexId> out = t.interior;
    if ((t.first != from) || (t.is_loop() && reversed_loop)) std::reverse(out.begin(), out.end());
    return out;
}

class Detector {
public:
    Detector(const Graph& g, int lemma, const RotationSystem* rot, bool stop_at_first)
        : g_(g), lemma_(lemma), rot_(rot), stop_(stop_at_first)
    {
        if (lemma < 1 || lemma > 6) {
            throw PreconditionError("lemma must be in 1..6, got " + std::to_string(lemma));
        }
        if (max_degree(g) > 4) {
            throw PreconditionError("theorem hypothesis violated: maximum degree exceeds 4");
        }
        if (lemma == 6) {
            if (rot == nullptr) throw PreconditionError("lemma 6 needs a plane embedding");
            faces_ = faces_of(g, *rot);
        }
        threads_ = enumerate_threads(g);
    }

    std::vector<ConfigMatch> run(int only_config = 0)
    {
        for (int c = 1; c <= config_count(lemma_); ++c) {
            if (only_config != 0 && c != only_config) continue;
            detect(c);
            if (stop_ && !matches_.empty()) break;
        }
        return std::move(matches_);
    }

private:
    int deg(VertexId v) const { return g_.degree(v); }

    bool done() const { return stop_ && !matches_.empty(); }

    void emit(int config, std::vector<VertexId> vertices, std::vector<VertexId> deleted,
              std::vector<VertexId> uncolored, ExtensionPlan plan, std::vector<FaceId> faces = {})
    {
        ConfigMatch m;
        m.lemma = lemma_;
        m.config = config;
        m.vertices = std::move(vertices);
        m.deleted = std::move(deleted);
        m.uncolored = std::move(uncolored);
        m.plan = std::move(plan);
        m.faces = std::move(faces);
        matches_.push_back(std::move(m));
    }

    static ExtensionPlan greedy(std::vector<VertexId> order)
    {
        ExtensionPlan p;
        p.order = std::move(order);
        return p;
    }

    std::vector<VertexId> neighbors_of_degree(VertexId v, int d) const
    {
        std::vector<VertexId> out;
        for (VertexId w : g_.neighbors(v)) {
            if (deg(w) == d) out.push_back(w);
        }
        return out;
    }

    /// The neighbor of 2-vertex a other than `from`.
    VertexId across(VertexId a, VertexId from) const
    {
        auto nb = g_.neighbors(a);
        return nb[0] == from ? nb[1] : nb[0];
    }

    std::vector<VertexId> thread_vertices(const Thread& t) const
    {
        std::vector<VertexId> out{t.first};
        out.insert(out.end(), t.interior.begin(), t.interior.end());
        if (!t.is_loop()) out.push_back(t.last);
        return out;
    }

    void detect(int config)
    {
        switch (lemma_) {
        case 1:
            switch (config) {
            case 1: long_thread(1, 4, 1, /*forward=*/true); return;
            case 2: three_thread_at_three_vertex(); return;
            case 3: thread_cycle(3, 3); return;
            case 4: low_degree(4); return;
            }
            break;
        case 2:
            switch (config) {
            case 1: long_thread(1, 3, 0, true); return;
            case 2: two_thread_at_three_vertex(); return;
            case 3: one_thread_cycle_with_attachment(3, 3); return;
            case 4: low_degree(4); return;
            case 5: thread_cycle(5, 4); return;
            }
            break;
        case 3:
            switch (config) {
            case 1: long_thread(1, 2, 0, true); return;
            case 2: three_vertex_three_two_neighbors(); return;
            case 3: three_vertex_two_two_neighbors_one_light(); return;
            case 4: low_degree(4); return;
            }
            break;
        case 4:
            switch (config) {
            case 1: lemma4_three_vertex_two_two_neighbors(); return;
            case 2: lemma4_three_vertex_light(); return;
            case 3: lemma4_four_vertex_three_two_neighbors(); return;
            case 4: lemma4_four_vertex_needy(); return;
            case 5: long_thread(5, 2, 0, true); return;
            case 6: one_thread_cycle_with_attachment(6, 4); return;
            case 7: low_degree(7); return;
            }
            break;
        case 5:
            switch (config) {
            case 1: lemma5_two_vertex_at_three_vertex(); return;
            case 2: lemma5_three_vertex_two_three_neighbors(); return;
            case 3: lemma5_four_vertex_two_two_neighbors(); return;
            case 4: lemma5_four_vertex_two_and_three(); return;
            case 5: low_degree(5); return;
            }
            break;
        case 6:
            switch (config) {
            case 1: lemma6_two_vertex(); return;
            case 2: lemma6_adjacent_three_vertices(); return;
            case 3: lemma6_three_vertex_on_face(3, 3); return;
            case 4: lemma6_three_vertex_on_face(4, 4); return;
            case 5: lemma6_four_vertex_faces(5, 3); return;
            case 6: lemma6_four_vertex_faces(6, 4); return;
            case 7: low_degree(7); return;
            }
            break;
        }
        throw InvariantError("no detector for lemma " + std::to_string(lemma_) + " config " +
                             std::to_string(config));
    }

    // --- shared detectors --------------------------------------------------

    void low_degree(int config)
    {
        for (VertexId v = 0; v < g_.vertex_count() && !done(); ++v) {
            if (deg(v) <= 1) emit(config, {v}, {v}, {}, greedy({v}));
        }
    }

    /// Threads with at least `min_length` interior vertices; deletes the two
    /// consecutive interior vertices starting at position `offset`.
    void long_thread(int config, int min_length, int offset, bool)
    {
        for (const Thread& t : threads_.threads) {
            if (done()) return;
            if (t.length() < min_length) continue;
            VertexId v = t.interior[offset];
            VertexId w = t.interior[offset + 1];
            emit(config, thread_vertices(t), {v, w}, {}, greedy({v, w}));
        }
    }

    /// 2-threads whose endpoints both have degree `endpoint_degree`; one
    /// cycle of the contracted multigraph per component. All 2-vertices on it
    /// are deleted and recolored as an even cycle.
    void thread_cycle(int config, int endpoint_degree)
    {
        Multigraph mg;
        mg.vertex_count = g_.vertex_count();
        std::vector<int> thread_ids;
        for (std::size_t i = 0; i < threads_.threads.size(); ++i) {
            const Thread& t = threads_.threads[i];
            if (t.length() == 2 && deg(t.first) == endpoint_degree && deg(t.last) == endpoint_degree) {
                mg.edges.emplace_back(t.first, t.last);
                thread_ids.push_back(static_cast<int>(i));
            }
        }
        for (const MultiCycle& c : component_cycles(mg)) {
            if (done()) return;
            std::vector<VertexId> twos;
            std::vector<VertexId> vertices;
            const auto k = c.vertices.size();
            for (std::size_t i = 0; i < k; ++i) {
                const Thread& t = threads_.threads[thread_ids[c.edges[i]]];
                VertexId from = c.vertices[i];
                vertices.push_back(from);
                auto inner = interior_from(t, from);
                twos.insert(twos.end(), inner.begin(), inner.end());
            }
            vertices.insert(vertices.end(), twos.begin(), twos.end());
            ExtensionPlan plan;
            plan.kind = PlanKind::Cycle;
            plan.cycle = twos;
            emit(config, vertices, twos, {}, plan);
        }
    }

    /// Component of the light/heavy 1-thread multigraph that is neither a
    /// tree nor a cycle: a cycle u1 v1 u2 ... uk vk plus a 2-vertex z hanging
    /// off v1.
    void one_thread_cycle_with_attachment(int config, int endpoint_degree)
    {
        Multigraph mg;
        mg.vertex_count = g_.vertex_count();
        std::vector<VertexId> edge_vertex;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (deg(v) != 2) continue;
            auto nb = g_.neighbors(v);
            if (deg(nb[0]) == endpoint_degree && deg(nb[1]) == endpoint_degree) {
                mg.edges.emplace_back(nb[0], nb[1]);
                edge_vertex.push_back(v);
            }
        }
        auto adj = mg.adjacency();
        for (const MultiCycle& c : component_cycles(mg)) {
            if (done()) return;
            const auto k = c.vertices.size();
            std::vector<char> on_cycle(mg.edges.size(), 0);
            for (int e : c.edges) on_cycle[e] = 1;
            std::size_t at = k;
            int extra = -1;
            for (std::size_t i = 0; i < k && extra < 0; ++i) {
                for (auto [w, e] : adj[c.vertices[i]]) {
                    if (!on_cycle[e]) {
                        at = i;
                        extra = e;
                        break;
                    }
                }
            }
            if (extra < 0) continue;  // the component is exactly a cycle
            // cycle 2-vertices starting with the two at vertex `at`
            std::vector<VertexId> us;
            for (std::size_t j = 0; j < k; ++j) {
                us.push_back(edge_vertex[c.edges[(at + k - 1 + j) % k]]);
            }
            VertexId v1 = c.vertices[at];
            VertexId z = edge_vertex[extra];
            VertexId y = across(z, v1);
            std::vector<VertexId> vertices = us;
            for (std::size_t j = 0; j < k; ++j) vertices.push_back(c.vertices[(at + j) % k]);
            vertices.push_back(z);
            vertices.push_back(y);
            std::vector<VertexId> deleted{us[0], v1, us.size() > 1 ? us[1] : us[0], z};
            std::sort(deleted.begin(), deleted.end());
            deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
            std::vector<VertexId> uncolored(us.begin() + std::min<std::size_t>(2, us.size()), us.end());
            ExtensionPlan plan;
            plan.kind = PlanKind::CycleWithEar;
            plan.order = {v1};
            plan.cycle = us;
            plan.ear = z;
            emit(config, vertices, deleted, uncolored, plan);
        }
    }

    // --- lemma 1 / 2 -------------------------------------------------------

    void three_thread_at_three_vertex()
    {
        for (const Thread& t : threads_.threads) {
            if (done()) return;
            if (t.length() != 3) continue;
            VertexId u = -1;
            if (deg(t.first) == 3) {
                u = t.first;
            } else if (deg(t.last) == 3) {
                u = t.last;
            } else {
                continue;
            }
            auto inner = interior_from(t, u);
            emit(2, thread_vertices(t), {inner[0], inner[1]}, {}, greedy({inner[0], inner[1]}));
        }
    }

    void two_thread_at_three_vertex()
    {
        for (const Thread& t : threads_.threads) {
            if (done()) return;
            if (t.length() != 2) continue;
            VertexId u = -1;
            if (deg(t.first) == 3) {
                u = t.first;
            } else if (deg(t.last) == 3) {
                u = t.last;
            } else {
                continue;
            }
            auto inner = interior_from(t, u);
            emit(2, thread_vertices(t), {inner[0], inner[1]}, {}, greedy({inner[1], inner[0]}));
        }
    }

    // --- lemma 3 -----------------------------------------------------------

    void three_vertex_three_two_neighbors()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() != 3) continue;
            std::vector<VertexId> vertices{u, twos[0], twos[1], twos[2]};
            emit(2, vertices, vertices, {}, greedy({twos[0], twos[1], twos[2], u}));
        }
    }

    void three_vertex_two_two_neighbors_one_light()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() < 2) continue;
            for (VertexId a : twos) {
                VertexId s = across(a, u);
                if (deg(s) != 3) continue;
                VertexId b = twos[0] == a ? twos[1] : twos[0];
                emit(3, {u, a, b, s}, {u, a, b}, {}, greedy({u, b, a}));
                break;
            }
        }
    }

    // --- lemma 4 -----------------------------------------------------------

    bool is_light(VertexId a) const
    {
        if (deg(a) != 2) return false;
        auto nb = g_.neighbors(a);
        return deg(nb[0]) == 3 && deg(nb[1]) == 3;
    }

    /// 3-vertex adjacent to a light 2-vertex; returns that 2-vertex or -1.
    VertexId needy_light_neighbor(VertexId s) const
    {
        if (deg(s) != 3) return -1;
        for (VertexId w : g_.neighbors(s)) {
            if (is_light(w)) return w;
        }
        return -1;
    }

    void lemma4_three_vertex_two_two_neighbors()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() < 2) continue;
            VertexId a = twos[0];
            VertexId b = twos[1];
            emit(1, {u, a, b}, {u, a, b}, {}, greedy({u, a, b}));
        }
    }

    void lemma4_three_vertex_light()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            auto threes = neighbors_of_degree(u, 3);
            if (threes.size() < 2) continue;
            for (VertexId a : g_.neighbors(u)) {
                if (!is_light(a)) continue;
                emit(2, {u, a, threes[0], threes[1], across(a, u)}, {a}, {u}, greedy({u, a}));
                break;
            }
        }
    }

    /// Medium 2-neighbor of 4-vertex u: its other neighbor has degree 3.
    bool is_medium_at(VertexId a, VertexId u) const
    {
        return deg(a) == 2 && deg(across(a, u)) == 3;
    }

    void lemma4_four_vertex_three_two_neighbors()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 4) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() < 3) continue;
            auto medium = std::find_if(twos.begin(), twos.end(),
                                       [&](VertexId a) { return is_medium_at(a, u); });
            if (medium == twos.end()) continue;
            VertexId a = *medium;
            std::vector<VertexId> others;
            for (VertexId w : twos) {
                if (w != a && others.size() < 2) others.push_back(w);
            }
            VertexId b = others[0];
            VertexId c = others[1];
            emit(3, {u, a, b, c}, {u, a, b, c}, {}, greedy({u, b, c, a}));
        }
    }

    void lemma4_four_vertex_needy()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 4) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() < 2) continue;
            auto medium = std::find_if(twos.begin(), twos.end(),
                                       [&](VertexId a) { return is_medium_at(a, u); });
            if (medium == twos.end()) continue;
            VertexId a = *medium;
            VertexId b = twos[0] == a ? twos[1] : twos[0];
            for (VertexId s : g_.neighbors(u)) {
                VertexId light = needy_light_neighbor(s);
                if (light < 0) continue;
                emit(4, {u, s, a, b, light}, {u, a, b, s, light}, {}, greedy({u, s, b, a, light}));
                break;
            }
        }
    }

    // --- lemma 5 -----------------------------------------------------------

    void lemma5_two_vertex_at_three_vertex()
    {
        for (VertexId a = 0; a < g_.vertex_count() && !done(); ++a) {
            if (deg(a) != 2) continue;
            for (VertexId u : g_.neighbors(a)) {
                if (deg(u) != 3) continue;
                emit(1, {a, u}, {a}, {u}, greedy({u, a}));
                break;
            }
        }
    }

    void lemma5_three_vertex_two_three_neighbors()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            auto threes = neighbors_of_degree(u, 3);
            if (threes.size() < 2) continue;
            VertexId s = threes[0];
            VertexId t = threes[1];
            emit(2, {u, s, t}, {u}, {s, t}, greedy({s, t, u}));
        }
    }

    void lemma5_four_vertex_two_two_neighbors()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 4) continue;
            auto twos = neighbors_of_degree(u, 2);
            if (twos.size() < 2) continue;
            VertexId a = twos[0];
            VertexId b = twos[1];
            emit(3, {u, a, b}, {a, b}, {u}, greedy({u, a, b}));
        }
    }

    void lemma5_four_vertex_two_and_three()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 4) continue;
            auto twos = neighbors_of_degree(u, 2);
            auto threes = neighbors_of_degree(u, 3);
            if (twos.empty() || threes.empty()) continue;
            VertexId a = twos[0];
            VertexId s = threes[0];
            emit(4, {u, a, s}, {a}, {u, s}, greedy({u, s, a}));
        }
    }

    // --- lemma 6 -----------------------------------------------------------

    void lemma6_two_vertex()
    {
        for (VertexId a = 0; a < g_.vertex_count() && !done(); ++a) {
            if (deg(a) != 2) continue;
            VertexId x = g_.neighbors(a)[0];
            emit(1, {a, x, g_.neighbors(a)[1]}, {a}, {x}, greedy({x, a}));
        }
    }

    void lemma6_adjacent_three_vertices()
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            for (VertexId v : g_.neighbors(u)) {
                if (v < u || deg(v) != 3) continue;
                VertexId common = -1;
                for (VertexId w : g_.neighbors(u)) {
                    if (w != v && g_.adjacent(v, w)) {
                        common = w;
                        break;
                    }
                }
                std::vector<VertexId> uncolored;
                if (common >= 0) {
                    uncolored = {common};
                } else {
                    for (VertexId w : g_.neighbors(u)) {
                        if (w != v) {
                            uncolored.push_back(w);
                            break;
                        }
                    }
                    for (VertexId w : g_.neighbors(v)) {
                        if (w != u) {
                            uncolored.push_back(w);
                            break;
                        }
                    }
                    if (uncolored[0] == uncolored[1]) uncolored.pop_back();
                }
                std::vector<VertexId> order = uncolored;
                order.push_back(u);
                order.push_back(v);
                std::vector<VertexId> vertices{u, v};
                vertices.insert(vertices.end(), uncolored.begin(), uncolored.end());
                emit(2, vertices, {u, v}, uncolored, greedy(order));
                break;
            }
        }
    }

    /// Face at angle i of vertex u if it is a simple cycle of `length`.
    std::optional<FaceId> angle_face(VertexId u, std::size_t i, int length) const
    {
        FaceId f = faces_.angle_face[u][i];
        const Face& face = faces_.faces[f];
        if (face.length() == length && face.is_cycle()) return f;
        return std::nullopt;
    }

    void lemma6_three_vertex_on_face(int config, int length)
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 3) continue;
            const auto& ord = rot_->order(u);
            for (std::size_t i = 0; i < ord.size(); ++i) {
                auto f = angle_face(u, i, length);
                if (!f) continue;
                VertexId x = ord[i];
                VertexId y = ord[(i + 1) % ord.size()];
                std::vector<VertexId> vertices{u, x};
                for (VertexId w : faces_.faces[*f].walk) {
                    if (w != u && w != x && w != y) vertices.push_back(w);
                }
                vertices.push_back(y);
                emit(config, vertices, {u}, {x, y}, greedy({x, y, u}), {*f});
                break;
            }
        }
    }

    /// 4-vertex with a 3-face angle and a second angle on a face of
    /// `second_length`. Adjacent angles share the edge to b; opposite angles
    /// share nothing.
    void lemma6_four_vertex_faces(int config, int second_length)
    {
        for (VertexId u = 0; u < g_.vertex_count() && !done(); ++u) {
            if (deg(u) != 4) continue;
            const auto& r = rot_->order(u);
            bool found = false;
            for (std::size_t i = 0; i < 4 && !found; ++i) {
                auto tri = angle_face(u, i, 3);
                if (!tri) continue;
                for (std::size_t j = 0; j < 4 && !found; ++j) {
                    if (j == i) continue;
                    if (second_length == 3 && j < i) continue;
                    auto other = angle_face(u, j, second_length);
                    if (!other) continue;
                    found = true;
                    std::vector<FaceId> faces{*tri, *other};
                    if (j == (i + 1) % 4 || i == (j + 1) % 4) {
                        // shared edge u-b
                        VertexId b = j == (i + 1) % 4 ? r[(i + 1) % 4] : r[i];
                        VertexId a = j == (i + 1) % 4 ? r[i] : r[(i + 1) % 4];
                        VertexId c = j == (i + 1) % 4 ? r[(j + 1) % 4] : r[j];
                        emit(config, {u, a, b, c}, {u}, {a, b, c}, greedy({a, c, b, u}), faces);
                    } else {
                        VertexId a = r[i];
                        VertexId b = r[(i + 1) % 4];
                        emit(config, {u, a, b, r[j], r[(j + 1) % 4]}, {u}, {a, b}, greedy({a, b, u}),
                             faces);
                    }
                }
            }
        }
    }

    const Graph& g_;
    int lemma_;
    const RotationSystem* rot_;
    bool stop_;
    FaceList faces_;
    ThreadDecomposition threads_;
    std::vector<ConfigMatch> matches_;
};

}  // namespace

int config_count(int lemma)
{
    static constexpr int counts[] = {0, 4, 5, 4, 7, 5, 7};
    if (lemma < 1 || lemma > 6) throw PreconditionError("lemma must be in 1..6");
    return counts[lemma];
}

std::string config_label(int config)
{
    if (config < 1 || config > 8) return std::to_string(config);
    return roman[config];
}

std::string config_description(int lemma, int config)
{
    static const std::vector<std::vector<std::string>> names = {
        {},
        {"thread with at least four 2-vertices", "3-thread at a 3-vertex",
         "cycle of 2-threads between 3-vertices", "vertex of degree at most 1"},
        {"thread with at least three 2-vertices", "2-thread at a 3-vertex",
         "cycle of light 1-threads with an attached light 1-thread", "vertex of degree at most 1",
         "cycle of 2-threads between 4-vertices"},
        {"two adjacent 2-vertices", "3-vertex with three 2-neighbors",
         "3-vertex with two 2-neighbors, one adjacent to another 3-vertex",
         "vertex of degree at most 1"},
        {"3-vertex with two 2-neighbors", "3-vertex with two 3-neighbors and a light 2-neighbor",
         "4-vertex with three 2-neighbors, one medium",
         "4-vertex with a needy 3-neighbor and two 2-neighbors, one medium", "two adjacent 2-vertices",
         "cycle of heavy 1-threads with an attached heavy 1-thread", "vertex of degree at most 1"},
        {"2-vertex adjacent to a 3-vertex", "3-vertex adjacent to two 3-vertices",
         "4-vertex with two 2-neighbors", "4-vertex adjacent to a 2-vertex and a 3-vertex",
         "vertex of degree at most 1"},
        {"2-vertex", "two adjacent 3-vertices", "3-vertex on a 3-face", "3-vertex on a 4-face",
         "4-vertex on two 3-faces", "4-vertex on a 3-face and a 4-face", "vertex of degree at most 1"},
    };
    if (lemma < 1 || lemma > 6 || config < 1 || config > config_count(lemma)) {
        throw PreconditionError("no configuration " + std::to_string(config) + " in lemma " +
                                std::to_string(lemma));
    }
    return names[lemma][config - 1];
}

std::vector<ConfigMatch> find_configs(const Graph& g, int lemma)
{
    return Detector(g, lemma, nullptr, false).run();
}

std::vector<ConfigMatch> find_configs(const Graph& g, int lemma, const RotationSystem& embedding)
{
    return Detector(g, lemma, &embedding, false).run();
}

std::optional<ConfigMatch> first_config(const Graph& g, int lemma, const RotationSystem* embedding)
{
    auto matches = Detector(g, lemma, embedding, true).run();
    if (matches.empty()) return std::nullopt;
    return std::move(matches.front());
}

std::vector<ConfigMatch> find_config(const Graph& g, int lemma, int config, const RotationSystem* embedding)
{
    config_description(lemma, config);
    return Detector(g, lemma, embedding, false).run(config);
}

Sponsorship assign_sponsors(const Graph& g, int lemma)
{
    Sponsorship out;
    auto threads = enumerate_threads(g);
    auto sponsor_threads = [&](int endpoint_degree, int length) {
        std::vector<Edge> edges;
        std::vector<int> ids;
        for (std::size_t i = 0; i < threads.threads.size(); ++i) {
            const Thread& t = threads.threads[i];
            if (t.length() == length && g.degree(t.first) == endpoint_degree &&
                g.degree(t.last) == endpoint_degree) {
                edges.emplace_back(t.first, t.last);
                ids.push_back(static_cast<int>(i));
            }
        }
        auto tails = orient_pseudoforest(g.vertex_count(), edges);
        for (std::size_t e = 0; e < edges.size(); ++e) out.thread_sponsor[ids[e]] = tails[e];
    };
    switch (lemma) {
    case 1:
        sponsor_threads(3, 2);
        break;
    case 2:
        sponsor_threads(4, 2);
        sponsor_threads(3, 1);
        break;
    case 4: {
        std::vector<Edge> edges;
        std::vector<VertexId> twos;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 2) continue;
            auto nb = g.neighbors(v);
            if (g.degree(nb[0]) == 4 && g.degree(nb[1]) == 4) {
                edges.emplace_back(nb[0], nb[1]);
                twos.push_back(v);
            }
        }
        auto tails = orient_pseudoforest(g.vertex_count(), edges);
        for (std::size_t e = 0; e < edges.size(); ++e) out.vertex_sponsor[twos[e]] = tails[e];
        break;
    }
    case 3:
    case 5:
    case 6:
        break;
    default:
        throw PreconditionError("lemma must be in 1..6, got " + std::to_string(lemma));
    }
    return out;
}

}  // namespace sqchoose
