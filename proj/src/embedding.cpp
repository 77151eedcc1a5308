#include "sqchoose/embedding.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sqchoose {

RotationSystem::RotationSystem(const Graph& g, std::vector<std::vector<VertexId>> order)
    : order_(std::move(order))
{
    if (static_cast<int>(order_.size()) != g.vertex_count()) {
        throw PreconditionError("rotation system covers " + std::to_string(order_.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<VertexId> sorted = order_[v];
        std::sort(sorted.begin(), sorted.end());
        auto nbrs = g.neighbors(v);
        if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
            throw PreconditionError("rotation at vertex " + std::to_string(v) +
                                    " is not a permutation of its neighbors");
        }
    }
}

int RotationSystem::position(VertexId v, VertexId u) const
{
    const auto& ord = order_[v];
    auto it = std::find(ord.begin(), ord.end(), u);
    if (it == ord.end()) {
        throw PreconditionError(std::to_string(u) + " is not a neighbor of " + std::to_string(v));
    }
    return static_cast<int>(it - ord.begin());
}

VertexId RotationSystem::successor(VertexId v, VertexId u) const
{
    const auto& ord = order_[v];
    return ord[(static_cast<std::size_t>(position(v, u)) + 1) % ord.size()];
}

RotationSystem RotationSystem::restricted(const Subgraph& sub) const
{
    RotationSystem out;
    out.order_.resize(sub.to_parent.size());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        for (VertexId w : order_[sub.to_parent[i]]) {
            if (sub.from_parent[w] >= 0) out.order_[i].push_back(sub.from_parent[w]);
        }
    }
    return out;
}

bool Face::is_cycle() const
{
    std::vector<VertexId> sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int FaceList::total_length() const
{
    return std::accumulate(faces.begin(), faces.end(), 0,
                           [](int acc, const Face& f) { return acc + f.length(); });
}

FaceList faces_of(const Graph& g, const RotationSystem& rot)
{
    const int n = g.vertex_count();
    if (rot.vertex_count() != n) {
        throw PreconditionError("rotation system does not match graph");
    }
    // Dart (v, i) leaves v towards order(v)[i].
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (static_cast<int>(rot.order(v).size()) != g.degree(v)) {
            throw PreconditionError("rotation at vertex " + std::to_string(v) + " has wrong size");
        }
        offset[v + 1] = offset[v] + g.degree(v);
    }
    // reverse_pos[dart v->w] = position of v in w's rotation
    std::vector<int> reverse_pos(static_cast<std::size_t>(offset[n]));
    for (VertexId v = 0; v < n; ++v) {
        const auto& ord = rot.order(v);
        for (std::size_t i = 0; i < ord.size(); ++i) {
            reverse_pos[offset[v] + i] = rot.position(ord[i], v);
        }
    }

    FaceList out;
    out.angle_face.resize(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) out.angle_face[v].assign(rot.order(v).size(), -1);

    std::vector<FaceId> dart_face(static_cast<std::size_t>(offset[n]), -1);
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < g.degree(v); ++i) {
            if (dart_face[offset[v] + i] >= 0) continue;
            FaceId id = static_cast<FaceId>(out.faces.size());
            Face face;
            VertexId cur = v;
            int idx = i;
            while (dart_face[offset[cur] + idx] < 0) {
                dart_face[offset[cur] + idx] = id;
                face.walk.push_back(cur);
                VertexId head = rot.order(cur)[idx];
                int back = reverse_pos[offset[cur] + idx];
                // angle at head between cur and its successor
                out.angle_face[head][back] = id;
                idx = (back + 1) % g.degree(head);
                cur = head;
            }
            if (cur != v || idx != i) {
                throw PreconditionError("face traversal did not close; embedding is not plane");
            }
            out.faces.push_back(std::move(face));
        }
    }

    // Euler per component.
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    std::vector<long> euler(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long edges2 = 0;
        for (VertexId v : comps[c]) edges2 += g.degree(v);
        euler[c] = static_cast<long>(comps[c].size()) - edges2 / 2 + (edges2 == 0 ? 1 : 0);
    }
    for (const Face& f : out.faces) ++euler[comp_of[f.walk.front()]];
    for (long e : euler) {
        if (e != 2) throw PreconditionError("embedding is not plane");
    }
    return out;
}

RotationSystem parse_rotation(const Graph& g, std::istream& in)
{
    std::vector<std::vector<VertexId>> order(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> seen(order.size(), 0);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw PreconditionError("bad rotation line '" + line + "'");
        }
        long v = -1;
        std::istringstream head(line.substr(0, colon));
        if (!(head >> v) || v < 0 || v >= g.vertex_count()) {
            throw PreconditionError("bad vertex in rotation line '" + line + "'");
        }
        if (seen[v]) throw PreconditionError("vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        std::istringstream body(line.substr(colon + 1));
        long w = 0;
        while (body >> w) order[v].push_back(static_cast<VertexId>(w));
        if (!body.eof()) throw PreconditionError("bad rotation line '" + line + "'");
    }
    return RotationSystem(g, std::move(order));
}

RotationSystem read_rotation_file(const Graph& g, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    return parse_rotation(g, in);
}

std::string to_text(const RotationSystem& rot)
{
    std::ostringstream out;
    for (VertexId v = 0; v < rot.vertex_count(); ++v) {
        out << v << ':';
        for (VertexId w : rot.order(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

}  // namespace sqchoose
