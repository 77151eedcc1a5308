#pragma once

#include "sqchoose/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sqchoose {

using FaceId = int;

/// Per-vertex cyclic order of neighbors. Face walks follow the rule
/// "from dart u->v continue with v->succ_v(u)".
class RotationSystem {
public:
    RotationSystem() = default;

    /// Throws PreconditionError unless every order is a permutation of the
    /// corresponding adjacency list of g.
    RotationSystem(const Graph& g, std::vector<std::vector<VertexId>> order);

    int vertex_count() const { return static_cast<int>(order_.size()); }
    const std::vector<VertexId>& order(VertexId v) const { return order_[v]; }

    /// Position of u in v's rotation.
    int position(VertexId v, VertexId u) const;
    VertexId successor(VertexId v, VertexId u) const;

    /// Rotation of the induced subgraph, in the subgraph's ids.
    RotationSystem restricted(const Subgraph& sub) const;

private:
    std::vector<std::vector<VertexId>> order_;
};

struct Face {
    std::vector<VertexId> walk;  // closed walk; walk[i] -> walk[i+1 mod l]
    int length() const { return static_cast<int>(walk.size()); }
    /// True when the walk visits no vertex twice.
    bool is_cycle() const;
};

struct FaceList {
    std::vector<Face> faces;
    /// angle_face[v][i] is the face containing the angle between
    /// order(v)[i] and order(v)[i+1] (cyclically).
    std::vector<std::vector<FaceId>> angle_face;

    int total_length() const;
};

/// Traces every face. Validates Euler's formula V - E + F = 2 on each
/// connected component (an isolated vertex counts one face) and throws
/// PreconditionError("embedding is not plane") otherwise.
FaceList faces_of(const Graph& g, const RotationSystem& rot);

/// Lines `v: n1 n2 ... nd`; vertices not listed get an empty rotation.
RotationSystem parse_rotation(const Graph& g, std::istream& in);
RotationSystem read_rotation_file(const Graph& g, const std::string& path);
std::string to_text(const RotationSystem& rot);

}  // namespace sqchoose
