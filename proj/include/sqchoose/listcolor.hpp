#pragma once

#include "sqchoose/embedding.hpp"
#include "sqchoose/graph.hpp"
#include "sqchoose/profile.hpp"
#include "sqchoose/structure.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sqchoose {

/// Colors are nonnegative integers.
using Color = int;
inline constexpr Color uncolored = -1;

/// lists[v] is the sorted, duplicate-free list of vertex v.
using ListAssignment = std::vector<std::vector<Color>>;
/// color[v], or `uncolored`.
using Coloring = std::vector<Color>;

/// Colors G^2 from `lists` by reduce, recurse, extend on the profile's
/// lemma. Throws PreconditionError when the hypotheses fail (max degree,
/// mad threshold, plane embedding, list sizes) and InvariantError when a
/// reduction step fails to extend or no configuration is found.
Coloring color_square(const Graph& g, const ListAssignment& lists, const LemmaProfile& profile,
                      const RotationSystem* embedding = nullptr);

struct CycleResult {
    std::optional<Coloring> coloring;  // indexed by vertex, only the cycle set
    /// When coloring fails: the common 2-list of an odd cycle.
    std::vector<Color> obstruction;
};

/// Colors the cycle cycle[0] cycle[1] ... cycle[n-1] cycle[0] from lists of
/// at least two colors. Fails only on an odd cycle whose lists all equal
/// one 2-set. Two vertices are treated as an edge, one as a single vertex.
CycleResult color_cycle_2lists(const std::vector<VertexId>& cycle, const ListAssignment& lists);

/// Colors a cycle plus a vertex `ear` adjacent to the cycle vertices in
/// `attachments`, by trying each color of the ear. Throws InvariantError
/// when every color of the ear fails.
Coloring color_cycle_plus_ear(const std::vector<VertexId>& cycle, VertexId ear,
                              const std::vector<VertexId>& attachments, const ListAssignment& lists);

/// Extends `partial` along `order`, giving each vertex the smallest color of
/// its list unused by its colored G^2-neighbors. Throws InvariantError naming
/// the vertex when nothing is left.
Coloring greedy_extend(const Graph& g, Coloring partial, const std::vector<VertexId>& order,
                       const ListAssignment& lists);

/// Proper list coloring of h itself (callers pass squares), by backtracking
/// on the most constrained vertex. Vertices already colored in `partial`
/// are kept.
std::optional<Coloring> list_color_exhaustive(const Graph& h, const ListAssignment& lists,
                                              Coloring partial = {});

/// k-subsets of {0, ..., 2k-1} per vertex, reproducible from the seed.
ListAssignment random_lists(int vertex_count, int k, std::uint64_t seed);
ListAssignment uniform_lists(int vertex_count, int k);

/// Lines `v: c1 c2 ...`; every vertex needs a line.
ListAssignment parse_lists(std::istream& in, int vertex_count);
ListAssignment read_lists_file(const std::string& path, int vertex_count);

}  // namespace sqchoose
