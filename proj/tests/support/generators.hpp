#pragma once

#include "sqchoose/embedding.hpp"
#include "sqchoose/graph.hpp"
#include "sqchoose/listcolor.hpp"
#include "sqchoose/rational.hpp"

#include <optional>
#include <random>
#include <vector>

namespace sqchoose::testing {

using Rng = std::mt19937_64;

struct PlaneGraph {
    Graph graph;
    RotationSystem rotation;
};

/// Configuration-model multigraph with degrees drawn from 1..4, loops and
/// parallel edges dropped.
Graph random_max4_graph(int n, Rng& rng);

/// random_max4_graph with `subdivisions` random edge subdivisions, then
/// vertices of degree at most 1 peeled off repeatedly. Often configuration
/// free, which the unconstrained generator almost never is.
Graph random_core_graph(int n, int subdivisions, Rng& rng);

/// Gives each vertex v fresh neighbors until it has degree degrees[v]. Every
/// fresh neighbor is a 4-vertex with three fresh leaves, so no two core
/// vertices share a new square-neighbor: the most constraining host.
Graph saturate(const Graph& core, const std::vector<int>& degrees);

/// Replaces edge uv by the path u w v with a new vertex w = n.
Graph subdivide(const Graph& g, VertexId u, VertexId v);

/// Subdivides random edges inside the densest part until mad < threshold.
/// Gives up (nullopt) once the graph would exceed max_vertices.
std::optional<Graph> sparsify(Graph g, const Rational& threshold, int max_vertices, Rng& rng);

/// A random graph with max degree 4 and mad below the lemma's threshold.
Graph random_profile_graph(int lemma, Rng& rng, int max_vertices = 300);

/// Random stacked triangulation on n >= 3 vertices.
PlaneGraph random_apollonian(int n, Rng& rng);

/// Medial graph: one vertex per edge, joined when consecutive on a face.
PlaneGraph medial(const PlaneGraph& pg);

/// Medial graph of a random triangulation with some edges removed while
/// keeping it connected with minimum degree 3. Max degree 4, plane.
PlaneGraph random_lemma6_graph(Rng& rng, int max_vertices = 300);

/// Subdivides every edge `times` times, then `extra` random edges once more.
PlaneGraph subdivide_plane(const PlaneGraph& pg, int times, int extra, Rng& rng);

/// Plane graph of girth at least g (random triangulation, subdivided).
PlaneGraph random_girth_graph(int g, Rng& rng);

/// Independent check that `coloring` is a proper list coloring of G^2.
bool verify_square_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring);

/// max 2|E(S)|/|S| over all nonempty vertex subsets.
Rational brute_force_mad(const Graph& g);

}  // namespace sqchoose::testing
