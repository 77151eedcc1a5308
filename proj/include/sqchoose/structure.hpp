#pragma once

#include "sqchoose/embedding.hpp"
#include "sqchoose/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqchoose {

/// Maximal path of 2-vertices. Endpoints are the non-2-vertices it joins
/// (possibly equal, when the thread closes a cycle through one vertex).
struct Thread {
    VertexId first = -1;
    VertexId last = -1;
    std::vector<VertexId> interior;  // ordered from `first` to `last`

    int length() const { return static_cast<int>(interior.size()); }
    bool is_loop() const { return first == last; }
};

struct ThreadDecomposition {
    std::vector<Thread> threads;
    /// Components in which every vertex has degree 2, each in cyclic order.
    std::vector<std::vector<VertexId>> degenerate;
    /// Thread index of each interior vertex, -1 for everything else.
    std::vector<int> thread_of;
};

/// Threads ordered by (first endpoint, first interior vertex). Endpoints are
/// vertices of degree other than 2, so a path hanging off a 1-vertex is a
/// thread as well.
ThreadDecomposition enumerate_threads(const Graph& g);

enum class PlanKind {
    Greedy,        // color `order` greedily
    Cycle,         // color `order` greedily, then `cycle` from lists of size >= 2
    CycleWithEar,  // color `order`, then `cycle` plus the `ear` vertex
};

/// How a reduction is undone: which vertices get colors and in what order.
struct ExtensionPlan {
    PlanKind kind = PlanKind::Greedy;
    std::vector<VertexId> order;
    std::vector<VertexId> cycle;
    VertexId ear = -1;
};

/// One occurrence of a reducible configuration. `deleted` are removed before
/// recursing; `uncolored` survive the recursion but lose their colors before
/// the extension.
struct ConfigMatch {
    int lemma = 0;
    int config = 0;
    std::vector<VertexId> vertices;
    std::vector<VertexId> deleted;
    std::vector<VertexId> uncolored;
    ExtensionPlan plan;
    std::vector<FaceId> faces;
};

/// Number of configurations catalogued for `lemma` (1..6).
int config_count(int lemma);
std::string config_label(int config);  // roman numeral
std::string config_description(int lemma, int config);

/// Every match of the lemma's configurations, in configuration order, then
/// ascending vertex order. Lemma 6 needs the embedding; passing none throws
/// PreconditionError. Throws PreconditionError when max_degree(g) > 4.
std::vector<ConfigMatch> find_configs(const Graph& g, int lemma);
std::vector<ConfigMatch> find_configs(const Graph& g, int lemma, const RotationSystem& embedding);

/// The first match only (what the colorer reduces).
std::optional<ConfigMatch> first_config(const Graph& g, int lemma,
                                        const RotationSystem* embedding = nullptr);

/// Matches of one configuration only.
std::vector<ConfigMatch> find_config(const Graph& g, int lemma, int config,
                                     const RotationSystem* embedding = nullptr);

/// Sponsored threads (by index into enumerate_threads) and sponsored
/// 2-vertices, each mapped to its sponsor.
struct Sponsorship {
    std::map<int, VertexId> thread_sponsor;
    std::map<VertexId, VertexId> vertex_sponsor;
};

/// Orients the lemma's sponsorship multigraph so every vertex sponsors at most
/// one object. Throws InvariantError("reducible configuration missed") when a
/// component has more edges than vertices.
Sponsorship assign_sponsors(const Graph& g, int lemma);

/// Out-degree <= 1 orientation of a multigraph on `vertex_count` vertices:
/// returns the tail of each edge. Throws InvariantError when impossible.
std::vector<VertexId> orient_pseudoforest(int vertex_count, const std::vector<Edge>& edges);

}  // namespace sqchoose
