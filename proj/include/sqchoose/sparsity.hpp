#pragma once

#include "sqchoose/embedding.hpp"
#include "sqchoose/graph.hpp"
#include "sqchoose/profile.hpp"
#include "sqchoose/rational.hpp"

#include <optional>
#include <vector>

namespace sqchoose {

/// Maximum average degree with a vertex set whose induced subgraph attains it.
struct MadResult {
    Rational value;
    std::vector<VertexId> witness;  // sorted, nonempty
};

/// Exact mad by Dinkelbach iteration over densities 2|E(S)|/|S|, each step a
/// max-closure (min-cut) problem. The witness is the smallest densest set,
/// lexicographically least among ties. Throws PreconditionError on the empty
/// graph.
MadResult mad_exact(const Graph& g);

/// Same value as mad_exact; the witness is the union of all densest sets,
/// which costs one flow instead of one per vertex.
MadResult mad_with_maximal_witness(const Graph& g);

/// 2|E(S)|/|S| for the subgraph induced on `vertices`.
Rational induced_density(const Graph& g, std::span<const VertexId> vertices);

struct Fact1Verdict {
    std::optional<int> girth;        // nullopt for forests
    Rational mad;
    std::optional<Rational> bound;   // 2g/(g-2) when a cycle exists
    bool holds = true;               // mad < bound; vacuous for forests
};

/// Validates the embedding (Euler per component), then compares mad against
/// the girth bound in exact arithmetic.
Fact1Verdict check_fact1(const Graph& g, const RotationSystem& embedding);

/// Strongest mad-routed table row for g. Throws PreconditionError when
/// max_degree(g) > 4.
std::optional<LemmaProfile> profile_for(const Graph& g, const ProfileTable& table = ProfileTable());

}  // namespace sqchoose
