#pragma once

#include "sqchoose/embedding.hpp"
#include "sqchoose/errors.hpp"
#include "sqchoose/graph.hpp"
#include "sqchoose/rational.hpp"
#include "sqchoose/structure.hpp"

#include <optional>
#include <vector>

namespace sqchoose {

/// Charges on vertices, faces (lemma 6) and threads (lemmas 1 and 2, whose
/// rules pay threads rather than 2-vertices).
struct ChargeState {
    int lemma = 0;
    std::vector<Rational> vertex_charge;
    std::optional<std::vector<Rational>> face_charge;
    std::vector<Rational> thread_charge;  // indexed like threads.threads
    ThreadDecomposition threads;

    Rational total() const;
};

/// Thrown by apply_rules when the graph still contains a reducible
/// configuration, so the rules' preconditions do not hold.
class ConfigurationPresent : public PreconditionError {
public:
    explicit ConfigurationPresent(ConfigMatch match);
    const ConfigMatch& match() const { return match_; }

private:
    ConfigMatch match_;
};

/// mu(v) = d(v) for lemmas 1-5; mu(v) = 2d(v) - 6 and mu(f) = l(f) - 6 for
/// lemma 6, which needs `faces` and a connected graph.
ChargeState initial_charges(const Graph& g, int lemma, const FaceList* faces = nullptr);

/// Applies the lemma's rules simultaneously, reading only `state`. Lemma 6
/// needs the embedding that produced the state's faces.
ChargeState apply_rules(const Graph& g, int lemma, const ChargeState& state, const Sponsorship& sponsors,
                        const RotationSystem* embedding = nullptr);

/// initial_charges + assign_sponsors + apply_rules.
ChargeState discharge(const Graph& g, int lemma, const RotationSystem* embedding = nullptr);

struct BoundReport {
    Rational threshold;
    /// Final vertex charges, thread charge spread evenly over its interior.
    std::vector<Rational> final_vertex;
    std::vector<VertexId> vertex_violators;
    std::vector<FaceId> face_violators;
    /// Vertices of components that are bare cycles: no rule reaches them.
    std::vector<VertexId> exempt;

    bool holds() const { return vertex_violators.empty() && face_violators.empty(); }
};

/// Lemmas 1-5: every vertex reaches the lemma's mad threshold; lemma 6:
/// every vertex and face is nonnegative.
BoundReport verify_bound(const ChargeState& state, int lemma);

}  // namespace sqchoose
