#include "sqchoose/discharging.hpp"

#include "sqchoose/profile.hpp"

#include <numeric>

namespace sqchoose {

Rational ChargeState::total() const
{
    Rational sum = std::accumulate(vertex_charge.begin(), vertex_charge.end(), Rational(0));
    sum = std::accumulate(thread_charge.begin(), thread_charge.end(), sum);
    if (face_charge) sum = std::accumulate(face_charge->begin(), face_charge->end(), sum);
    return sum;
}

ConfigurationPresent::ConfigurationPresent(ConfigMatch match)
    : PreconditionError("reducible configuration present: lemma " + std::to_string(match.lemma) + " config " +
                        config_label(match.config)),
      match_(std::move(match))
{
}

ChargeState initial_charges(const Graph& g, int lemma, const FaceList* faces)
{
    if (lemma < 1 || lemma > 6) throw PreconditionError("lemma must be in 1..6, got " + std::to_string(lemma));
    if ((lemma == 6) != (faces != nullptr)) {
        throw PreconditionError(lemma == 6 ? "lemma 6 needs the faces of a plane embedding"
                                           : "faces are only used by lemma 6");
    }
    ChargeState state;
    state.lemma = lemma;
    state.threads = enumerate_threads(g);
    state.thread_charge.assign(state.threads.threads.size(), Rational(0));
    const int n = g.vertex_count();
    state.vertex_charge.resize(static_cast<std::size_t>(n));
    if (lemma == 6) {
        if (!is_connected(g)) throw PreconditionError("lemma 6 charges need a connected graph");
        for (VertexId v = 0; v < n; ++v) state.vertex_charge[v] = Rational(2 * g.degree(v) - 6);
        state.face_charge.emplace();
        for (const Face& f : faces->faces) state.face_charge->push_back(Rational(f.length() - 6));
    } else {
        for (VertexId v = 0; v < n; ++v) state.vertex_charge[v] = Rational(g.degree(v));
    }
    return state;
}

namespace {

class Transfers {
public:
    Transfers(const Graph& g, const ChargeState& before) : g_(g), after_(before) {}

    void vertex_to_vertex(VertexId from, VertexId to, const Rational& amount)
    {
        after_.vertex_charge[from] -= amount;
        after_.vertex_charge[to] += amount;
    }

    void vertex_to_thread(VertexId from, int thread, const Rational& amount)
    {
        after_.vertex_charge[from] -= amount;
        after_.thread_charge[thread] += amount;
    }

    void vertex_to_face(VertexId from, FaceId face, const Rational& amount)
    {
        after_.vertex_charge[from] -= amount;
        (*after_.face_charge)[face] += amount;
    }

    int deg(VertexId v) const { return g_.degree(v); }

    ChargeState take() { return std::move(after_); }

private:
    const Graph& g_;
    ChargeState after_;
};

/// Lemmas 1 and 2: endpoints pay each incident thread by their degree, and a
/// sponsor adds a bonus. A loop thread is incident twice to its endpoint.
void thread_rules(Transfers& t, const ChargeState& state, const Sponsorship& sponsors, int denominator)
{
    const auto& threads = state.threads.threads;
    for (std::size_t i = 0; i < threads.size(); ++i) {
        const int id = static_cast<int>(i);
        for (VertexId end : {threads[i].first, threads[i].last}) {
            if (t.deg(end) == 3) t.vertex_to_thread(end, id, Rational(1, denominator));
            if (t.deg(end) == 4) t.vertex_to_thread(end, id, Rational(3, denominator));
        }
    }
    for (auto [thread, sponsor] : sponsors.thread_sponsor) {
        t.vertex_to_thread(sponsor, thread, Rational(2, denominator));
    }
}

void lemma3_rules(Transfers& t, const Graph& g)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int twos = 0;
        for (VertexId w : g.neighbors(v)) twos += g.degree(w) == 2;
        Rational each(0);
        if (g.degree(v) == 4) each = Rational(5, 14);
        if (g.degree(v) == 3 && twos == 1) each = Rational(4, 14);
        if (g.degree(v) == 3 && twos == 2) each = Rational(3, 14);
        if (each == Rational(0)) continue;
        for (VertexId w : g.neighbors(v)) {
            if (g.degree(w) == 2) t.vertex_to_vertex(v, w, each);
        }
    }
}

void lemma4_rules(Transfers& t, const Graph& g, const Sponsorship& sponsors)
{
    auto deg = [&](VertexId v) { return g.degree(v); };
    auto is_light = [&](VertexId a) {
        if (deg(a) != 2) return false;
        auto nb = g.neighbors(a);
        return deg(nb[0]) == 3 && deg(nb[1]) == 3;
    };
    auto is_medium = [&](VertexId a) {
        if (deg(a) != 2) return false;
        auto nb = g.neighbors(a);
        return (deg(nb[0]) == 3 && deg(nb[1]) == 4) || (deg(nb[0]) == 4 && deg(nb[1]) == 3);
    };
    auto is_needy = [&](VertexId s) {
        if (deg(s) != 3) return false;
        for (VertexId w : g.neighbors(s)) {
            if (is_light(w)) return true;
        }
        return false;
    };
    const Rational fifth(1, 5);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (deg(v) < 3) continue;
        for (VertexId w : g.neighbors(v)) {
            if (deg(w) == 2) t.vertex_to_vertex(v, w, fifth);                    // R1
            if (deg(v) == 4 && is_needy(w)) t.vertex_to_vertex(v, w, fifth);     // R2
            if (is_needy(v) && is_light(w)) t.vertex_to_vertex(v, w, fifth);     // R3
            if (deg(v) == 4 && is_medium(w)) t.vertex_to_vertex(v, w, Rational(2, 5));  // R4
        }
    }
    for (auto [two, sponsor] : sponsors.vertex_sponsor) t.vertex_to_vertex(sponsor, two, Rational(2, 5));  // R4
}

void lemma5_rules(Transfers& t, const Graph& g)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) continue;
        for (VertexId w : g.neighbors(v)) {
            if (g.degree(w) == 2) t.vertex_to_vertex(v, w, Rational(2, 3));
            if (g.degree(w) == 3) t.vertex_to_vertex(v, w, Rational(1, 6));
        }
    }
}

void lemma6_rules(Transfers& t, const Graph& g, const FaceList& faces)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) continue;
        for (FaceId f : faces.angle_face[v]) {
            switch (faces.faces[f].length()) {
            case 3: t.vertex_to_face(v, f, Rational(1)); break;
            case 4: t.vertex_to_face(v, f, Rational(1, 2)); break;
            case 5: t.vertex_to_face(v, f, Rational(1, 3)); break;
            default: break;
            }
        }
    }
}

}  // namespace

ChargeState apply_rules(const Graph& g, int lemma, const ChargeState& state, const Sponsorship& sponsors,
                        const RotationSystem* embedding)
{
    if (state.lemma != lemma) throw PreconditionError("charge state belongs to a different lemma");
    if (auto match = first_config(g, lemma, embedding)) throw ConfigurationPresent(std::move(*match));
    Transfers t(g, state);
    switch (lemma) {
    case 1: thread_rules(t, state, sponsors, 7); break;
    case 2: thread_rules(t, state, sponsors, 9); break;
    case 3: lemma3_rules(t, g); break;
    case 4: lemma4_rules(t, g, sponsors); break;
    case 5: lemma5_rules(t, g); break;
    case 6: {
        FaceList faces = faces_of(g, *embedding);
        if (!state.face_charge || state.face_charge->size() != faces.faces.size()) {
            throw PreconditionError("charge state faces do not match the embedding");
        }
        lemma6_rules(t, g, faces);
        break;
    }
    default: throw PreconditionError("lemma must be in 1..6, got " + std::to_string(lemma));
    }
    ChargeState after = t.take();
    if (after.total() != state.total()) {
        throw InvariantError("discharging did not conserve total charge: " + to_string(state.total()) + " became " +
                             to_string(after.total()));
    }
    return after;
}

ChargeState discharge(const Graph& g, int lemma, const RotationSystem* embedding)
{
    std::optional<FaceList> faces;
    if (lemma == 6) {
        if (embedding == nullptr) throw PreconditionError("lemma 6 needs a plane embedding");
        faces = faces_of(g, *embedding);
    }
    ChargeState initial = initial_charges(g, lemma, faces ? &*faces : nullptr);
    if (auto match = first_config(g, lemma, embedding)) throw ConfigurationPresent(std::move(*match));
    return apply_rules(g, lemma, initial, assign_sponsors(g, lemma), embedding);
}

BoundReport verify_bound(const ChargeState& state, int lemma)
{
    BoundReport report;
    report.threshold = discharge_threshold(lemma);
    report.final_vertex = state.vertex_charge;
    const auto& threads = state.threads.threads;
    for (std::size_t i = 0; i < threads.size(); ++i) {
        if (threads[i].interior.empty()) continue;
        Rational share = state.thread_charge[i] / Rational(threads[i].length());
        for (VertexId v : threads[i].interior) report.final_vertex[v] += share;
    }
    std::vector<char> exempt(report.final_vertex.size(), 0);
    for (const auto& cycle : state.threads.degenerate) {
        for (VertexId v : cycle) exempt[v] = 1;
    }
    for (std::size_t v = 0; v < report.final_vertex.size(); ++v) {
        const auto id = static_cast<VertexId>(v);
        if (exempt[v]) {
            report.exempt.push_back(id);
        } else if (report.final_vertex[v] < report.threshold) {
            report.vertex_violators.push_back(id);
        }
    }
    if (state.face_charge) {
        for (std::size_t f = 0; f < state.face_charge->size(); ++f) {
            if ((*state.face_charge)[f] < Rational(0)) report.face_violators.push_back(static_cast<FaceId>(f));
        }
    }
    return report;
}

}  // namespace sqchoose
