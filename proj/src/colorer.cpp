#include "sqchoose/errors.hpp"
#include "sqchoose/listcolor.hpp"
#include "sqchoose/sparsity.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace sqchoose {

namespace {

constexpr int base_size = 12;
constexpr int alive = INT_MAX;

struct Step {
    std::vector<std::vector<VertexId>> base;
    std::optional<ConfigMatch> match;
};

std::string match_name(const ConfigMatch& m)
{
    return "lemma " + std::to_string(m.lemma) + " config (" + config_label(m.config) + ")";
}

void translate(std::vector<VertexId>& ids, const std::vector<VertexId>& to_parent)
{
    for (auto& v : ids) v = to_parent[v];
}

class SquareColorer {
public:
    SquareColorer(const Graph& g, const ListAssignment& lists, int lemma, const RotationSystem* rot)
        : g_(g), lists_(lists), lemma_(lemma), rot_(rot),
          level_(static_cast<std::size_t>(g.vertex_count()), alive),
          color_(static_cast<std::size_t>(g.vertex_count()), uncolored)
    {
    }

    Coloring run()
    {
        std::vector<Step> steps;
        std::vector<VertexId> remaining(static_cast<std::size_t>(g_.vertex_count()));
        std::iota(remaining.begin(), remaining.end(), 0);
        for (int i = 0; !remaining.empty(); ++i) {
            steps.push_back(reduce(remaining, i));
            std::erase_if(remaining, [&](VertexId v) { return level_[v] != alive; });
        }
        for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
            for (const auto& comp : steps[i].base) color_base(comp);
            if (steps[i].match) extend(*steps[i].match, i);
        }
        return std::move(color_);
    }

private:
    Step reduce(const std::vector<VertexId>& remaining, int i)
    {
        Step step;
        Subgraph h = induced_subgraph(g_, remaining);
        std::vector<VertexId> rest;
        for (auto comp : components(h.graph)) {
            bool cycle = std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return h.graph.degree(v) == 2; });
            translate(comp, h.to_parent);
            if (static_cast<int>(comp.size()) <= base_size || cycle) {
                for (VertexId v : comp) level_[v] = i;
                step.base.push_back(std::move(comp));
            } else {
                rest.insert(rest.end(), comp.begin(), comp.end());
            }
        }
        if (rest.empty()) return step;
        std::sort(rest.begin(), rest.end());
        Subgraph sub = induced_subgraph(g_, rest);
        std::optional<RotationSystem> sub_rot;
        if (rot_ != nullptr) sub_rot = rot_->restricted(sub);
        auto match = first_config(sub.graph, lemma_, sub_rot ? &*sub_rot : nullptr);
        if (!match) {
            throw InvariantError("no reducible configuration of lemma " + std::to_string(lemma_) +
                                 " found in a subgraph with " + std::to_string(rest.size()) + " vertices");
        }
        translate(match->vertices, sub.to_parent);
        translate(match->deleted, sub.to_parent);
        translate(match->uncolored, sub.to_parent);
        translate(match->plan.order, sub.to_parent);
        translate(match->plan.cycle, sub.to_parent);
        if (match->plan.ear >= 0) match->plan.ear = sub.to_parent[match->plan.ear];
        match->faces.clear();
        for (VertexId d : match->deleted) level_[d] = i;
        check_broken_pairs(*match, i);
        step.match = std::move(match);
        return step;
    }

    /// Two survivors at distance 2 only through a deleted vertex lose their
    /// constraint in the recursion; one of them must be recolored.
    void check_broken_pairs(const ConfigMatch& m, int i) const
    {
        auto survives = [&](VertexId v) { return level_[v] > i; };
        auto recolored = [&](VertexId v) {
            return std::find(m.uncolored.begin(), m.uncolored.end(), v) != m.uncolored.end();
        };
        for (VertexId d : m.deleted) {
            auto nb = g_.neighbors(d);
            for (std::size_t a = 0; a < nb.size(); ++a) {
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    VertexId x = nb[a];
                    VertexId y = nb[b];
                    if (!survives(x) || !survives(y) || recolored(x) || recolored(y)) continue;
                    if (g_.adjacent(x, y)) continue;
                    bool joined = false;
                    for (VertexId w : g_.neighbors(x)) {
                        if (survives(w) && g_.adjacent(w, y)) {
                            joined = true;
                            break;
                        }
                    }
                    if (!joined) {
                        throw InvariantError(match_name(m) + " separates " + std::to_string(x) + " and " +
                                             std::to_string(y) + " without recoloring either");
                    }
                }
            }
        }
    }

    std::vector<VertexId> square_nbrs(VertexId x, int i) const
    {
        std::vector<VertexId> out;
        for (VertexId w : g_.neighbors(x)) {
            if (level_[w] < i) continue;
            out.push_back(w);
            for (VertexId u : g_.neighbors(w)) {
                if (u != x && level_[u] >= i) out.push_back(u);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Color> residual(VertexId x, int i) const
    {
        std::vector<Color> used;
        for (VertexId w : square_nbrs(x, i)) {
            if (color_[w] != uncolored) used.push_back(color_[w]);
        }
        std::sort(used.begin(), used.end());
        std::vector<Color> out;
        std::set_difference(lists_[x].begin(), lists_[x].end(), used.begin(), used.end(), std::back_inserter(out));
        return out;
    }

    void color_base(const std::vector<VertexId>& comp)
    {
        Subgraph sub = induced_subgraph(g_, comp);
        ListAssignment local(comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) local[j] = lists_[sub.to_parent[j]];
        auto coloring = list_color_exhaustive(square(sub.graph), local);
        if (!coloring) {
            throw InvariantError("square of a " + std::to_string(comp.size()) +
                                 "-vertex component has no coloring from its lists");
        }
        for (std::size_t j = 0; j < comp.size(); ++j) color_[sub.to_parent[j]] = (*coloring)[j];
    }

    void extend(const ConfigMatch& m, int i)
    {
        for (VertexId u : m.uncolored) color_[u] = uncolored;
        for (VertexId x : m.plan.order) {
            auto options = residual(x, i);
            if (options.empty()) {
                throw InvariantError(match_name(m) + ": no color left for vertex " + std::to_string(x));
            }
            color_[x] = options.front();
        }
        if (m.plan.kind != PlanKind::Greedy) extend_cycle(m, i);
        std::vector<VertexId> touched = m.deleted;
        touched.insert(touched.end(), m.uncolored.begin(), m.uncolored.end());
        for (VertexId x : touched) {
            if (color_[x] == uncolored) {
                throw InvariantError(match_name(m) + ": vertex " + std::to_string(x) + " left uncolored");
            }
            for (VertexId w : square_nbrs(x, i)) {
                if (color_[w] == color_[x]) {
                    throw InvariantError(match_name(m) + ": vertices " + std::to_string(x) + " and " +
                                         std::to_string(w) + " share a color");
                }
            }
        }
    }

    void extend_cycle(const ConfigMatch& m, int i)
    {
        const auto& cycle = m.plan.cycle;
        ListAssignment res(lists_.size());
        for (VertexId x : cycle) res[x] = residual(x, i);
        const bool ear = m.plan.kind == PlanKind::CycleWithEar;
        if (ear) res[m.plan.ear] = residual(m.plan.ear, i);
        try {
            Coloring local;
            if (ear) {
                auto nbrs = square_nbrs(m.plan.ear, i);
                std::vector<VertexId> attachments;
                for (VertexId x : cycle) {
                    if (std::binary_search(nbrs.begin(), nbrs.end(), x)) attachments.push_back(x);
                }
                local = color_cycle_plus_ear(cycle, m.plan.ear, attachments, res);
                color_[m.plan.ear] = local[m.plan.ear];
            } else {
                CycleResult r = color_cycle_2lists(cycle, res);
                if (!r.coloring) throw InvariantError("odd cycle with identical 2-lists");
                local = std::move(*r.coloring);
            }
            for (VertexId x : cycle) color_[x] = local[x];
        } catch (const std::exception& e) {
            throw InvariantError(match_name(m) + ": " + e.what());
        }
    }

    const Graph& g_;
    const ListAssignment& lists_;
    int lemma_;
    const RotationSystem* rot_;
    std::vector<int> level_;
    Coloring color_;
};

}  // namespace

Coloring color_square(const Graph& g, const ListAssignment& lists, const LemmaProfile& profile,
                      const RotationSystem* embedding)
{
    const int n = g.vertex_count();
    if (profile.lemma < 1 || profile.lemma > 6) {
        throw PreconditionError("profile lemma must be in 1..6, got " + std::to_string(profile.lemma));
    }
    if (static_cast<int>(lists.size()) != n) throw PreconditionError("list assignment does not match the graph");
    ListAssignment normalized = lists;
    for (VertexId v = 0; v < n; ++v) {
        auto& list = normalized[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (static_cast<int>(list.size()) < profile.k) {
            throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(list.size()) +
                                    " colors, fewer than k = " + std::to_string(profile.k));
        }
        if (!list.empty() && list.front() < 0) throw PreconditionError("colors must be nonnegative");
    }
    if (n == 0) return {};
    if (max_degree(g) > 4) throw PreconditionError("theorem hypothesis violated: maximum degree exceeds 4");
    if (profile.mad_threshold) {
        Rational mad = mad_with_maximal_witness(g).value;
        if (!(mad < *profile.mad_threshold)) {
            throw PreconditionError("theorem hypothesis violated: mad " + to_string(mad) + " is not below " +
                                    to_string(*profile.mad_threshold));
        }
    }
    if (profile.planar_required || profile.lemma == 6) {
        if (embedding == nullptr) throw PreconditionError("lemma 6 needs a plane embedding");
        faces_of(g, *embedding);
    }
    const RotationSystem* rot = profile.lemma == 6 ? embedding : nullptr;
    return SquareColorer(g, normalized, profile.lemma, rot).run();
}

}  // namespace sqchoose
