#include "sqchoose/errors.hpp"
#include "sqchoose/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace sqchoose {

namespace {

struct LocalPlan {
    PlanKind kind = PlanKind::Greedy;
    std::vector<int> order;
    std::vector<int> cycle;
    int ear = -1;
};

std::vector<Color> available(const Graph& k, const Coloring& col, const ListAssignment& lists, int p)
{
    std::vector<Color> out;
    for (Color c : lists[p]) {
        bool clash = false;
        for (VertexId w : k.neighbors(p)) clash = clash || col[w] == c;
        if (!clash) out.push_back(c);
    }
    return out;
}

/// Runs the extension procedure on K = G^2[deleted + uncolored] with the
/// given residual lists. Returns an empty string on success, else a reason.
std::string run_plan(const Graph& k, const LocalPlan& plan, const ListAssignment& lists)
{
    const int n = k.vertex_count();
    Coloring col(static_cast<std::size_t>(n), uncolored);
    for (int p : plan.order) {
        auto options = available(k, col, lists, p);
        if (options.empty()) return "no color left for vertex #" + std::to_string(p);
        col[p] = options.front();
    }
    if (plan.kind != PlanKind::Greedy) {
        ListAssignment res(static_cast<std::size_t>(n));
        for (int p : plan.cycle) res[p] = available(k, col, lists, p);
        try {
            Coloring local;
            if (plan.kind == PlanKind::CycleWithEar) {
                res[plan.ear] = available(k, col, lists, plan.ear);
                std::vector<VertexId> attachments;
                for (int p : plan.cycle) {
                    if (k.adjacent(p, plan.ear)) attachments.push_back(p);
                }
                local = color_cycle_plus_ear(plan.cycle, plan.ear, attachments, res);
                col[plan.ear] = local[plan.ear];
            } else {
                CycleResult r = color_cycle_2lists(plan.cycle, res);
                if (!r.coloring) return "odd cycle with identical 2-lists";
                local = std::move(*r.coloring);
            }
            for (int p : plan.cycle) col[p] = local[p];
        } catch (const std::exception& e) {
            return e.what();
        }
    }
    for (int p = 0; p < n; ++p) {
        if (col[p] == uncolored) return "vertex #" + std::to_string(p) + " left uncolored";
        if (!std::binary_search(lists[p].begin(), lists[p].end(), col[p])) return "color outside a list";
        for (VertexId w : k.neighbors(p)) {
            if (col[w] == col[p]) return "improper coloring";
        }
    }
    return {};
}

/// Calls `visit` on list assignments of the given sizes over `universe`
/// colors, one per renaming class (colors appear in first-use order).
/// Stops when `visit` returns false.
void enumerate_lists(const std::vector<int>& sizes, int universe,
                     const std::function<bool(const ListAssignment&)>& visit)
{
    ListAssignment lists(sizes.size());
    bool stop = false;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int m) {
        if (stop) return;
        if (i == sizes.size()) {
            stop = !visit(lists);
            return;
        }
        const int size = sizes[i];
        for (int fresh = 0; fresh <= std::min(size, universe - m) && !stop; ++fresh) {
            const int old = size - fresh;
            if (old > m) continue;
            std::vector<int> pick(static_cast<std::size_t>(old));
            std::iota(pick.begin(), pick.end(), 0);
            while (!stop) {
                lists[i].assign(pick.begin(), pick.end());
                for (int c = m; c < m + fresh; ++c) lists[i].push_back(c);
                rec(i + 1, m + fresh);
                int j = old - 1;
                while (j >= 0 && pick[j] == m - old + j) --j;
                if (j < 0) break;
                ++pick[j];
                for (int t = j + 1; t < old; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
    };
    rec(0, 0);
}

bool is_exact_cycle(const Graph& k, const std::vector<int>& cycle)
{
    const std::size_t n = cycle.size();
    if (static_cast<std::size_t>(k.vertex_count()) != n) return false;
    if (n <= 2) return static_cast<std::size_t>(k.edge_count()) == n - 1;
    if (static_cast<std::size_t>(k.edge_count()) != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!k.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
    }
    return true;
}

}  // namespace

ReductionReport verify_reduction(const Graph& g, const ConfigMatch& match, int k, const ReductionOptions& options)
{
    ReductionReport report;
    const ExtensionPlan& plan = match.plan;
    std::vector<VertexId>& vs = report.vertices;
    vs = plan.order;
    vs.insert(vs.end(), plan.cycle.begin(), plan.cycle.end());
    if (plan.kind == PlanKind::CycleWithEar) vs.push_back(plan.ear);
    std::vector<VertexId> covered = vs;
    std::vector<VertexId> claimed = match.deleted;
    claimed.insert(claimed.end(), match.uncolored.begin(), match.uncolored.end());
    std::sort(covered.begin(), covered.end());
    std::sort(claimed.begin(), claimed.end());
    if (covered != claimed || std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
        throw PreconditionError("extension plan must color each deleted and uncolored vertex exactly once");
    }
    for (VertexId v : vs) {
        if (v < 0 || v >= g.vertex_count()) throw PreconditionError("match vertex out of range");
    }
    const int n = static_cast<int>(vs.size());
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int p = 0; p < n; ++p) local[vs[p]] = p;

    std::vector<Edge> edges;
    for (int p = 0; p < n; ++p) {
        int outside = 0;
        for (VertexId w : square_neighbors(g, vs[p])) {
            if (local[w] < 0) {
                ++outside;
            } else if (local[w] > p) {
                edges.emplace_back(p, local[w]);
            }
        }
        report.floors.push_back(k - outside);
    }
    Graph sq = Graph::from_edges(n, edges);

    LocalPlan lp;
    lp.kind = plan.kind;
    for (VertexId v : plan.order) lp.order.push_back(local[v]);
    for (VertexId v : plan.cycle) lp.cycle.push_back(local[v]);
    if (plan.kind == PlanKind::CycleWithEar) lp.ear = local[plan.ear];

    auto fail = [&](ListAssignment lists, std::string why) {
        report.certified = false;
        report.counterexample = std::move(lists);
        report.failure = std::move(why);
        return report;
    };
    for (int p = 0; p < n; ++p) {
        if (report.floors[p] <= 0) {
            ListAssignment lists(static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q) {
                lists[q].resize(static_cast<std::size_t>(std::max(report.floors[q], 0)));
                std::iota(lists[q].begin(), lists[q].end(), 0);
            }
            return fail(std::move(lists), "vertex " + std::to_string(vs[p]) + " may have no color left");
        }
    }
    const int total = std::min(250, std::accumulate(report.floors.begin(), report.floors.end(), 0));
    if (auto ch = is_size_choosable(sq, report.floors, total, 100'000)) {
        report.floor_choosable = ch->choosable;
        if (!ch->choosable) return fail(std::move(*ch->counterexample), "no coloring exists for these lists");
    }

    if (plan.kind == PlanKind::Greedy) {
        bool counting = true;
        for (std::size_t j = 0; j < lp.order.size(); ++j) {
            int earlier = 0;
            for (std::size_t i = 0; i < j; ++i) earlier += sq.adjacent(lp.order[i], lp.order[j]);
            counting = counting && report.floors[lp.order[j]] > earlier;
        }
        if (counting) {
            report.certified = true;
            report.mode = "counting";
            return report;
        }
    }
    if (plan.kind == PlanKind::Cycle && lp.order.empty() && is_exact_cycle(sq, lp.cycle) &&
        (n <= 2 || n % 2 == 0) &&
        std::all_of(report.floors.begin(), report.floors.end(), [&](int f) { return f >= std::min(n, 2); })) {
        report.certified = true;
        report.mode = "even-cycle";
        return report;
    }

    std::optional<ListAssignment> bad;
    std::string why;
    std::uint64_t checked = 0;
    bool complete = true;
    enumerate_lists(report.floors, total, [&](const ListAssignment& lists) {
        if (checked >= options.exhaustive_limit) {
            complete = false;
            return false;
        }
        ++checked;
        if (auto r = run_plan(sq, lp, lists); !r.empty()) {
            bad = lists;
            why = std::move(r);
            return false;
        }
        return true;
    });
    report.assignments_checked = checked;
    if (bad) return fail(std::move(*bad), why);
    if (complete) {
        report.certified = true;
        report.mode = "exhaustive";
        return report;
    }
    std::mt19937_64 rng(options.seed);
    const int biggest = *std::max_element(report.floors.begin(), report.floors.end());
    const int universe = biggest + 2;
    std::vector<Color> pool(static_cast<std::size_t>(universe));
    ListAssignment lists(static_cast<std::size_t>(n));
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        for (int p = 0; p < n; ++p) {
            std::iota(pool.begin(), pool.end(), 0);
            const auto size = static_cast<std::size_t>(report.floors[p]);
            for (std::size_t i = 0; i < size; ++i) {
                std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
                std::swap(pool[i], pool[j]);
            }
            lists[p].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(lists[p].begin(), lists[p].end());
        }
        ++report.assignments_checked;
        if (auto r = run_plan(sq, lp, lists); !r.empty()) return fail(lists, r);
    }
    report.certified = true;
    report.mode = "sampled";
    return report;
}

}  // namespace sqchoose
