#include "sqchoose/oracle.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace sqchoose {

namespace {

struct BudgetExceeded {};

/// The adversary assigns lists vertex by vertex; the state keeps the proper
/// colorings of the placed vertices, projected onto those that still have
/// unplaced neighbors. The adversary wins once no coloring survives.
class ChoiceGame {
public:
    ChoiceGame(const Graph& h, std::vector<int> sizes, int universe, std::size_t budget)
        : h_(h), sizes_(std::move(sizes)), universe_(universe), budget_(budget)
    {
        const int n = h.vertex_count();
        std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            VertexId best = -1;
            for (VertexId v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && h.degree(v) < h.degree(best))) {
                    best = v;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
            for (VertexId w : h.neighbors(best)) ++placed_nbrs[w];
        }
        position_.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) position_[order_[i]] = i;
        // frontier_[i]: positions < i with a neighbor at position >= i
        frontier_.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            for (int p = 0; p < i; ++p) {
                for (VertexId w : h.neighbors(order_[p])) {
                    if (position_[w] >= i) {
                        frontier_[i].push_back(p);
                        break;
                    }
                }
            }
        }
    }

    /// True when some assignment defeats every coloring.
    bool adversary_wins() { return wins(0, 0, {std::string()}); }

    /// The defeating lists, indexed by vertex of h.
    ListAssignment counterexample()
    {
        work_ = 0;
        ListAssignment lists(order_.size());
        int i = 0;
        int m = 0;
        std::vector<std::string> set{std::string()};
        while (true) {
            const Entry& e = memo_.at(key(i, m, set));
            lists[order_[i]] = e.list;
            int fresh = 0;
            for (Color c : e.list) fresh += c >= m;
            set = advance(i, set, e.list);
            m += fresh;
            ++i;
            if (set.empty()) break;
        }
        for (std::size_t p = static_cast<std::size_t>(i); p < order_.size(); ++p) {
            std::vector<Color> list(static_cast<std::size_t>(sizes_[order_[p]]));
            std::iota(list.begin(), list.end(), 0);
            lists[order_[p]] = list;
        }
        return lists;
    }

private:
    struct Entry {
        bool win = false;
        std::vector<Color> list;
    };

    static std::string key(int i, int m, const std::vector<std::string>& set)
    {
        std::string k = std::to_string(i) + ':' + std::to_string(m) + ':';
        for (const auto& s : set) {
            k += s;
            k += '\xff';
        }
        return k;
    }

    std::vector<std::string> advance(int i, const std::vector<std::string>& set, const std::vector<Color>& list)
    {
        // a single state can carry thousands of colorings, so bound the
        // work as well as the number of states
        work_ += set.size() * list.size();
        if (work_ > work_per_state * budget_) throw BudgetExceeded{};
        const auto& before = frontier_[i];
        const auto& after = frontier_[i + 1];
        const VertexId v = order_[i];
        std::vector<int> earlier;  // indices into `before` of v's placed neighbors
        for (std::size_t j = 0; j < before.size(); ++j) {
            if (h_.adjacent(order_[before[j]], v)) earlier.push_back(static_cast<int>(j));
        }
        std::vector<int> source;  // per slot of `after`: index into `before`, or -1 for v
        for (int p : after) {
            if (p == i) {
                source.push_back(-1);
            } else {
                source.push_back(static_cast<int>(std::find(before.begin(), before.end(), p) - before.begin()));
            }
        }
        std::vector<std::string> out;
        for (const auto& s : set) {
            for (Color c : list) {
                bool clash = false;
                for (int j : earlier) {
                    if (static_cast<unsigned char>(s[j]) == c) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                std::string t;
                for (int j : source) t += j < 0 ? static_cast<char>(c) : s[j];
                out.push_back(std::move(t));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool wins(int i, int m, const std::vector<std::string>& set)
    {
        if (i == static_cast<int>(order_.size())) return false;
        std::string k = key(i, m, set);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second.win;
        if (memo_.size() >= budget_) throw BudgetExceeded{};
        Entry entry;
        const int size = sizes_[order_[i]];
        const int max_fresh = std::min(size, universe_ - m);
        std::vector<Color> list;
        for (int fresh = max_fresh; fresh >= 0 && !entry.win; --fresh) {
            const int old = size - fresh;
            if (old > m) continue;
            // all `old`-subsets of {0..m-1}, plus colors m..m+fresh-1
            std::vector<int> pick(static_cast<std::size_t>(old));
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                list.assign(pick.begin(), pick.end());
                for (int c = m; c < m + fresh; ++c) list.push_back(c);
                auto next = advance(i, set, list);
                if (next.empty() || wins(i + 1, m + fresh, next)) {
                    entry.win = true;
                    entry.list = list;
                    break;
                }
                int j = old - 1;
                while (j >= 0 && pick[j] == m - old + j) --j;
                if (j < 0) break;
                ++pick[j];
                for (int t = j + 1; t < old; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
        memo_.emplace(std::move(k), entry);
        return entry.win;
    }

    const Graph& h_;
    std::vector<int> sizes_;
    int universe_;
    std::size_t budget_;
    std::size_t work_ = 0;
    static constexpr std::size_t work_per_state = 64;
    std::vector<VertexId> order_;
    std::vector<int> position_;
    std::vector<std::vector<int>> frontier_;
    std::unordered_map<std::string, Entry> memo_;
};

/// Repeatedly drops vertices with fewer neighbors than colors; they can
/// always be colored last.
std::vector<VertexId> strip_easy(const Graph& h, const std::vector<int>& sizes)
{
    const int n = h.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) degree[v] = h.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < n; ++v) {
            if (gone[v] || degree[v] >= sizes[v]) continue;
            gone[v] = 1;
            changed = true;
            for (VertexId w : h.neighbors(v)) --degree[w];
        }
    }
    std::vector<VertexId> core;
    for (VertexId v = 0; v < n; ++v) {
        if (!gone[v]) core.push_back(v);
    }
    return core;
}

}  // namespace

std::optional<ChoosabilityResult> is_size_choosable(const Graph& g, const std::vector<int>& sizes, int universe,
                                                    std::size_t state_budget)
{
    const int n = g.vertex_count();
    if (static_cast<int>(sizes.size()) != n) throw PreconditionError("one list size per vertex is required");
    if (universe > 250) throw PreconditionError("color universe is limited to 250 colors");
    ChoosabilityResult result;
    for (VertexId v = 0; v < n; ++v) {
        if (sizes[v] > universe) throw PreconditionError("list size exceeds the color universe");
        if (sizes[v] <= 0) {
            result.choosable = false;
            ListAssignment lists(static_cast<std::size_t>(n));
            for (VertexId w = 0; w < n; ++w) {
                lists[w].resize(static_cast<std::size_t>(std::max(sizes[w], 0)));
                std::iota(lists[w].begin(), lists[w].end(), 0);
            }
            result.counterexample = std::move(lists);
            return result;
        }
    }
    auto core = strip_easy(g, sizes);
    if (core.empty()) return result;
    Subgraph sub = induced_subgraph(g, core);
    std::vector<int> core_sizes;
    for (VertexId v : core) core_sizes.push_back(sizes[v]);
    ChoiceGame game(sub.graph, core_sizes, universe, state_budget);
    try {
        result.choosable = !game.adversary_wins();
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
    if (!result.choosable) {
        ListAssignment lists(static_cast<std::size_t>(n));
        for (VertexId w = 0; w < n; ++w) {
            lists[w].resize(static_cast<std::size_t>(sizes[w]));
            std::iota(lists[w].begin(), lists[w].end(), 0);
        }
        ListAssignment core_lists = game.counterexample();
        for (std::size_t j = 0; j < core.size(); ++j) lists[core[j]] = core_lists[j];
        if (list_color_exhaustive(g, lists)) {
            throw InvariantError("choosability search produced lists that can be colored");
        }
        result.counterexample = std::move(lists);
    }
    return result;
}

ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe)
{
    if (k < 1) throw PreconditionError("k must be positive");
    if (universe < k || universe > 2 * k + 4) {
        throw PreconditionError("universe must lie between k and 2k+4, got " + std::to_string(universe));
    }
    std::vector<int> sizes(static_cast<std::size_t>(g.vertex_count()), k);
    if (strip_easy(g, sizes).size() > 12) {
        throw PreconditionError("choosability oracle handles at most 12 vertices of degree >= k");
    }
    auto result = is_size_choosable(g, sizes, universe, SIZE_MAX);
    return *result;
}

}  // namespace sqchoose
