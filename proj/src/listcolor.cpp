#include "sqchoose/listcolor.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace sqchoose {

namespace {

bool contains(const std::vector<Color>& list, Color c)
{
    return std::binary_search(list.begin(), list.end(), c);
}

/// Smallest color of `list` avoiding `a` and `b`.
Color first_avoiding(const std::vector<Color>& list, Color a, Color b = uncolored)
{
    for (Color c : list) {
        if (c != a && c != b) return c;
    }
    return uncolored;
}

void ensure_size(Coloring& coloring, std::size_t n)
{
    if (coloring.size() < n) coloring.resize(n, uncolored);
}

}  // namespace

CycleResult color_cycle_2lists(const std::vector<VertexId>& cycle, const ListAssignment& lists)
{
    CycleResult result;
    Coloring out(lists.size(), uncolored);
    const std::size_t n = cycle.size();
    for (VertexId x : cycle) {
        if (lists[x].size() < (n == 1 ? 1u : 2u)) {
            throw PreconditionError("cycle vertex " + std::to_string(x) + " has fewer than two colors");
        }
    }
    if (n == 1) {
        out[cycle[0]] = lists[cycle[0]].front();
        result.coloring = std::move(out);
        return result;
    }
    if (n == 2) {
        out[cycle[0]] = lists[cycle[0]].front();
        out[cycle[1]] = first_avoiding(lists[cycle[1]], out[cycle[0]]);
        result.coloring = std::move(out);
        return result;
    }
    auto go_around = [&](std::size_t start, Color c) {
        out[cycle[start]] = c;
        for (std::size_t j = 1; j < n; ++j) {
            VertexId y = cycle[(start + j) % n];
            Color before = out[cycle[(start + j - 1) % n]];
            out[y] = first_avoiding(lists[y], before, j == n - 1 ? c : uncolored);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto& mine = lists[cycle[i]];
        const auto& prev = lists[cycle[(i + n - 1) % n]];
        for (Color c : mine) {
            if (!contains(prev, c)) {
                go_around(i, c);
                result.coloring = std::move(out);
                return result;
            }
        }
    }
    // every list is contained in its predecessor's, so all are equal
    const auto& common = lists[cycle[0]];
    if (common.size() >= 3) {
        go_around(0, common.front());
    } else if (n % 2 == 0) {
        for (std::size_t i = 0; i < n; ++i) out[cycle[i]] = common[i % 2];
    } else {
        result.obstruction = common;
        return result;
    }
    result.coloring = std::move(out);
    return result;
}

Coloring color_cycle_plus_ear(const std::vector<VertexId>& cycle, VertexId ear,
                              const std::vector<VertexId>& attachments, const ListAssignment& lists)
{
    if (lists[ear].empty()) throw PreconditionError("ear vertex " + std::to_string(ear) + " has an empty list");
    for (Color c : lists[ear]) {
        ListAssignment reduced = lists;
        bool too_small = false;
        for (VertexId a : attachments) {
            auto& list = reduced[a];
            list.erase(std::remove(list.begin(), list.end(), c), list.end());
            too_small = too_small || list.size() < (cycle.size() == 1 ? 1u : 2u);
        }
        if (too_small) continue;
        CycleResult r = color_cycle_2lists(cycle, reduced);
        if (r.coloring) {
            (*r.coloring)[ear] = c;
            return std::move(*r.coloring);
        }
    }
    throw InvariantError("no color of ear vertex " + std::to_string(ear) + " lets its cycle be colored");
}

Coloring greedy_extend(const Graph& g, Coloring partial, const std::vector<VertexId>& order,
                       const ListAssignment& lists)
{
    ensure_size(partial, static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v : order) {
        if (partial[v] != uncolored) continue;
        std::vector<Color> used;
        for (VertexId w : square_neighbors(g, v)) {
            if (partial[w] != uncolored) used.push_back(partial[w]);
        }
        std::sort(used.begin(), used.end());
        for (Color c : lists[v]) {
            if (!std::binary_search(used.begin(), used.end(), c)) {
                partial[v] = c;
                break;
            }
        }
        if (partial[v] == uncolored) {
            throw InvariantError("no color left for vertex " + std::to_string(v));
        }
    }
    return partial;
}

std::optional<Coloring> list_color_exhaustive(const Graph& h, const ListAssignment& lists, Coloring partial)
{
    const int n = h.vertex_count();
    ensure_size(partial, static_cast<std::size_t>(n));
    auto available = [&](VertexId v) {
        std::vector<Color> out;
        for (Color c : lists[v]) {
            bool clash = false;
            for (VertexId w : h.neighbors(v)) {
                if (partial[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) out.push_back(c);
        }
        return out;
    };
    std::function<bool()> solve = [&]() {
        VertexId best = -1;
        std::vector<Color> best_options;
        for (VertexId v = 0; v < n; ++v) {
            if (partial[v] != uncolored) continue;
            auto options = available(v);
            if (best < 0 || options.size() < best_options.size()) {
                best = v;
                best_options = std::move(options);
                if (best_options.empty()) return false;
            }
        }
        if (best < 0) return true;
        for (Color c : best_options) {
            partial[best] = c;
            if (solve()) return true;
        }
        partial[best] = uncolored;
        return false;
    };
    if (!solve()) return std::nullopt;
    return partial;
}

ListAssignment random_lists(int vertex_count, int k, std::uint64_t seed)
{
    if (k < 1) throw PreconditionError("list size must be positive");
    std::mt19937_64 rng(seed);
    ListAssignment lists(static_cast<std::size_t>(vertex_count));
    std::vector<Color> pool(static_cast<std::size_t>(2 * k));
    for (auto& list : lists) {
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        list.assign(pool.begin(), pool.begin() + k);
        std::sort(list.begin(), list.end());
    }
    return lists;
}

ListAssignment uniform_lists(int vertex_count, int k)
{
    std::vector<Color> list(static_cast<std::size_t>(k));
    std::iota(list.begin(), list.end(), 0);
    return ListAssignment(static_cast<std::size_t>(vertex_count), list);
}

ListAssignment parse_lists(std::istream& in, int vertex_count)
{
    ListAssignment lists(static_cast<std::size_t>(vertex_count));
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw PreconditionError("list file line " + std::to_string(line_no) + ": expected `v: colors`");
        }
        std::istringstream head(line.substr(0, colon));
        long long v = -1;
        if (!(head >> v) || v < 0 || v >= vertex_count) {
            throw PreconditionError("list file line " + std::to_string(line_no) + ": bad vertex");
        }
        if (seen[v]) throw PreconditionError("list file: vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        std::istringstream body(line.substr(colon + 1));
        std::string token;
        while (body >> token) {
            std::size_t used = 0;
            long long c = -1;
            try {
                c = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || c < 0 || c > 1'000'000'000) {
                throw PreconditionError("list file line " + std::to_string(line_no) + ": bad color `" + token + "`");
            }
            lists[v].push_back(static_cast<Color>(c));
        }
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
    }
    for (int v = 0; v < vertex_count; ++v) {
        if (!seen[v]) throw PreconditionError("list file: no list for vertex " + std::to_string(v));
    }
    return lists;
}

ListAssignment read_lists_file(const std::string& path, int vertex_count)
{
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open list file " + path);
    return parse_lists(in, vertex_count);
}

}  // namespace sqchoose
