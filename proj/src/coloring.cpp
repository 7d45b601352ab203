#include "obstr/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "obstr/errors.hpp"

namespace obstr {

bool coloring_is_proper(const ObstructionDesign& h, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != h.point_count()) return false;
    auto adj = conflict_adjacency(h);
    for (int p = 0; p < h.point_count(); ++p)
        for (int q : adj[p])
            if (coloring[p] == coloring[q]) return false;
    return true;
}

namespace {

// greedy clique grown from the highest-degree vertex
std::vector<int> greedy_clique(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return {};
    std::vector<char> in_adj(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int c : clique)
            if (!std::binary_search(adj[c].begin(), adj[c].end(), v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

struct ColorSearch {
    const std::vector<std::vector<int>>* adj;
    int n, k;
    std::vector<int> color;
    std::uint64_t nodes = 0, budget = 0;

    bool run() {
        color.assign(n, 0);
        return place(0);
    }

    // most-constrained-vertex ordering with fresh colors introduced in order
    bool place(int colored) {
        if (colored == n) return true;
        if (++nodes > budget) throw LimitExceeded("coloring search budget exhausted");
        int best = -1, best_avail = k + 2, max_used = 0;
        for (int v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::vector<char> used(k + 1, 0);
            for (int u : (*adj)[v])
                if (color[u]) used[color[u]] = 1;
            int cap = std::min(k, max_used + 1);
            int avail = 0;
            for (int c = 1; c <= cap; ++c)
                if (!used[c]) ++avail;
            if (avail == 0) return false;
            if (avail < best_avail) {
                best_avail = avail;
                best = v;
            }
        }
        std::vector<char> used(k + 1, 0);
        for (int u : (*adj)[best])
            if (color[u]) used[color[u]] = 1;
        int cap = std::min(k, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            if (used[c]) continue;
            color[best] = c;
            if (place(colored + 1)) return true;
            color[best] = 0;
        }
        return false;
    }
};

} // namespace

ColoringResult chromatic_index_greedy(const ObstructionDesign& h) {
    auto adj = conflict_adjacency(h);
    int n = h.point_count();
    ColoringResult res;
    res.coloring.assign(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });
    for (int v : order) {
        std::vector<char> used(n + 2, 0);
        for (int u : adj[v])
            if (res.coloring[u]) used[res.coloring[u]] = 1;
        int c = 1;
        while (used[c]) ++c;
        res.coloring[v] = c;
        res.colors = std::max(res.colors, c);
    }
    res.clique = greedy_clique(adj);
    return res;
}

ColoringResult chromatic_index_exact(const ObstructionDesign& h, std::uint64_t budget) {
    auto adj = conflict_adjacency(h);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    int n = h.point_count();
    ColoringResult greedy = chromatic_index_greedy(h);
    std::vector<int> clique = greedy_clique(adj);
    int lb = std::max<int>(1, static_cast<int>(clique.size()));
    if (n == 0) return {0, {}, {}};
    int ub = greedy.colors;

    ColoringResult res;
    res.clique = clique;
    res.coloring = greedy.coloring;
    res.colors = ub;
    std::uint64_t spent = 0;
    for (int k = lb; k < ub; ++k) {
        ColorSearch cs;
        cs.adj = &adj;
        cs.n = n;
        cs.k = k;
        cs.budget = budget - std::min(budget, spent);
        bool found = cs.run();
        spent += cs.nodes;
        if (found) {
            res.colors = k;
            res.coloring = cs.color;
            return res;
        }
    }
    return res;
}

} // namespace obstr
