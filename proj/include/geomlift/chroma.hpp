#ifndef GEOMLIFT_CHROMA_HPP
#define GEOMLIFT_CHROMA_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace geomlift {

struct GreedyColoring {
    std::vector<int> colors; // 0-based, per vertex
    int count = 0;
    std::vector<int> order; // elimination order (min-degree-last coloring order)
};

/// Degeneracy-order greedy coloring: repeatedly remove a minimum-degree
/// vertex (ties: lowest id), then color in reverse removal order with the
/// smallest free color.  Uses at most degeneracy(G) + 1 colors.
inline GreedyColoring degeneracy_greedy(const Graph& g) {
    int n = g.order();
    GreedyColoring out;
    out.colors.assign(n, -1);
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        removed[pick] = true;
        removal.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        int v = *it;
        std::vector<bool> used(n + 1, false);
        for (int w : g.neighbors(v))
            if (out.colors[w] >= 0) used[out.colors[w]] = true;
        int c = 0;
        while (used[c]) ++c;
        out.colors[v] = c;
        out.count = std::max(out.count, c + 1);
        out.order.push_back(v);
    }
    return out;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

namespace detail {

struct Dsatur {
    const Graph& g;
    int n;
    int best;
    std::vector<int> color, best_color;
    std::vector<std::vector<bool>> sat; // sat[v][c]: a neighbour of v wears c
    std::vector<int> sat_count;

    explicit Dsatur(const Graph& g_, int ub) : g(g_), n(g_.order()), best(ub) {
        color.assign(n, -1);
        sat.assign(n, std::vector<bool>(n + 1, false));
        sat_count.assign(n, 0);
    }

    void solve(int colored, int maxc) {
        if (maxc + 1 >= best) return; // cannot improve
        if (colored == n) {
            best = maxc + 1;
            best_color = color;
            return;
        }
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] >= 0) continue;
            if (v == -1 || sat_count[u] > sat_count[v] ||
                (sat_count[u] == sat_count[v] && g.degree(u) > g.degree(v)))
                v = u;
        }
        int limit = std::min(maxc + 1, best - 1);
        for (int c = 0; c <= limit; ++c) {
            if (sat[v][c]) continue;
            color[v] = c;
            std::vector<int> bumped;
            for (int w : g.neighbors(v))
                if (color[w] < 0 && !sat[w][c]) {
                    sat[w][c] = true;
                    ++sat_count[w];
                    bumped.push_back(w);
                }
            solve(colored + 1, std::max(maxc, c));
            for (int w : bumped) {
                sat[w][c] = false;
                --sat_count[w];
            }
            color[v] = -1;
        }
    }
};

} // namespace detail

namespace detail {

// Greedy clique grown along a descending-degree order: a quick lower bound.
inline int greedy_clique_bound(const Graph& g) {
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return g.degree(u) > g.degree(v); });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) { fits = false; break; }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

} // namespace detail

/// Exact chromatic number by DSATUR branch and bound with a greedy clique
/// lower bound; desk scale (<= 30 vertices, budget error beyond).
inline int exact_chromatic(const Graph& g) {
    if (g.order() > 30) throw budget_error("exact coloring limited to 30 vertices");
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    int ub = degeneracy_greedy(g).count;
    int lb = detail::greedy_clique_bound(g);
    if (lb == ub) return ub;
    detail::Dsatur d(g, ub);
    d.solve(0, -1);
    return d.best;
}

/// 2|E| / |V| as an exact fraction.
inline Rational average_degree(const Graph& g) {
    if (g.order() == 0) throw hypothesis_error("average degree of the empty graph");
    return Rational(2 * static_cast<long long>(g.size()), g.order());
}

struct ChromaticBoundReport {
    bool ok = false;
    int colors_used = 0;
    long long bound = 0;
    bool exact = false; // colors_used is the chromatic number, not just an upper bound
};

/// Checks the coloring bound chi(G) <= d(d+1).  Exact below 17 vertices,
/// greedy upper bound (still sound for `ok`) above.
inline ChromaticBoundReport verify_chromatic_bound(const Graph& g, int d) {
    if (d < 2) throw hypothesis_error("d must be at least 2");
    ChromaticBoundReport r;
    r.bound = static_cast<long long>(d) * (d + 1);
    if (g.order() == 0) {
        r.ok = true;
        r.exact = true;
        return r;
    }
    if (g.order() <= 16) {
        r.colors_used = exact_chromatic(g);
        r.exact = true;
    } else {
        r.colors_used = degeneracy_greedy(g).count;
    }
    r.ok = r.colors_used <= r.bound;
    return r;
}

struct SkeletonDegreeAudit {
    Rational average;
    long long bound = 0;
    bool ok = false;
};

/// Average skeleton degree against the strict d(d+1) threshold.
inline SkeletonDegreeAudit skeleton_average_degree_audit(const CellComplex& c, int d) {
    if (d < 2) throw hypothesis_error("d must be at least 2");
    SkeletonDegreeAudit a;
    a.average = average_degree(c.skeleton());
    a.bound = static_cast<long long>(d) * (d + 1);
    a.ok = a.average < Rational(a.bound);
    return a;
}

} // namespace geomlift

#endif
