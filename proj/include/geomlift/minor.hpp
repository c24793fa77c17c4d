#ifndef GEOMLIFT_MINOR_HPP
#define GEOMLIFT_MINOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace geomlift {

/// Witness that `pattern` is a minor of some host graph: one connected,
/// pairwise-disjoint branch set per pattern vertex, plus one host edge
/// per pattern edge joining the two branch sets.
struct MinorModel {
    Graph pattern;
    std::vector<std::vector<int>> branch_sets;   // indexed by pattern vertex, sorted
    std::map<Edge, Edge> witness_edges;          // pattern edge -> host edge
};

struct MinorVerifyReport {
    bool ok = false;
    std::string violation; // first violated clause, empty when ok
};

inline MinorVerifyReport verify_minor_model(const Graph& g, const MinorModel& m) {
    MinorVerifyReport r;
    auto fail = [&](const std::string& s) {
        r.violation = s;
        return r;
    };
    if (static_cast<int>(m.branch_sets.size()) != m.pattern.order())
        return fail("branch set count");
    std::vector<int> owner(g.order(), -1);
    for (size_t i = 0; i < m.branch_sets.size(); ++i) {
        if (m.branch_sets[i].empty()) return fail("empty branch set");
        for (int v : m.branch_sets[i]) {
            if (v < 0 || v >= g.order()) throw hypothesis_error("branch set references missing vertex");
            if (owner[v] != -1) return fail("disjointness");
            owner[v] = static_cast<int>(i);
        }
    }
    for (const auto& bs : m.branch_sets) {
        // connectivity of the induced branch subgraph
        std::vector<int> stack{bs[0]};
        std::vector<bool> seen(g.order(), false);
        seen[bs[0]] = true;
        size_t cnt = 1;
        int part = owner[bs[0]];
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (owner[w] == part && !seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != bs.size()) return fail("connectivity");
    }
    for (Edge pe : m.pattern.edges()) {
        auto it = m.witness_edges.find(pe);
        if (it == m.witness_edges.end()) return fail("edge-witness missing");
        Edge he = it->second;
        if (!g.has_edge(he.first, he.second)) throw hypothesis_error("witness references missing edge");
        int a = owner[he.first], b = owner[he.second];
        if (!((a == pe.first && b == pe.second) || (a == pe.second && b == pe.first)))
            return fail("edge-witness endpoints");
    }
    r.ok = true;
    return r;
}

namespace detail {

using Mask = std::uint32_t;

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    int n, t;
    std::vector<Mask> adj;           // host adjacency masks
    std::vector<int> sym_prev;       // seed(i) must exceed seed(sym_prev[i]); -1 = none
    std::vector<Mask> branch;        // chosen branch sets
    std::vector<int> seed;

    MinorSearch(const Graph& g_, const Graph& h_, std::vector<int> sym)
        : g(g_), h(h_), n(g_.order()), t(h_.order()), sym_prev(std::move(sym)) {
        adj.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }
        branch.assign(t, 0);
        seed.assign(t, -1);
        if (sym_prev.empty()) sym_prev.assign(t, -1);
    }

    Mask adj_of(Mask s) const {
        Mask a = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) a |= adj[v];
        return a & ~s;
    }

    bool edges_ok(int i) const {
        for (int j = 0; j < i; ++j)
            if (h.has_edge(i, j) && !(adj_of(branch[i]) & branch[j])) return false;
        return true;
    }

    bool found = false;

    bool assign(int i, Mask used) {
        if (i == t) return true;
        int lo = sym_prev[i] >= 0 ? seed[sym_prev[i]] + 1 : 0;
        for (int s = lo; s < n; ++s) {
            if (used >> s & 1) continue;
            if (n - __builtin_popcount(used) < t - i) return false;
            seed[i] = s;
            if (grow(i, used, Mask{1} << s, adj[s] & ~used & ~((Mask{1} << (s + 1)) - 1), 0))
                return true;
        }
        return false;
    }

    // Enumerate connected supersets of `cur` whose minimum is seed[i].
    // `ext` = frontier vertices eligible to join; `banned` = frontier
    // vertices already declined (prevents duplicate enumeration).
    bool grow(int i, Mask used, Mask cur, Mask ext, Mask banned) {
        branch[i] = cur;
        if (edges_ok(i) && assign(i + 1, used | cur)) return true;
        Mask avail = ext & ~banned;
        while (avail) {
            int v = __builtin_ctz(avail);
            Mask vb = Mask{1} << v;
            avail &= ~vb;
            Mask next_ext = (ext | adj[v]) & ~used & ~(cur | vb) &
                            ~((Mask{1} << (seed[i] + 1)) - 1);
            if (grow(i, used, cur | vb, next_ext, banned)) return true;
            banned |= vb;
        }
        return false;
    }
};

inline MinorModel model_from_masks(const Graph& g, const Graph& h,
                                   const std::vector<Mask>& branch) {
    MinorModel m;
    m.pattern = h;
    for (Mask b : branch) {
        std::vector<int> vs;
        for (int v = 0; v < g.order(); ++v)
            if (b >> v & 1) vs.push_back(v);
        m.branch_sets.push_back(std::move(vs));
    }
    for (Edge pe : h.edges()) {
        for (Edge he : g.edges()) {
            bool fwd = (branch[pe.first] >> he.first & 1) && (branch[pe.second] >> he.second & 1);
            bool bwd = (branch[pe.second] >> he.first & 1) && (branch[pe.first] >> he.second & 1);
            if (fwd || bwd) {
                m.witness_edges[pe] = he;
                break;
            }
        }
    }
    return m;
}

inline std::optional<MinorModel> minor_search(const Graph& g, const Graph& h,
                                              std::vector<int> sym) {
    if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
    if (h.order() == 0) return MinorModel{h, {}, {}};
    if (g.order() > 31) throw budget_error("host graph too large for exact minor search");
    if (h.order() > 8) throw budget_error("pattern graphs limited to 8 vertices");
    MinorSearch s(g, h, std::move(sym));
    if (!s.assign(0, 0)) return std::nullopt;
    return model_from_masks(g, h, s.branch);
}

} // namespace detail

/// Exact minor containment by branch-and-bound over branch-set
/// assignments.  Desk scale: host up to ~16 vertices for general patterns.
inline std::optional<MinorModel> has_minor(const Graph& g, const Graph& h) {
    return detail::minor_search(g, h, {});
}

/// K_t specialization; branch sets are ordered by minimum element.
inline std::optional<MinorModel> has_clique_minor(const Graph& g, int t) {
    if (t < 1) throw hypothesis_error("t must be positive");
    if (g.size() < t * (t - 1) / 2 || g.order() < t) return std::nullopt;
    std::vector<int> sym(t);
    for (int i = 0; i < t; ++i) sym[i] = i - 1;
    return detail::minor_search(g, Graph::complete(t), std::move(sym));
}

/// K_{s,t} specialization; branch sets within each side are ordered.
inline std::optional<MinorModel> has_complete_bipartite_minor(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw hypothesis_error("sides must be positive");
    std::vector<int> sym(s + t, -1);
    for (int i = 1; i < s; ++i) sym[i] = i - 1;
    for (int i = s + 1; i < s + t; ++i) sym[i] = i - 1;
    return detail::minor_search(g, Graph::complete_bipartite(s, t), std::move(sym));
}

/// Up to `budget` random graphs on n vertices that exclude both K_{d+3}
/// and K_{3,d+1} as minors.  PRNG: std::mt19937_64 (seeded); bit-for-bit
/// reproducible for a fixed seed.
inline std::vector<Graph> minor_free_sampler(int n, int d, std::uint64_t seed, int budget) {
    if (n > 14) throw budget_error("sampler limited to n <= 14");
    if (d < 2) throw hypothesis_error("d must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Graph> out;
    long long attempts = 0, max_attempts = 4000LL * std::max(budget, 1);
    while (static_cast<int>(out.size()) < budget && attempts++ < max_attempts) {
        double p = 0.1 + 0.35 * unit(rng);
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) e.push_back({u, v});
        Graph g(n, std::move(e));
        if (!has_clique_minor(g, d + 3) && !has_complete_bipartite_minor(g, 3, d + 1))
            out.push_back(std::move(g));
    }
    return out;
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json to_json(const MinorModel& m) {
    nlohmann::json j;
    j["pattern"] = to_json(m.pattern);
    nlohmann::json bs = nlohmann::json::object();
    for (size_t i = 0; i < m.branch_sets.size(); ++i)
        bs[std::to_string(i)] = m.branch_sets[i];
    j["branch_sets"] = bs;
    nlohmann::json we = nlohmann::json::object();
    for (const auto& [pe, he] : m.witness_edges)
        we[std::to_string(pe.first) + "-" + std::to_string(pe.second)] = {he.first, he.second};
    j["witness_edges"] = we;
    return j;
}

inline MinorModel minor_model_from_json(const nlohmann::json& j) {
    try {
        MinorModel m;
        m.pattern = graph_from_json(j.at("pattern"));
        m.branch_sets.assign(m.pattern.order(), {});
        for (const auto& [key, val] : j.at("branch_sets").items())
            m.branch_sets.at(std::stoul(key)) = val.get<std::vector<int>>();
        for (const auto& [key, val] : j.at("witness_edges").items()) {
            auto dash = key.find('-');
            Edge pe = make_edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
            m.witness_edges[pe] = make_edge(val.at(0).get<int>(), val.at(1).get<int>());
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad minor model JSON: ") + e.what());
    } catch (const std::out_of_range&) {
        throw parse_error("bad minor model JSON: branch set index out of range");
    }
}

} // namespace geomlift

#endif
