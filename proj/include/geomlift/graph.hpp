#ifndef GEOMLIFT_GRAPH_HPP
#define GEOMLIFT_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace geomlift {

using Edge = std::pair<int, int>; // stored with first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on dense vertex ids 0..n-1.  Immutable after
/// construction; all operations below are pure functions.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("parallel edge");
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    // --- named construction ---

    static Graph complete(int n) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.push_back({u, v});
        return Graph(n, std::move(e));
    }

    static Graph cycle(int n) {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
        return Graph(n, std::move(e));
    }

    static Graph path(int n) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
        return Graph(n, std::move(e));
    }

    static Graph complete_bipartite(int s, int t) {
        std::vector<Edge> e;
        for (int u = 0; u < s; ++u)
            for (int v = 0; v < t; ++v) e.push_back({u, s + v});
        return Graph(s + t, std::move(e));
    }

    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    static Graph petersen() {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.push_back(make_edge(i, (i + 1) % 5));
            e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
            e.push_back({i, i + 5});
        }
        return Graph(10, std::move(e));
    }

    // Octahedron = K_{2,2,2}; non-adjacent pairs (0,1),(2,3),(4,5).
    static Graph octahedron() {
        std::vector<Edge> e;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!(u / 2 == v / 2 && u % 2 == 0 && v == u + 1)) e.push_back({u, v});
        return Graph(6, std::move(e));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- basic traversals -------------------------------------------------------

inline std::vector<int> component_of(const Graph& g, int start,
                                     const std::vector<bool>& removed) {
    std::vector<int> comp;
    std::vector<bool> seen(g.order(), false);
    std::deque<int> q{start};
    seen[start] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        comp.push_back(v);
        for (int w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                q.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

/// Connected components of g minus a removed vertex set.
inline std::vector<std::vector<int>> components(const Graph& g,
                                                const std::vector<int>& removed_vertices = {}) {
    std::vector<bool> removed(g.order(), false);
    for (int v : removed_vertices) removed.at(v) = true;
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (removed[s] || seen[s]) continue;
        auto comp = component_of(g, s, removed);
        for (int v : comp) seen[v] = true;
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return components(g).size() == 1;
}

// --- vertex connectivity ----------------------------------------------------

namespace detail {

// Max number of internally vertex-disjoint s-t paths (s,t non-adjacent),
// via unit-capacity max flow on the vertex-split digraph.
inline int disjoint_path_count(const Graph& g, int s, int t) {
    int n = g.order();
    // node 2v = v_in, 2v+1 = v_out
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = n;
        cap[2 * v + 1][2 * u] = n;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(2 * n, -1);
        std::deque<int> q{source};
        prev[source] = source;
        while (!q.empty() && prev[sink] == -1) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < 2 * n; ++y)
                if (cap[x][y] > 0 && prev[y] == -1) {
                    prev[y] = x;
                    q.push_back(y);
                }
        }
        if (prev[sink] == -1) break;
        for (int y = sink; y != source; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace detail

/// kappa(g).  Convention: kappa(K_n) = n-1; disconnected graphs have 0.
inline int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n == 0) throw hypothesis_error("empty graph");
    if (n == 1) return 0;
    if (g.size() == n * (n - 1) / 2) return n - 1; // complete
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (int u = 0; u < n && best > 0; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            best = std::min(best, detail::disjoint_path_count(g, u, v));
        }
    return best;
}

/// "k-connected" per the standing convention: kappa >= k and |V| >= k+1.
inline bool is_k_connected(const Graph& g, int k) {
    return g.order() >= k + 1 && vertex_connectivity(g) >= k;
}

// --- contraction ------------------------------------------------------------

/// Simple G/e: merge the two endpoints, drop loops, merge parallels.
/// Surviving vertices are relabeled densely in increasing old-id order,
/// with the merged vertex at the position of min(e).
inline Graph contract_edge(const Graph& g, Edge e) {
    auto [x, y] = make_edge(e.first, e.second);
    if (!g.has_edge(x, y)) throw hypothesis_error("no such edge");
    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (v != y) relabel[v] = next++;
    relabel[y] = relabel[x];
    std::set<Edge> out;
    for (auto [u, v] : g.edges()) {
        int a = relabel[u], b = relabel[v];
        if (a != b) out.insert(make_edge(a, b));
    }
    return Graph(g.order() - 1, std::vector<Edge>(out.begin(), out.end()));
}

/// Some edge e with G/e still k-connected, or nullopt.  Requires g itself
/// k-connected.  Existence is only guaranteed from |V| >= k+3 on: for the
/// small complete graphs the answer is legitimately nullopt (K_{k+1}/e =
/// K_k is only (k-1)-connected under the kappa convention).
inline std::optional<Edge> find_contractible_edge(const Graph& g, int k) {
    if (!is_k_connected(g, k)) throw hypothesis_error("hypothesis violated: graph is not k-connected");
    for (Edge e : g.edges())
        if (is_k_connected(contract_edge(g, e), k)) return e;
    return std::nullopt;
}

// --- bridges of a cycle -----------------------------------------------------

struct Bridge {
    std::vector<int> host;              // the host cycle, in cyclic order
    std::vector<int> internal_vertices; // sorted; empty for trivial bridges
    std::vector<int> attachments;       // sorted vertices on the host
    std::vector<Edge> edges;            // sorted

    bool trivial() const { return internal_vertices.empty(); }
    int attachment_count() const { return static_cast<int>(attachments.size()); }
};

inline void check_cycle(const Graph& g, const std::vector<int>& c) {
    if (c.size() < 3) throw hypothesis_error("not a cycle: fewer than 3 vertices");
    std::set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) throw hypothesis_error("not a cycle: repeated vertex");
    for (size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()]))
            throw hypothesis_error("not a cycle: missing edge " + std::to_string(c[i]) + "-" +
                                   std::to_string(c[(i + 1) % c.size()]));
}

/// Bridges of the cycle c in g: one bridge per component of G - V(c)
/// (together with its linking edges), plus one trivial bridge per chord.
inline std::vector<Bridge> bridges_of_cycle(const Graph& g, const std::vector<int>& c) {
    check_cycle(g, c);
    std::set<int> on_cycle(c.begin(), c.end());
    std::set<Edge> cycle_edges;
    for (size_t i = 0; i < c.size(); ++i)
        cycle_edges.insert(make_edge(c[i], c[(i + 1) % c.size()]));

    std::vector<Bridge> out;
    for (const auto& comp : components(g, std::vector<int>(on_cycle.begin(), on_cycle.end()))) {
        Bridge b;
        b.host = c;
        b.internal_vertices = comp;
        std::set<int> in_comp(comp.begin(), comp.end());
        std::set<int> att;
        for (int v : comp)
            for (int w : g.neighbors(v)) {
                if (in_comp.count(w)) {
                    if (v < w) b.edges.push_back({v, w});
                } else { // w is on the cycle
                    b.edges.push_back(make_edge(v, w));
                    att.insert(w);
                }
            }
        b.attachments.assign(att.begin(), att.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
    }
    for (auto e : g.edges()) {
        if (cycle_edges.count(e)) continue;
        if (on_cycle.count(e.first) && on_cycle.count(e.second)) {
            Bridge b;
            b.host = c;
            b.attachments = {e.first, e.second};
            b.edges = {e};
            out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) {
        return std::tie(a.attachments, a.internal_vertices) < std::tie(b.attachments, b.internal_vertices);
    });
    return out;
}

enum class BridgeRelation { avoid, skew, equivalent_3_bridges, overlap_other };

inline std::string to_string(BridgeRelation r) {
    switch (r) {
        case BridgeRelation::avoid: return "avoid";
        case BridgeRelation::skew: return "skew";
        case BridgeRelation::equivalent_3_bridges: return "equivalent-3-bridges";
        default: return "overlap-other";
    }
}

/// d=2 specialization: segments are the arcs of the host cycle between
/// consecutive attachments.
inline BridgeRelation classify_bridge_pair(const Bridge& b1, const Bridge& b2,
                                           const std::vector<int>& c) {
    if (b1.host != c || b2.host != c)
        throw hypothesis_error("bridges of different hosts");
    std::map<int, int> pos;
    for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
    auto positions = [&](const Bridge& b) {
        std::vector<int> p;
        for (int v : b.attachments) p.push_back(pos.at(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<int> p1 = positions(b1), p2 = positions(b2);

    // all attachments of `small` inside one closed segment of `big`?
    auto in_one_segment = [&](const std::vector<int>& big, const std::vector<int>& small) {
        if (big.size() < 2) return true;
        int m = static_cast<int>(c.size());
        for (size_t i = 0; i < big.size(); ++i) {
            int lo = big[i], hi = big[(i + 1) % big.size()];
            int len = (hi - lo + m) % m; // closed arc lo..hi
            bool all_in = true;
            for (int q : small) {
                int off = (q - lo + m) % m;
                if (off > len) { all_in = false; break; }
            }
            if (all_in) return true;
        }
        return false;
    };
    if (in_one_segment(p1, p2) || in_one_segment(p2, p1)) return BridgeRelation::avoid;

    // skew: attachments u,v of b1 and x,y of b2 in strict cyclic order u,x,v,y
    int m = static_cast<int>(c.size());
    auto strictly_between = [&](int a, int b, int q) {
        // q strictly inside the arc a..b (going forward)
        int len = (b - a + m) % m;
        int off = (q - a + m) % m;
        return off > 0 && off < len;
    };
    for (int u : p1)
        for (int v : p1) {
            if (u == v) continue;
            bool x_in = false, y_in = false;
            for (int x : p2) {
                if (strictly_between(u, v, x)) x_in = true;
                if (strictly_between(v, u, x)) y_in = true;
            }
            if (x_in && y_in) return BridgeRelation::skew;
        }

    if (b1.attachments == b2.attachments && b1.attachments.size() == 3)
        return BridgeRelation::equivalent_3_bridges;
    return BridgeRelation::overlap_other;
}

// --- ear decomposition ------------------------------------------------------

struct EarDecomposition {
    std::vector<int> initial_cycle;        // G_0, in cyclic order
    std::vector<std::vector<int>> ears;    // open paths v0..vk; endpoints in G_i
};

namespace detail {

// Shortest cycle through the lexicographically least choice; deterministic.
inline std::vector<int> find_initial_cycle(const Graph& g) {
    std::vector<int> best;
    for (int root = 0; root < g.order(); ++root) {
        // BFS tree; first non-tree edge closing a cycle through root
        std::vector<int> par(g.order(), -1), dist(g.order(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else if (w != par[v] && (par[w] != v)) {
                    // candidate cycle through lowest common ancestor
                    std::vector<int> pa, pb;
                    int a = v, b = w;
                    while (a != b) {
                        if (dist[a] >= dist[b]) { pa.push_back(a); a = par[a]; }
                        else { pb.push_back(b); b = par[b]; }
                    }
                    std::vector<int> cyc;
                    cyc.push_back(a);
                    cyc.insert(cyc.end(), pa.rbegin(), pa.rend());
                    for (int x : pb) cyc.push_back(x);
                    std::reverse(cyc.begin() + 1, cyc.end()); // orientation canon
                    std::set<int> uniq(cyc.begin(), cyc.end());
                    if (uniq.size() != cyc.size() || cyc.size() < 3) continue;
                    if (best.empty() || cyc.size() < best.size() ||
                        (cyc.size() == best.size() && cyc < best))
                        best = cyc;
                }
            }
        }
        if (!best.empty()) break; // root 0 suffices for connected g; keep least root otherwise
    }
    if (best.empty()) throw hypothesis_error("graph has no cycle");
    return best;
}

} // namespace detail

/// Open ear decomposition of a 2-connected graph starting from a cycle.
inline EarDecomposition ear_decomposition(const Graph& g) {
    if (!is_k_connected(g, 2)) throw hypothesis_error("graph is not 2-connected");
    EarDecomposition ed;
    ed.initial_cycle = detail::find_initial_cycle(g);

    std::vector<bool> in_sub(g.order(), false);
    std::set<Edge> used;
    for (size_t i = 0; i < ed.initial_cycle.size(); ++i) {
        in_sub[ed.initial_cycle[i]] = true;
        used.insert(make_edge(ed.initial_cycle[i], ed.initial_cycle[(i + 1) % ed.initial_cycle.size()]));
    }

    while (static_cast<int>(used.size()) < g.size()) {
        std::vector<int> ear;
        // first unused edge incident to the current subgraph, in lex order
        for (int u = 0; u < g.order() && ear.empty(); ++u) {
            if (!in_sub[u]) continue;
            for (int w : g.neighbors(u)) {
                if (used.count(make_edge(u, w))) continue;
                if (in_sub[w]) { // chord ear
                    ear = {u, w};
                    break;
                }
                // grow a path from w back to the subgraph, avoiding u
                std::vector<int> par(g.order(), -2);
                std::deque<int> q{w};
                par[w] = u;
                par[u] = -3; // forbidden
                int hit = -1;
                while (!q.empty() && hit == -1) {
                    int v = q.front();
                    q.pop_front();
                    for (int x : g.neighbors(v)) {
                        if (par[x] != -2) continue;
                        par[x] = v;
                        if (in_sub[x]) { hit = x; break; }
                        if (!in_sub[x]) q.push_back(x);
                    }
                }
                if (hit == -1) continue; // cannot close an open ear from here
                for (int v = hit; v != u; v = par[v]) ear.push_back(v);
                ear.push_back(u);
                std::reverse(ear.begin(), ear.end());
                break;
            }
        }
        if (ear.empty()) throw hypothesis_error("ear decomposition failed"); // unreachable for 2-connected g
        for (size_t i = 0; i + 1 < ear.size(); ++i) {
            used.insert(make_edge(ear[i], ear[i + 1]));
            in_sub[ear[i]] = true;
            in_sub[ear[i + 1]] = true;
        }
        ed.ears.push_back(std::move(ear));
    }
    return ed;
}

/// Replays the stages of an ear decomposition against g.  Checks that G_0 is a
/// cycle of g, every ear is a nontrivial open path with endpoints in the
/// current stage and interior outside, every stage is 2-connected, and the
/// final stage is exactly g.
inline bool verify_ear_decomposition(const Graph& g, const EarDecomposition& ed,
                                     std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    try {
        check_cycle(g, ed.initial_cycle);
    } catch (const hypothesis_error& e) {
        return fail(e.what());
    }
    std::set<int> verts(ed.initial_cycle.begin(), ed.initial_cycle.end());
    std::set<Edge> es;
    for (size_t i = 0; i < ed.initial_cycle.size(); ++i)
        es.insert(make_edge(ed.initial_cycle[i], ed.initial_cycle[(i + 1) % ed.initial_cycle.size()]));
    for (const auto& ear : ed.ears) {
        if (ear.size() < 2) return fail("ear too short");
        if (ear.front() == ear.back()) return fail("ear is not an open path");
        if (!verts.count(ear.front()) || !verts.count(ear.back()))
            return fail("ear endpoints not in current stage");
        for (size_t i = 1; i + 1 < ear.size(); ++i)
            if (verts.count(ear[i])) return fail("ear interior vertex already in stage");
        for (size_t i = 0; i + 1 < ear.size(); ++i) {
            if (!g.has_edge(ear[i], ear[i + 1])) return fail("ear edge not in graph");
            if (es.count(make_edge(ear[i], ear[i + 1]))) return fail("ear reuses an edge");
            es.insert(make_edge(ear[i], ear[i + 1]));
        }
        for (int v : ear) verts.insert(v);
        // stage 2-connectivity
        std::vector<int> vlist(verts.begin(), verts.end());
        std::map<int, int> idx;
        for (size_t i = 0; i < vlist.size(); ++i) idx[vlist[i]] = static_cast<int>(i);
        std::vector<Edge> stage_edges;
        for (auto e : es) stage_edges.push_back(make_edge(idx[e.first], idx[e.second]));
        if (!is_k_connected(Graph(static_cast<int>(vlist.size()), stage_edges), 2))
            return fail("intermediate stage not 2-connected");
    }
    if (static_cast<int>(es.size()) != g.size() || static_cast<int>(verts.size()) != g.order())
        return fail("decomposition does not reconstruct the graph");
    if (why) why->clear();
    return true;
}

// --- marked S-decomposition -------------------------------------------------

struct MarkedSDecomposition {
    std::vector<int> cut; // S, sorted
    struct Component {
        std::vector<int> vertices;       // original ids: S union one component, sorted
        std::vector<Edge> edges;         // induced edges plus marker edges, original ids
        std::vector<Edge> marker_edges;  // clique pairs on S absent from g
    };
    std::vector<Component> components;
};

inline MarkedSDecomposition marked_s_decomposition(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.order()) throw hypothesis_error("cut vertex out of range");
    auto comps = components(g, s);
    if (comps.size() < 2) throw hypothesis_error("not a separator");

    std::vector<Edge> marker;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) marker.push_back({s[i], s[j]});

    MarkedSDecomposition out;
    out.cut = s;
    for (const auto& comp : comps) {
        MarkedSDecomposition::Component mc;
        mc.vertices = s;
        mc.vertices.insert(mc.vertices.end(), comp.begin(), comp.end());
        std::sort(mc.vertices.begin(), mc.vertices.end());
        std::set<int> in(mc.vertices.begin(), mc.vertices.end());
        for (auto e : g.edges())
            if (in.count(e.first) && in.count(e.second)) mc.edges.push_back(e);
        mc.marker_edges = marker;
        mc.edges.insert(mc.edges.end(), marker.begin(), marker.end());
        std::sort(mc.edges.begin(), mc.edges.end());
        out.components.push_back(std::move(mc));
    }
    return out;
}

/// Round-trip check: union of components minus marker edges equals g.
inline bool reconstructs(const Graph& g, const MarkedSDecomposition& d) {
    std::set<int> verts;
    std::set<Edge> edges;
    std::set<Edge> markers;
    for (const auto& c : d.components) {
        verts.insert(c.vertices.begin(), c.vertices.end());
        edges.insert(c.edges.begin(), c.edges.end());
        markers.insert(c.marker_edges.begin(), c.marker_edges.end());
    }
    for (auto e : markers) edges.erase(e);
    if (static_cast<int>(verts.size()) != g.order()) return false;
    return std::vector<Edge>(edges.begin(), edges.end()) == g.edges();
}

// --- BFS layering -----------------------------------------------------------

/// Layer i = vertices at distance exactly i from u0; layer 0 = {u0}.
inline std::vector<std::vector<int>> bfs_layers(const Graph& g, int u0) {
    if (u0 < 0 || u0 >= g.order()) throw hypothesis_error("basepoint out of range");
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q{u0};
    dist[u0] = 0;
    int maxd = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                maxd = std::max(maxd, dist[w]);
                q.push_back(w);
            }
    }
    std::vector<int> unreachable;
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] == -1) unreachable.push_back(v);
    if (!unreachable.empty()) {
        std::ostringstream os;
        os << "graph disconnected; unreachable:";
        for (int v : unreachable) os << ' ' << v;
        throw hypothesis_error(os.str());
    }
    std::vector<std::vector<int>> layers(maxd + 1);
    for (int v = 0; v < g.order(); ++v) layers[dist[v]].push_back(v);
    return layers;
}

// --- file formats -----------------------------------------------------------

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = arr;
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw parse_error("edge is not a pair");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what());
    }
}

/// Line-oriented format: header "p graph <n> <m>", then m lines "u v".
/// Lines starting with 'c' are comments.  JSON input (leading '{') is
/// dispatched to the JSON parser.
inline Graph parse_graph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(nlohmann::json::parse(text));

    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "graph")
                throw parse_error("line " + std::to_string(lineno) + ": bad header");
            continue;
        }
        if (n < 0) throw parse_error("line " + std::to_string(lineno) + ": edge before header");
        int u, v;
        try {
            u = std::stoi(tok);
        } catch (...) {
            throw parse_error("line " + std::to_string(lineno) + ": bad vertex id");
        }
        if (!(ls >> v)) throw parse_error("line " + std::to_string(lineno) + ": missing endpoint");
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": endpoint out of range");
        Edge e = make_edge(u, v);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw parse_error("line " + std::to_string(lineno) + ": duplicate edge");
        edges.push_back(e);
    }
    if (n < 0) throw parse_error("missing header");
    if (m >= 0 && static_cast<int>(edges.size()) != m)
        throw parse_error("header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

} // namespace geomlift

#endif
