#ifndef GEOMLIFT_COMPLEX_HPP
#define GEOMLIFT_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <boost/property_map/property_map.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace geomlift {

/// One cell of a graded complex.  Boundary ids reference cells of dimension
/// exactly one lower.  0-cells biject with skeleton vertices, 1-cells with
/// skeleton edges.
struct Cell {
    int dim = 0;
    std::vector<int> vertices; // sorted
    std::vector<int> boundary; // sorted ids
};

class CellComplex {
public:
    CellComplex() = default;

    static CellComplex from_graph(const Graph& g) {
        CellComplex c;
        c.skeleton_ = g;
        for (int v = 0; v < g.order(); ++v) c.add_cell(0, {v}, {});
        // 0-cell ids equal vertex ids by construction
        for (auto [u, v] : g.edges()) c.add_cell(1, {u, v}, {u, v});
        return c;
    }

    /// Internal: installs the skeleton directly during deserialization and
    /// subcomplex extraction, where cells are re-added one by one.
    void force_skeleton(Graph g) { skeleton_ = std::move(g); }

    int add_cell(int dim, std::vector<int> vertices, std::vector<int> boundary) {
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw hypothesis_error("cell with repeated vertex");
        std::sort(boundary.begin(), boundary.end());
        for (int b : boundary) {
            if (b < 0 || b >= static_cast<int>(cells_.size()))
                throw hypothesis_error("boundary id out of range");
            if (cells_[b].dim != dim - 1)
                throw hypothesis_error("boundary cell of wrong dimension");
        }
        int id = static_cast<int>(cells_.size());
        if (dim >= static_cast<int>(by_dim_.size())) by_dim_.resize(dim + 1);
        by_dim_[dim].push_back(id);
        if (dim == 1 && vertices.size() == 2)
            edge_ids_[{vertices[0], vertices[1]}] = id;
        cells_.push_back(Cell{dim, std::move(vertices), std::move(boundary)});
        return id;
    }

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int id) const { return cells_.at(id); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Graph& skeleton() const { return skeleton_; }

    const std::vector<int>& cells_of_dim(int d) const {
        static const std::vector<int> empty;
        if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
        return by_dim_[d];
    }

    int edge_cell(int u, int v) const {
        auto it = edge_ids_.find(make_edge(u, v));
        if (it == edge_ids_.end()) throw hypothesis_error("no such edge cell");
        return it->second;
    }

    /// All faces of `id` including itself (transitive boundary closure).
    std::vector<int> closure(int id) const {
        std::set<int> out;
        std::vector<int> stack{id};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (!out.insert(x).second) continue;
            for (int b : cell(x).boundary) stack.push_back(b);
        }
        return {out.begin(), out.end()};
    }

    /// Cells of dimension j in the closure of id (j < dim of id).
    std::vector<int> faces(int id, int j) const {
        std::vector<int> out;
        for (int x : closure(id))
            if (cells_[x].dim == j) out.push_back(x);
        return out;
    }

    /// Cells of dimension j whose closure contains id (j > dim of id).
    std::vector<int> cofaces(int id, int j) const {
        std::vector<int> out;
        for (int z : cells_of_dim(j)) {
            auto cl = closure(z);
            if (std::binary_search(cl.begin(), cl.end(), id)) out.push_back(z);
        }
        return out;
    }

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> by_dim_;
    std::map<Edge, int> edge_ids_;
    Graph skeleton_;
};

struct FaceVector {
    std::vector<long long> counts;
    bool operator==(const FaceVector&) const = default;
};

inline FaceVector face_vector(const CellComplex& c) {
    FaceVector f;
    for (int d = 0; d <= c.dimension(); ++d)
        f.counts.push_back(static_cast<long long>(c.cells_of_dim(d).size()));
    return f;
}

/// d_{Gj}(a_i): number of j-cells incident to the cell, or adjacent ones
/// when j equals its dimension (sharing a facet; vertices use the skeleton).
inline int incidence_degree(const CellComplex& c, int id, int j) {
    if (id < 0 || id >= c.cell_count()) throw hypothesis_error("bad cell id");
    if (j < 0 || j > c.dimension()) throw hypothesis_error("bad dimension");
    int d = c.cell(id).dim;
    if (j < d) return static_cast<int>(c.faces(id, j).size());
    if (j > d) return static_cast<int>(c.cofaces(id, j).size());
    if (d == 0) return c.skeleton().degree(c.cell(id).vertices[0]);
    int count = 0;
    const auto& mine = c.cell(id).boundary;
    for (int z : c.cells_of_dim(d)) {
        if (z == id) continue;
        for (int b : c.cell(z).boundary)
            if (std::binary_search(mine.begin(), mine.end(), b)) {
                ++count;
                break;
            }
    }
    return count;
}

struct ClosedReport {
    bool closed = false;
    std::vector<int> pendant; // facets shared by fewer than two top cells
};

/// Closedness: every facet of a top-dimensional cell is shared with another
/// top cell.  The pendant list holds the unshared facets.
inline ClosedReport is_closed(const CellComplex& c, int ambient_d) {
    if (ambient_d != c.dimension() + 1)
        throw hypothesis_error("ambient dimension mismatch");
    int top = c.dimension();
    ClosedReport r;
    std::map<int, int> facet_count;
    for (int z : c.cells_of_dim(top))
        for (int b : c.cell(z).boundary) ++facet_count[b];
    for (int f : c.cells_of_dim(top - 1))
        if (facet_count[f] < 2) r.pendant.push_back(f);
    r.closed = r.pendant.empty();
    return r;
}

// --- subcomplex extraction --------------------------------------------------

/// Subcomplex on a boundary-closed id set, reindexed densely; `id_map[new] =
/// old`.  The skeleton is restricted accordingly (vertices renumbered by
/// 0-cell order).
inline CellComplex subcomplex(const CellComplex& c, const std::vector<int>& ids,
                              std::vector<int>* id_map_out = nullptr) {
    std::set<int> in(ids.begin(), ids.end());
    for (int id : ids) {
        if (id < 0 || id >= c.cell_count()) throw hypothesis_error("bad cell id");
        for (int b : c.cell(id).boundary)
            if (!in.count(b)) throw hypothesis_error("not a subcomplex: missing boundary cell");
    }
    std::vector<int> order(in.begin(), in.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.cell(a).dim < c.cell(b).dim; });
    std::map<int, int> new_id;
    std::map<int, int> new_vertex;
    for (int id : order)
        if (c.cell(id).dim == 0) {
            int nv = static_cast<int>(new_vertex.size());
            new_vertex[c.cell(id).vertices[0]] = nv;
        }
    std::vector<Edge> sub_edges;
    for (int id : order)
        if (c.cell(id).dim == 1)
            sub_edges.push_back(make_edge(new_vertex.at(c.cell(id).vertices[0]),
                                          new_vertex.at(c.cell(id).vertices[1])));
    CellComplex out;
    out.force_skeleton(Graph(static_cast<int>(new_vertex.size()), std::move(sub_edges)));
    for (int id : order) {
        const Cell& cl = c.cell(id);
        std::vector<int> vs;
        for (int v : cl.vertices) vs.push_back(new_vertex.at(v));
        std::vector<int> bd;
        for (int b : cl.boundary) bd.push_back(new_id.at(b));
        new_id[id] = out.add_cell(cl.dim, std::move(vs), std::move(bd));
    }
    if (id_map_out) {
        id_map_out->assign(order.size(), -1);
        for (int id : order) (*id_map_out)[new_id[id]] = id;
    }
    return out;
}

// --- dimension raising ------------------------------------------------------

struct FillRecord {
    int dim = 0;                    // dimension of the filled sphere
    std::vector<int> filled_sphere; // cell ids forming the induced sphere
    int new_cell = -1;              // id of the attached ball
};

enum class RaiseMode { triangulated, general2, certified };

inline RaiseMode raise_mode_from_string(const std::string& s) {
    if (s == "triangulated") return RaiseMode::triangulated;
    if (s == "general2") return RaiseMode::general2;
    if (s == "certified") return RaiseMode::certified;
    throw parse_error("unknown mode: " + s);
}

struct RaiseResult {
    CellComplex complex;
    std::vector<FillRecord> fills;
    std::string termination; // "reached target" | "unique induced sphere" | "no induced spheres"
};

/// Certifier callback used by certified mode: does this id set form a valid
/// i-sphere inside the host complex?  Wired to the certificate machinery by
/// callers; refusing (always-false) is the safe default.
using SphereOracle =
    std::function<bool(const CellComplex&, const std::vector<int>&, int)>;

/// All chordless cycles of g, each reported once, lexicographically rooted
/// at its minimum vertex.
inline std::vector<std::vector<int>> chordless_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    int n = g.order();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    std::function<void(int)> dfs = [&](int v0) {
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (w <= v0 || on_path[w]) continue;
            bool adj_v0 = g.has_edge(w, v0);
            // chordless: w may touch only `last` among path[1..] and possibly v0
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) { chord = true; break; }
            if (chord) continue;
            if (adj_v0) {
                if (path.size() >= 2 && path[1] < w) {
                    auto cyc = path;
                    cyc.push_back(w);
                    out.push_back(cyc);
                }
                continue; // extending past w would leave the chord (w, v0)
            }
            path.push_back(w);
            on_path[w] = true;
            dfs(v0);
            on_path[w] = false;
            path.pop_back();
        }
    };
    for (int v0 = 0; v0 < n; ++v0) {
        for (int a : g.neighbors(v0)) {
            if (a <= v0) continue;
            path = {v0, a};
            std::fill(on_path.begin(), on_path.end(), false);
            on_path[v0] = on_path[a] = true;
            dfs(v0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline bool complement_connected_or_empty(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> rem(verts.begin(), verts.end());
    std::sort(rem.begin(), rem.end());
    if (static_cast<int>(rem.size()) == g.order()) return true;
    return components(g, rem).size() == 1;
}

// Does the current complex restricted to the vertex set S equal the boundary
// of an (|S|-1)-simplex up to dimension `up_to`?
inline bool induced_is_simplex_boundary(const CellComplex& c, const std::vector<int>& S,
                                        int up_to) {
    std::set<int> sv(S.begin(), S.end());
    int k = static_cast<int>(S.size());
    for (int d = 1; d <= up_to; ++d) {
        long long expect = 1;
        for (int i = 0; i < d + 1; ++i) expect = expect * (k - i) / (i + 1);
        long long got = 0;
        for (int id : c.cells_of_dim(d)) {
            const auto& vs = c.cell(id).vertices;
            if (static_cast<int>(vs.size()) > k) continue;
            bool inside = std::all_of(vs.begin(), vs.end(), [&](int v) { return sv.count(v) > 0; });
            if (!inside) continue;
            if (static_cast<int>(vs.size()) != d + 1) return false; // non-simplex cell inside
            ++got;
        }
        if (got != expect) return false;
    }
    // nothing of higher dimension may already live inside S
    for (int d = up_to + 1; d <= c.dimension(); ++d)
        for (int id : c.cells_of_dim(d)) {
            const auto& vs = c.cell(id).vertices;
            if (std::all_of(vs.begin(), vs.end(), [&](int v) { return sv.count(v) > 0; }))
                return false;
        }
    return true;
}

// cells of dim <= i with vertex set inside W
inline std::vector<int> induced_cell_ids(const CellComplex& c, const std::set<int>& W, int i) {
    std::vector<int> ids;
    for (int d = 0; d <= std::min(i, c.dimension()); ++d)
        for (int id : c.cells_of_dim(d)) {
            const auto& vs = c.cell(id).vertices;
            if (std::all_of(vs.begin(), vs.end(), [&](int v) { return W.count(v) > 0; }))
                ids.push_back(id);
        }
    return ids;
}

} // namespace detail

/// The dimension-raising construction: level by level, induced i-spheres of
/// the current complex are filled with (i+1)-balls.  Candidates at each level
/// are enumerated against the level's initial state (snapshot semantics) in
/// canonical vertex-set order.  Raising stops early when a level has exactly
/// one candidate sphere (filled, then stop) or none (reported).
inline RaiseResult raise_dimension(const Graph& g, int x, RaiseMode mode,
                                   const SphereOracle& oracle = nullptr) {
    if (x < 1) throw hypothesis_error("x must be at least 1");
    int kappa = vertex_connectivity(g);
    if (kappa < 2) throw hypothesis_error("insufficient connectivity for x");
    RaiseResult res;
    res.complex = CellComplex::from_graph(g);
    res.termination = "reached target";
    for (int level = 1; level < x; ++level) {
        // candidates as (sorted vertex set, boundary cell ids)
        std::vector<std::pair<std::vector<int>, std::vector<int>>> cand;
        if (level == 1) {
            for (const auto& cyc : chordless_cycles(g)) {
                if (mode == RaiseMode::triangulated && cyc.size() != 3) continue;
                if (!detail::complement_connected_or_empty(g, cyc)) continue;
                std::vector<int> bd;
                for (size_t i = 0; i < cyc.size(); ++i)
                    bd.push_back(res.complex.edge_cell(cyc[i], cyc[(i + 1) % cyc.size()]));
                std::vector<int> vs(cyc.begin(), cyc.end());
                std::sort(vs.begin(), vs.end());
                cand.push_back({std::move(vs), std::move(bd)});
            }
        } else if (mode == RaiseMode::certified) {
            if (g.order() > 20) throw budget_error("certified raising limited to 20 vertices");
            // all vertex subsets whose induced subcomplex the oracle certifies
            for (std::uint32_t m = 0; m < (1u << g.order()); ++m) {
                if (__builtin_popcount(m) < level + 2) continue;
                std::vector<int> W;
                for (int v = 0; v < g.order(); ++v)
                    if (m >> v & 1) W.push_back(v);
                if (!detail::complement_connected_or_empty(g, W)) continue;
                std::set<int> Wset(W.begin(), W.end());
                auto ids = detail::induced_cell_ids(res.complex, Wset, level);
                std::vector<int> top;
                for (int id : ids)
                    if (res.complex.cell(id).dim == level) top.push_back(id);
                if (top.empty()) continue;
                if (!oracle || !oracle(res.complex, ids, level)) continue;
                cand.push_back({W, top});
            }
        } else { // triangulated / general2 beyond level 1: simplex boundaries
            if (kappa < level + 2) throw hypothesis_error("insufficient connectivity for x");
            int n = g.order();
            std::vector<int> comb(level + 2);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == level + 2) {
                    std::vector<int> S(comb.begin(), comb.end());
                    for (size_t a = 0; a < S.size(); ++a)
                        for (size_t b = a + 1; b < S.size(); ++b)
                            if (!g.has_edge(S[a], S[b])) return;
                    if (!detail::complement_connected_or_empty(g, S)) return;
                    if (!detail::induced_is_simplex_boundary(res.complex, S, level)) return;
                    std::set<int> Sset(S.begin(), S.end());
                    std::vector<int> top;
                    for (int id : detail::induced_cell_ids(res.complex, Sset, level))
                        if (res.complex.cell(id).dim == level) top.push_back(id);
                    cand.push_back({S, top});
                    return;
                }
                for (int v = start; v < n; ++v) {
                    comb[depth] = v;
                    rec(v + 1, depth + 1);
                }
            };
            rec(0, 0);
        }
        std::sort(cand.begin(), cand.end());
        if (cand.empty()) {
            res.termination = "no induced spheres at level " + std::to_string(level);
            break;
        }
        for (auto& [vs, bd] : cand) {
            int id = res.complex.add_cell(level + 1, vs, bd);
            res.fills.push_back({level, bd, id});
        }
        if (cand.size() == 1 && level < x - 1) {
            res.termination = "unique induced sphere at level " + std::to_string(level);
            break;
        }
    }
    return res;
}

/// U^{d-1}_Delta(K_{d+3}), the complete forbidden-structure witness.
inline CellComplex build_complete_witness(int d) {
    if (d < 2) throw hypothesis_error("d must be at least 2");
    Graph g = Graph::complete(d + 3);
    if (d == 2) return CellComplex::from_graph(g);
    return raise_dimension(g, d - 1, RaiseMode::triangulated).complex;
}

/// U^{d-1}(K_{3,d+1}), the bipartite witness.  Levels >= 2 need a sphere
/// certifier (the bipartite skeleton has no simplex boundaries to fill).
inline CellComplex build_bipartite_witness(int d, const SphereOracle& oracle = nullptr) {
    if (d < 2) throw hypothesis_error("d must be at least 2");
    Graph g = Graph::complete_bipartite(3, d + 1);
    if (d == 2) return CellComplex::from_graph(g);
    if (d == 3) return raise_dimension(g, 2, RaiseMode::general2).complex;
    if (!oracle) throw hypothesis_error("bipartite witness needs a sphere certifier for d >= 4");
    return raise_dimension(g, d - 1, RaiseMode::certified, oracle).complex;
}

// --- regions ----------------------------------------------------------------

struct RegionsResult {
    CellComplex complex;
    std::vector<int> region_cells;
};

namespace detail {

using PlanarBGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

struct FaceCollector : boost::planar_face_traversal_visitor {
    const PlanarBGraph* bg = nullptr;
    std::vector<std::vector<int>> faces; // edge indices per face
    void begin_face() { faces.push_back({}); }
    void next_edge(boost::graph_traits<PlanarBGraph>::edge_descriptor e) {
        faces.back().push_back(boost::get(boost::edge_index, *bg, e));
    }
};

} // namespace detail

/// Extends a complex with top-dimensional region cells so the discharging
/// engine sees A_d.  For a 1-complex (d = 2), regions are the faces of a
/// planar embedding of the skeleton, computed natively.  For d >= 3 the
/// caller supplies the region/facet incidence data.  Validates that every
/// facet ends up in exactly two regions.
inline RegionsResult regions(const CellComplex& c,
                             const std::vector<std::vector<int>>& region_data = {}) {
    RegionsResult out;
    out.complex = c;
    int d = c.dimension() + 1;
    std::vector<std::vector<int>> regs = region_data;

    if (regs.empty()) {
        if (d != 2)
            throw hypothesis_error("region data required for d >= 3");
        const Graph& g = c.skeleton();
        detail::PlanarBGraph bg(g.order());
        for (int i = 0; i < g.size(); ++i)
            boost::add_edge(g.edges()[i].first, g.edges()[i].second, i, bg);
        using EdgeDesc = boost::graph_traits<detail::PlanarBGraph>::edge_descriptor;
        std::vector<std::vector<EdgeDesc>> emb(boost::num_vertices(bg));
        if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                 boost::boyer_myrvold_params::embedding =
                                                     emb.data()))
            throw hypothesis_error("skeleton is not planar");
        detail::FaceCollector vis;
        vis.bg = &bg;
        boost::planar_face_traversal(bg, emb.data(), vis, boost::get(boost::edge_index, bg));
        for (auto& f : vis.faces) {
            std::vector<int> facet_ids;
            for (int ei : f)
                facet_ids.push_back(c.edge_cell(g.edges()[ei].first, g.edges()[ei].second));
            regs.push_back(std::move(facet_ids));
        }
    }

    std::map<int, int> facet_use;
    for (const auto& r : regs)
        for (int f : r) {
            if (f < 0 || f >= c.cell_count() || c.cell(f).dim != d - 1)
                throw hypothesis_error("region facet is not a (d-1)-cell");
            ++facet_use[f];
        }
    for (int f : c.cells_of_dim(d - 1))
        if (facet_use[f] != 2)
            throw hypothesis_error("not a closed embedded complex: facet " + std::to_string(f) +
                                   " lies in " + std::to_string(facet_use[f]) + " regions");
    for (auto& r : regs) {
        std::set<int> vs;
        for (int f : r)
            for (int v : c.cell(f).vertices) vs.insert(v);
        std::vector<int> bd(r.begin(), r.end());
        std::sort(bd.begin(), bd.end());
        bd.erase(std::unique(bd.begin(), bd.end()), bd.end());
        out.region_cells.push_back(
            out.complex.add_cell(d, std::vector<int>(vs.begin(), vs.end()), bd));
    }
    return out;
}

// --- hyper ear decomposition verification -----------------------------------

struct HyperEarReport {
    bool ok = false;
    std::string violation;
};

/// Checks a user-supplied hyper ear decomposition: cumulative stages of cell
/// ids, nested, starting from a sphere (per the oracle), each ear attached
/// along existing cells, ending at the full complex.  The optional
/// `ball_check` receives each ear's closed subcomplex.
inline HyperEarReport verify_hyper_ear_decomposition(
    const CellComplex& c, const std::vector<std::vector<int>>& stages,
    const SphereOracle& sphere_oracle = nullptr,
    const std::function<bool(const CellComplex&)>& ball_check = nullptr) {
    HyperEarReport r;
    auto fail = [&](const std::string& s) {
        r.violation = s;
        return r;
    };
    if (stages.empty()) return fail("no stages");
    for (const auto& st : stages)
        for (int id : st)
            if (id < 0 || id >= c.cell_count()) throw hypothesis_error("dangling cell reference");

    std::vector<std::set<int>> S;
    for (const auto& st : stages) S.push_back({st.begin(), st.end()});
    for (auto& st : S)
        for (int id : st)
            for (int b : c.cell(id).boundary)
                if (!st.count(b)) return fail("stage is not a subcomplex");
    for (size_t i = 0; i + 1 < S.size(); ++i)
        if (!std::includes(S[i + 1].begin(), S[i + 1].end(), S[i].begin(), S[i].end()) ||
            S[i + 1].size() <= S[i].size())
            return fail("nestedness");
    if (static_cast<int>(S.back().size()) != c.cell_count())
        return fail("final stage is not the whole complex");

    // G_0 must be a sphere of the complex's top dimension
    int top = 0;
    for (int id : S[0]) top = std::max(top, c.cell(id).dim);
    if (sphere_oracle &&
        !sphere_oracle(c, std::vector<int>(S[0].begin(), S[0].end()), top))
        return fail("initial stage is not a certified sphere");

    for (size_t i = 0; i + 1 < S.size(); ++i) {
        std::vector<int> ear;
        for (int id : S[i + 1])
            if (!S[i].count(id)) ear.push_back(id);
        if (ear.empty()) return fail("empty ear");
        // attachment: the ear must touch the previous stage
        std::set<int> closure_ids;
        for (int id : ear)
            for (int x : c.closure(id)) closure_ids.insert(x);
        bool touches = false;
        for (int x : closure_ids)
            if (S[i].count(x)) { touches = true; break; }
        if (!touches) return fail("ear detached from stage");
        if (ball_check) {
            std::vector<int> ids(closure_ids.begin(), closure_ids.end());
            if (!ball_check(subcomplex(c, ids))) return fail("ear is not a ball");
        }
    }
    r.ok = true;
    return r;
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json to_json(const CellComplex& c) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cl : c.cells()) cells.push_back({cl.dim, cl.vertices, cl.boundary});
    return {{"dim", c.dimension()}, {"cells", cells}};
}

inline CellComplex complex_from_json(const nlohmann::json& j) {
    try {
        // rebuild skeleton first
        std::vector<std::array<int, 2>> edge_list;
        int nverts = 0;
        for (const auto& e : j.at("cells")) {
            int dim = e.at(0).get<int>();
            auto vs = e.at(1).get<std::vector<int>>();
            if (dim == 0) ++nverts;
            if (dim == 1) edge_list.push_back({vs.at(0), vs.at(1)});
        }
        std::vector<Edge> edges;
        for (auto& e : edge_list) edges.push_back(make_edge(e[0], e[1]));
        CellComplex c;
        c.force_skeleton(Graph(nverts, edges));
        for (const auto& e : j.at("cells"))
            c.add_cell(e.at(0).get<int>(), e.at(1).get<std::vector<int>>(),
                       e.at(2).get<std::vector<int>>());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad complex JSON: ") + e.what());
    } catch (const hypothesis_error& e) {
        throw parse_error(std::string("bad complex JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad complex JSON: ") + e.what());
    }
}

inline nlohmann::json to_json(const FillRecord& f) {
    return {{"dim", f.dim}, {"filled_sphere", f.filled_sphere}, {"new_cell", f.new_cell}};
}

} // namespace geomlift

#endif
