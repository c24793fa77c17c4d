#ifndef GEOMLIFT_CERTIFY_HPP
#define GEOMLIFT_CERTIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace geomlift {

// --- exact linear algebra ---------------------------------------------------

inline int rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (size_t cc = col; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

inline int rank_gf2(const std::vector<std::vector<int>>& m_in) {
    if (m_in.empty()) return 0;
    size_t rows = m_in.size(), cols = m_in[0].size();
    size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(words, 0));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (m_in[r][c] & 1) m[r][c / 64] ^= std::uint64_t{1} << (c % 64);
    int rank = 0;
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][col / 64] >> (col % 64) & 1) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank)) continue;
            if (m[r][col / 64] >> (col % 64) & 1)
                for (size_t w = 0; w < words; ++w) m[r][w] ^= m[rank][w];
        }
        ++rank;
    }
    return rank;
}

/// Nonzero invariant factors of an integer matrix (Smith normal form).
inline std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> out;
    if (m.empty() || m[0].empty()) return out;
    size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // locate an entry of minimal nonzero magnitude in the trailing block
        size_t pr = rows, pc = cols;
        BigInt best = 0;
        for (size_t r = t; r < rows; ++r)
            for (size_t c = t; c < cols; ++c)
                if (m[r][c] != 0 && (best == 0 || abs(m[r][c]) < best)) {
                    best = abs(m[r][c]);
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t r = t + 1; r < rows; ++r)
                if (m[r][t] != 0) {
                    BigInt q = m[r][t] / m[t][t];
                    for (size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                    if (m[r][t] != 0) { std::swap(m[t], m[r]); clean = false; }
                }
            for (size_t c = t + 1; c < cols; ++c)
                if (m[t][c] != 0) {
                    BigInt q = m[t][c] / m[t][t];
                    for (size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                    if (m[t][c] != 0) {
                        for (size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
                        clean = false;
                    }
                }
        }
        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (size_t r = t + 1; r < rows && !redo; ++r)
            for (size_t c = t + 1; c < cols && !redo; ++c)
                if (m[r][c] % m[t][t] != 0) {
                    for (size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
                    redo = true;
                }
        if (redo) continue;
        out.push_back(abs(m[t][t]));
        ++t;
    }
    return out;
}

// --- signed boundary chains -------------------------------------------------

/// Signed boundary chain per cell: facet id -> coefficient in {-1, +1}.
/// Edges are oriented min -> max vertex.  For higher cells the signs are the
/// (unique up to global sign) kernel of the facets' own boundary chains,
/// normalized to +1 on the lowest facet id; a kernel of the wrong shape
/// means the cell is not a closed pseudo-manifold cycle and is rejected.
inline std::vector<std::map<int, int>> signed_chains(const CellComplex& c) {
    std::vector<std::map<int, int>> ch(c.cell_count());
    for (int d = 1; d <= c.dimension(); ++d)
        for (int id : c.cells_of_dim(d)) {
            const auto& fac = c.cell(id).boundary;
            if (d == 1) {
                if (fac.size() != 2) throw hypothesis_error("inconsistent boundary data");
                int a = fac[0], b = fac[1];
                if (c.cell(a).vertices[0] > c.cell(b).vertices[0]) std::swap(a, b);
                ch[id][a] = -1;
                ch[id][b] = 1;
                continue;
            }
            if (fac.size() < 2) throw hypothesis_error("inconsistent boundary data");
            // rows: (d-2)-cells touched by the facets; columns: the facets
            std::map<int, size_t> row_of;
            for (int f : fac)
                for (const auto& [sub, s] : ch[f])
                    if (!row_of.count(sub)) {
                        size_t k = row_of.size();
                        row_of[sub] = k;
                    }
            std::vector<std::vector<Rational>> m(row_of.size(),
                                                 std::vector<Rational>(fac.size(), 0));
            for (size_t col = 0; col < fac.size(); ++col)
                for (const auto& [sub, s] : ch[fac[col]]) m[row_of[sub]][col] = s;
            // kernel must be one-dimensional with +-1 entries
            size_t rows = m.size(), cols = fac.size();
            std::vector<int> pivot_col;
            size_t rank = 0;
            for (size_t col = 0; col < cols && rank < rows; ++col) {
                size_t piv = rows;
                for (size_t r = rank; r < rows; ++r)
                    if (m[r][col] != 0) { piv = r; break; }
                if (piv == rows) continue;
                std::swap(m[rank], m[piv]);
                Rational p = m[rank][col];
                for (size_t cc = 0; cc < cols; ++cc) m[rank][cc] /= p;
                for (size_t r = 0; r < rows; ++r) {
                    if (r == rank || m[r][col] == 0) continue;
                    Rational f = m[r][col];
                    for (size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
                }
                pivot_col.push_back(static_cast<int>(col));
                ++rank;
            }
            if (cols - rank != 1) throw hypothesis_error("inconsistent boundary data");
            std::vector<bool> is_pivot(cols, false);
            for (int pc : pivot_col) is_pivot[pc] = true;
            size_t free_col = 0;
            while (is_pivot[free_col]) ++free_col;
            std::vector<Rational> k(cols, 0);
            k[free_col] = 1;
            for (size_t r = 0; r < rank; ++r) k[pivot_col[r]] = -m[r][free_col];
            if (k[0] < 0)
                for (auto& x : k) x = -x;
            for (size_t col = 0; col < cols; ++col) {
                if (k[col] != 1 && k[col] != -1)
                    throw hypothesis_error("inconsistent boundary data");
                ch[id][fac[col]] = k[col] == 1 ? 1 : -1;
            }
        }
    return ch;
}

/// Integer boundary matrices: boundary[d] has one row per (d-1)-cell and one
/// column per d-cell, in cells_of_dim order.  Verifies del(del(x)) = 0.
struct ChainComplexData {
    std::vector<std::vector<std::vector<int>>> boundary; // index d in 1..dim
};

inline ChainComplexData chain_complex(const CellComplex& c) {
    auto ch = signed_chains(c);
    ChainComplexData out;
    out.boundary.resize(c.dimension() + 1);
    for (int d = 1; d <= c.dimension(); ++d) {
        const auto& rows_ids = c.cells_of_dim(d - 1);
        const auto& cols_ids = c.cells_of_dim(d);
        std::map<int, size_t> row_of;
        for (size_t i = 0; i < rows_ids.size(); ++i) row_of[rows_ids[i]] = i;
        auto& m = out.boundary[d];
        m.assign(rows_ids.size(), std::vector<int>(cols_ids.size(), 0));
        for (size_t col = 0; col < cols_ids.size(); ++col)
            for (const auto& [f, s] : ch[cols_ids[col]]) m[row_of.at(f)][col] = s;
    }
    // del compose del vanishes
    for (int d = 2; d <= c.dimension(); ++d) {
        const auto& a = out.boundary[d - 1];
        const auto& b = out.boundary[d];
        if (a.empty() || b.empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b[0].size(); ++j) {
                long long sum = 0;
                for (size_t k = 0; k < b.size(); ++k) sum += a[i][k] * b[k][j];
                if (sum != 0) throw hypothesis_error("inconsistent boundary data");
            }
    }
    return out;
}

inline long long euler_characteristic(const CellComplex& c) {
    long long x = 0;
    int sign = 1;
    for (long long n : face_vector(c).counts) {
        x += sign * n;
        sign = -sign;
    }
    return x;
}

enum class Coefficients { rational, gf2 };

/// Betti numbers b_0..b_dim over the chosen coefficient field.
inline std::vector<int> betti_numbers(const CellComplex& c,
                                      Coefficients coeff = Coefficients::rational) {
    ChainComplexData data = chain_complex(c);
    std::vector<int> rank(c.dimension() + 2, 0);
    for (int d = 1; d <= c.dimension(); ++d) {
        const auto& m = data.boundary[d];
        if (m.empty() || m[0].empty()) continue;
        if (coeff == Coefficients::gf2) {
            rank[d] = rank_gf2(m);
        } else {
            std::vector<std::vector<Rational>> q(m.size(), std::vector<Rational>(m[0].size()));
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = 0; j < m[i].size(); ++j) q[i][j] = m[i][j];
            rank[d] = rank_rational(q);
        }
    }
    std::vector<int> b;
    for (int d = 0; d <= c.dimension(); ++d) {
        int cells = static_cast<int>(c.cells_of_dim(d).size());
        b.push_back(cells - rank[d] - rank[d + 1]);
    }
    return b;
}

// --- fundamental group ------------------------------------------------------

enum class Pi1Result { yes, no, unknown };

namespace detail {

// Orders the boundary edges of a 2-cell into a closed vertex walk.
inline std::vector<int> boundary_walk(const CellComplex& c, int cell2) {
    std::map<int, std::vector<int>> next; // vertex -> neighbours along the cell
    for (int e : c.cell(cell2).boundary) {
        const auto& vs = c.cell(e).vertices;
        next[vs[0]].push_back(vs[1]);
        next[vs[1]].push_back(vs[0]);
    }
    for (auto& [v, ns] : next)
        if (ns.size() != 2) throw hypothesis_error("inconsistent boundary data");
    int start = next.begin()->first;
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    do {
        auto& ns = next[cur];
        int nxt = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = nxt;
        walk.push_back(cur);
    } while (cur != start);
    if (walk.size() != c.cell(cell2).boundary.size() + 1)
        throw hypothesis_error("inconsistent boundary data");
    return walk; // closed: first == last
}

inline void free_reduce(std::vector<int>& w) {
    std::vector<int> out;
    for (int s : w) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    w = std::move(out);
}

} // namespace detail

/// Is the fundamental group of the 2-skeleton trivial?  Generators are the
/// non-tree edges of a spanning tree, relations the 2-cell boundary walks.
/// A nontrivial abelianization answers `no` outright; otherwise Tietze
/// moves (within `budget` rewriting steps) try to empty the presentation.
inline Pi1Result pi1_trivial(const CellComplex& c, long long budget = 10000) {
    const Graph& g = c.skeleton();
    if (!is_connected(g)) throw hypothesis_error("skeleton is not connected");
    if (g.order() == 0) throw hypothesis_error("empty complex");

    // BFS spanning tree
    std::set<Edge> tree;
    {
        std::vector<bool> seen(g.order(), false);
        std::vector<int> queue{0};
        seen[0] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    tree.insert(make_edge(v, w));
                    queue.push_back(w);
                }
        }
    }
    std::map<Edge, int> gen; // 1-based generator index per non-tree edge
    for (Edge e : g.edges())
        if (!tree.count(e)) gen[e] = static_cast<int>(gen.size()) + 1;

    std::vector<std::vector<int>> rel;
    for (int cell2 : c.cells_of_dim(2)) {
        auto walk = detail::boundary_walk(c, cell2);
        std::vector<int> w;
        for (size_t i = 0; i + 1 < walk.size(); ++i) {
            Edge e = make_edge(walk[i], walk[i + 1]);
            auto it = gen.find(e);
            if (it == gen.end()) continue; // tree edge: identity
            w.push_back(walk[i] < walk[i + 1] ? it->second : -it->second);
        }
        detail::free_reduce(w);
        if (!w.empty()) rel.push_back(std::move(w));
    }
    int ngen = static_cast<int>(gen.size());
    if (ngen == 0) return Pi1Result::yes;

    // abelianization: H_1 must vanish for triviality
    {
        std::vector<std::vector<BigInt>> ab(rel.size(), std::vector<BigInt>(ngen, 0));
        for (size_t r = 0; r < rel.size(); ++r)
            for (int s : rel[r]) ab[r][std::abs(s) - 1] += (s > 0 ? 1 : -1);
        auto factors = smith_invariant_factors(ab);
        int full = 0;
        for (const auto& f : factors)
            if (f == 1) ++full;
        if (full < ngen) return Pi1Result::no;
    }

    // Tietze simplification
    std::vector<bool> alive(ngen + 1, true);
    long long steps = 0;
    auto substitute = [&](int target, const std::vector<int>& by) {
        // replace target -> by, -target -> reverse-inverse(by), in all relations
        for (auto& w : rel) {
            std::vector<int> nw;
            for (int s : w) {
                if (s == target) {
                    nw.insert(nw.end(), by.begin(), by.end());
                } else if (s == -target) {
                    for (auto it = by.rbegin(); it != by.rend(); ++it) nw.push_back(-*it);
                } else {
                    nw.push_back(s);
                }
            }
            detail::free_reduce(nw);
            w = std::move(nw);
            ++steps;
        }
    };
    bool progress = true;
    while (progress && steps < budget) {
        progress = false;
        rel.erase(std::remove_if(rel.begin(), rel.end(),
                                 [](const std::vector<int>& w) { return w.empty(); }),
                  rel.end());
        // length-1 relation: the generator dies
        for (size_t r = 0; r < rel.size(); ++r)
            if (rel[r].size() == 1) {
                int gdead = std::abs(rel[r][0]);
                alive[gdead] = false;
                substitute(gdead, {});
                progress = true;
                break;
            }
        if (progress) continue;
        // length-2 relation a b = 1 with distinct generators: b = a^{-1}
        for (size_t r = 0; r < rel.size(); ++r)
            if (rel[r].size() == 2 && std::abs(rel[r][0]) != std::abs(rel[r][1])) {
                int b = rel[r][1];
                int a = rel[r][0];
                alive[std::abs(b)] = false;
                // b = a^{-1}  (relation reads a b = 1)
                if (b > 0)
                    substitute(b, {-a});
                else
                    substitute(-b, {a});
                progress = true;
                break;
            }
        if (progress) continue;
        // generator occurring exactly once overall: solve its relation for it
        std::vector<int> count(ngen + 1, 0), where(ngen + 1, -1);
        for (size_t r = 0; r < rel.size(); ++r)
            for (int s : rel[r]) {
                ++count[std::abs(s)];
                where[std::abs(s)] = static_cast<int>(r);
            }
        for (int gi = 1; gi <= ngen; ++gi)
            if (alive[gi] && count[gi] == 1) {
                rel.erase(rel.begin() + where[gi]);
                alive[gi] = false;
                ++steps;
                progress = true;
                break;
            }
    }
    bool any_alive = false;
    for (int gi = 1; gi <= ngen; ++gi)
        if (alive[gi]) any_alive = true;
    rel.erase(std::remove_if(rel.begin(), rel.end(),
                             [](const std::vector<int>& w) { return w.empty(); }),
              rel.end());
    if (!any_alive && rel.empty()) return Pi1Result::yes;
    return Pi1Result::unknown;
}

// --- sphere certification ---------------------------------------------------

struct SphereCertificate {
    std::string verdict; // "certified" | "refuted" | "inconclusive"
    std::string reason;
};

/// Certifies that the cells `ids` of `host` form an i-sphere: closed
/// pseudo-manifold with connected dual graph, Euler characteristic
/// 1 + (-1)^i, sphere Betti profile over both coefficient systems, and (for
/// i >= 2) trivial fundamental group.
inline SphereCertificate certify_sphere(const CellComplex& host, const std::vector<int>& ids,
                                        int i) {
    auto refute = [](const std::string& why) { return SphereCertificate{"refuted", why}; };
    if (i < 1) throw hypothesis_error("sphere dimension must be at least 1");
    CellComplex sub = subcomplex(host, ids);
    if (sub.dimension() != i) return refute("dimension mismatch");
    const auto& top = sub.cells_of_dim(i);
    if (top.empty()) return refute("no top cells");

    // pseudo-manifold: every facet in exactly two top cells, connected dual
    std::map<int, std::vector<int>> cofaces;
    for (int t : top)
        for (int f : sub.cell(t).boundary) cofaces[f].push_back(t);
    for (int f : sub.cells_of_dim(i - 1))
        if (cofaces[f].size() != 2) return refute("not a closed pseudo-manifold");
    {
        std::map<int, int> pos;
        for (size_t k = 0; k < top.size(); ++k) pos[top[k]] = static_cast<int>(k);
        std::vector<Edge> dual_edges;
        for (const auto& [f, ts] : cofaces)
            if (pos.at(ts[0]) != pos.at(ts[1]))
                dual_edges.push_back(make_edge(pos.at(ts[0]), pos.at(ts[1])));
        std::sort(dual_edges.begin(), dual_edges.end());
        dual_edges.erase(std::unique(dual_edges.begin(), dual_edges.end()), dual_edges.end());
        if (!is_connected(Graph(static_cast<int>(top.size()), dual_edges)))
            return refute("dual graph disconnected");
    }

    if (euler_characteristic(sub) != 1 + (i % 2 == 0 ? 1 : -1))
        return refute("Euler characteristic mismatch");

    std::vector<int> want(i + 1, 0);
    want[0] = 1;
    want[i] += 1;
    try {
        if (betti_numbers(sub, Coefficients::rational) != want)
            return refute("Betti profile mismatch (rational)");
        if (betti_numbers(sub, Coefficients::gf2) != want)
            return refute("Betti profile mismatch (mod 2)");
    } catch (const hypothesis_error&) {
        return refute("inconsistent boundary data");
    }

    if (i >= 2) {
        switch (pi1_trivial(sub)) {
            case Pi1Result::no: return refute("fundamental group nontrivial");
            case Pi1Result::unknown:
                return SphereCertificate{"inconclusive", "fundamental group undecided"};
            case Pi1Result::yes: break;
        }
    }
    return SphereCertificate{"certified", ""};
}

/// Certifier suitable for certified-mode raising.
inline SphereOracle default_sphere_oracle() {
    return [](const CellComplex& host, const std::vector<int>& ids, int i) {
        try {
            return certify_sphere(host, ids, i).verdict == "certified";
        } catch (const hypothesis_error&) {
            return false;
        }
    };
}

/// Bipartite witness for d >= 4, raised under the full certifier.
inline CellComplex build_bipartite_witness_certified(int d) {
    return build_bipartite_witness(d, default_sphere_oracle());
}

} // namespace geomlift

#endif
