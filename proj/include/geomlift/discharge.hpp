#ifndef GEOMLIFT_DISCHARGE_HPP
#define GEOMLIFT_DISCHARGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace geomlift {

struct WeightLedger {
    std::string stage; // "initial" | "after_R1" | "after_R2"
    std::map<int, Rational> weights; // cell id -> weight
    long long a = 0, b = 0, d = 0;
    Rational c; // 2a + d*b
};

inline Rational ledger_total(const WeightLedger& w) {
    Rational t = 0;
    for (const auto& [id, x] : w.weights) t += x;
    return t;
}

/// Initial charge assignment on a closed embedded d-complex.  Preflight
/// checks the two counting identities the totals rely on: every (d-1)-cell
/// lies in exactly two d-cells, and every (d-1)-cell has exactly d facets.
inline WeightLedger initial_weights(const CellComplex& c, long long a, long long b) {
    int d = c.dimension();
    if (d < 2) throw hypothesis_error("complex dimension must be at least 2");
    if (a < 1 || b < 1) throw hypothesis_error("parameters a, b must be positive");

    for (int f : c.cells_of_dim(d - 1)) {
        int up = incidence_degree(c, f, d);
        if (up != 2)
            throw hypothesis_error("facet balance violated at cell " + std::to_string(f) +
                                   ": lies in " + std::to_string(up) + " top cells");
        int down = static_cast<int>(c.cell(f).boundary.size());
        if (down != d)
            throw hypothesis_error("uniformity violated at cell " + std::to_string(f) + ": has " +
                                   std::to_string(down) + " facets");
    }

    WeightLedger w;
    w.stage = "initial";
    w.a = a;
    w.b = b;
    w.d = d;
    w.c = Rational(2 * a + d * b);
    for (int i = 0; i <= d; ++i)
        for (int id : c.cells_of_dim(i)) {
            if (i == d) {
                w.weights[id] = Rational(a) * static_cast<int>(c.cell(id).boundary.size()) - w.c;
            } else if (i == d - 1) {
                w.weights[id] = 0;
            } else if (i == d - 2) {
                w.weights[id] = Rational(b) * incidence_degree(c, id, d - 1) - w.c;
            } else {
                int sign = (d % 2 == 1) ? (i % 2 == 0 ? 1 : -1) : (i % 2 == 0 ? -1 : 1);
                w.weights[id] = sign * w.c;
            }
        }
    return w;
}

enum class R1Scope { joint, per_dim };

inline R1Scope r1_scope_from_string(const std::string& s) {
    if (s == "joint") return R1Scope::joint;
    if (s == "per-dim") return R1Scope::per_dim;
    throw parse_error("unknown R1 scope: " + s);
}

namespace detail {

inline void redistribute_equally(WeightLedger& w, const std::vector<int>& pool) {
    if (pool.empty()) return;
    Rational total = 0;
    for (int id : pool) total += w.weights.at(id);
    Rational share = total / static_cast<int>(pool.size());
    for (int id : pool) w.weights.at(id) = share;
}

} // namespace detail

/// Rule R1: the charge held by cells of dimension <= d-3 is pooled and
/// spread equally, either across all those cells at once (joint) or within
/// each dimension (per-dim).  Conserves the total.
inline WeightLedger apply_R1(const CellComplex& c, const WeightLedger& w,
                             R1Scope scope = R1Scope::joint) {
    if (w.stage != "initial") throw hypothesis_error("R1 expects the initial ledger");
    WeightLedger out = w;
    out.stage = "after_R1";
    if (scope == R1Scope::joint) {
        std::vector<int> pool;
        for (int i = 0; i + 3 <= static_cast<int>(w.d); ++i)
            for (int id : c.cells_of_dim(i)) pool.push_back(id);
        detail::redistribute_equally(out, pool);
    } else {
        for (int i = 0; i + 3 <= static_cast<int>(w.d); ++i)
            detail::redistribute_equally(out, c.cells_of_dim(i));
    }
    return out;
}

/// Rule R2: same pooling, extended to dimension d-2.
inline WeightLedger apply_R2(const CellComplex& c, const WeightLedger& w) {
    if (w.stage != "after_R1") throw hypothesis_error("R2 expects an after_R1 ledger");
    WeightLedger out = w;
    out.stage = "after_R2";
    std::vector<int> pool;
    for (int i = 0; i + 2 <= static_cast<int>(w.d); ++i)
        for (int id : c.cells_of_dim(i)) pool.push_back(id);
    detail::redistribute_equally(out, pool);
    return out;
}

struct ContradictionReport {
    bool all_nonnegative = false;
    bool some_positive = false;
    Rational total;
    bool contradiction = false; // nonneg everywhere, positive somewhere, total <= 0
    std::vector<int> negative_cells;
};

inline ContradictionReport check_contradiction(const WeightLedger& w) {
    ContradictionReport r;
    r.all_nonnegative = true;
    for (const auto& [id, x] : w.weights) {
        r.total += x;
        if (x < 0) {
            r.all_nonnegative = false;
            r.negative_cells.push_back(id);
        }
        if (x > 0) r.some_positive = true;
    }
    r.contradiction = r.all_nonnegative && r.some_positive && r.total <= 0;
    return r;
}

// --- dual graph and the counting inequality ---------------------------------

/// Dual multigraph of the top-dimensional cells: one vertex per d-cell, one
/// edge per shared facet (parallel edges kept, order of cells_of_dim(d)).
struct DualGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;
};

inline DualGraph dual_graph(const CellComplex& c) {
    int d = c.dimension();
    DualGraph dg;
    const auto& top = c.cells_of_dim(d);
    dg.order = static_cast<int>(top.size());
    std::map<int, int> pos;
    for (int k = 0; k < dg.order; ++k) pos[top[k]] = k;
    for (int f : c.cells_of_dim(d - 1)) {
        std::vector<int> touching;
        for (int t : top)
            for (int b : c.cell(t).boundary)
                if (b == f) touching.push_back(pos[t]);
        if (touching.size() == 2)
            dg.edges.push_back({std::min(touching[0], touching[1]),
                                std::max(touching[0], touching[1])});
    }
    return dg;
}

inline int dual_components(const DualGraph& dg) {
    std::vector<int> parent(dg.order);
    for (int i = 0; i < dg.order; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : dg.edges) parent[find(u)] = find(v);
    int comps = 0;
    for (int i = 0; i < dg.order; ++i)
        if (find(i) == i) ++comps;
    return comps;
}

/// Independent cycles of the dual multigraph: |E| - |V| + #components.
inline long long dual_cycle_count(const CellComplex& c) {
    DualGraph dg = dual_graph(c);
    return static_cast<long long>(dg.edges.size()) - dg.order + dual_components(dg);
}

struct QuanheReport {
    long long value = 0; // |A_d| - |A_{d-1}| + |A_{d-2}|
    bool ok = false;     // value >= 1
    long long dual_cycles = 0;
};

/// The top-three-dimension counting inequality, together with the dual
/// cycle count it rewrites to (|A_{d-1}| - |A_d| + 1 on a connected dual).
inline QuanheReport check_quanhe(const CellComplex& c) {
    int d = c.dimension();
    if (d < 2) throw hypothesis_error("complex dimension must be at least 2");
    QuanheReport r;
    auto f = face_vector(c).counts;
    r.value = f[d] - f[d - 1] + f[d - 2];
    r.ok = r.value >= 1;
    r.dual_cycles = dual_cycle_count(c);
    return r;
}

struct ReducibilityReport {
    bool all_satisfy = false;
    std::vector<int> violating; // (d-2)-cells below the incidence threshold
};

/// Minimal-counterexample degree condition: every (d-2)-cell must meet at
/// least d+3 (d-1)-cells.  Lists the cells that fall short.
inline ReducibilityReport verify_reducibility_jinyong1(const CellComplex& c, int d) {
    if (d < 2) throw hypothesis_error("d must be at least 2");
    if (d - 1 > c.dimension()) throw hypothesis_error("complex too low-dimensional");
    ReducibilityReport r;
    for (int id : c.cells_of_dim(d - 2))
        if (incidence_degree(c, id, d - 1) < d + 3) r.violating.push_back(id);
    r.all_satisfy = r.violating.empty();
    return r;
}

// --- cell colorings ---------------------------------------------------------

/// Proper k-coloring of the i-cells: every (i+1)-cell must see at least two
/// colors on its boundary.  Backtracking, desk scale (<= 64 i-cells).
inline std::optional<std::map<int, int>> i_dim_color(const CellComplex& c, int i, int k) {
    if (i < 0 || i >= c.dimension()) throw hypothesis_error("bad coloring dimension");
    if (k < 1) throw hypothesis_error("need at least one color");
    const auto& cells = c.cells_of_dim(i);
    if (cells.size() > 64) throw budget_error("cell coloring limited to 64 cells");
    std::map<int, int> pos;
    for (size_t p = 0; p < cells.size(); ++p) pos[cells[p]] = static_cast<int>(p);
    // constraints: boundary positions per (i+1)-cell
    std::vector<std::vector<int>> cons;
    for (int up : c.cells_of_dim(i + 1)) {
        std::vector<int> ps;
        for (int b : c.cell(up).boundary) ps.push_back(pos.at(b));
        if (ps.size() < 2 && k >= 1) return std::nullopt; // can never show two colors
        cons.push_back(std::move(ps));
    }
    std::vector<int> color(cells.size(), -1);
    std::function<bool(size_t)> rec = [&](size_t at) {
        if (at == cells.size()) {
            for (const auto& ps : cons) {
                int first = color[ps[0]];
                bool two = false;
                for (int p : ps)
                    if (color[p] != first) { two = true; break; }
                if (!two) return false;
            }
            return true;
        }
        for (int col = 0; col < k; ++col) {
            color[at] = col;
            // prune: any constraint fully colored and monochromatic fails
            bool bad = false;
            for (const auto& ps : cons) {
                bool complete = true, two = false;
                int first = color[ps[0]];
                for (int p : ps) {
                    if (color[p] == -1) { complete = false; break; }
                    if (color[p] != first) two = true;
                }
                if (complete && !two) { bad = true; break; }
            }
            if (!bad && rec(at + 1)) return true;
        }
        color[at] = -1;
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::map<int, int> out;
    for (size_t p = 0; p < cells.size(); ++p) out[cells[p]] = color[p];
    return out;
}

/// Least k admitting an i-cell coloring; incremental search from k = 1.
inline int chromatic_i(const CellComplex& c, int i) {
    int n = static_cast<int>(c.cells_of_dim(i).size());
    if (n == 0) throw hypothesis_error("no cells to color");
    for (int k = 1; k <= n; ++k)
        if (i_dim_color(c, i, k)) return k;
    throw hypothesis_error("uncolorable incidence structure");
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json to_json(const WeightLedger& w) {
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [id, x] : w.weights) weights[std::to_string(id)] = to_pq(x);
    return {{"stage", w.stage},
            {"params", {{"a", w.a}, {"b", w.b}, {"c", to_pq(w.c)}, {"d", w.d}}},
            {"weights", weights},
            {"total", to_pq(ledger_total(w))}};
}

} // namespace geomlift

#endif
