// geomlift: command-line driver for the graph-geometrization toolkit.
//
// Conventions: machine-readable JSON on stdout, run manifest and log lines
// on stderr.  Exit codes: 0 success / positive finding, 1 negative finding,
// 2 input error, 3 hypothesis violation, 4 budget exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <geomlift/certify.hpp>
#include <geomlift/chroma.hpp>
#include <geomlift/complex.hpp>
#include <geomlift/discharge.hpp>
#include <geomlift/errors.hpp>
#include <geomlift/graph.hpp>
#include <geomlift/minor.hpp>

using namespace geomlift;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "geomlift 1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunContext {
    json manifest = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    RunContext() {
        manifest["version"] = kVersion;
        manifest["inputs"] = json::object();
        manifest["parameters"] = json::object();
    }
    void input(const std::string& path, const std::string& content) {
        manifest["inputs"][path] = fnv1a_digest(content);
    }
    template <typename T>
    void param(const std::string& key, const T& value) {
        manifest["parameters"][key] = value;
    }
    void emit(const std::string& command) {
        manifest["command"] = command;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        manifest["wall_ms"] = ms;
        std::cerr << manifest.dump() << "\n";
    }
};

Graph load_graph(RunContext& ctx, const std::string& path) {
    std::string content = read_file(path);
    ctx.input(path, content);
    return parse_graph(content);
}

CellComplex load_complex(RunContext& ctx, const std::string& path) {
    std::string content = read_file(path);
    ctx.input(path, content);
    json j;
    try {
        j = json::parse(content);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad complex file: ") + e.what());
    }
    return complex_from_json(j);
}

void out(const json& j) { std::cout << j.dump(2) << "\n"; }

json face_vector_json(const CellComplex& c) {
    json f = json::array();
    for (long long n : face_vector(c).counts) f.push_back(n);
    return f;
}

// exit code carrier so the CLI11 callbacks can signal negative findings
struct Finding {
    int code = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geomlift: dimension raising, forbidden minors, certification, "
                 "coloring bounds and discharging for graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags (--seed, --threads) may follow the subcommand
    RunContext ctx;
    Finding finding;
    int seed = 0;
    int threads = 1;
    app.add_option("--seed", seed, "PRNG seed (std::mt19937_64)")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (kept at 1 for reproducibility)")
        ->capture_default_str();

    // ---- graph ------------------------------------------------------------
    auto* graph_cmd = app.add_subcommand("graph", "structural graph operations");
    graph_cmd->require_subcommand(1);
    {
        static std::string path;
        auto* conn = graph_cmd->add_subcommand("connectivity", "vertex connectivity");
        conn->add_option("file", path)->required();
        conn->callback([&] {
            Graph g = load_graph(ctx, path);
            out({{"kappa", vertex_connectivity(g)}});
            ctx.emit("graph connectivity");
        });

        static std::string cpath;
        static std::vector<int> edge;
        auto* contract = graph_cmd->add_subcommand("contract", "contract one edge");
        contract->add_option("file", cpath)->required();
        contract->add_option("--edge", edge, "endpoints u v")->expected(2)->required();
        contract->callback([&] {
            Graph g = load_graph(ctx, cpath);
            ctx.param("edge", edge);
            if (!g.has_edge(edge[0], edge[1])) throw hypothesis_error("no such edge");
            out(to_json(contract_edge(g, make_edge(edge[0], edge[1]))));
            ctx.emit("graph contract");
        });

        static std::string bpath;
        static std::vector<int> cyc;
        auto* bridges = graph_cmd->add_subcommand("bridges", "bridges of a cycle");
        bridges->add_option("file", bpath)->required();
        bridges->add_option("--cycle", cyc, "cycle vertices in order")->required();
        bridges->callback([&] {
            Graph g = load_graph(ctx, bpath);
            ctx.param("cycle", cyc);
            json arr = json::array();
            for (const auto& br : bridges_of_cycle(g, cyc))
                arr.push_back({{"vertices", br.internal_vertices},
                               {"attachments", br.attachments},
                               {"edges", br.edges}});
            out({{"bridges", arr}});
            ctx.emit("graph bridges");
        });

        static std::string epath;
        auto* ears = graph_cmd->add_subcommand("ears", "open ear decomposition");
        ears->add_option("file", epath)->required();
        ears->callback([&] {
            Graph g = load_graph(ctx, epath);
            auto ed = ear_decomposition(g);
            out({{"initial_cycle", ed.initial_cycle}, {"ears", ed.ears}});
            ctx.emit("graph ears");
        });

        static std::string spath;
        static std::vector<int> cut;
        auto* sdecomp = graph_cmd->add_subcommand("sdecomp", "marked separator decomposition");
        sdecomp->add_option("file", spath)->required();
        sdecomp->add_option("--cut", cut, "separator vertices")->required();
        sdecomp->callback([&] {
            Graph g = load_graph(ctx, spath);
            ctx.param("cut", cut);
            auto dec = marked_s_decomposition(g, cut);
            json comps = json::array();
            for (const auto& comp : dec.components)
                comps.push_back({{"vertices", comp.vertices},
                                 {"edges", comp.edges},
                                 {"marker_edges", comp.marker_edges}});
            out({{"cut", dec.cut}, {"components", comps}});
            ctx.emit("graph sdecomp");
        });

        static std::string lpath;
        static int root = 0;
        auto* layers = graph_cmd->add_subcommand("layers", "BFS layer sizes");
        layers->add_option("file", lpath)->required();
        layers->add_option("--root", root)->capture_default_str();
        layers->callback([&] {
            Graph g = load_graph(ctx, lpath);
            ctx.param("root", root);
            auto ls = bfs_layers(g, root);
            json sizes = json::array();
            for (const auto& l : ls) sizes.push_back(l.size());
            out({{"sizes", sizes}});
            ctx.emit("graph layers");
        });
    }

    // ---- minor ------------------------------------------------------------
    auto* minor_cmd = app.add_subcommand("minor", "minor containment and sampling");
    minor_cmd->require_subcommand(1);
    {
        static std::string hpath;
        static int t = 5;
        auto* clique = minor_cmd->add_subcommand("clique", "search for a K_t minor");
        clique->add_option("file", hpath)->required();
        clique->add_option("--t", t)->capture_default_str();
        clique->callback([&] {
            Graph g = load_graph(ctx, hpath);
            ctx.param("t", t);
            auto m = has_clique_minor(g, t);
            if (m)
                out({{"found", true}, {"model", to_json(*m)}});
            else {
                out({{"found", false}});
                finding.code = 1;
            }
            ctx.emit("minor clique");
        });

        static std::string bpath;
        static int bs = 3, bt = 3;
        auto* bip = minor_cmd->add_subcommand("bipartite", "search for a K_{s,t} minor");
        bip->add_option("file", bpath)->required();
        bip->add_option("--s", bs)->capture_default_str();
        bip->add_option("--t", bt)->capture_default_str();
        bip->callback([&] {
            Graph g = load_graph(ctx, bpath);
            ctx.param("s", bs);
            ctx.param("t", bt);
            auto m = has_complete_bipartite_minor(g, bs, bt);
            if (m)
                out({{"found", true}, {"model", to_json(*m)}});
            else {
                out({{"found", false}});
                finding.code = 1;
            }
            ctx.emit("minor bipartite");
        });

        static std::string fhost, fpat;
        auto* find = minor_cmd->add_subcommand("find", "search for an arbitrary pattern minor");
        find->add_option("host", fhost)->required();
        find->add_option("pattern", fpat)->required();
        find->callback([&] {
            Graph g = load_graph(ctx, fhost);
            Graph h = load_graph(ctx, fpat);
            auto m = has_minor(g, h);
            if (m)
                out({{"found", true}, {"model", to_json(*m)}});
            else {
                out({{"found", false}});
                finding.code = 1;
            }
            ctx.emit("minor find");
        });

        static int sn = 10, sd = 2, sbudget = 10;
        auto* sample = minor_cmd->add_subcommand("sample", "sample excluded-minor graphs");
        sample->add_option("--n", sn)->capture_default_str();
        sample->add_option("--d", sd)->capture_default_str();
        sample->add_option("--budget", sbudget)->capture_default_str();
        sample->callback([&] {
            ctx.param("n", sn);
            ctx.param("d", sd);
            ctx.param("budget", sbudget);
            ctx.param("seed", seed);
            json arr = json::array();
            for (const auto& g : minor_free_sampler(sn, sd, static_cast<std::uint64_t>(seed),
                                                    sbudget))
                arr.push_back(to_json(g));
            out({{"graphs", arr}});
            ctx.emit("minor sample");
        });
    }

    // ---- complex ----------------------------------------------------------
    auto* complex_cmd = app.add_subcommand("complex", "dimension raising and regions");
    complex_cmd->require_subcommand(1);
    {
        static std::string rpath, mode = "triangulated";
        static int x = 2;
        auto* raise = complex_cmd->add_subcommand("raise", "build U^x(G)");
        raise->add_option("file", rpath)->required();
        raise->add_option("--x", x)->capture_default_str();
        raise->add_option("--mode", mode, "triangulated|general2|certified")
            ->capture_default_str();
        raise->callback([&] {
            Graph g = load_graph(ctx, rpath);
            ctx.param("x", x);
            ctx.param("mode", mode);
            RaiseMode m = raise_mode_from_string(mode);
            SphereOracle oracle;
            if (m == RaiseMode::certified) oracle = default_sphere_oracle();
            auto r = raise_dimension(g, x, m, oracle);
            for (const auto& f : r.fills) std::cerr << to_json(f).dump() << "\n";
            out({{"complex", to_json(r.complex)},
                 {"face_vector", face_vector_json(r.complex)},
                 {"termination", r.termination}});
            ctx.emit("complex raise");
        });

        static int wd = 3;
        static std::string family = "complete";
        auto* witness = complex_cmd->add_subcommand("witness", "forbidden-structure witness");
        witness->add_option("--d", wd)->capture_default_str();
        witness->add_option("--family", family, "complete|bipartite")->capture_default_str();
        witness->callback([&] {
            ctx.param("d", wd);
            ctx.param("family", family);
            CellComplex c;
            if (family == "complete")
                c = build_complete_witness(wd);
            else if (family == "bipartite")
                c = wd >= 4 ? build_bipartite_witness_certified(wd) : build_bipartite_witness(wd);
            else
                throw parse_error("unknown family: " + family);
            out({{"complex", to_json(c)}, {"face_vector", face_vector_json(c)}});
            ctx.emit("complex witness");
        });

        static std::string gpath;
        auto* reg = complex_cmd->add_subcommand("regions",
                                                "add planar embedding regions to a 1-complex");
        reg->add_option("file", gpath)->required();
        reg->callback([&] {
            Graph g = load_graph(ctx, gpath);
            auto r = regions(CellComplex::from_graph(g));
            out({{"complex", to_json(r.complex)},
                 {"face_vector", face_vector_json(r.complex)},
                 {"region_cells", r.region_cells}});
            ctx.emit("complex regions");
        });
    }

    // ---- certify ----------------------------------------------------------
    auto* certify_cmd = app.add_subcommand("certify", "topological certificates");
    certify_cmd->require_subcommand(1);
    {
        static std::string spath;
        static int si = 2;
        auto* sphere = certify_cmd->add_subcommand("sphere", "certify the complex as an i-sphere");
        sphere->add_option("file", spath)->required();
        sphere->add_option("--i", si)->capture_default_str();
        sphere->callback([&] {
            CellComplex c = load_complex(ctx, spath);
            ctx.param("i", si);
            std::vector<int> ids(c.cell_count());
            for (int k = 0; k < c.cell_count(); ++k) ids[k] = k;
            auto cert = certify_sphere(c, ids, si);
            out({{"verdict", cert.verdict}, {"reason", cert.reason}});
            if (cert.verdict != "certified") finding.code = 1;
            ctx.emit("certify sphere");
        });

        static std::string bpath;
        auto* betti = certify_cmd->add_subcommand("betti", "Betti numbers and Euler number");
        betti->add_option("file", bpath)->required();
        betti->callback([&] {
            CellComplex c = load_complex(ctx, bpath);
            out({{"betti_rational", betti_numbers(c, Coefficients::rational)},
                 {"betti_gf2", betti_numbers(c, Coefficients::gf2)},
                 {"euler", euler_characteristic(c)}});
            ctx.emit("certify betti");
        });

        static std::string ppath;
        static long long budget = 10000;
        auto* pi1 = certify_cmd->add_subcommand("pi1", "fundamental group triviality");
        pi1->add_option("file", ppath)->required();
        pi1->add_option("--budget", budget)->capture_default_str();
        pi1->callback([&] {
            CellComplex c = load_complex(ctx, ppath);
            ctx.param("budget", budget);
            Pi1Result r = pi1_trivial(c, budget);
            std::string s = r == Pi1Result::yes ? "yes" : r == Pi1Result::no ? "no" : "unknown";
            out({{"trivial", s}});
            if (r != Pi1Result::yes) finding.code = 1;
            ctx.emit("certify pi1");
        });
    }

    // ---- color ------------------------------------------------------------
    auto* color_cmd = app.add_subcommand("color", "colorings and degree bounds");
    color_cmd->require_subcommand(1);
    {
        static std::string xpath;
        auto* chrom = color_cmd->add_subcommand("chromatic", "exact chromatic number");
        chrom->add_option("file", xpath)->required();
        chrom->callback([&] {
            Graph g = load_graph(ctx, xpath);
            out({{"chromatic", exact_chromatic(g)}});
            ctx.emit("color chromatic");
        });

        static std::string gpath2;
        auto* greedy = color_cmd->add_subcommand("greedy", "degeneracy-order greedy coloring");
        greedy->add_option("file", gpath2)->required();
        greedy->callback([&] {
            Graph g = load_graph(ctx, gpath2);
            auto col = degeneracy_greedy(g);
            out({{"count", col.count}, {"colors", col.colors}});
            ctx.emit("color greedy");
        });

        static std::string bpath2;
        static int bd = 2;
        auto* bound = color_cmd->add_subcommand("bound", "verify chi <= d(d+1)");
        bound->add_option("file", bpath2)->required();
        bound->add_option("--d", bd)->capture_default_str();
        bound->callback([&] {
            Graph g = load_graph(ctx, bpath2);
            ctx.param("d", bd);
            auto r = verify_chromatic_bound(g, bd);
            out({{"ok", r.ok},
                 {"colors_used", r.colors_used},
                 {"bound", r.bound},
                 {"exact", r.exact}});
            if (!r.ok) finding.code = 1;
            ctx.emit("color bound");
        });

        static std::string cpath2;
        static int ci = 1;
        auto* cells = color_cmd->add_subcommand("cells", "least k for an i-cell coloring");
        cells->add_option("file", cpath2)->required();
        cells->add_option("--i", ci)->capture_default_str();
        cells->callback([&] {
            CellComplex c = load_complex(ctx, cpath2);
            ctx.param("i", ci);
            int k = chromatic_i(c, ci);
            auto col = i_dim_color(c, ci, k);
            json cj = json::object();
            for (const auto& [id, cc] : *col) cj[std::to_string(id)] = cc;
            out({{"chromatic_i", k}, {"coloring", cj}});
            ctx.emit("color cells");
        });
    }

    // ---- discharge --------------------------------------------------------
    auto* discharge_cmd = app.add_subcommand("discharge", "weight ledgers and counting checks");
    discharge_cmd->require_subcommand(1);
    {
        static std::string dpath, scope = "joint";
        static long long da = 1, db = 1;
        static int dd = -1;
        auto* run = discharge_cmd->add_subcommand("run", "three-stage discharging report");
        run->add_option("file", dpath)->required();
        run->add_option("--a", da)->capture_default_str();
        run->add_option("--b", db)->capture_default_str();
        run->add_option("--d", dd, "expected dimension (checked when given)");
        run->add_option("--r1-scope", scope, "joint|per-dim")->capture_default_str();
        run->callback([&] {
            CellComplex c = load_complex(ctx, dpath);
            ctx.param("a", da);
            ctx.param("b", db);
            ctx.param("r1_scope", scope);
            if (dd >= 0 && dd != c.dimension())
                throw hypothesis_error("complex dimension is " + std::to_string(c.dimension()) +
                                       ", expected " + std::to_string(dd));
            WeightLedger w0 = initial_weights(c, da, db);
            WeightLedger w1 = apply_R1(c, w0, r1_scope_from_string(scope));
            WeightLedger w2 = apply_R2(c, w1);
            bool conserved = ledger_total(w1) == ledger_total(w0) &&
                             ledger_total(w2) == ledger_total(w0);
            auto contr = check_contradiction(w2);
            out({{"stages", {to_json(w0), to_json(w1), to_json(w2)}},
                 {"total", to_pq(ledger_total(w0))},
                 {"conserved", conserved},
                 {"all_nonnegative", contr.all_nonnegative},
                 {"some_positive", contr.some_positive}});
            ctx.emit("discharge run");
        });

        static std::string qpath;
        auto* quanhe = discharge_cmd->add_subcommand("count", "top-dimension counting inequality");
        quanhe->add_option("file", qpath)->required();
        quanhe->callback([&] {
            CellComplex c = load_complex(ctx, qpath);
            auto q = check_quanhe(c);
            out({{"value", q.value}, {"ok", q.ok}, {"dual_cycles", q.dual_cycles}});
            if (!q.ok) finding.code = 1;
            ctx.emit("discharge count");
        });

        static std::string rpath2;
        static int rd = 3;
        auto* red = discharge_cmd->add_subcommand("reducibility",
                                                  "minimal-counterexample incidence condition");
        red->add_option("file", rpath2)->required();
        red->add_option("--d", rd)->capture_default_str();
        red->callback([&] {
            CellComplex c = load_complex(ctx, rpath2);
            ctx.param("d", rd);
            auto r = verify_reducibility_jinyong1(c, rd);
            out({{"all_satisfy", r.all_satisfy}, {"violating", r.violating}});
            if (!r.all_satisfy) finding.code = 1;
            ctx.emit("discharge reducibility");
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << " (rerun with a smaller instance)\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return finding.code;
}
