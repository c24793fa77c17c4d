#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <geomlift/complex.hpp>

#include "corpus.hpp"

using namespace geomlift;

namespace {

// Reference certifier used by the certified-mode tests: accepts exactly the
// id sets that form the boundary of an (i+1)-simplex.
bool simplex_boundary_oracle(const CellComplex& c, const std::vector<int>& ids, int i) {
    std::set<int> verts;
    int top = 0;
    for (int id : ids) {
        if (c.cell(id).dim == i) ++top;
        for (int v : c.cell(id).vertices) verts.insert(v);
    }
    return static_cast<int>(verts.size()) == i + 2 && top == i + 2;
}

std::set<std::vector<int>> vertex_sets(const CellComplex& c, int d) {
    std::set<std::vector<int>> out;
    for (int id : c.cells_of_dim(d)) out.insert(c.cell(id).vertices);
    return out;
}

} // namespace

TEST_CASE("complex construction and incidence") {
    CellComplex c = CellComplex::from_graph(Graph::complete(4));
    CHECK(c.dimension() == 1);
    CHECK(c.cell_count() == 10);
    CHECK(c.cells_of_dim(0).size() == 4);
    CHECK(c.cells_of_dim(1).size() == 6);
    int e01 = c.edge_cell(0, 1);
    CHECK(c.cell(e01).vertices == std::vector<int>{0, 1});
    CHECK(c.cell(e01).boundary == std::vector<int>{0, 1});
    CHECK(incidence_degree(c, 0, 1) == 3);  // vertex 0 lies on 3 edges
    CHECK(incidence_degree(c, 0, 0) == 3);  // and has 3 skeleton neighbours
    CHECK(incidence_degree(c, e01, 0) == 2);
    CHECK_THROWS_AS(c.edge_cell(0, 0), hypothesis_error);
    CHECK_THROWS_AS(incidence_degree(c, 99, 0), hypothesis_error);
}

TEST_CASE("chordless cycle enumeration") {
    CHECK(chordless_cycles(Graph::cycle(5)).size() == 1);
    CHECK(chordless_cycles(Graph::complete(6)).size() == 20); // triangles only
    CHECK(chordless_cycles(Graph::complete_bipartite(3, 4)).size() == 18);

    Graph c6_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    auto cyc = chordless_cycles(c6_chord);
    REQUIRE(cyc.size() == 2); // the chord splits C_6 into two chordless squares
    for (const auto& c : cyc) CHECK(c.size() == 4);
}

TEST_CASE("dimension raising on complete graphs") {
    SECTION("K_4 fills into the tetrahedron shell") {
        auto r = raise_dimension(Graph::complete(4), 2, RaiseMode::triangulated);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{4, 6, 4});
        CHECK(r.termination == "reached target");
        CHECK(r.fills.size() == 4);
        CHECK(is_closed(r.complex, 3).closed);
        CHECK(r.complex.skeleton() == Graph::complete(4)); // skeleton untouched
    }
    SECTION("K_6 gives the 20-triangle 2-complex") {
        auto r = raise_dimension(Graph::complete(6), 2, RaiseMode::triangulated);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{6, 15, 20});
        CHECK(is_closed(r.complex, 3).closed);
        for (int e : r.complex.cells_of_dim(1))
            CHECK(incidence_degree(r.complex, e, 2) == 4);
        // simplicity: no two 2-cells share a vertex set
        CHECK(vertex_sets(r.complex, 2).size() == 20);
    }
    SECTION("K_5 raised twice is the 4-simplex boundary") {
        auto r = raise_dimension(Graph::complete(5), 3, RaiseMode::triangulated);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{5, 10, 10, 5});
        CHECK(is_closed(r.complex, 4).closed);
        long long euler = 5 - 10 + 10 - 5;
        CHECK(euler == 0);
    }
    SECTION("K_7 raised twice") {
        auto r = raise_dimension(Graph::complete(7), 3, RaiseMode::triangulated);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{7, 21, 35, 35});
        CHECK(is_closed(r.complex, 4).closed);
        CHECK(r.fills.size() == 35 + 35);
    }
}

TEST_CASE("dimension raising, general and degenerate inputs") {
    SECTION("C_5 in general2 mode fills its single chordless cycle") {
        auto r = raise_dimension(Graph::cycle(5), 2, RaiseMode::general2);
        REQUIRE(face_vector(r.complex).counts == std::vector<long long>{5, 5, 1});
        int cell = r.complex.cells_of_dim(2)[0];
        CHECK(r.complex.cell(cell).vertices == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(r.complex.cell(cell).boundary.size() == 5);
    }
    SECTION("C_5 in triangulated mode finds nothing to fill") {
        auto r = raise_dimension(Graph::cycle(5), 2, RaiseMode::triangulated);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{5, 5});
        CHECK(r.termination == "no induced spheres at level 1");
    }
    SECTION("a unique sphere stops the raising early") {
        auto r = raise_dimension(Graph::cycle(6), 3, RaiseMode::general2);
        CHECK(r.termination == "unique induced sphere at level 1");
        CHECK(face_vector(r.complex).counts == std::vector<long long>{6, 6, 1});
    }
    SECTION("disconnected or tree inputs are rejected") {
        CHECK_THROWS_AS(raise_dimension(Graph::path(4), 2, RaiseMode::triangulated),
                        hypothesis_error);
        CHECK_THROWS_AS(raise_dimension(Graph(5, {}), 2, RaiseMode::general2), hypothesis_error);
    }
    SECTION("K_{3,4} in general2 mode fills the 18 squares") {
        auto r = raise_dimension(Graph::complete_bipartite(3, 4), 2, RaiseMode::general2);
        CHECK(face_vector(r.complex).counts == std::vector<long long>{7, 12, 18});
        for (int t : r.complex.cells_of_dim(2)) CHECK(r.complex.cell(t).vertices.size() == 4);
        CHECK(r.complex.skeleton() == Graph::complete_bipartite(3, 4));
    }
}

TEST_CASE("certified mode defers to the oracle") {
    SECTION("a simplex-boundary oracle reproduces the triangulated result") {
        auto plain = raise_dimension(Graph::complete(5), 3, RaiseMode::triangulated);
        auto cert = raise_dimension(Graph::complete(5), 3, RaiseMode::certified,
                                    simplex_boundary_oracle);
        CHECK(face_vector(cert.complex).counts == face_vector(plain.complex).counts);
        CHECK(vertex_sets(cert.complex, 3) == vertex_sets(plain.complex, 3));
    }
    SECTION("no oracle means nothing certifies") {
        auto r = raise_dimension(Graph::complete(5), 3, RaiseMode::certified);
        CHECK(r.termination == "no induced spheres at level 2");
        CHECK(face_vector(r.complex).counts == std::vector<long long>{5, 10, 10});
    }
}

TEST_CASE("forbidden-structure witnesses") {
    CHECK(face_vector(build_complete_witness(2)).counts == std::vector<long long>{5, 10});
    CHECK(face_vector(build_complete_witness(3)).counts == std::vector<long long>{6, 15, 20});
    CHECK(face_vector(build_complete_witness(4)).counts == std::vector<long long>{7, 21, 35, 35});
    CHECK(face_vector(build_bipartite_witness(2)).counts == std::vector<long long>{6, 9});
    CHECK(face_vector(build_bipartite_witness(3)).counts == std::vector<long long>{7, 12, 18});
    CHECK_THROWS_AS(build_bipartite_witness(4), hypothesis_error); // needs a certifier
    CHECK_THROWS_AS(build_complete_witness(1), hypothesis_error);
}

TEST_CASE("regions") {
    SECTION("planar skeleton: octahedron has 8 triangular regions") {
        auto r = corpus::octahedron_surface();
        CHECK(face_vector(r.complex).counts == std::vector<long long>{6, 12, 8});
        CHECK(r.region_cells.size() == 8);
        for (int id : r.region_cells) CHECK(r.complex.cell(id).boundary.size() == 3);
        CHECK(is_closed(r.complex, 3).closed);
    }
    SECTION("non-planar skeleton is rejected") {
        CHECK_THROWS_AS(regions(CellComplex::from_graph(Graph::complete(5))), hypothesis_error);
    }
    SECTION("supplied region data for a surface") {
        auto r = corpus::boundary_delta3_solid();
        CHECK(face_vector(r.complex).counts == std::vector<long long>{4, 6, 4, 2});
        CHECK(r.region_cells.size() == 2);
    }
    SECTION("unbalanced region data is rejected") {
        CellComplex s = corpus::boundary_delta3();
        std::vector<int> tris = s.cells_of_dim(2);
        CHECK_THROWS_WITH(regions(s, {tris}),
                          Catch::Matchers::ContainsSubstring("not a closed embedded complex"));
    }
    SECTION("region data required beyond the planar case") {
        CHECK_THROWS_AS(regions(corpus::boundary_delta3()), hypothesis_error);
    }
}

TEST_CASE("fixture complexes are well formed") {
    CellComplex t = corpus::torus7();
    CHECK(face_vector(t).counts == std::vector<long long>{7, 21, 14});
    CHECK(is_closed(t, 3).closed);
    for (int e : t.cells_of_dim(1)) CHECK(incidence_degree(t, e, 2) == 2);
    for (int tri : t.cells_of_dim(2)) CHECK(incidence_degree(t, tri, 2) == 3);
    for (int v : t.cells_of_dim(0)) CHECK(incidence_degree(t, v, 0) == 6);

    CHECK(face_vector(corpus::boundary_delta4()).counts ==
          std::vector<long long>{5, 10, 10, 5});

    std::mt19937_64 rng(7);
    Graph sp = corpus::stacked_planar(9, rng);
    CHECK(sp.size() == 3 * sp.order() - 6);
    auto pr = regions(CellComplex::from_graph(sp)); // stacked graphs stay planar
    CHECK(pr.region_cells.size() == static_cast<size_t>(2 * sp.order() - 4));

    auto facets = corpus::stacked_sphere3(8, rng);
    CellComplex s3 = corpus::simplicial_complex(8, facets);
    CHECK(is_closed(s3, 4).closed);
    auto f = face_vector(s3).counts;
    CHECK(f[0] - f[1] + f[2] - f[3] == 0); // odd-dimensional sphere
}

TEST_CASE("subcomplex extraction") {
    auto u = raise_dimension(Graph::complete(6), 2, RaiseMode::triangulated).complex;
    int tri = u.cells_of_dim(2)[0];
    std::vector<int> id_map;
    CellComplex sub = subcomplex(u, u.closure(tri), &id_map);
    CHECK(face_vector(sub).counts == std::vector<long long>{3, 3, 1});
    CHECK(id_map.size() == 7);
    // a bare 2-cell without its edges is not a subcomplex
    CHECK_THROWS_AS(subcomplex(u, {tri}), hypothesis_error);
}

TEST_CASE("hyper ear decompositions") {
    auto u = raise_dimension(Graph::complete(6), 2, RaiseMode::triangulated).complex;
    // initial stage: the tetrahedron shell spanned by vertices 0..3
    std::vector<int> stage0;
    for (int id = 0; id < u.cell_count(); ++id) {
        const auto& vs = u.cell(id).vertices;
        if (std::all_of(vs.begin(), vs.end(), [](int v) { return v <= 3; }))
            stage0.push_back(id);
    }
    std::vector<int> all(u.cell_count());
    for (int i = 0; i < u.cell_count(); ++i) all[i] = i;

    SECTION("valid two-stage decomposition") {
        auto r = verify_hyper_ear_decomposition(u, {stage0, all}, simplex_boundary_oracle);
        CHECK(r.ok);
    }
    SECTION("initial stage must certify as a sphere") {
        std::vector<int> not_sphere = u.closure(u.cells_of_dim(2)[0]);
        auto r = verify_hyper_ear_decomposition(u, {not_sphere, all}, simplex_boundary_oracle);
        CHECK_FALSE(r.ok);
        CHECK(r.violation == "initial stage is not a certified sphere");
    }
    SECTION("stages must be subcomplexes") {
        std::vector<int> broken = stage0;
        broken.erase(std::find(broken.begin(), broken.end(), 0));
        auto r = verify_hyper_ear_decomposition(u, {broken, all});
        CHECK_FALSE(r.ok);
        CHECK(r.violation == "stage is not a subcomplex");
    }
    SECTION("final stage must exhaust the complex") {
        auto r = verify_hyper_ear_decomposition(u, {stage0});
        CHECK_FALSE(r.ok);
        CHECK(r.violation == "final stage is not the whole complex");
    }
    SECTION("dangling ids are an error") {
        CHECK_THROWS_AS(verify_hyper_ear_decomposition(u, {{9999}}), hypothesis_error);
    }
}

TEST_CASE("complex JSON round trip") {
    auto u = raise_dimension(Graph::complete(6), 2, RaiseMode::triangulated).complex;
    CellComplex back = complex_from_json(to_json(u));
    CHECK(face_vector(back).counts == face_vector(u).counts);
    CHECK(back.skeleton() == u.skeleton());
    for (int id = 0; id < u.cell_count(); ++id) {
        CHECK(back.cell(id).vertices == u.cell(id).vertices);
        CHECK(back.cell(id).boundary == u.cell(id).boundary);
    }
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::object()), parse_error);
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(
                        R"({"dim":1,"cells":[[1,[0,1],[]]]})")),
                    parse_error);
}
