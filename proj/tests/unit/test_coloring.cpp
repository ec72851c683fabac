#include "simplexcolor/coloring.hpp"
#include "simplexcolor/error.hpp"
#include "simplexcolor/generators.hpp"
#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace simplexcolor;
using oracle::make_complex;
using oracle::pt;

namespace {

std::vector<Complex> valid_instances()
{
    std::vector<Complex> out;
    out.push_back(oracle::tri_k3());
    out.push_back(oracle::tetra_lemma());
    out.push_back(oracle::triangle_hull());
    out.push_back(oracle::tetra_hull());
    out.push_back(oracle::pentagram_cone());
    out.push_back(generate({GeneratorKind::fan, 2, 2, 0}));
    out.push_back(generate({GeneratorKind::closed_fan, 2, 7, 0}));
    out.push_back(generate({GeneratorKind::tri_tiling, 2, 5, 0}));
    out.push_back(generate({GeneratorKind::freudenthal, 2, 2, 0}));
    out.push_back(generate({GeneratorKind::freudenthal, 2, 4, 0}));
    out.push_back(generate({GeneratorKind::freudenthal, 3, 2, 0}));
    out.push_back(generate({GeneratorKind::path, 3, 10, 0}));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        out.push_back(generate({GeneratorKind::delaunay2d, 2, 30, seed}));
    return out;
}

// Replays a certificate, checking each witness against a direct count of the
// live simplices that contain it.
void check_certificate(const Complex& c, const PeelCertificate& cert)
{
    REQUIRE(cert.steps.size() == c.size());
    std::vector<bool> live(c.size(), true);
    for (const auto& step : cert.steps) {
        REQUIRE(step.simplex < c.size());
        REQUIRE(live[step.simplex]);
        const Simplex& s = c.simplex(step.simplex);
        CHECK(step.facet.size() == c.dimension());
        for (VertexId v : step.facet) CHECK(s.contains(v));
        std::size_t owners = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!live[i]) continue;
            bool all = true;
            for (VertexId v : step.facet) all &= c.simplex(i).contains(v);
            owners += all;
        }
        CHECK(owners == 1);
        live[step.simplex] = false;
    }
}

}  // namespace

TEST_CASE("peel method names")
{
    CHECK(parse_peel_method("geometric") == PeelMethod::geometric);
    CHECK(to_string(PeelMethod::combinatorial) == "combinatorial");
    CHECK_THROWS_AS(parse_peel_method("random"), InputError);
}

TEST_CASE("combinatorial finder examples")
{
    const auto single = make_complex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}, {{0, 1, 2}});
    ResidualComplex r1(single);
    const auto e1 = find_exposed_combinatorial(r1);
    CHECK(e1.simplex == 0);
    CHECK(e1.facet == Facet({0, 1}));

    const Complex fan = oracle::tri_k3();
    ResidualComplex r3(fan);
    CHECK(find_exposed_combinatorial(r3).simplex == 0);

    const Complex boundary = generate({GeneratorKind::boundary_abstract, 2, 1, 0});
    ResidualComplex rb(boundary);
    CHECK(rb.exposed_simplices().empty());
    try {
        find_exposed_combinatorial(rb);
        FAIL("expected an unrealizable complex error");
    } catch (const UnrealizableComplexError& e) {
        CHECK(e.residual_size() == 4);
    }
}

TEST_CASE("residual bookkeeping")
{
    const Complex fan = oracle::tri_k3();
    ResidualComplex r(fan);
    CHECK(r.size() == 3);
    CHECK(r.multiplicity(Facet({0, 1})) == 2);
    CHECK_FALSE(r.exposed(1, Facet({0, 1})));
    r.remove(2);
    CHECK(r.size() == 2);
    CHECK(r.multiplicity(Facet({0, 1})) == 1);
    CHECK(r.exposed(1, Facet({0, 1})));
    CHECK_THROWS_AS(r.remove(2), InputError);
}

TEST_CASE("geometric finder on a single simplex")
{
    const auto single = make_complex(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, {{0, 1, 2, 3}});
    ResidualComplex r(single);
    const auto g = find_exposed_geometric(r);
    CHECK(g.simplex == 0);
    CHECK(g.trace.subset_sizes.size() == 1);
    CHECK(g.trace.hull_vertex == 0);
}

TEST_CASE("geometric finder picks the most counterclockwise triangle at the hull vertex")
{
    const Complex c = oracle::triangle_hull();
    // neither hull edge at (0,0) is an edge of the complex
    std::vector<Point> cloud = c.vertices();
    CHECK(oracle::segment_on_hull_2d(c.vertex(0), c.vertex(5), cloud));
    CHECK(oracle::segment_on_hull_2d(c.vertex(0), c.vertex(8), cloud));

    ResidualComplex r(c);
    const auto g = find_exposed_geometric(r);
    CHECK(g.trace.hull_vertex == 0);
    CHECK(g.simplex == 2);
    CHECK(g.facet == Facet({0, 4}));
    CHECK(r.multiplicity(g.facet) == 1);
}

TEST_CASE("geometric finder picks an outer tetrahedron around a hull edge")
{
    const Complex c = oracle::tetra_hull();
    REQUIRE(validate(c, ValidationLevel::geometric_strict).ok());
    ResidualComplex r(c);
    const auto g = find_exposed_geometric(r);
    CHECK((g.simplex == 0 || g.simplex == 2));
    CHECK(g.facet.contains(0));
    CHECK(g.facet.contains(1));
    CHECK(r.multiplicity(g.facet) == 1);
}

TEST_CASE("geometric finder narrows to a hull edge when no facet through the vertex is on the hull")
{
    const Complex c = oracle::pentagram_cone();
    REQUIRE(validate(c, ValidationLevel::geometric_strict).ok());
    ResidualComplex r(c);
    const auto g = find_exposed_geometric(r);
    CHECK(g.trace.hull_vertex == 0);
    CHECK(g.trace.subset_sizes == std::vector<std::size_t>{10, 2});
    REQUIRE(g.trace.faces.size() == 2);
    CHECK(g.trace.faces[1] == std::vector<VertexId>{0, 2});
    CHECK((g.simplex == 0 || g.simplex == 9));
    CHECK(g.facet.contains(0));
    CHECK(g.facet.contains(2));
    CHECK(r.multiplicity(g.facet) == 1);

    // the whole peel goes through
    const auto cert = peel(c, PeelMethod::geometric);
    CHECK(verify_coloring(c, color(c, cert)).ok);
}

TEST_CASE("geometric finder handles a vertex star whose hull carries a glued facet")
{
    // In the 2x2 Freudenthal grid, the corner (1,0) has the hull edge
    // (1,0)-(1,1) of its star glued between two triangles.
    const Complex c = generate({GeneratorKind::freudenthal, 2, 2, 0});
    ResidualComplex r(c);
    while (!r.empty()) {
        const auto g = find_exposed_geometric(r);
        CHECK(r.multiplicity(g.facet) == 1);
        r.remove(g.simplex);
    }
}

TEST_CASE("geometric trace shrinks strictly")
{
    for (const auto& c : valid_instances()) {
        ResidualComplex r(c);
        while (!r.empty()) {
            const auto g = find_exposed_geometric(r);
            const auto& sizes = g.trace.subset_sizes;
            REQUIRE(!sizes.empty());
            CHECK(sizes.front() <= r.size());
            for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] < sizes[i - 1]);
            CHECK(g.trace.faces.size() == sizes.size());
            CHECK(r.multiplicity(g.facet) == 1);
            r.remove(g.simplex);
        }
    }
}

TEST_CASE("peel examples")
{
    const Complex path = generate({GeneratorKind::path, 2, 6, 0});
    CHECK(peel(path, PeelMethod::combinatorial).steps.size() == 6);

    const Complex grid = generate({GeneratorKind::freudenthal, 3, 2, 0});
    REQUIRE(grid.size() == 48);
    check_certificate(grid, peel(grid, PeelMethod::combinatorial));
    check_certificate(grid, peel(grid, PeelMethod::geometric));

    CHECK(peel(oracle::tri_k3(), PeelMethod::geometric).steps.size() == 3);

    const Complex boundary = generate({GeneratorKind::boundary_abstract, 3, 1, 0});
    CHECK_THROWS_AS(peel(boundary, PeelMethod::combinatorial), UnrealizableComplexError);
    CHECK_THROWS_AS(peel(boundary, PeelMethod::geometric), UnrealizableComplexError);
}

TEST_CASE("peel soundness, method agreement and determinism")
{
    for (const auto& c : valid_instances()) {
        for (auto method : {PeelMethod::combinatorial, PeelMethod::geometric}) {
            const auto cert = peel(c, method);
            CHECK(cert.method == method);
            check_certificate(c, cert);
            CHECK(peel(c, method) == cert);
            const auto col = color(c, cert);
            CHECK(verify_coloring(c, col).ok);
            CHECK(colors_used(col) <= c.dimension() + 1);
            for (int k : col.colors) CHECK(k <= static_cast<int>(c.dimension()));
        }
    }
}

TEST_CASE("color examples")
{
    const auto single = make_complex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}, {{0, 1, 2}});
    CHECK(color(single, peel(single, PeelMethod::combinatorial)).colors == std::vector<int>{0});

    const auto pair = make_complex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, {{0, 1, 2}, {1, 2, 3}});
    const auto col = color(pair, peel(pair, PeelMethod::combinatorial));
    CHECK(std::set<int>(col.colors.begin(), col.colors.end()) == std::set<int>{0, 1});

    PeelCertificate short_cert{PeelMethod::combinatorial, {{0, Facet({0, 1})}}};
    CHECK_THROWS_AS(color(pair, short_cert), InputError);
    PeelCertificate repeated{PeelMethod::combinatorial, {{0, Facet({0, 1})}, {0, Facet({0, 2})}}};
    CHECK_THROWS_AS(color(pair, repeated), InputError);
}

TEST_CASE("verify_coloring reports violations")
{
    const auto pair = make_complex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, {{0, 1, 2}, {1, 2, 3}});
    CHECK(verify_coloring(pair, Coloring{{0, 1}}).ok);

    const auto same = verify_coloring(pair, Coloring{{0, 0}});
    CHECK_FALSE(same.ok);
    REQUIRE(same.violations.size() == 1);
    CHECK(same.violations[0].kind == ColoringViolation::Kind::same_color);
    CHECK(same.violations[0].facet == Facet({1, 2}));

    const auto range = verify_coloring(pair, Coloring{{0, 3}});
    CHECK_FALSE(range.ok);
    CHECK(range.violations[0].kind == ColoringViolation::Kind::color_out_of_range);
    CHECK_FALSE(verify_coloring(pair, Coloring{{-1, 0}}).ok);

    CHECK_THROWS_AS(verify_coloring(pair, Coloring{{0}}), InputError);
}

TEST_CASE("colorer on a thousand-triangle Delaunay complex")
{
    const Complex c = generate({GeneratorKind::delaunay2d, 2, 520, 17});
    REQUIRE(c.size() >= 1000);
    const auto col = color(c, peel(c, PeelMethod::combinatorial));
    CHECK(verify_coloring(c, col).ok);
    CHECK(colors_used(col) <= 3);
}
