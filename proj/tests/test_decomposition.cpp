#include "doctest.h"
#include "surg/decomposition.hpp"
#include "surg/reference_complexes.hpp"

#include <algorithm>
#include <stdexcept>

using namespace surg;

TEST_CASE("corner classes") {
    auto v23 = complex_v23();
    // every face of a one-vertex complex collapses to a single class
    for (int f = 0; f < v23.face_count(); ++f) {
        auto ids = corner_classes(v23, f);
        CHECK(*std::max_element(ids.begin(), ids.end()) == 0);
        CHECK(!is_crossing_face(v23, f));
    }

    auto xp = complex_xprime();
    int crossing = 0;
    for (int f = 0; f < xp.face_count(); ++f) {
        auto ids = corner_classes(xp, f);
        int n = *std::max_element(ids.begin(), ids.end()) + 1;
        if (is_crossing_face(xp, f)) {
            ++crossing;
            CHECK(n == 2);  // inscribed polygon degenerates to a segment
        }
    }
    CHECK(crossing == 6);

    auto tri = parse_complex("[[1,2,3]]");
    auto ids = corner_classes(tri, 0);
    CHECK(*std::max_element(ids.begin(), ids.end()) == 2);

    CHECK_THROWS_AS(corner_classes(tri, 5), std::invalid_argument);
}

TEST_CASE("model geometry") {
    auto v23 = complex_v23();
    auto m = model_geometry(v23, 0);
    CHECK(m.loops.size() == 8);
    CHECK(m.half_edges.empty());
    CHECK(m.boundary_edges.empty());
    CHECK(m.core_faces.size() == 8);
    CHECK(m.corner_faces.empty());

    auto xp = complex_xprime();
    for (int v = 0; v < 2; ++v) {
        auto mx = model_geometry(xp, v);
        CHECK(mx.loops.size() == 6);
        CHECK(mx.half_edges.size() == 4);
        CHECK(mx.core_faces.size() == 5);
        CHECK(mx.corner_faces.size() == 6);
        // boundary slots: the opposite-side loop of each crossing face whose
        // apex corner sits at v, weight 3 - 2
        CHECK(mx.boundary_edges.size() == 3);
        for (const auto& slot : mx.boundary_edges) CHECK(slot.weight == 1);
    }

    auto tri = parse_complex("[[1,2,3]]");
    auto mt = model_geometry(tri, 0);
    CHECK(mt.loops.empty());
    CHECK(mt.half_edges.size() == 2);
    CHECK(mt.boundary_edges.size() == 1);
    CHECK(mt.boundary_edges[0].weight == 1);
}

TEST_CASE("model group") {
    auto v23 = complex_v23();
    auto p = model_group(v23, 0);
    CHECK(p.generators.size() == 8);
    CHECK(p.relators.size() == 8);

    auto tri = parse_complex("[[1,2,3]]");
    auto pt = model_group(tri, 0);
    CHECK(pt.generators.empty());
    CHECK(pt.relators.empty());

    auto xp = complex_xprime();
    auto px = model_group(xp, 0);
    CHECK(px.generators.size() == 6);
    CHECK(px.relators.size() == 5);
    auto text = p.text();
    CHECK(text.find("gens: g1 g2 g3") == 0);
    CHECK(text.find("rel:") != std::string::npos);
}

TEST_CASE("weight equation") {
    auto v = weight_equation_check(complex_v23());
    CHECK(v.pass);
    CHECK(v.lhs == 0);
    CHECK(v.crossing_faces == 0);

    auto x = weight_equation_check(complex_xprime());
    CHECK(x.pass);
    CHECK(x.lhs == 3 * x.crossing_faces);
    CHECK(x.crossing_faces == 6);

    auto w = weight_equation_check(complex_w158());
    CHECK(w.pass);
    CHECK(w.crossing_faces == 9);

    CHECK(weight_equation_check(parse_complex("[[1,2,3]]")).pass);
}

TEST_CASE("transitivity predicates") {
    CHECK(is_two_thirds_transitive(complex_v23()));
    CHECK(is_mildly_transitive(complex_v23()));
    CHECK(is_two_thirds_transitive(complex_xprime()));
    CHECK(is_mildly_transitive(complex_xprime()));
    CHECK(is_two_thirds_transitive(complex_w158()));

    // a face meeting three distinct vertices fails both
    auto tri = parse_complex("[[1,2,3]]");
    CHECK(!is_two_thirds_transitive(tri));
    CHECK(!is_mildly_transitive(tri));

    CHECK_THROWS_AS(is_two_thirds_transitive(parse_complex("[[1,2,3,4]]")),
                    std::invalid_argument);
    // triangle complexes: the two predicates agree
    for (const Complex& c : {complex_v23(), complex_xprime(), complex_w158(),
                             complex_xdoubleprime(), parse_complex("[[1,2,3]]")})
        CHECK(is_two_thirds_transitive(c) == is_mildly_transitive(c));
}

TEST_CASE("model geometries account for every edge end") {
    for (const Complex& c : {complex_v23(), complex_xprime(), complex_w158(),
                             parse_complex("[[1,2,3]]")}) {
        int ends = 0;
        for (int v = 0; v < c.vertex_count(); ++v) {
            auto m = model_geometry(c, v);
            ends += 2 * static_cast<int>(m.loops.size()) + static_cast<int>(m.half_edges.size());
        }
        CHECK(ends == 2 * c.edge_count());
    }
}

TEST_CASE("base graph") {
    auto zx = base_graph(complex_xprime());
    CHECK(zx.n == 2);
    CHECK(zx.edge_count() == 1);

    auto zv = base_graph(complex_v23());
    CHECK(zv.n == 1);
    CHECK(zv.edge_count() == 0);

    auto zw = base_graph(complex_w158());
    CHECK(zw.n == 2);
    CHECK(zw.edge_count() == 1);
}
