#include "doctest.h"
#include "surg/collar.hpp"
#include "surg/reference_complexes.hpp"

#include <set>
#include <tuple>
#include <stdexcept>

using namespace surg;

TEST_CASE("separating collar of the double cover") {
    auto xp = complex_xprime();
    auto col = separating_collar(xp, 0, 1);
    CHECK(col.faces.size() == 6);
    CHECK(col.crossing_edges.size() == 4);
    CHECK(col.nerve.graph.edge_count() == 6);
    CHECK(classify_nerve(col) == "S");

    auto p = collar_predicates(col);
    CHECK(p.thick);
    CHECK(p.treeable);
    CHECK(p.acylindrical);
    CHECK(p.boundary_injective);
    CHECK(p.spans_two);

    // each span class is a spanning path of length 3
    for (int color = 0; color < 2; ++color) {
        auto cls = col.nerve.color_class(color);
        CHECK(cls.edge_count() == 3);
        int deg1 = 0, deg2 = 0;
        for (int v = 0; v < cls.n; ++v) {
            if (cls.degree(v) == 1) ++deg1;
            if (cls.degree(v) == 2) ++deg2;
        }
        CHECK(deg1 == 2);
        CHECK(deg2 == 2);
    }

    CHECK(h_collar_certificate(col).has_value());

    // duality swaps the coloring but not the classification
    auto dual = dual_collar(col);
    CHECK(classify_nerve(dual) == "S");
    CHECK(colored_iso(col.nerve, dual.nerve, true).has_value());
}

TEST_CASE("separating collar of the surgered complex") {
    auto xpp = complex_xdoubleprime();
    auto col = separating_collar(xpp, 0, 1);
    CHECK(col.faces.size() == 6);
    CHECK(classify_nerve(col) == "T");
    auto p = collar_predicates(col);
    CHECK(p.thick);
    CHECK(p.treeable);
    CHECK(h_collar_certificate(col).has_value());
}

TEST_CASE("collar of the two-link complex") {
    auto w = complex_w158();
    auto col = separating_collar(w, 0, 1);
    CHECK(col.faces.size() == 9);
    CHECK(col.nerve.graph.n == 6);
    CHECK(col.nerve.graph.edge_count() == 9);
    CHECK(classify_nerve(col) == "unknown");
    CHECK(!canonical_graph_key(col.nerve.graph).empty());
}

TEST_CASE("octagonal nerve is thick but not treeable") {
    auto np = nerve_predicates(nerve_octagonal());
    CHECK(np.thick);
    CHECK(!np.treeable);
    // its span classes fall apart into two segments of length 3
    for (int color = 0; color < 2; ++color) {
        auto cls = nerve_octagonal().color_class(color);
        CHECK(cls.edge_count() == 6);
        CHECK(!cls.connected());
    }
    CHECK(nerve_predicates(nerve_S()).treeable);
    CHECK(nerve_predicates(nerve_T()).treeable);
    // the tripod span classes of theta and the cube miss one vertex each, so
    // they are trees but not spanning trees
    CHECK(!nerve_predicates(nerve_theta()).treeable);
    CHECK(!nerve_predicates(nerve_cube()).treeable);
}

TEST_CASE("span-swapping involutions exist exactly for the realizable types") {
    // the deck involution of a double cover swaps the two span classes, so
    // nerves without such an involution cannot appear
    auto has_swap_involution = [](const ColoredGraph& cg) {
        auto aut = automorphisms(cg.graph);
        for (const auto& a : aut.elements) {
            bool involution = true;
            for (int v = 0; v < cg.graph.n; ++v)
                if (a[a[v]] != v) involution = false;
            bool nontrivial = false;
            for (int v = 0; v < cg.graph.n; ++v)
                if (a[v] != v) nontrivial = true;
            if (!involution || !nontrivial) continue;
            // does it carry one color class onto the other?
            std::multiset<std::tuple<int, int, int>> mapped, want;
            for (size_t i = 0; i < cg.graph.edges.size(); ++i) {
                auto [u, v] = cg.graph.edges[i];
                int x = a[u], y = a[v];
                if (x > y) std::swap(x, y);
                mapped.insert({x, y, 1 - cg.edge_colors[i]});
                want.insert({u, v, cg.edge_colors[i]});
            }
            if (mapped == want) return true;
        }
        return false;
    };
    CHECK(has_swap_involution(nerve_S()));
    CHECK(has_swap_involution(nerve_cube()));
    CHECK(has_swap_involution(nerve_theta()));
    CHECK(has_swap_involution(nerve_octagonal()));
    CHECK(!has_swap_involution(nerve_T()));
    CHECK(!has_swap_involution(nerve_theta_prime()));
}

TEST_CASE("collar bookkeeping invariants") {
    auto xp = complex_xprime();
    auto col = separating_collar(xp, 0, 1);
    int by_color[2] = {0, 0};
    for (int c : col.nerve.edge_colors) by_color[c]++;
    CHECK(by_color[0] + by_color[1] == static_cast<int>(col.faces.size()));
    // nerve degree = number of collar faces through the crossing edge
    for (size_t i = 0; i < col.crossing_edges.size(); ++i) {
        int label = col.crossing_edges[i];
        int uses = 0;
        for (int f : col.faces)
            for (SignedEdge s : xp.faces()[f].word())
                if (edge_label(s) == label) ++uses;
        CHECK(col.nerve.graph.degree(static_cast<int>(i)) == uses);
    }
}

TEST_CASE("collar error paths") {
    auto xp = complex_xprime();
    CHECK_THROWS_AS(separating_collar(xp, 0, 0), std::invalid_argument);
    // two far-apart vertices in a disjoint union are not adjacent
    auto two = disjoint_union(complex_v23(), complex_v23());
    CHECK_THROWS_AS(separating_collar(two, 0, 1), std::invalid_argument);
}

TEST_CASE("minimal thick nerve enumeration") {
    auto minimal = st_lemma_enumerate();
    REQUIRE(minimal.size() == 2);
    std::set<std::string> keys{canonical_graph_key(minimal[0]), canonical_graph_key(minimal[1])};
    CHECK(keys.count(canonical_graph_key(nerve_S().graph)) == 1);
    CHECK(keys.count(canonical_graph_key(nerve_T().graph)) == 1);

    auto raw = st_lemma_enumerate_raw();
    REQUIRE(raw.two_vertices.size() == 1);
    CHECK(raw.two_vertices[0].multiplicity(0, 1) == 3);  // the theta graph
    REQUIRE(raw.three_vertices.size() == 2);
    CHECK(raw.three_vertices[0].edge_count() == 5);
    CHECK(raw.three_vertices[1].edge_count() == 6);
}
