#include "doctest.h"
#include "surg/cobordism.hpp"
#include "surg/reference_complexes.hpp"
#include "surg/type_system.hpp"

#include <stdexcept>

using namespace surg;

TEST_CASE("flip surgery produces the fake cover") {
    auto xp = complex_xprime();
    auto flipped = flip_surgery(xp, {{0, 1, -2}, {1, 0, -11}});
    CHECK(isomorphic(flipped, complex_xdoubleprime()).has_value());
    CHECK(flipped.text() == complex_xdoubleprime().text());

    // applying the inverse replacements restores the cover
    auto back = flip_surgery(flipped, {{0, 1, 11}, {1, 0, 2}});
    CHECK(back.text() == xp.text());

    CHECK(flip_surgery(xp, {}).text() == xp.text());
    CHECK_THROWS_AS(flip_surgery(xp, {{99, 0, 1}}), std::invalid_argument);
}

TEST_CASE("split and recompose the double cover") {
    auto xp = complex_xprime();
    auto col = separating_collar(xp, 0, 1);
    auto [minus, plus] = split_along_collar(xp, col);
    CHECK(minus.body.face_count() == 11);
    CHECK(plus.body.face_count() == 11);
    CHECK(minus.left.empty());
    CHECK(plus.right.empty());
    CHECK(minus.right.faces.size() == 6);

    // the two fillings of the two-link complex have distinct interior links
    auto w = complex_w158();
    auto wcol = separating_collar(w, 0, 1);
    auto [wm, wp] = split_along_collar(w, wcol);
    auto wml = wm.body.link(wm.body.interior_vertices().front());
    auto wpl = wp.body.link(wp.body.interior_vertices().front());
    CHECK(!iso_graph(wml, wpl).has_value());

    // gluing the halves back reproduces the cover
    auto glued = compose(minus, plus);
    CHECK(glued.body.boundary_edges().empty());
    CHECK(isomorphic(glued.body, xp).has_value());

    CHECK_THROWS_AS(split_along_collar(complex_v23(), col), std::invalid_argument);
}

TEST_CASE("unit laws") {
    auto xp = complex_xprime();
    auto col = separating_collar(xp, 0, 1);
    auto [minus, plus] = split_along_collar(xp, col);

    auto right_unit = collar_identity(minus, true);
    auto glued = compose(minus, right_unit);
    CHECK(cobordism_isomorphic(glued, minus));

    auto left_unit = collar_identity(plus, false);
    auto glued2 = compose(left_unit, plus);
    CHECK(cobordism_isomorphic(glued2, plus));

    // the unit itself composes to a unit
    auto uu = compose(right_unit, collar_identity(right_unit, true));
    CHECK(cobordism_isomorphic(uu, right_unit));
}

TEST_CASE("unit laws hold for the captured-loop collar") {
    // one plus-side loop of this collar lies entirely inside the closure, so
    // it stays interior to the fillings and their units
    auto w = complex_w158();
    auto col = separating_collar(w, 0, 1);
    auto [wm, wp] = split_along_collar(w, col);
    auto unit = collar_identity(wm, true);
    CHECK(cobordism_isomorphic(compose(wm, unit), wm));
    auto unit2 = collar_identity(wp, false);
    CHECK(cobordism_isomorphic(compose(unit2, wp), wp));
    auto glued = compose(wm, wp);
    CHECK(isomorphic(glued.body, w).has_value());
}

TEST_CASE("dual is an involution") {
    auto xp = complex_xprime();
    auto col = separating_collar(xp, 0, 1);
    auto [minus, plus] = split_along_collar(xp, col);
    auto d = dual(dual(minus));
    CHECK(cobordism_isomorphic(d, minus));
    CHECK(dual(minus).left.empty() == false);
    CHECK(dual(minus).right.empty());
}

TEST_CASE("mismatched collars refuse to compose") {
    auto xp = complex_xprime();
    auto xpp = complex_xdoubleprime();
    auto [m1, p1] = split_along_collar(xp, separating_collar(xp, 0, 1));
    auto [m2, p2] = split_along_collar(xpp, separating_collar(xpp, 0, 1));
    // S-collar against T-collar
    CHECK_THROWS_AS(compose(m1, p2), std::invalid_argument);
}

TEST_CASE("the surgered complex splits along its T collar") {
    auto xpp = complex_xdoubleprime();
    auto col = separating_collar(xpp, 0, 1);
    auto [minus, plus] = split_along_collar(xpp, col);
    // sides label against their own closure, not the S reference
    CHECK(minus.right.ref_key.substr(0, 4) == "obj:");
    auto unit = collar_identity(minus, true);
    CHECK(cobordism_isomorphic(compose(minus, unit), minus));
    auto glued = compose(minus, plus);
    CHECK(isomorphic(glued.body, xpp).has_value());
}

TEST_CASE("require-unique flags ambiguous unlabeled matchings") {
    auto xp = complex_xprime();
    auto [minus, plus] = split_along_collar(xp, separating_collar(xp, 0, 1));
    // strip the labelings to force the fallback search
    auto strip = [](Cobordism c) {
        for (CollarSide* s : {&c.left, &c.right}) {
            s->ref_key.clear();
            s->ref_edges.clear();
            s->ref_faces.clear();
        }
        return c;
    };
    Cobordism m = strip(minus), p = strip(plus);
    ComposeOptions opts;
    opts.require_unique = true;
    // the S closure has symmetries, so several matchings exist
    CHECK_THROWS_AS(compose(m, p, opts), std::invalid_argument);
    // without the flag the least matching is used and the result still glues
    auto glued = compose(m, p);
    CHECK(glued.body.boundary_edges().empty());
    CHECK(isomorphic(glued.body, xp).has_value());
}

TEST_CASE("cobordism file round trip") {
    auto xp = complex_xprime();
    auto [minus, plus] = split_along_collar(xp, separating_collar(xp, 0, 1));
    auto text = minus.text();
    auto parsed = parse_cobordism(text);
    CHECK(parsed.text() == text);
    CHECK(cobordism_isomorphic(parsed, minus));
    CHECK_THROWS_AS(parse_cobordism("left.faces = [0]\n"), std::runtime_error);
}

TEST_CASE("composition asserts the type when asked") {
    auto xp = complex_xprime();
    auto [minus, plus] = split_along_collar(xp, separating_collar(xp, 0, 1));
    ComposeOptions opts;
    opts.assert_type = TypeSpec::rank74();
    auto glued = compose(minus, plus, opts);
    CHECK(glued.body.face_count() == 16);
}
