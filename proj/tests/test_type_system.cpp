#include "doctest.h"
#include "surg/reference_complexes.hpp"
#include "surg/type_system.hpp"

#include <stdexcept>

using namespace surg;

TEST_CASE("affiliated types") {
    auto v23 = complex_v23();
    auto t = affiliated_type(v23);
    REQUIRE(t.size() == 1);
    CHECK(iso_graph(t[0], moebius_kantor()).has_value());

    auto w = complex_w158();
    auto tw = affiliated_type(w);
    REQUIRE(tw.size() == 2);

    // all vertices of a lone triangle are boundary
    CHECK(affiliated_type(parse_complex("[[1,2,3]]")).empty());
}

TEST_CASE("type verdicts") {
    auto w = complex_w158();
    auto verdict = check_type(w, TypeSpec::rank158(), true);
    CHECK(verdict.pass);
    CHECK(verdict.strict_pass);

    auto xpp = complex_xdoubleprime();
    CHECK(!check_type(xpp, TypeSpec::rank74(), false).pass);
    CHECK(check_type(xpp, TypeSpec::fake74(), false).pass);

    auto v23 = complex_v23();
    auto v = check_type(v23, TypeSpec::rank158(), true);
    CHECK(v.pass);
    CHECK(!v.strict_pass);
    REQUIRE(v.unrealized_allowed.size() == 1);
    CHECK(v.unrealized_allowed[0] == 1);  // the Heawood slot

    // fake74 and rank74 are mutually exclusive
    CHECK(!check_type(v23, TypeSpec::fake74(), false).pass);
    CHECK(check_type(v23, TypeSpec::rank74(), false).pass);

    CHECK_THROWS_AS(check_type(parse_complex("[[1,2,3,4]]"), TypeSpec::rank74(), false),
                    std::invalid_argument);
}

TEST_CASE("type check is relabeling invariant") {
    auto v23 = complex_v23();
    auto relabeled = parse_complex("[[7,7,2],[9,9,1],[7,4,9],[2,3,1],[2,8,3],[1,3,6],[4,8,6],[4,6,8]]");
    CHECK(check_type(relabeled, TypeSpec::rank74(), true).pass ==
          check_type(v23, TypeSpec::rank74(), true).pass);
}

TEST_CASE("curvature") {
    CHECK(curvature_check(complex_v23()).pass);
    CHECK(curvature_check(complex_xprime()).pass);
    CHECK(curvature_check(complex_w158()).pass);

    auto verdict = curvature_check(complex_xdoubleprime());
    CHECK(!verdict.pass);
    REQUIRE(verdict.failures.size() == 2);
    CHECK(verdict.failures[0].link_girth == 5);
    CHECK(verdict.failures[1].link_girth == 5);
}

TEST_CASE("fake link properties") {
    auto fake = fake_moebius_kantor();
    CHECK(fake.n == 16);
    CHECK(fake.edge_count() == 24);
    CHECK(girth(fake) == 5);
    CHECK(!iso_graph(fake, moebius_kantor()).has_value());
    // both links of the surgered complex are isomorphic to each other
    auto xpp = complex_xdoubleprime();
    CHECK(iso_graph(xpp.link(0), xpp.link(1)).has_value());
}
