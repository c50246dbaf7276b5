#include "doctest.h"
#include "surg/reference_complexes.hpp"
#include "surg/st_classifier.hpp"

#include <set>

using namespace surg;

namespace {

// Non-backtracking-walk oracle for the root count: in a girth-6 graph every
// non-backtracking walk of length 3 is an embedded path; each undirected
// path is walked twice.
int nb_walk_oracle(const MultiGraph& g) {
    int walks = 0;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int a = 0; a < g.n; ++a)
        for (int b : adj[a])
            for (int c : adj[b]) {
                if (c == a) continue;
                for (int d : adj[c]) {
                    if (d == b) continue;
                    ++walks;
                }
            }
    return walks / 2;
}

const StClassification& classification() {
    static StClassification cls = classify_st();
    return cls;
}

}  // namespace

TEST_CASE("root enumeration and orbits") {
    auto mk = moebius_kantor();
    auto roots = enumerate_roots(mk);
    CHECK(static_cast<int>(roots.size()) == nb_walk_oracle(mk));
    auto orbits = root_orbits(mk, roots);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() + orbits[1].size() == roots.size());
}

TEST_CASE("complement shapes classify the two orbits") {
    auto mk = moebius_kantor();
    auto roots = enumerate_roots(mk);
    auto orbits = root_orbits(mk, roots);
    std::set<std::string> shapes;
    for (const auto& orbit : orbits) {
        // the shape is constant on each orbit
        std::set<std::string> per_orbit;
        for (int idx : orbit) per_orbit.insert(shape_name(root_complement_shape(mk, roots[idx])));
        REQUIRE(per_orbit.size() == 1);
        shapes.insert(*per_orbit.begin());
    }
    CHECK(shapes == std::set<std::string>{"segment5", "root_plus_edge"});
}

TEST_CASE("partner roots") {
    auto mk = moebius_kantor();
    auto roots = enumerate_roots(mk);
    auto orbits = root_orbits(mk, roots);
    for (const auto& orbit : orbits) {
        const Root& alpha = roots[*std::min_element(orbit.begin(), orbit.end())];
        auto shape = root_complement_shape(mk, alpha);
        auto search = partner_roots(mk, alpha);
        if (shape == ComplementShape::Segment5) {
            CHECK(search.raw_candidates.size() == 3);  // three sub-paths of the segment
        } else {
            CHECK(search.raw_candidates.size() == 1);  // the root component itself
        }
        REQUIRE(search.partners.size() == 1);
    }
}

TEST_CASE("forced far loop in the root-plus-edge case") {
    auto mk = moebius_kantor();
    auto roots = enumerate_roots(mk);
    auto orbits = root_orbits(mk, roots);
    for (const auto& orbit : orbits) {
        const Root& alpha = roots[*std::min_element(orbit.begin(), orbit.end())];
        if (root_complement_shape(mk, alpha) != ComplementShape::RootPlusEdge) continue;
        auto search = partner_roots(mk, alpha);
        const Root& beta = search.partners.front();
        // the two vertices outside both 1-neighborhoods form a forced loop
        std::set<int> near;
        auto collect = [&](const Root& r) {
            for (int v : r.path) {
                near.insert(v);
                for (auto [a, b] : mk.edges) {
                    if (a == v) near.insert(b);
                    if (b == v) near.insert(a);
                }
            }
        };
        collect(alpha);
        collect(beta);
        std::vector<int> far;
        for (int v = 0; v < mk.n; ++v)
            if (!near.count(v)) far.push_back(v);
        REQUIRE(far.size() == 2);
        std::pair<int, int> forced{far[0], far[1]};
        auto confs = enumerate_configurations(mk, alpha, beta);
        CHECK(!confs.empty());
        for (const auto& conf : confs) {
            bool present = false;
            for (auto [t, h] : conf.loops)
                if ((t == forced.first && h == forced.second) ||
                    (t == forced.second && h == forced.first))
                    present = true;
            CHECK(present);
        }
    }
}

TEST_CASE("full pipeline checkpoints") {
    const auto& cls = classification();
    CHECK(cls.orbits.size() == 2);
    REQUIRE(cls.cases.size() == 2);
    for (const auto& cs : cls.cases) {
        CHECK(cs.partners.size() == 1);
        CHECK(cs.classes.size() == 1);
        CHECK(!cs.used_t_pattern);
        for (const auto& t : cs.collar_types) CHECK(t == "S");
        for (bool sd : cs.self_dual) CHECK(sd);
    }
    CHECK(cls.classes.size() == 2);
    CHECK(cls.first_duality_eight_transpositions);
    CHECK(cls.checkpoints_pass());
    CHECK(cls.report().find("FAIL") == std::string::npos);

    // structural counts of each block: 14 faces, 18 edges, 3 vertices
    for (const auto& cob : cls.classes) {
        CHECK(cob.body.face_count() == 14);
        CHECK(cob.body.edge_count() == 18);
        CHECK(cob.body.vertex_count() == 3);
        CHECK(cob.body.interior_vertices().size() == 1);
        auto lk = cob.body.link(cob.body.interior_vertices().front());
        CHECK(iso_graph(lk, moebius_kantor()).has_value());
    }
    // the two classes are not isomorphic to each other
    CHECK(!cobordism_isomorphic(cls.classes[0], cls.classes[1]));
}

TEST_CASE("classification is stable under relabeling the link") {
    auto mk = moebius_kantor();
    std::vector<int> perm(16);
    for (int i = 0; i < 16; ++i) perm[i] = (7 * i + 5) % 16;
    MultiGraph relabeled(16);
    for (auto [u, v] : mk.edges) relabeled.add_edge(perm[u], perm[v]);

    auto base = classification();
    auto other = classify_st(relabeled);
    REQUIRE(other.classes.size() == 2);
    std::set<std::string> keys_base, keys_other;
    for (const auto& cob : base.classes) keys_base.insert(canonical_form(cob.body).text());
    for (const auto& cob : other.classes) keys_other.insert(canonical_form(cob.body).text());
    CHECK(keys_base == keys_other);
}

TEST_CASE("blocks compose in both orders with the expected type") {
    const auto& cls = classification();
    REQUIRE(cls.classes.size() == 2);
    ComposeOptions opts;
    opts.assert_type = TypeSpec::rank74();
    auto ab = compose(cls.classes[0], cls.classes[1], opts);
    auto ba = compose(cls.classes[1], cls.classes[0], opts);
    CHECK(ab.body.face_count() == 14 + 14 - 6);
    CHECK(ba.body.face_count() == 22);
    for (int v : ab.body.interior_vertices())
        CHECK(iso_graph(ab.body.link(v), moebius_kantor()).has_value());
}
