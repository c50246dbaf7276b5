#include "doctest.h"
#include "surg/complex.hpp"
#include "surg/reference_complexes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

using namespace surg;

TEST_CASE("parsing") {
    auto c = parse_complex("[[1,2,3]]");
    CHECK(c.face_count() == 1);
    CHECK(c.edge_count() == 3);
    CHECK(c.vertex_count() == 3);

    auto with_comments = parse_complex("# header\n[[1,2,3], # face\n [3,2,1]]\n");
    CHECK(with_comments.face_count() == 2);

    CHECK_THROWS_WITH_AS(parse_complex("[[1,0,2]]"), doctest::Contains("zero literal"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_complex("[[1,2,"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_complex("[[]]"), doctest::Contains("empty face"),
                         std::runtime_error);
    CHECK(parse_complex("[]").face_count() == 0);
    CHECK_THROWS_AS(parse_complex("[[1,2]] junk"), std::runtime_error);

    // negative literals encode reversed traversal
    auto neg = parse_complex("[[1,-2,3]]");
    CHECK(neg.edge_count() == 3);
}

TEST_CASE("vertex derivation") {
    CHECK(complex_v23().vertex_count() == 1);
    CHECK(complex_xprime().vertex_count() == 2);
    CHECK(complex_w158().vertex_count() == 2);
    CHECK(complex_xdoubleprime().vertex_count() == 2);
    CHECK(parse_complex("[[1,2,3]]").vertex_count() == 3);
}

TEST_CASE("links") {
    auto v23 = complex_v23();
    auto lk = v23.link(0);
    CHECK(lk.n == 16);
    CHECK(lk.edge_count() == 24);
    CHECK(girth(lk) == 6);
    CHECK(iso_graph(lk, moebius_kantor()).has_value());

    auto tri = parse_complex("[[1,2,3]]");
    for (int v = 0; v < 3; ++v) {
        auto l = tri.link(v);
        CHECK(l.n == 2);
        CHECK(l.edge_count() == 1);
    }

    auto w = complex_w158();
    std::set<std::string> kinds;
    for (int v = 0; v < 2; ++v) {
        auto l = w.link(v);
        if (iso_graph(l, moebius_kantor()))
            kinds.insert("mk");
        else if (iso_graph(l, heawood()))
            kinds.insert("heawood");
    }
    CHECK(kinds == std::set<std::string>{"mk", "heawood"});
}

TEST_CASE("link degrees equal occurrence counts") {
    for (const Complex& c : {complex_v23(), complex_xprime(), complex_w158()}) {
        for (int v = 0; v < c.vertex_count(); ++v) {
            auto members = c.link_vertices(v);
            auto lk = c.link(v);
            for (size_t i = 0; i < members.size(); ++i)
                CHECK(lk.degree(static_cast<int>(i)) == c.occurrence_count(members[i].label));
        }
    }
}

TEST_CASE("corner count bookkeeping") {
    for (const Complex& c : {complex_v23(), complex_xprime(), complex_xdoubleprime(),
                             complex_w158()}) {
        int slots = 0;
        for (const auto& f : c.faces()) slots += f.size();
        int occ = 0;
        for (int e : c.edge_labels()) occ += c.occurrence_count(e);
        CHECK(slots == occ);
        int link_edges = 0;
        for (int v = 0; v < c.vertex_count(); ++v) link_edges += c.link(v).edge_count();
        CHECK(link_edges == slots);
    }
}

TEST_CASE("interior edges of cubic-link complexes occur three times") {
    for (const Complex& c : {complex_v23(), complex_w158()}) {
        for (int e : c.edge_labels()) CHECK(c.occurrence_count(e) == 3);
    }
}

TEST_CASE("euler characteristic") {
    CHECK(complex_xprime().euler_characteristic() == 2);
    CHECK(complex_w158().euler_characteristic() == 2);
    CHECK(parse_complex("[[1,2,3]]").euler_characteristic() == 1);
    CHECK(complex_v23().euler_characteristic() == 1);
}

TEST_CASE("isomorphism") {
    auto v23 = complex_v23();
    auto self = isomorphic(v23, v23);
    REQUIRE(self.has_value());

    CHECK(!isomorphic(v23, parse_complex("[[1,2,3]]")).has_value());
    CHECK(!isomorphic(complex_xdoubleprime(), complex_xprime()).has_value());

    // relabeled copy is isomorphic
    auto relabeled = parse_complex("[[7,7,2],[9,9,1],[7,4,9],[2,3,1],[2,8,3],[1,3,6],[4,8,6],[4,6,8]]");
    CHECK(isomorphic(v23, relabeled).has_value());
}

TEST_CASE("canonical form") {
    auto tri = parse_complex("[[2,3,1]]");
    auto canon = canonical_form(tri);
    CHECK(canon.text() == "[[1,2,3]]");
    // idempotence
    CHECK(canonical_form(canon).text() == canon.text());

    auto v23 = complex_v23();
    auto base = canonical_form(v23).text();
    CHECK(canonical_form(canonical_form(v23)).text() == base);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> words;
        for (const auto& f : v23.faces()) {
            std::vector<int> w;
            for (SignedEdge s : f.word()) {
                int img = perm[edge_label(s) - 1];
                w.push_back(s > 0 ? img : -img);
            }
            words.push_back(w);
        }
        std::shuffle(words.begin(), words.end(), rng);
        auto shuffled = Complex::from_words(words);
        CHECK(canonical_form(shuffled).text() == base);
    }

    // canonical forms coincide iff isomorphic
    CHECK(canonical_form(complex_xprime()).text() != canonical_form(complex_xdoubleprime()).text());
}

TEST_CASE("pointed canonical text separates basepoints only when needed") {
    auto w = complex_w158();
    auto a = pointed_canonical_text({w, 0});
    auto b = pointed_canonical_text({w, 1});
    CHECK(a != b);  // the two links are non-isomorphic
    CHECK(pointed_canonical_text({w, 0}) == a);

    // agreement with pointed isomorphism on a relabeled copy
    auto relabeled = parse_complex("[[7,7,2],[9,9,1],[7,4,9],[2,3,1],[2,8,3],[1,3,6],[4,8,6],[4,6,8]]");
    auto v23 = complex_v23();
    CHECK(pointed_canonical_text({v23, 0}) == pointed_canonical_text({relabeled, 0}));

    auto xp = complex_xprime();
    bool pointed_01 = isomorphic(xp, xp, std::make_pair(0, 1)).has_value();
    CHECK((pointed_canonical_text({xp, 0}) == pointed_canonical_text({xp, 1})) == pointed_01);
}

TEST_CASE("canonical form agrees with isomorphism on random complexes") {
    std::mt19937 rng(2024);
    auto random_complex = [&](int edges, int faces) {
        std::vector<std::vector<int>> words;
        for (int f = 0; f < faces; ++f) {
            int len = 1 + static_cast<int>(rng() % 4);
            std::vector<int> w;
            for (int i = 0; i < len; ++i) {
                int e = 1 + static_cast<int>(rng() % edges);
                w.push_back(rng() % 2 ? e : -e);
            }
            words.push_back(std::move(w));
        }
        return Complex::from_words(words);
    };
    auto relabel = [&](const Complex& c) {
        std::vector<int> labels = c.edge_labels();
        std::vector<int> perm(labels.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::map<int, int> img;
        for (size_t i = 0; i < labels.size(); ++i) {
            int target = 1 + 2 * perm[i];  // sparse relabeling with sign flips
            img[labels[i]] = rng() % 2 ? target : -target;
        }
        std::vector<std::vector<int>> words;
        for (const auto& f : c.faces()) {
            std::vector<int> w;
            for (SignedEdge s : f.word()) {
                int m = img[edge_label(s)];
                w.push_back(s > 0 ? m : -m);
            }
            // also rotate the word
            int rot = static_cast<int>(rng() % w.size());
            std::rotate(w.begin(), w.begin() + rot, w.end());
            words.push_back(std::move(w));
        }
        std::shuffle(words.begin(), words.end(), rng);
        return Complex::from_words(words);
    };
    for (int trial = 0; trial < 40; ++trial) {
        Complex a = random_complex(2 + trial % 4, 2 + trial % 3);
        Complex b = relabel(a);
        REQUIRE(isomorphic(a, b).has_value());
        CHECK(canonical_form(a).text() == canonical_form(b).text());
        CHECK(canonical_form(canonical_form(a)).text() == canonical_form(a).text());
    }
    // distinct canonical forms for non-isomorphic pairs
    for (int trial = 0; trial < 20; ++trial) {
        Complex a = random_complex(3, 3);
        Complex b = random_complex(3, 3);
        bool iso = isomorphic(a, b).has_value();
        CHECK((canonical_form(a).text() == canonical_form(b).text()) == iso);
    }
}

TEST_CASE("disjoint union") {
    auto v = complex_v23();
    auto two = disjoint_union(v, v);
    CHECK(two.face_count() == 16);
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 16);
    CHECK(!two.connected());
    CHECK(v.connected());
}
