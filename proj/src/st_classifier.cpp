#include "surg/st_classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surg/collar.hpp"

namespace surg {

Root Root::normalized() const {
    Root r = reversed();
    return path < r.path ? *this : r;
}

namespace {

std::vector<std::vector<int>> adjacency(const MultiGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        if (a != b) adj[b].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

}  // namespace

std::vector<Root> enumerate_roots(const MultiGraph& g) {
    auto adj = adjacency(g);
    std::set<Root> out;
    for (int a = 0; a < g.n; ++a)
        for (int b : adj[a])
            for (int c : adj[b]) {
                if (c == a) continue;
                for (int d : adj[c]) {
                    if (d == b || d == a) continue;
                    Root r{{a, b, c, d}};
                    // embeddedness: the four vertices are distinct (girth >= 6
                    // makes the checks above sufficient, but verify anyway)
                    std::set<int> vs(r.path.begin(), r.path.end());
                    if (vs.size() != 4) continue;
                    out.insert(r.normalized());
                }
            }
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> root_orbits(const MultiGraph& g, const std::vector<Root>& roots) {
    auto aut = automorphisms(g);
    std::vector<std::vector<int>> items;
    for (const auto& r : roots) items.push_back(r.as_vector());
    return tuple_orbits(aut, items);
}

namespace {

std::set<int> closed_neighborhood(const MultiGraph& g, const Root& r) {
    auto adj = adjacency(g);
    std::set<int> out(r.path.begin(), r.path.end());
    for (int v : r.path)
        for (int w : adj[v]) out.insert(w);
    return out;
}

MultiGraph induced(const MultiGraph& g, const std::vector<int>& verts, std::vector<int>* back) {
    MultiGraph sub(static_cast<int>(verts.size()));
    std::map<int, int> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    for (auto [a, b] : g.edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia != index.end() && ib != index.end()) sub.add_edge(ia->second, ib->second);
    }
    if (back) *back = verts;
    return sub;
}

std::vector<int> complement_vertices(const MultiGraph& g, const Root& alpha) {
    auto ball = closed_neighborhood(g, alpha);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (!ball.count(v)) out.push_back(v);
    return out;
}

}  // namespace

ComplementShape root_complement_shape(const MultiGraph& g, const Root& alpha) {
    std::vector<int> verts = complement_vertices(g, alpha);
    MultiGraph sub = induced(g, verts, nullptr);
    if (sub.n != 6) return ComplementShape::Other;
    std::vector<int> deg(sub.n);
    for (int v = 0; v < sub.n; ++v) deg[v] = sub.degree(v);
    auto sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sub.edge_count() == 5 && sub.connected() &&
        sorted == std::vector<int>{1, 1, 2, 2, 2, 2})
        return ComplementShape::Segment5;
    if (sub.edge_count() == 4 && sorted == std::vector<int>{1, 1, 1, 1, 2, 2}) {
        // one path on four vertices plus one isolated edge
        return ComplementShape::RootPlusEdge;
    }
    return ComplementShape::Other;
}

std::string shape_name(ComplementShape s) {
    switch (s) {
        case ComplementShape::Segment5: return "segment5";
        case ComplementShape::RootPlusEdge: return "root_plus_edge";
        default: return "other";
    }
}

namespace {

// Trichotomy-respecting perfect matching of the free vertices: each pair
// lies within N1[alpha], within N1[beta], or entirely outside both.
bool loop_pairing_exists(const std::set<int>& in_alpha, const std::set<int>& in_beta,
                         std::vector<int> free) {
    if (free.size() % 2) return false;
    auto allowed = [&](int u, int v) {
        if (in_alpha.count(u) && in_alpha.count(v)) return true;
        if (in_beta.count(u) && in_beta.count(v)) return true;
        return !in_alpha.count(u) && !in_beta.count(u) && !in_alpha.count(v) && !in_beta.count(v);
    };
    std::function<bool(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) return true;
        int u = rest.back();
        rest.pop_back();
        for (size_t i = 0; i < rest.size(); ++i) {
            int v = rest[i];
            if (!allowed(u, v)) continue;
            std::swap(rest[i], rest.back());
            int saved = rest.back();
            rest.pop_back();
            if (rec(rest)) {
                rest.push_back(saved);
                std::swap(rest[i], rest.back());
                rest.push_back(u);
                return true;
            }
            rest.push_back(saved);
            std::swap(rest[i], rest.back());
        }
        rest.push_back(u);
        return false;
    };
    return rec(free);
}

std::pair<std::set<int>, std::set<int>> neighborhood_sets(const MultiGraph& g, const Root& alpha,
                                                          const Root& beta) {
    auto na = closed_neighborhood(g, alpha);
    auto nb = closed_neighborhood(g, beta);
    return {na, nb};
}

std::vector<int> free_vertices(const MultiGraph& g, const Root& alpha, const Root& beta) {
    std::set<int> used(alpha.path.begin(), alpha.path.end());
    used.insert(beta.path.begin(), beta.path.end());
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (!used.count(v)) out.push_back(v);
    return out;
}

}  // namespace

PartnerSearch partner_roots(const MultiGraph& g, const Root& alpha) {
    PartnerSearch out;
    std::vector<int> verts = complement_vertices(g, alpha);
    MultiGraph sub = induced(g, verts, nullptr);
    for (const Root& local : enumerate_roots(sub)) {
        Root global{{verts[local.path[0]], verts[local.path[1]], verts[local.path[2]],
                     verts[local.path[3]]}};
        out.raw_candidates.push_back(global.normalized());
    }
    std::sort(out.raw_candidates.begin(), out.raw_candidates.end());
    for (const Root& beta : out.raw_candidates) {
        auto [na, nb] = neighborhood_sets(g, alpha, beta);
        std::set<int> in_alpha, in_beta;
        auto free = free_vertices(g, alpha, beta);
        for (int v : free) {
            if (na.count(v)) in_alpha.insert(v);
            if (nb.count(v)) in_beta.insert(v);
        }
        if (loop_pairing_exists(in_alpha, in_beta, free)) out.partners.push_back(beta);
    }
    return out;
}

namespace {

struct SidePattern {
    // nerve pairs of the three apex-boundary faces, as indices into the path
    std::array<std::pair<int, int>, 3> pairs;
    bool is_t;
};

constexpr std::array<SidePattern, 2> kSidePatterns{{
    {{{{0, 1}, {2, 3}, {0, 3}}}, false},  // S completion
    {{{{0, 2}, {1, 3}, {0, 3}}}, true},   // T completion
}};

struct SideAssignment {
    std::array<Configuration::CollarFace, 3> faces;  // loop index unresolved (-1), ends set
    std::array<std::pair<int, int>, 3> loop_ends;    // the pair each face wants
    bool is_t;
};

// Enumerate the ways a side's three apex-boundary faces can pick up loop
// ends among the free neighbors of its root vertices.
std::vector<SideAssignment> side_assignments(const MultiGraph& g, const Root& root,
                                             const std::set<int>& free_set) {
    auto adj = adjacency(g);
    std::array<std::vector<int>, 4> free_nbr;
    for (int i = 0; i < 4; ++i)
        for (int w : adj[root.path[i]])
            if (free_set.count(w)) free_nbr[i].push_back(w);
    std::vector<SideAssignment> out;
    for (const auto& pattern : kSidePatterns) {
        // slots per path vertex, in pattern order
        std::array<std::vector<int>, 4> slots;
        for (int f = 0; f < 3; ++f) {
            slots[pattern.pairs[f].first].push_back(f);
            slots[pattern.pairs[f].second].push_back(f);
        }
        for (int i = 0; i < 4; ++i)
            if (slots[i].size() != free_nbr[i].size()) goto next_pattern;
        {
            // assign each vertex's free neighbors to its slots in every order
            std::array<std::vector<std::vector<int>>, 4> perms;
            for (int i = 0; i < 4; ++i) {
                std::vector<int> p = free_nbr[i];
                std::sort(p.begin(), p.end());
                do {
                    perms[i].push_back(p);
                } while (std::next_permutation(p.begin(), p.end()));
            }
            for (const auto& p0 : perms[0])
                for (const auto& p1 : perms[1])
                    for (const auto& p2 : perms[2])
                        for (const auto& p3 : perms[3]) {
                            std::array<std::vector<int>, 4> chosen{p0, p1, p2, p3};
                            SideAssignment sa;
                            sa.is_t = pattern.is_t;
                            std::array<int, 4> cursor{0, 0, 0, 0};
                            bool ok = true;
                            for (int f = 0; f < 3 && ok; ++f) {
                                auto [i, j] = pattern.pairs[f];
                                int a = chosen[i][cursor[i]++];
                                int b = chosen[j][cursor[j]++];
                                if (a == b) {
                                    ok = false;
                                    break;
                                }
                                sa.faces[f] = {i, j, -1, a, b};
                                sa.loop_ends[f] = {a, b};
                            }
                            if (ok) out.push_back(sa);
                        }
        }
    next_pattern:;
    }
    return out;
}

// Realize faces from three loop occurrences whose corners consume exactly
// the given link edges: all solutions, one per unoriented face.
std::vector<std::array<Configuration::CoreOccurrence, 3>> realize_core_face(
    const std::vector<std::pair<int, int>>& loops, std::array<int, 3> loop_idx,
    const std::multiset<std::pair<int, int>>& want) {
    auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    std::vector<std::array<Configuration::CoreOccurrence, 3>> found;
    std::set<std::vector<SignedEdge>> seen;
    std::array<int, 3> perm = loop_idx;
    std::sort(perm.begin(), perm.end());
    do {
        for (int smask = 0; smask < 8; ++smask) {
            std::array<Configuration::CoreOccurrence, 3> occ;
            for (int k = 0; k < 3; ++k) occ[k] = {perm[k], (smask >> k) & 1 ? -1 : 1};
            auto end_of = [&](const Configuration::CoreOccurrence& o, bool finish) {
                const auto& [t, h] = loops[o.loop];
                bool head = (o.sign > 0) == finish;
                return head ? h : t;
            };
            std::multiset<std::pair<int, int>> corners;
            bool valid = true;
            for (int k = 0; k < 3 && valid; ++k) {
                int a = end_of(occ[k], true);
                int b = end_of(occ[(k + 1) % 3], false);
                if (a == b) valid = false;  // a link has no loop edges here
                corners.insert(norm(a, b));
            }
            if (valid && corners == want) {
                std::vector<SignedEdge> word;
                for (const auto& o : occ) word.push_back(o.sign * (o.loop + 1));
                if (seen.insert(FaceWord(word).canonical()).second) found.push_back(occ);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const MultiGraph& g, const Root& alpha,
                                                    const Root& beta) {
    std::vector<Configuration> out;
    auto free = free_vertices(g, alpha, beta);
    std::set<int> free_set(free.begin(), free.end());
    auto [na, nb] = neighborhood_sets(g, alpha, beta);

    // free-free link edges, to be consumed by core-face corners
    std::multiset<std::pair<int, int>> free_edges;
    for (auto [a, b] : g.edges)
        if (free_set.count(a) && free_set.count(b))
            free_edges.insert({std::min(a, b), std::max(a, b)});

    auto alpha_sides = side_assignments(g, alpha, free_set);
    auto beta_sides = side_assignments(g, beta, free_set);

    for (const auto& sa : alpha_sides) {
        for (const auto& sb : beta_sides) {
            // merge the six wanted loop pairs into a consistent pairing
            std::map<int, int> partner;
            bool ok = true;
            auto add_pair = [&](std::pair<int, int> p) {
                auto [a, b] = p;
                auto ia = partner.find(a);
                auto ib = partner.find(b);
                if (ia != partner.end() && ia->second != b) return false;
                if (ib != partner.end() && ib->second != a) return false;
                partner[a] = b;
                partner[b] = a;
                return true;
            };
            for (int f = 0; f < 3 && ok; ++f) ok = add_pair(sa.loop_ends[f]);
            for (int f = 0; f < 3 && ok; ++f) ok = add_pair(sb.loop_ends[f]);
            if (!ok) continue;
            // pair the leftover free vertices within the trichotomy
            std::vector<int> leftover;
            for (int v : free)
                if (!partner.count(v)) leftover.push_back(v);
            // enumerate matchings of the leftover vertices
            std::vector<std::vector<std::pair<int, int>>> leftover_matchings;
            std::function<void(std::vector<int>&, std::vector<std::pair<int, int>>&)> rec =
                [&](std::vector<int>& rest, std::vector<std::pair<int, int>>& acc) {
                    if (rest.empty()) {
                        leftover_matchings.push_back(acc);
                        return;
                    }
                    int u = rest.back();
                    rest.pop_back();
                    for (size_t i = 0; i < rest.size(); ++i) {
                        int v = rest[i];
                        bool both_alpha = na.count(u) && na.count(v);
                        bool both_beta = nb.count(u) && nb.count(v);
                        bool both_far = !na.count(u) && !nb.count(u) && !na.count(v) && !nb.count(v);
                        if (!(both_alpha || both_beta || both_far)) continue;
                        std::swap(rest[i], rest.back());
                        int saved = rest.back();
                        rest.pop_back();
                        acc.emplace_back(std::min(u, v), std::max(u, v));
                        rec(rest, acc);
                        acc.pop_back();
                        rest.push_back(saved);
                        std::swap(rest[i], rest.back());
                    }
                    rest.push_back(u);
                };
            std::vector<std::pair<int, int>> acc;
            rec(leftover, acc);
            if (leftover.empty()) leftover_matchings.push_back({});

            for (const auto& extra : leftover_matchings) {
                Configuration conf;
                conf.alpha = alpha;
                conf.beta = beta;
                conf.t_pattern = {sa.is_t, sb.is_t};
                std::map<std::pair<int, int>, int> loop_index;
                auto loop_of = [&](std::pair<int, int> ends) {
                    auto key = std::make_pair(std::min(ends.first, ends.second),
                                              std::max(ends.first, ends.second));
                    auto it = loop_index.find(key);
                    if (it == loop_index.end()) {
                        it = loop_index.emplace(key, static_cast<int>(conf.loops.size())).first;
                        conf.loops.push_back(key);
                    }
                    return it->second;
                };
                for (int f = 0; f < 3; ++f) {
                    auto face = sa.faces[f];
                    face.loop = loop_of(sa.loop_ends[f]);
                    conf.collar[0].push_back(face);
                }
                for (int f = 0; f < 3; ++f) {
                    auto face = sb.faces[f];
                    face.loop = loop_of(sb.loop_ends[f]);
                    conf.collar[1].push_back(face);
                }
                for (auto p : extra) loop_of(p);
                if (conf.loops.size() != 4) continue;

                // remaining occurrence budget per loop
                std::vector<int> rem(4, 3);
                for (int side = 0; side < 2; ++side)
                    for (const auto& face : conf.collar[side]) rem[face.loop]--;
                int total = 0;
                for (int r : rem) {
                    if (r < 0) total = -100;
                    total += r;
                }
                if (total != 6) continue;
                if (free_edges.size() != 6) continue;

                // split the six free-free edges between two core faces
                std::vector<std::pair<int, int>> edges(free_edges.begin(), free_edges.end());
                std::vector<int> idx{0, 1, 2, 3, 4, 5};
                std::set<std::set<int>> tried_splits;
                for (int mask = 0; mask < 64; ++mask) {
                    if (__builtin_popcount(mask) != 3) continue;
                    std::set<int> first;
                    for (int k = 0; k < 6; ++k)
                        if ((mask >> k) & 1) first.insert(k);
                    // avoid the complementary duplicate
                    std::set<int> second;
                    for (int k = 0; k < 6; ++k)
                        if (!first.count(k)) second.insert(k);
                    if (tried_splits.count(first) || tried_splits.count(second)) continue;
                    tried_splits.insert(first);

                    std::multiset<std::pair<int, int>> want1, want2;
                    for (int k : first) want1.insert(edges[k]);
                    for (int k : second) want2.insert(edges[k]);

                    // choose occurrence multisets per face matching rem
                    // (loop budgets over two faces of three occurrences)
                    std::vector<std::array<int, 3>> multisets;
                    for (int a = 0; a < 4; ++a)
                        for (int b = a; b < 4; ++b)
                            for (int c = b; c < 4; ++c) {
                                std::array<int, 4> use{0, 0, 0, 0};
                                use[a]++;
                                use[b]++;
                                use[c]++;
                                bool fits = true;
                                for (int k = 0; k < 4; ++k)
                                    if (use[k] > rem[k]) fits = false;
                                if (fits) multisets.push_back({a, b, c});
                            }
                    for (const auto& m1 : multisets) {
                        std::array<int, 4> use{0, 0, 0, 0};
                        for (int k : m1) use[k]++;
                        std::array<int, 3> m2{};
                        int pos = 0;
                        bool fits = true;
                        for (int k = 0; k < 4 && fits; ++k) {
                            int need = rem[k] - use[k];
                            if (need < 0) fits = false;
                            for (int t = 0; t < need; ++t) {
                                if (pos >= 3) {
                                    fits = false;
                                    break;
                                }
                                m2[pos++] = k;
                            }
                        }
                        if (!fits || pos != 3) continue;
                        auto f1s = realize_core_face(conf.loops, m1, want1);
                        if (f1s.empty()) continue;
                        auto f2s = realize_core_face(conf.loops, m2, want2);
                        for (const auto& f1 : f1s)
                            for (const auto& f2 : f2s) {
                                Configuration done = conf;
                                done.core.push_back(f1);
                                done.core.push_back(f2);
                                out.push_back(done);
                            }
                    }
                }
            }
        }
    }
    return out;
}

Cobordism assemble_cobordism(const MultiGraph& g, const Configuration& conf) {
    // labels: alpha crossing 1..4, beta crossing 5..8, interior loops 9..12,
    // alpha-side boundary loops 13..15, beta-side 16..18
    auto crossing_label = [&](int side, int vi) { return side * 4 + vi + 1; };
    auto loop_label = [&](int k) { return 9 + k; };

    std::vector<std::vector<int>> words;
    std::array<std::vector<int>, 2> side_face_indices;
    for (int side = 0; side < 2; ++side) {
        const Root& root = side == 0 ? conf.alpha : conf.beta;
        (void)root;
        // apex-interior faces along the path: [ +c_i, -c_{i+1}, boundary loop ]
        for (int i = 0; i < 3; ++i) {
            int boundary = 13 + side * 3 + i;
            side_face_indices[side].push_back(static_cast<int>(words.size()));
            words.push_back({crossing_label(side, i), -crossing_label(side, i + 1), boundary});
        }
        // apex-boundary faces: [ +c_vi, loop oriented end_i -> end_j, -c_vj ]
        for (const auto& face : conf.collar[side]) {
            const auto& [tail, head] = conf.loops[face.loop];
            int s;
            if (tail == face.end_i && head == face.end_j) s = loop_label(face.loop);
            else if (head == face.end_i && tail == face.end_j) s = -loop_label(face.loop);
            else throw std::logic_error("assemble_cobordism: face ends do not match its loop");
            side_face_indices[side].push_back(static_cast<int>(words.size()));
            words.push_back({crossing_label(side, face.vi), s, -crossing_label(side, face.vj)});
        }
    }
    int first_core = static_cast<int>(words.size());
    for (const auto& core : conf.core) {
        std::vector<int> w;
        for (const auto& occ : core) w.push_back(occ.sign * loop_label(occ.loop));
        words.push_back(std::move(w));
    }

    Cobordism cob;
    cob.body = Complex::from_words(words);
    cob.left.faces = side_face_indices[0];
    cob.left.boundary = {13, 14, 15};
    cob.right.faces = side_face_indices[1];
    cob.right.boundary = {16, 17, 18};
    cob.mark_face = first_core;
    validate_cobordism(cob);
    label_side_auto(cob, true);
    label_side_auto(cob, false);

    // interior link must reproduce g end-for-end
    int interior = -1;
    for (int v : cob.body.interior_vertices()) interior = v;
    if (interior < 0) throw std::logic_error("assemble_cobordism: no interior vertex");
    auto members = cob.body.link_vertices(interior);
    std::map<EdgeEnd, int> to_g;
    for (int side = 0; side < 2; ++side) {
        const Root& root = side == 0 ? conf.alpha : conf.beta;
        for (int i = 0; i < 4; ++i) {
            // crossing edges run from the boundary vertex to the interior one
            to_g[{crossing_label(side, i), 1}] = root.path[i];
        }
    }
    for (size_t k = 0; k < conf.loops.size(); ++k) {
        to_g[{loop_label(static_cast<int>(k)), 0}] = conf.loops[k].first;
        to_g[{loop_label(static_cast<int>(k)), 1}] = conf.loops[k].second;
    }
    if (members.size() != static_cast<size_t>(g.n))
        throw std::logic_error("assemble_cobordism: link size mismatch");
    MultiGraph link = cob.body.link(interior);
    std::multiset<std::pair<int, int>> have, want;
    for (auto [a, b] : link.edges) {
        int x = to_g.at(members[a]);
        int y = to_g.at(members[b]);
        have.insert({std::min(x, y), std::max(x, y)});
    }
    for (auto [a, b] : g.edges) want.insert({std::min(a, b), std::max(a, b)});
    if (have != want) throw std::logic_error("assemble_cobordism: interior link mismatch");
    return cob;
}

StClassification classify_st(const MultiGraph& link) {
    StClassification out;
    auto roots = enumerate_roots(link);
    out.root_count = static_cast<int>(roots.size());
    out.orbits = root_orbits(link, roots);

    for (const auto& orbit : out.orbits) {
        StCase cs;
        cs.alpha = roots[*std::min_element(orbit.begin(), orbit.end())];
        cs.shape = root_complement_shape(link, cs.alpha);
        auto partners = partner_roots(link, cs.alpha);
        cs.raw_partner_candidates = static_cast<int>(partners.raw_candidates.size());
        cs.partners = partners.partners;
        for (const Root& beta : cs.partners) {
            auto confs = enumerate_configurations(link, cs.alpha, beta);
            cs.raw_configurations += static_cast<int>(confs.size());
            for (const auto& conf : confs) {
                if (conf.t_pattern[0] || conf.t_pattern[1]) cs.used_t_pattern = true;
                Cobordism cob = assemble_cobordism(link, conf);
                bool dup = false;
                for (const auto& prev : cs.classes)
                    if (cobordism_isomorphic(prev, cob)) {
                        dup = true;
                        break;
                    }
                if (!dup) cs.classes.push_back(std::move(cob));
            }
        }
        for (const auto& cob : cs.classes) {
            int interior = cob.body.interior_vertices().front();
            for (bool left : {true, false}) {
                SideStructure s = analyze_side(cob, left);
                Collar col = separating_collar(cob.body, interior, s.boundary_vertex);
                cs.collar_types.push_back(classify_nerve(col));
            }
            cs.self_dual.push_back(self_duality(cob).has_value());
        }
        out.cases.push_back(std::move(cs));
    }

    for (const auto& cs : out.cases)
        for (const auto& cob : cs.classes) {
            bool dup = false;
            for (const auto& prev : out.classes)
                if (cobordism_isomorphic(prev, cob)) dup = true;
            if (!dup) out.classes.push_back(cob);
        }

    // duality of the rank-3/2 cobordism acts on the interior link as a
    // product of eight transpositions
    out.first_duality_eight_transpositions = false;
    for (size_t i = 0; i < out.cases.size(); ++i) {
        if (out.cases[i].shape != ComplementShape::RootPlusEdge) continue;
        if (out.cases[i].classes.empty()) continue;
        const Cobordism& cob = out.cases[i].classes.front();
        auto iso = self_duality(cob);
        if (!iso) continue;
        int interior = cob.body.interior_vertices().front();
        auto members = cob.body.link_vertices(interior);
        auto index_of = [&](EdgeEnd e) {
            auto it = std::lower_bound(members.begin(), members.end(), e);
            return static_cast<int>(it - members.begin());
        };
        std::vector<int> perm(members.size());
        for (size_t k = 0; k < members.size(); ++k) {
            int img = iso->edge_map.at(members[k].label);
            EdgeEnd e = members[k].end == 0 ? start_end(img) : finish_end(img);
            perm[k] = index_of(e);
        }
        bool eight = true;
        for (size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] == static_cast<int>(k)) eight = false;           // no fixed points
            if (perm[perm[k]] != static_cast<int>(k)) eight = false;     // involution
        }
        if (eight && perm.size() == 16) out.first_duality_eight_transpositions = true;
    }
    return out;
}

StClassification classify_st() { return classify_st(moebius_kantor()); }

bool StClassification::checkpoints_pass() const {
    if (orbits.size() != 2) return false;
    std::set<std::string> shapes;
    for (const auto& cs : cases) {
        shapes.insert(shape_name(cs.shape));
        if (cs.partners.size() != 1) return false;
        if (cs.classes.size() != 1) return false;
        if (cs.used_t_pattern) return false;
        for (const auto& t : cs.collar_types)
            if (t != "S") return false;
        for (bool sd : cs.self_dual)
            if (!sd) return false;
    }
    if (shapes != std::set<std::string>{"segment5", "root_plus_edge"}) return false;
    if (classes.size() != 2) return false;
    return first_duality_eight_transpositions;
}

std::string StClassification::report() const {
    std::ostringstream os;
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        os << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) os << "  (" << detail << ")";
        os << '\n';
    };
    line("two root orbits", orbits.size() == 2,
         "roots=" + std::to_string(root_count) + " orbits=" + std::to_string(orbits.size()));
    for (const auto& cs : cases) {
        std::string tag = shape_name(cs.shape);
        line("complement shape " + tag,
             cs.shape != ComplementShape::Other, "");
        line(tag + ": unique partner root", cs.partners.size() == 1,
             "raw=" + std::to_string(cs.raw_partner_candidates) +
                 " feasible=" + std::to_string(cs.partners.size()));
        line(tag + ": unique configuration", cs.classes.size() == 1,
             "raw=" + std::to_string(cs.raw_configurations));
        line(tag + ": no type-T boundary collar", !cs.used_t_pattern, "");
        bool all_s = !cs.collar_types.empty();
        for (const auto& t : cs.collar_types)
            if (t != "S") all_s = false;
        line(tag + ": boundary collars of type S", all_s, "");
        bool sd = !cs.self_dual.empty();
        for (bool b : cs.self_dual)
            if (!b) sd = false;
        line(tag + ": self-dual", sd, "");
    }
    line("exactly two cobordism classes", classes.size() == 2,
         "classes=" + std::to_string(classes.size()));
    line("first duality is a product of eight transpositions",
         first_duality_eight_transpositions, "");
    return os.str();
}

}  // namespace surg
