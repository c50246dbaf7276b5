#include "surg/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace surg {

void MultiGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

int MultiGraph::loop_count(int v) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == v && b == v) ++d;
    return d;
}

bool MultiGraph::has_loop() const {
    for (auto [a, b] : edges)
        if (a == b) return true;
    return false;
}

bool MultiGraph::has_parallel() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

int MultiGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    int m = 0;
    for (auto [a, b] : edges)
        if (a == u && b == v) ++m;
    return m;
}

bool MultiGraph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [a, b] : edges) {
            int w = -1;
            if (a == v) w = b;
            else if (b == v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

MultiGraph ColoredGraph::color_class(int color) const {
    MultiGraph sub(graph.n);
    for (size_t i = 0; i < graph.edges.size(); ++i)
        if (edge_colors[i] == color) sub.edges.push_back(graph.edges[i]);
    return sub;
}

std::optional<int> girth(const MultiGraph& g) {
    if (g.has_loop()) return 1;
    if (g.has_parallel()) return 2;
    // Simple graph from here on: BFS from every vertex.
    std::vector<std::vector<int>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int best = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (w == parent[v]) {
                    parent[v] = -2;  // consume one tree edge back-reference
                    continue;
                }
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

// Iterated degree-multiplicity refinement. Returns a color per vertex such
// that mapped vertices must share colors.
std::vector<int> refine_colors(const MultiGraph& g, const std::vector<int>& initial) {
    std::vector<int> color = initial;
    for (;;) {
        // signature: (color, loops, sorted multiset of (neighbor color, mult))
        std::vector<std::pair<std::vector<int>, int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> sig;
            sig.push_back(color[v]);
            sig.push_back(g.loop_count(v));
            std::vector<std::pair<int, int>> nb;
            for (auto [a, b] : g.edges) {
                if (a == b) continue;
                if (a == v) nb.emplace_back(color[b], 0);
                else if (b == v) nb.emplace_back(color[a], 0);
            }
            std::sort(nb.begin(), nb.end());
            for (auto& p : nb) sig.push_back(p.first);
            sigs[v] = {std::move(sig), v};
        }
        // Color indices follow sorted signature order so they are comparable
        // across different graphs.
        std::map<std::vector<int>, int> index;
        for (int v = 0; v < g.n; ++v) index[sigs[v].first] = 0;
        int next_id = 0;
        for (auto& [sig, id] : index) id = next_id++;
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; ++v) next[v] = index[sigs[v].first];
        if (next == color) return color;
        color = std::move(next);
    }
}

std::vector<int> initial_colors(const MultiGraph& g) {
    std::vector<int> c(g.n);
    for (int v = 0; v < g.n; ++v) c[v] = 0;
    return refine_colors(g, c);
}

struct IsoSearch {
    const MultiGraph& a;
    const MultiGraph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    std::vector<char> used;    // b-vertex used
    std::vector<int> order;    // processing order of a's vertices
    bool collect_all = false;
    std::vector<std::vector<int>> found;

    bool compatible(int va, int vb) const {
        if (ca[va] != cb[vb]) return false;
        if (a.loop_count(va) != b.loop_count(vb)) return false;
        for (int ua = 0; ua < a.n; ++ua) {
            if (map[ua] < 0 || ua == va) continue;
            if (a.multiplicity(va, ua) != b.multiplicity(vb, map[ua])) return false;
        }
        return true;
    }

    bool run(size_t depth) {
        if (depth == order.size()) {
            if (collect_all) {
                found.push_back(map);
                return false;
            }
            return true;
        }
        int va = order[depth];
        for (int vb = 0; vb < b.n; ++vb) {
            if (used[vb] || !compatible(va, vb)) continue;
            map[va] = vb;
            used[vb] = 1;
            if (run(depth + 1)) return true;
            map[va] = -1;
            used[vb] = 0;
        }
        return false;
    }
};

std::optional<std::vector<int>> iso_impl(const MultiGraph& a, const MultiGraph& b, bool all,
                                         std::vector<std::vector<int>>* out_all) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
    auto ca = initial_colors(a);
    auto cb = initial_colors(b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    IsoSearch s{a, b, ca, cb, std::vector<int>(a.n, -1), std::vector<char>(b.n, 0), {}, all, {}};
    // Most-constrained first: rarest color class, then by index (so the
    // returned bijection is deterministic, lexicographically least over the
    // chosen order).
    std::vector<int> freq(a.n + 1, 0);
    for (int v = 0; v < a.n; ++v) freq[ca[v]]++;
    s.order.resize(a.n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int x, int y) { return freq[ca[x]] < freq[ca[y]]; });
    bool ok = s.run(0);
    if (all) {
        *out_all = std::move(s.found);
        return std::nullopt;
    }
    if (!ok) return std::nullopt;
    return s.map;
}

}  // namespace

std::optional<std::vector<int>> iso_graph(const MultiGraph& a, const MultiGraph& b) {
    return iso_impl(a, b, false, nullptr);
}

namespace {

// Does the vertex bijection m map a's edge multiset onto b's with colors
// transformed by `flip`?
bool color_preserving(const ColoredGraph& a, const ColoredGraph& b, const std::vector<int>& m,
                      bool flip) {
    std::multiset<std::tuple<int, int, int>> ea, eb;
    for (size_t i = 0; i < a.graph.edges.size(); ++i) {
        auto [u, v] = a.graph.edges[i];
        int x = m[u], y = m[v];
        if (x > y) std::swap(x, y);
        int c = a.edge_colors[i];
        ea.insert({x, y, flip ? 1 - c : c});
    }
    for (size_t i = 0; i < b.graph.edges.size(); ++i) {
        auto [u, v] = b.graph.edges[i];
        eb.insert({u, v, b.edge_colors[i]});
    }
    return ea == eb;
}

}  // namespace

std::optional<std::vector<int>> colored_iso(const ColoredGraph& a, const ColoredGraph& b,
                                            bool allow_color_swap) {
    std::vector<std::vector<int>> all;
    iso_impl(a.graph, b.graph, true, &all);
    for (const auto& m : all) {
        if (color_preserving(a, b, m, false)) return m;
        if (allow_color_swap && color_preserving(a, b, m, true)) return m;
    }
    return std::nullopt;
}

AutomorphismGroup automorphisms(const MultiGraph& g) {
    if (g.n > 64) throw std::invalid_argument("automorphisms: vertex count exceeds search bound");
    AutomorphismGroup out;
    std::vector<std::vector<int>> all;
    iso_impl(g, g, true, &all);
    std::sort(all.begin(), all.end());
    out.elements = all;
    // Greedy generating set: add elements not generated by the current set.
    std::set<std::vector<int>> closure;
    std::vector<int> id(g.n);
    std::iota(id.begin(), id.end(), 0);
    closure.insert(id);
    auto compose = [&](const std::vector<int>& f, const std::vector<int>& h) {
        std::vector<int> r(g.n);
        for (int i = 0; i < g.n; ++i) r[i] = f[h[i]];
        return r;
    };
    auto grow = [&]() {
        std::queue<std::vector<int>> q;
        for (const auto& e : closure) q.push(e);
        while (!q.empty()) {
            auto cur = q.front();
            q.pop();
            for (const auto& gen : out.generators) {
                auto nxt = compose(gen, cur);
                if (closure.insert(nxt).second) q.push(nxt);
            }
        }
    };
    for (const auto& e : out.elements) {
        if (closure.count(e)) continue;
        out.generators.push_back(e);
        grow();
    }
    return out;
}

std::vector<std::vector<int>> tuple_orbits(const AutomorphismGroup& aut,
                                           const std::vector<std::vector<int>>& items) {
    auto normalize = [](std::vector<int> t) {
        auto r = t;
        std::reverse(r.begin(), r.end());
        return std::min(t, r);
    };
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < items.size(); ++i) index[normalize(items[i])] = static_cast<int>(i);
    std::vector<int> comp(items.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        if (comp[i] >= 0) continue;
        int c = ncomp++;
        std::queue<int> q;
        q.push(static_cast<int>(i));
        comp[i] = c;
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            for (const auto& a : aut.elements) {
                std::vector<int> img(items[cur].size());
                for (size_t k = 0; k < img.size(); ++k) img[k] = a[items[cur][k]];
                auto it = index.find(normalize(img));
                if (it != index.end() && comp[it->second] < 0) {
                    comp[it->second] = c;
                    q.push(it->second);
                }
            }
        }
    }
    std::vector<std::vector<int>> orbits(ncomp);
    for (size_t i = 0; i < items.size(); ++i) orbits[comp[i]].push_back(static_cast<int>(i));
    return orbits;
}

namespace {

// Exact minimum-encoding canonical labeling. The encoding of a placement
// v_0..v_{n-1} is the concatenation of rows: row k = (refined color of v_k,
// loops at v_k, mult(v_k, v_0), ..., mult(v_k, v_{k-1})). Branch and bound
// over all placements; the refined colors are isomorphism-invariant so they
// participate in the encoding.
struct CanonSearch {
    const MultiGraph& g;
    const std::vector<int>& color;
    std::vector<std::vector<int>> mult;  // adjacency with multiplicities
    std::vector<int> placed;             // vertices in placement order
    std::vector<char> used;
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> best;
    bool have_best = false;

    void build_matrix() {
        mult.assign(g.n, std::vector<int>(g.n, 0));
        for (auto [a, b] : g.edges) {
            mult[a][b]++;
            if (a != b) mult[b][a]++;
        }
    }

    std::vector<int> row_of(int v) const {
        std::vector<int> r{color[v], mult[v][v]};
        for (int u : placed) r.push_back(mult[v][u]);
        return r;
    }

    void place(int depth) {
        if (depth == g.n) {
            if (!have_best || rows < best) {
                best = rows;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int v = 0; v < g.n; ++v)
            if (!used[v]) cands.emplace_back(row_of(v), v);
        std::sort(cands.begin(), cands.end());
        for (auto& [row, v] : cands) {
            // prune against the incumbent; recompute tightness since best may
            // have moved while exploring earlier siblings
            if (have_best) {
                bool tight = std::equal(rows.begin(), rows.end(), best.begin());
                if (tight && row > best[depth]) break;  // sorted: rest are worse
            }
            used[v] = 1;
            placed.push_back(v);
            rows.push_back(row);
            place(depth + 1);
            rows.pop_back();
            placed.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

std::string canonical_graph_key(const MultiGraph& g) {
    if (g.n == 0) return "0;";
    auto color = initial_colors(g);
    CanonSearch s{g, color};
    s.build_matrix();
    s.used.assign(g.n, 0);
    s.place(0);
    std::ostringstream os;
    os << g.n << ';';
    for (const auto& row : s.best) {
        for (int x : row) os << x << ',';
        os << ';';
    }
    return os.str();
}

/// ---- catalog ------------------------------------------------------------

MultiGraph moebius_kantor() {
    MultiGraph g(16);  // 0..7 outer cycle, 8..15 inner (i ~ i+3 mod 8)
    for (int i = 0; i < 8; ++i) {
        g.add_edge(i, (i + 1) % 8);
        g.add_edge(i, 8 + i);
        g.add_edge(8 + i, 8 + (i + 3) % 8);
    }
    return g;
}

MultiGraph heawood() {
    MultiGraph g(14);  // points 0..6, lines 7..13; line i = {i, i+1, i+3} mod 7
    for (int i = 0; i < 7; ++i) {
        g.add_edge(i, 7 + i);
        g.add_edge((i + 1) % 7, 7 + i);
        g.add_edge((i + 3) % 7, 7 + i);
    }
    return g;
}

ColoredGraph nerve_S() {
    // 4-cycle 0-1-2-3 with {0,1} and {2,3} doubled. Span classes are the two
    // spanning paths 3-0-1-2 and 0-3-2-1.
    ColoredGraph c;
    c.graph = MultiGraph(4);
    c.graph.add_edge(0, 1);
    c.edge_colors.push_back(0);
    c.graph.add_edge(0, 1);
    c.edge_colors.push_back(1);
    c.graph.add_edge(2, 3);
    c.edge_colors.push_back(0);
    c.graph.add_edge(2, 3);
    c.edge_colors.push_back(1);
    c.graph.add_edge(1, 2);
    c.edge_colors.push_back(0);
    c.graph.add_edge(0, 3);
    c.edge_colors.push_back(1);
    return c;
}

ColoredGraph nerve_T() {
    // K4; span classes are the paths 0-2-3-1 and 2-1-0-3.
    ColoredGraph c;
    c.graph = MultiGraph(4);
    auto add = [&](int u, int v, int col) {
        c.graph.add_edge(u, v);
        c.edge_colors.push_back(col);
    };
    add(0, 2, 0);
    add(2, 3, 0);
    add(1, 3, 0);
    add(1, 2, 1);
    add(0, 1, 1);
    add(0, 3, 1);
    return c;
}

ColoredGraph nerve_theta() {
    // Star centers 0 and 7; leaves 1,2,3 and 4,5,6; leaf pairs joined by
    // double edges. Each color class is a height-2 tripod.
    ColoredGraph c;
    c.graph = MultiGraph(8);
    auto add = [&](int u, int v, int col) {
        c.graph.add_edge(u, v);
        c.edge_colors.push_back(col);
    };
    for (int i = 1; i <= 3; ++i) add(0, i, 0);
    for (int i = 4; i <= 6; ++i) add(7, i, 1);
    for (int i = 1; i <= 3; ++i) {
        add(i, i + 3, 0);
        add(i, i + 3, 1);
    }
    return c;
}

ColoredGraph nerve_theta_prime() {
    // As nerve_theta, but leaves 1,2 are joined to 5,4 crosswise: the 4-cycle
    // 1-5, 2-4 in one color and 1-4, 2-5 in the other; pair (3,6) doubled.
    ColoredGraph c;
    c.graph = MultiGraph(8);
    auto add = [&](int u, int v, int col) {
        c.graph.add_edge(u, v);
        c.edge_colors.push_back(col);
    };
    for (int i = 1; i <= 3; ++i) add(0, i, 0);
    for (int i = 4; i <= 6; ++i) add(7, i, 1);
    add(1, 5, 0);
    add(2, 4, 0);
    add(1, 4, 1);
    add(2, 5, 1);
    add(3, 6, 0);
    add(3, 6, 1);
    return c;
}

ColoredGraph nerve_cube() {
    // Binary 3-cube; span classes are height-2 tripods rooted at 0 and 7.
    ColoredGraph c;
    c.graph = MultiGraph(8);
    auto add = [&](int u, int v, int col) {
        c.graph.add_edge(u, v);
        c.edge_colors.push_back(col);
    };
    add(0, 1, 0);
    add(0, 2, 0);
    add(0, 4, 0);
    add(1, 3, 0);
    add(2, 6, 0);
    add(4, 5, 0);
    add(7, 3, 1);
    add(7, 5, 1);
    add(7, 6, 1);
    add(3, 2, 1);
    add(5, 1, 1);
    add(6, 4, 1);
    return c;
}

ColoredGraph nerve_octagonal() {
    // 8-cycle with alternating edges doubled; each color class is a disjoint
    // union of two segments of length 3.
    ColoredGraph c;
    c.graph = MultiGraph(8);
    auto add = [&](int u, int v, int col) {
        c.graph.add_edge(u, v);
        c.edge_colors.push_back(col);
    };
    add(0, 1, 0);
    add(2, 3, 1);
    add(4, 5, 0);
    add(6, 7, 1);
    for (int i = 1; i < 8; i += 2) {
        add(i, (i + 1) % 8, 0);
        add(i, (i + 1) % 8, 1);
    }
    return c;
}

ColoredGraph named_graph(const std::string& name) {
    if (name == "moebius_kantor") return {moebius_kantor(), std::vector<int>(24, 0)};
    if (name == "heawood") return {heawood(), std::vector<int>(21, 0)};
    if (name == "fake_moebius_kantor") {
        auto g = fake_moebius_kantor();
        return {g, std::vector<int>(g.edges.size(), 0)};
    }
    if (name == "nerve_S") return nerve_S();
    if (name == "nerve_T") return nerve_T();
    if (name == "nerve_theta") return nerve_theta();
    if (name == "nerve_theta_prime") return nerve_theta_prime();
    if (name == "nerve_cube") return nerve_cube();
    if (name == "nerve_octagonal") return nerve_octagonal();
    throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
    return {"moebius_kantor", "heawood",     "fake_moebius_kantor",
            "nerve_S",        "nerve_T",     "nerve_theta",
            "nerve_theta_prime", "nerve_cube", "nerve_octagonal"};
}

std::optional<std::string> catalog_match(const MultiGraph& g) {
    for (const auto& name : catalog_names()) {
        if (iso_graph(g, named_graph(name).graph)) return name;
    }
    return std::nullopt;
}

std::string graph_text(const MultiGraph& g) {
    std::ostringstream os;
    os << "n=" << g.n << '\n';
    auto es = g.edges;
    std::sort(es.begin(), es.end());
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    if (auto name = catalog_match(g)) os << "name=" << *name << '\n';
    return os.str();
}

namespace {

void degree_sequences(int slots, int budget, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        if (budget == 0) out.push_back(cur);
        return;
    }
    for (int m = 0; m <= budget; ++m) {
        cur.push_back(m);
        degree_sequences(slots - 1, budget - m, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiGraph> enumerate_degree_bounded(int n, int e, bool exact_cubic, int max_mult) {
    // Assign a multiplicity to each unordered vertex pair, no loops. Pairs
    // are grouped by their first vertex so degree capacities prune early.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int degree_cap = exact_cubic ? 3 : 2 * e;  // thick mode: bounded by edges
    std::vector<MultiGraph> result;
    std::vector<std::string> keys;
    std::vector<int> mult(pairs.size(), 0);
    std::vector<int> deg(n, 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == pairs.size()) {
            if (remaining != 0) return;
            MultiGraph g(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                for (int k = 0; k < mult[i]; ++k) g.add_edge(pairs[i].first, pairs[i].second);
            for (int v = 0; v < n; ++v) {
                int d = g.degree(v);
                if (exact_cubic ? d != 3 : d < 3) return;
            }
            if (!g.connected()) return;
            // cheap invariant, then exact isomorphism within the bucket
            std::vector<std::string> profiles;
            for (int v = 0; v < n; ++v) {
                std::vector<int> prof;
                for (int u = 0; u < n; ++u)
                    if (u != v && g.multiplicity(u, v) > 0) prof.push_back(g.multiplicity(u, v));
                std::sort(prof.begin(), prof.end());
                std::ostringstream os;
                os << g.degree(v) << ':';
                for (int p : prof) os << p << ',';
                profiles.push_back(os.str());
            }
            std::sort(profiles.begin(), profiles.end());
            std::string key;
            for (const auto& p : profiles) key += p + ';';
            for (size_t i = 0; i < keys.size(); ++i)
                if (keys[i] == key && iso_graph(result[i], g)) return;
            keys.push_back(key);
            result.push_back(std::move(g));
            return;
        }
        auto [u, v] = pairs[idx];
        // After the last pair involving u, its degree is final.
        bool u_closes = (idx + 1 == pairs.size()) || pairs[idx + 1].first != u;
        int cap = std::min({remaining, degree_cap - deg[u], degree_cap - deg[v], max_mult});
        for (int m = 0; m <= cap; ++m) {
            mult[idx] = m;
            deg[u] += m;
            deg[v] += m;
            bool ok = true;
            if (u_closes) {
                if (exact_cubic && deg[u] != 3) ok = false;
                if (!exact_cubic && deg[u] < 3) ok = false;
            }
            if (ok) self(self, idx + 1, remaining - m);
            deg[u] -= m;
            deg[v] -= m;
        }
        mult[idx] = 0;
    };
    rec(rec, 0, e);
    return result;
}

}  // namespace

std::vector<MultiGraph> cubic_multigraphs(int vertex_count) {
    if (vertex_count * 3 % 2 != 0)
        throw std::invalid_argument("no cubic graph on an odd-degree-sum vertex count");
    return enumerate_degree_bounded(vertex_count, vertex_count * 3 / 2, true,
                                    std::numeric_limits<int>::max());
}

std::vector<MultiGraph> thick_multigraphs(int vertex_count, int edge_count, int max_multiplicity) {
    return enumerate_degree_bounded(vertex_count, edge_count, false, max_multiplicity);
}

}  // namespace surg
