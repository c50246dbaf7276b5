#include "surg/collar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace surg {

namespace {

MultiGraph bouquet(const std::vector<int>& loops) {
    MultiGraph g(1);
    for (size_t i = 0; i < loops.size(); ++i) g.add_edge(0, 0);
    return g;
}

}  // namespace

MultiGraph Collar::boundary_minus() const { return bouquet(minus_loops); }
MultiGraph Collar::boundary_plus() const { return bouquet(plus_loops); }

Collar separating_collar(const Complex& c, int x, int y) {
    if (x == y || x < 0 || y < 0 || x >= c.vertex_count() || y >= c.vertex_count())
        throw std::invalid_argument("separating_collar: need two distinct vertices");
    if (!c.adjacent(x, y)) throw std::invalid_argument("separating_collar: vertices not adjacent");

    Collar col;
    col.host = c;
    col.x = x;
    col.y = y;
    std::set<int> crossing;
    std::set<int> minus_set, plus_set;
    struct FaceData {
        int face;
        int a, b;   // crossing edge labels
        int color;  // 0 apex at x, 1 apex at y
    };
    std::vector<FaceData> data;
    for (int f = 0; f < c.face_count(); ++f) {
        auto closure = c.face_vertex_closure(f);
        if (closure.size() != 2) continue;
        int lo = std::min(x, y), hi = std::max(x, y);
        if (closure[0] != lo || closure[1] != hi) continue;
        const FaceWord& w = c.faces()[f];
        if (w.size() != 3) throw std::invalid_argument("separating_collar: non-triangle crossing face");
        // one loop occurrence and two crossing occurrences
        int loop_pos = -1;
        for (int i = 0; i < 3; ++i) {
            int e = edge_label(w.at(i));
            if (c.edge_vertices(e).size() == 1) {
                if (loop_pos >= 0) throw std::invalid_argument("separating_collar: degenerate face");
                loop_pos = i;
            }
        }
        if (loop_pos < 0) throw std::invalid_argument("separating_collar: face without a loop edge");
        int loop_edge = edge_label(w.at(loop_pos));
        int loop_vertex = c.edge_vertices(loop_edge)[0];
        FaceData fd;
        fd.face = f;
        fd.a = edge_label(w.at(loop_pos + 1));
        fd.b = edge_label(w.at(loop_pos + 2));
        // apex = the corner between the two crossing occurrences = the span
        // vertex opposite the loop
        fd.color = loop_vertex == x ? 1 : 0;
        (loop_vertex == x ? minus_set : plus_set).insert(loop_edge);
        crossing.insert(fd.a);
        crossing.insert(fd.b);
        data.push_back(fd);
    }
    col.crossing_edges.assign(crossing.begin(), crossing.end());
    col.minus_loops.assign(minus_set.begin(), minus_set.end());
    col.plus_loops.assign(plus_set.begin(), plus_set.end());
    col.nerve.graph = MultiGraph(static_cast<int>(col.crossing_edges.size()));
    auto index_of = [&](int label) {
        auto it = std::lower_bound(col.crossing_edges.begin(), col.crossing_edges.end(), label);
        return static_cast<int>(it - col.crossing_edges.begin());
    };
    for (const auto& fd : data) {
        col.faces.push_back(fd.face);
        col.nerve.graph.add_edge(index_of(fd.a), index_of(fd.b));
        col.nerve.edge_colors.push_back(fd.color);
    }
    return col;
}

Collar dual_collar(const Collar& col) {
    Collar d = col;
    std::swap(d.x, d.y);
    std::swap(d.minus_loops, d.plus_loops);
    for (auto& c : d.nerve.edge_colors) c = 1 - c;
    return d;
}

std::string classify_nerve_graph(const ColoredGraph& nerve) {
    static const std::vector<std::pair<std::string, ColoredGraph (*)()>> catalog = {
        {"S", nerve_S},          {"T", nerve_T},
        {"theta", nerve_theta},  {"theta_prime", nerve_theta_prime},
        {"cubic", nerve_cube},   {"octagonal", nerve_octagonal},
    };
    for (const auto& [name, make] : catalog)
        if (colored_iso(nerve, make(), true)) return name;
    return "unknown";
}

std::string classify_nerve(const Collar& col) { return classify_nerve_graph(col.nerve); }

NervePredicates nerve_predicates(const ColoredGraph& nerve) {
    NervePredicates p;
    p.thick = nerve.graph.n > 0;
    for (int v = 0; v < nerve.graph.n; ++v)
        if (nerve.graph.degree(v) < 3) p.thick = false;
    p.treeable = true;
    for (int color = 0; color < 2; ++color) {
        MultiGraph cls = nerve.color_class(color);
        // spanning tree: touches every vertex, connected, |E| = n - 1
        if (cls.edge_count() != nerve.graph.n - 1 || !cls.connected()) {
            p.treeable = false;
            continue;
        }
        for (int v = 0; v < cls.n; ++v)
            if (cls.degree(v) == 0) p.treeable = false;
    }
    return p;
}

CollarPredicates collar_predicates(const Collar& col) {
    CollarPredicates p;
    auto np = nerve_predicates(col.nerve);
    p.thick = np.thick && !col.empty();
    p.treeable = np.treeable && !col.empty();
    p.spans_two = !col.empty() && col.x != col.y;

    std::set<int> minus(col.minus_loops.begin(), col.minus_loops.end());
    p.acylindrical = true;
    for (int e : col.plus_loops)
        if (minus.count(e)) p.acylindrical = false;

    p.boundary_injective = true;
    for (int side = 0; side < 2; ++side) {
        for (int e : side == 0 ? col.minus_loops : col.plus_loops) {
            int uses = 0;
            for (int f : col.faces)
                for (SignedEdge s : col.host.faces()[f].word())
                    if (edge_label(s) == e) ++uses;
            if (uses > 1) p.boundary_injective = false;
        }
    }
    return p;
}

std::optional<HCollarCertificate> h_collar_certificate(const Collar& col) {
    auto p = collar_predicates(col);
    if (!(p.boundary_injective && p.treeable && p.spans_two)) return std::nullopt;
    HCollarCertificate cert;
    for (size_t i = 0; i < col.faces.size(); ++i) {
        int f = col.faces[i];
        const FaceWord& w = col.host.faces()[f];
        int loop_edge = -1;
        for (int k = 0; k < 3; ++k)
            if (col.host.edge_vertices(edge_label(w.at(k))).size() == 1)
                loop_edge = edge_label(w.at(k));
        if (col.nerve.edge_colors[i] == 1) {
            // apex at y: its loop sits at x and survives in the minus boundary
            cert.minus_retraction.emplace_back(f, loop_edge);
        } else {
            cert.plus_retraction.emplace_back(f, loop_edge);
        }
    }
    return cert;
}

std::vector<MultiGraph> st_lemma_enumerate() { return cubic_multigraphs(4); }

StRawEnumeration st_lemma_enumerate_raw() {
    StRawEnumeration raw;
    raw.two_vertices = cubic_multigraphs(2);
    raw.three_vertices = thick_multigraphs(3, 5, 2);
    for (auto& g : thick_multigraphs(3, 6, 2)) raw.three_vertices.push_back(std::move(g));
    return raw;
}

}  // namespace surg
