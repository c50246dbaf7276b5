#include "surg/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surg {

std::vector<int> corner_classes(const Complex& c, int face) {
    if (face < 0 || face >= c.face_count()) throw std::invalid_argument("unknown face");
    auto corner_vertex = c.face_corner_vertices(face);
    int k = static_cast<int>(corner_vertex.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const FaceWord& w = c.faces()[face];
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        if (corner_vertex[i] != corner_vertex[j]) continue;
        // shared occurrence between corners i and i+1 is s_{i+1}; both of its
        // ends lie at the shared vertex, so it is a loop there
        if (!c.is_loop(edge_label(w.at(i + 1))))
            throw std::logic_error("corner merge without a loop edge");
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> ids(k, -1);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int r = find(i);
        if (ids[r] < 0) ids[r] = next++;
        ids[i] = ids[r];
    }
    return ids;
}

bool is_crossing_face(const Complex& c, int face) {
    auto ids = corner_classes(c, face);
    return *std::max_element(ids.begin(), ids.end()) >= 1;
}

ModelGeometry model_geometry(const Complex& c, int v) {
    if (v < 0 || v >= c.vertex_count()) throw std::invalid_argument("unknown vertex");
    ModelGeometry m;
    m.center = v;
    for (int e : c.edge_labels()) {
        int at_v = 0;
        if (c.vertex_of({e, 0}) == v) ++at_v;
        if (c.vertex_of({e, 1}) == v) ++at_v;
        if (at_v == 2) m.loops.push_back(e);
        else if (at_v == 1) m.half_edges.push_back(e);
    }
    std::set<int> loops(m.loops.begin(), m.loops.end());
    for (int f = 0; f < c.face_count(); ++f) {
        auto corners = c.face_corner_vertices(f);
        std::vector<int> at_center;
        for (int i = 0; i < static_cast<int>(corners.size()); ++i)
            if (corners[i] == v) at_center.push_back(i);
        if (at_center.empty()) continue;
        const FaceWord& w = c.faces()[f];
        bool all_loops = true;
        for (SignedEdge s : w.word())
            if (!loops.count(edge_label(s))) all_loops = false;
        if (all_loops) {
            m.core_faces.push_back(f);
            continue;
        }
        CornerFaceInfo info;
        info.face = f;
        info.corner_positions = at_center;
        auto ids = corner_classes(c, f);
        std::set<int> classes;
        for (int i : at_center) classes.insert(ids[i]);
        info.classes_at_center = static_cast<int>(classes.size());
        m.corner_faces.push_back(std::move(info));
        for (SignedEdge s : w.word()) {
            int e = edge_label(s);
            if (c.vertex_of({e, 0}) != v && c.vertex_of({e, 1}) != v)
                m.boundary_edges.push_back({e, f, w.size() - 2});
        }
    }
    return m;
}

Presentation model_group(const Complex& c, int v) {
    ModelGeometry m = model_geometry(c, v);
    Presentation p;
    p.generators = m.loops;
    for (int f : m.core_faces) p.relators.push_back(c.faces()[f].word());
    return p;
}

std::string Presentation::text() const {
    std::ostringstream os;
    os << "gens:";
    for (int g : generators) os << " g" << g;
    os << '\n';
    for (const auto& r : relators) {
        os << "rel:";
        for (SignedEdge s : r) {
            os << " g" << edge_label(s);
            if (s < 0) os << "^-1";
        }
        os << '\n';
    }
    return os.str();
}

WeightEquationReport weight_equation_check(const Complex& c) {
    WeightEquationReport rep;
    for (int f = 0; f < c.face_count(); ++f) {
        auto ids = corner_classes(c, f);
        int k = static_cast<int>(ids.size());
        int nclasses = *std::max_element(ids.begin(), ids.end()) + 1;
        if (nclasses < 2) continue;
        rep.crossing_faces++;
        rep.lhs += k;
        // germ side: one unit per corner run plus the loop occurrences
        // internal to the run (consecutive corners in the same class share a
        // loop occurrence at that vertex)
        for (int cls = 0; cls < nclasses; ++cls) {
            int size = static_cast<int>(std::count(ids.begin(), ids.end(), cls));
            rep.rhs += 1 + (size - 1);
        }
    }
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

bool is_two_thirds_transitive(const Complex& c) {
    if (!c.all_triangles())
        throw std::invalid_argument("two-thirds transitivity requires triangular faces");
    for (int f = 0; f < c.face_count(); ++f)
        if (c.face_vertex_closure(f).size() > 2) return false;
    return true;
}

bool is_mildly_transitive(const Complex& c) {
    for (int f = 0; f < c.face_count(); ++f) {
        auto ids = corner_classes(c, f);
        int nclasses = *std::max_element(ids.begin(), ids.end()) + 1;
        if (nclasses > 2) return false;
    }
    return true;
}

MultiGraph base_graph(const Complex& c) {
    MultiGraph g(c.vertex_count());
    std::set<std::pair<int, int>> seen;
    for (int e : c.edge_labels()) {
        auto vs = c.edge_vertices(e);
        if (vs.size() == 2 && seen.insert({vs[0], vs[1]}).second) g.add_edge(vs[0], vs[1]);
    }
    return g;
}

}  // namespace surg
