#include "surg/cobordism.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surg {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

std::string Cobordism::text() const {
    std::ostringstream os;
    os << "faces = " << body.text() << '\n';
    os << "left.faces = " << int_list(left.faces) << '\n';
    os << "left.boundary = " << int_list(left.boundary) << '\n';
    os << "right.faces = " << int_list(right.faces) << '\n';
    os << "right.boundary = " << int_list(right.boundary) << '\n';
    if (mark_face) os << "mark = " << *mark_face << '\n';
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i >= s.size() || s[i] != '[') throw std::runtime_error("bad list for " + what);
    ++i;
    skip();
    if (i < s.size() && s[i] == ']') return out;
    for (;;) {
        skip();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw std::runtime_error("bad integer in " + what);
        out.push_back(std::stoi(s.substr(i, k - i)));
        i = k;
        skip();
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ']') return out;
        throw std::runtime_error("bad list for " + what);
    }
}

}  // namespace

Cobordism parse_cobordism(const std::string& text) {
    Cobordism cob;
    std::istringstream in(text);
    std::string line;
    bool have_faces = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string value = line.substr(eq + 1);
        if (key == "faces") {
            cob.body = parse_complex(value);
            have_faces = true;
        } else if (key == "left.faces") {
            cob.left.faces = parse_int_list(value, key);
        } else if (key == "left.boundary") {
            cob.left.boundary = parse_int_list(value, key);
        } else if (key == "right.faces") {
            cob.right.faces = parse_int_list(value, key);
        } else if (key == "right.boundary") {
            cob.right.boundary = parse_int_list(value, key);
        } else if (key == "mark") {
            cob.mark_face = std::stoi(value);
        } else {
            throw std::runtime_error("unknown cobordism field: " + key);
        }
    }
    if (!have_faces) throw std::runtime_error("cobordism file lacks a faces field");
    validate_cobordism(cob);
    return cob;
}

Cobordism load_cobordism(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_cobordism(os.str());
}

SideStructure analyze_side(const Cobordism& cob, bool left_side) {
    const CollarSide& side = left_side ? cob.left : cob.right;
    const Complex& body = cob.body;
    SideStructure s;
    if (side.empty()) return s;
    for (int e : side.boundary) {
        if (!body.has_edge(e) || !body.is_boundary_edge(e))
            throw std::invalid_argument("collar side boundary edge is not a boundary edge");
        auto vs = body.edge_vertices(e);
        if (vs.size() != 1) throw std::invalid_argument("collar side boundary edge is not a loop");
        if (s.boundary_vertex < 0) s.boundary_vertex = vs[0];
        else if (s.boundary_vertex != vs[0])
            throw std::invalid_argument("collar side boundary edges at several vertices");
    }
    std::set<int> crossing, interior;
    for (int f : side.faces) {
        auto closure = body.face_vertex_closure(f);
        if (closure.size() != 2) throw std::invalid_argument("collar side face does not span two vertices");
        int other = closure[0] == s.boundary_vertex ? closure[1] : closure[0];
        if (closure[0] != s.boundary_vertex && closure[1] != s.boundary_vertex)
            throw std::invalid_argument("collar side face misses the boundary vertex");
        if (s.interior_vertex < 0) s.interior_vertex = other;
        else if (s.interior_vertex != other)
            throw std::invalid_argument("collar side spans more than two vertices");
    }
    std::set<int> boundary_set(side.boundary.begin(), side.boundary.end());
    std::set<int> side_face_set(side.faces.begin(), side.faces.end());
    std::set<int> captured;
    for (int f : side.faces) {
        const FaceWord& w = body.faces()[f];
        if (w.size() != 3) throw std::invalid_argument("collar side face is not a triangle");
        int loop_vertex = -1;
        for (int i = 0; i < 3; ++i) {
            int e = edge_label(w.at(i));
            auto vs = body.edge_vertices(e);
            if (vs.size() == 1) {
                loop_vertex = vs[0];
                if (vs[0] == s.interior_vertex) {
                    interior.insert(e);
                } else if (!boundary_set.count(e)) {
                    // acceptable only when every occurrence stays inside the
                    // side: the loop is captured by the collar closure
                    int inside = 0;
                    for (int g : side.faces)
                        for (SignedEdge t : body.faces()[g].word())
                            if (edge_label(t) == e) ++inside;
                    if (inside != body.occurrence_count(e))
                        throw std::invalid_argument("collar face loop missing from side boundary");
                    captured.insert(e);
                }
            } else {
                crossing.insert(e);
            }
        }
        s.apex_interior.push_back(loop_vertex == s.boundary_vertex ? 1 : 0);
    }
    s.crossing.assign(crossing.begin(), crossing.end());
    s.interior_loops.assign(interior.begin(), interior.end());
    s.captured_loops.assign(captured.begin(), captured.end());
    s.boundary_loops = side.boundary;
    std::sort(s.boundary_loops.begin(), s.boundary_loops.end());
    // nerve
    s.nerve.graph = MultiGraph(static_cast<int>(s.crossing.size()));
    auto index_of = [&](int label) {
        auto it = std::lower_bound(s.crossing.begin(), s.crossing.end(), label);
        return static_cast<int>(it - s.crossing.begin());
    };
    for (size_t i = 0; i < side.faces.size(); ++i) {
        const FaceWord& w = body.faces()[side.faces[i]];
        std::vector<int> cross_labels;
        for (int k = 0; k < 3; ++k) {
            int e = edge_label(w.at(k));
            if (body.edge_vertices(e).size() == 2) cross_labels.push_back(e);
        }
        if (cross_labels.size() != 2)
            throw std::invalid_argument("collar side face without two crossing edges");
        s.nerve.graph.add_edge(index_of(cross_labels[0]), index_of(cross_labels[1]));
        s.nerve.edge_colors.push_back(s.apex_interior[i] ? 1 : 0);
    }
    return s;
}

void validate_cobordism(const Cobordism& cob) {
    std::vector<int> combined = cob.left.boundary;
    combined.insert(combined.end(), cob.right.boundary.begin(), cob.right.boundary.end());
    std::sort(combined.begin(), combined.end());
    if (std::adjacent_find(combined.begin(), combined.end()) != combined.end())
        throw std::invalid_argument("cobordism sides share a boundary edge");
    auto boundary = cob.body.boundary_edges();
    std::sort(boundary.begin(), boundary.end());
    if (combined != boundary)
        throw std::invalid_argument("cobordism boundary does not split between the sides");
    analyze_side(cob, true);
    analyze_side(cob, false);
    if (cob.mark_face && (*cob.mark_face < 0 || *cob.mark_face >= cob.body.face_count()))
        throw std::invalid_argument("cobordism mark out of range");
}

namespace {

Complex side_closure(const Cobordism& cob, const CollarSide& side) {
    std::vector<std::vector<int>> words;
    for (int f : side.faces) words.push_back(cob.body.faces()[f].word());
    return Complex::from_words(words);
}

enum class Role { Crossing, Minus, Plus };

// The minus side of a range collar is glued into the body (loops at the
// interior vertex); for a domain collar it faces the boundary.
std::map<int, Role> side_roles(const SideStructure& s, bool side_is_left) {
    std::map<int, Role> roles;
    for (int e : s.crossing) roles[e] = Role::Crossing;
    Role at_boundary = side_is_left ? Role::Minus : Role::Plus;
    Role at_interior = side_is_left ? Role::Plus : Role::Minus;
    for (int e : s.boundary_loops) roles[e] = at_boundary;
    for (int e : s.captured_loops) roles[e] = at_boundary;
    for (int e : s.interior_loops) roles[e] = at_interior;
    return roles;
}

// All isomorphisms between two collar closures preserving the minus/plus
// polarity of the abstract collar.
std::vector<ComplexIso> dual_matchings(const Complex& clo_x, const std::map<int, Role>& roles_x,
                                       const Complex& clo_y, const std::map<int, Role>& roles_y) {
    std::vector<ComplexIso> out;
    for_each_isomorphism(clo_x, clo_y, [&](const ComplexIso& iso) {
        for (const auto& [e, img] : iso.edge_map) {
            if (roles_x.at(e) != roles_y.at(edge_label(img))) return false;
        }
        out.push_back(iso);
        return false;  // collect all
    });
    std::sort(out.begin(), out.end(), [](const ComplexIso& a, const ComplexIso& b) {
        return a.edge_map < b.edge_map;
    });
    return out;
}

const Complex& s_reference_complex() {
    static const Complex ref = Complex::from_words(
        {{1, 11, 3}, {2, 12, 4}, {1, 15, 12}, {11, 1, 13}, {12, 2, 14}, {11, 5, 2}});
    return ref;
}

const std::vector<int>& s_reference_minus() {
    static const std::vector<int> m{3, 4, 5};
    return m;
}

const std::vector<int>& s_reference_plus() {
    static const std::vector<int> p{13, 14, 15};
    return p;
}

std::map<int, Role> reference_roles(const Complex& ref, const std::vector<int>& minus,
                                    const std::vector<int>& plus) {
    std::map<int, Role> roles;
    for (int e : ref.edge_labels()) roles[e] = Role::Crossing;
    for (int e : minus) roles[e] = Role::Minus;
    for (int e : plus) roles[e] = Role::Plus;
    return roles;
}

struct ParityUnionFind {
    std::vector<int> parent;
    std::vector<char> flip;  // orientation relative to parent

    explicit ParityUnionFind(int n) : parent(n), flip(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [root, p] = find(parent[x]);
        parent[x] = root;
        flip[x] = static_cast<char>(flip[x] ^ p);
        return {root, flip[x]};
    }
    void unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) throw std::logic_error("inconsistent edge orientation in gluing");
            return;
        }
        // prefer the smaller index as root so first-side labels stay roots
        if (ra > rb) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[rb] = ra;
        flip[rb] = static_cast<char>(pa ^ pb ^ parity);
    }
};

}  // namespace

void label_side(Cobordism& cob, bool left_side, const Complex& ref,
                const std::vector<int>& ref_minus, const std::vector<int>& ref_plus,
                const std::string& key) {
    CollarSide& side = left_side ? cob.left : cob.right;
    if (side.empty()) throw std::invalid_argument("label_side: empty side");
    SideStructure s = analyze_side(cob, left_side);
    auto roles = side_roles(s, left_side);
    auto ref_role = reference_roles(ref, ref_minus, ref_plus);
    Complex closure = side_closure(cob, side);
    std::vector<ComplexIso> all;
    for_each_isomorphism(ref, closure, [&](const ComplexIso& iso) {
        for (const auto& [e, img] : iso.edge_map)
            if (ref_role.at(e) != roles.at(edge_label(img))) return false;
        all.push_back(iso);
        return false;
    });
    if (all.empty()) throw std::invalid_argument("label_side: side does not realize the reference");
    std::sort(all.begin(), all.end(),
              [](const ComplexIso& a, const ComplexIso& b) { return a.edge_map < b.edge_map; });
    const ComplexIso& iso = all.front();
    side.ref_key = key;
    side.ref_edges = iso.edge_map;
    side.ref_faces.clear();
    for (size_t i = 0; i < side.faces.size(); ++i)
        side.ref_faces.push_back(side.faces[iso.face_map[i]]);
}

void label_side_auto(Cobordism& cob, bool left_side) {
    try {
        label_side(cob, left_side, s_reference_complex(), s_reference_minus(), s_reference_plus(),
                   "S");
        return;
    } catch (const std::invalid_argument&) {
        // not an S collar; fall through to a self-reference
    }
    CollarSide& side = left_side ? cob.left : cob.right;
    Complex closure = side_closure(cob, side);
    SideStructure s = analyze_side(cob, left_side);
    auto roles = side_roles(s, left_side);
    std::vector<int> minus, plus;
    for (const auto& [e, r] : roles) {
        if (r == Role::Minus) minus.push_back(e);
        if (r == Role::Plus) plus.push_back(e);
    }
    label_side(cob, left_side, closure, minus, plus, "obj:" + canonical_form(closure).text());
}

Cobordism s_collar_reference() {
    Cobordism unit;
    unit.body = s_reference_complex();
    for (int i = 0; i < unit.body.face_count(); ++i) {
        unit.left.faces.push_back(i);
        unit.right.faces.push_back(i);
    }
    unit.left.boundary = s_reference_minus();
    unit.right.boundary = s_reference_plus();
    label_side(unit, true, s_reference_complex(), s_reference_minus(), s_reference_plus(), "S");
    label_side(unit, false, s_reference_complex(), s_reference_minus(), s_reference_plus(), "S");
    validate_cobordism(unit);
    return unit;
}

namespace {

// The unique matching determined by two labelings of the same reference.
ComplexIso matching_from_labels(const CollarSide& from, const CollarSide& to) {
    ComplexIso matching;
    for (const auto& [r, sx] : from.ref_edges) {
        int sy = to.ref_edges.at(r);
        matching.edge_map[edge_label(sx)] = sx > 0 ? sy : -sy;
    }
    auto position = [](const std::vector<int>& faces, int f) {
        for (size_t i = 0; i < faces.size(); ++i)
            if (faces[i] == f) return static_cast<int>(i);
        throw std::logic_error("labeled face missing from its side");
    };
    matching.face_map.assign(from.faces.size(), -1);
    for (size_t k = 0; k < from.ref_faces.size(); ++k) {
        int px = position(from.faces, from.ref_faces[k]);
        int py = position(to.faces, to.ref_faces[k]);
        matching.face_map[px] = py;
    }
    return matching;
}

}  // namespace

Cobordism compose(const Cobordism& x, const Cobordism& y, const ComposeOptions& opts) {
    if (x.right.empty() || y.left.empty())
        throw std::invalid_argument("compose: need a range collar on x and a domain collar on y");
    SideStructure sx = analyze_side(x, false);
    SideStructure sy = analyze_side(y, true);
    Complex clo_x = side_closure(x, x.right);
    Complex clo_y = side_closure(y, y.left);

    ComplexIso matching;
    if (opts.matching) {
        matching = *opts.matching;
    } else if (x.right.labeled() && y.left.labeled() && x.right.ref_key == y.left.ref_key) {
        matching = matching_from_labels(x.right, y.left);
    } else {
        auto all = dual_matchings(clo_x, side_roles(sx, false), clo_y, side_roles(sy, true));
        if (all.empty()) throw std::invalid_argument("compose: no matching collar isomorphism");
        if (opts.require_unique && all.size() > 1)
            throw std::invalid_argument("compose: ambiguous collar matching");
        matching = all.front();
    }
    {
        // the matching must pair the sides dually
        auto rx = side_roles(sx, false);
        auto ry = side_roles(sy, true);
        for (const auto& [e, img] : matching.edge_map)
            if (rx.at(e) != ry.at(edge_label(img)))
                throw std::invalid_argument("compose: matching does not respect the collar sides");
    }

    // tagged labels: x labels first, then y labels
    std::vector<int> x_labels = x.body.edge_labels();
    std::vector<int> y_labels = y.body.edge_labels();
    auto x_id = [&](int label) {
        auto it = std::lower_bound(x_labels.begin(), x_labels.end(), label);
        return static_cast<int>(it - x_labels.begin());
    };
    auto y_id = [&](int label) {
        auto it = std::lower_bound(y_labels.begin(), y_labels.end(), label);
        return static_cast<int>(static_cast<int>(x_labels.size()) + (it - y_labels.begin()));
    };
    ParityUnionFind uf(static_cast<int>(x_labels.size() + y_labels.size()));
    for (const auto& [e, img] : matching.edge_map)
        uf.unite(x_id(e), y_id(edge_label(img)), img < 0 ? 1 : 0);

    // fresh labels: roots in index order (x labels first)
    std::map<int, int> root_label;
    int next = 1;
    for (size_t i = 0; i < x_labels.size() + y_labels.size(); ++i) {
        auto [root, p] = uf.find(static_cast<int>(i));
        (void)p;
        if (!root_label.count(root)) {
            if (root == static_cast<int>(i)) root_label[root] = next++;
        }
    }
    auto rewrite = [&](SignedEdge s, bool from_y) {
        int id = from_y ? y_id(edge_label(s)) : x_id(edge_label(s));
        auto [root, parity] = uf.find(id);
        int label = root_label.at(root);
        bool negative = (s < 0) ^ (parity != 0);
        return negative ? -label : label;
    };

    std::vector<std::vector<int>> words;
    for (const auto& f : x.body.faces()) {
        std::vector<int> w;
        for (SignedEdge s : f.word()) w.push_back(rewrite(s, false));
        words.push_back(std::move(w));
    }
    std::set<int> dropped(y.left.faces.begin(), y.left.faces.end());
    std::map<int, int> y_face_index;  // y face -> new index
    for (int f = 0; f < y.body.face_count(); ++f) {
        if (dropped.count(f)) continue;
        std::vector<int> w;
        for (SignedEdge s : y.body.faces()[f].word()) w.push_back(rewrite(s, true));
        y_face_index[f] = static_cast<int>(words.size());
        words.push_back(std::move(w));
    }
    // identified closure faces coincide after the merge
    for (size_t i = 0; i < x.right.faces.size(); ++i) {
        int fy = y.left.faces[matching.face_map[i]];
        std::vector<int> wx, wy;
        for (SignedEdge s : x.body.faces()[x.right.faces[i]].word()) wx.push_back(rewrite(s, false));
        for (SignedEdge s : y.body.faces()[fy].word()) wy.push_back(rewrite(s, true));
        if (!FaceWord(wx).same_face(FaceWord(wy)))
            throw std::logic_error("compose: identified collar faces disagree");
    }

    // identified y faces land on their x-side images
    std::map<int, int> identified;
    for (size_t i = 0; i < x.right.faces.size(); ++i)
        identified[y.left.faces[matching.face_map[i]]] = x.right.faces[i];
    auto y_face_target = [&](int f) {
        auto kept = y_face_index.find(f);
        return kept != y_face_index.end() ? kept->second : identified.at(f);
    };

    Cobordism out;
    out.body = Complex::from_words(words);
    out.left.faces = x.left.faces;
    for (int e : x.left.boundary) out.left.boundary.push_back(edge_label(rewrite(e, false)));
    for (int f : y.right.faces) out.right.faces.push_back(y_face_target(f));
    for (int e : y.right.boundary) out.right.boundary.push_back(edge_label(rewrite(e, true)));
    // labelings ride through the renumbering
    out.left.ref_key = x.left.ref_key;
    for (const auto& [r, s] : x.left.ref_edges) out.left.ref_edges[r] = rewrite(s, false);
    out.left.ref_faces = x.left.ref_faces;
    out.right.ref_key = y.right.ref_key;
    for (const auto& [r, s] : y.right.ref_edges) out.right.ref_edges[r] = rewrite(s, true);
    for (int f : y.right.ref_faces) out.right.ref_faces.push_back(y_face_target(f));
    if (x.mark_face) {
        out.mark_face = x.mark_face;
    } else if (y.mark_face) {
        out.mark_face = y_face_target(*y.mark_face);
    }
    validate_cobordism(out);
    if (opts.assert_type) {
        for (int v : out.body.interior_vertices()) {
            bool ok = false;
            for (const auto& g : opts.assert_type->allowed_links)
                if (iso_graph(out.body.link(v), g)) ok = true;
            if (!ok) throw std::logic_error("compose: interior link left the expected type");
        }
    }
    return out;
}

Cobordism dual(const Cobordism& x) {
    Cobordism d = x;
    std::swap(d.left, d.right);
    // a labeling encodes the side's polarity, which duality reverses
    d.left.ref_key.clear();
    d.left.ref_edges.clear();
    d.left.ref_faces.clear();
    d.right.ref_key.clear();
    d.right.ref_edges.clear();
    d.right.ref_faces.clear();
    return d;
}

namespace {

bool sides_correspond(const Cobordism& a, const Cobordism& b, const ComplexIso& iso) {
    auto face_set = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
    auto boundary_set = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
    std::set<int> left_img, right_img, left_bd, right_bd;
    for (int f : a.left.faces) left_img.insert(iso.face_map[f]);
    for (int f : a.right.faces) right_img.insert(iso.face_map[f]);
    for (int e : a.left.boundary) left_bd.insert(edge_label(iso.edge_map.at(e)));
    for (int e : a.right.boundary) right_bd.insert(edge_label(iso.edge_map.at(e)));
    return left_img == face_set(b.left.faces) && right_img == face_set(b.right.faces) &&
           left_bd == boundary_set(b.left.boundary) && right_bd == boundary_set(b.right.boundary);
}

}  // namespace

bool cobordism_isomorphic(const Cobordism& a, const Cobordism& b) {
    bool found = false;
    for_each_isomorphism(a.body, b.body, [&](const ComplexIso& iso) {
        if (sides_correspond(a, b, iso)) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<ComplexIso> self_duality(const Cobordism& x) {
    Cobordism d = dual(x);
    std::optional<ComplexIso> found;
    for_each_isomorphism(x.body, d.body, [&](const ComplexIso& iso) {
        if (sides_correspond(x, d, iso)) {
            found = iso;
            return true;
        }
        return false;
    });
    return found;
}

Complex flip_surgery(const Complex& c,
                     const std::vector<std::tuple<int, int, SignedEdge>>& replacements) {
    std::vector<std::vector<int>> words;
    for (const auto& f : c.faces()) words.push_back(f.word());
    for (const auto& [face, pos, edge] : replacements) {
        if (face < 0 || face >= static_cast<int>(words.size()))
            throw std::invalid_argument("flip_surgery: face index out of range");
        if (pos < 0 || pos >= static_cast<int>(words[face].size()))
            throw std::invalid_argument("flip_surgery: position out of range");
        words[face][pos] = edge;
    }
    return Complex::from_words(words);
}

std::pair<Cobordism, Cobordism> split_along_collar(const Complex& c, const Collar& col) {
    if (col.empty()) throw std::invalid_argument("split_along_collar: empty collar");
    if (c.vertex_count() != 2)
        throw std::invalid_argument("split_along_collar: host must have two vertices");
    std::set<int> collar_faces(col.faces.begin(), col.faces.end());
    std::vector<int> x_faces, y_faces;
    for (int f = 0; f < c.face_count(); ++f) {
        if (collar_faces.count(f)) continue;
        auto closure = c.face_vertex_closure(f);
        if (closure.size() != 1)
            throw std::invalid_argument("split_along_collar: collar is not separating");
        (closure[0] == col.x ? x_faces : y_faces).push_back(f);
    }
    if (x_faces.empty() || y_faces.empty())
        throw std::invalid_argument("split_along_collar: a side of the collar is empty");

    auto build = [&](const std::vector<int>& core, bool x_side) {
        Cobordism cob;
        std::vector<std::vector<int>> words;
        for (int f : core) words.push_back(c.faces()[f].word());
        std::vector<int> collar_idx;
        for (int f : col.faces) {
            collar_idx.push_back(static_cast<int>(words.size()));
            words.push_back(c.faces()[f].word());
        }
        cob.body = Complex::from_words(words);
        // the cut boundary: opposite-side loops that are not captured by the
        // collar closure itself
        auto boundary = cob.body.boundary_edges();
        if (x_side) {
            cob.right.faces = collar_idx;
            cob.right.boundary = boundary;
        } else {
            cob.left.faces = collar_idx;
            cob.left.boundary = boundary;
        }
        validate_cobordism(cob);
        label_side_auto(cob, !x_side);
        return cob;
    };
    return {build(x_faces, true), build(y_faces, false)};
}

Cobordism collar_identity(const Cobordism& cob, bool right_side) {
    const CollarSide& side = right_side ? cob.right : cob.left;
    if (side.empty()) throw std::invalid_argument("collar_identity: empty side");
    SideStructure s = analyze_side(cob, !right_side);
    Cobordism unit;
    std::vector<std::vector<int>> words;
    for (int f : side.faces) words.push_back(cob.body.faces()[f].word());
    unit.body = Complex::from_words(words);
    int k = static_cast<int>(side.faces.size());
    for (int i = 0; i < k; ++i) {
        unit.left.faces.push_back(i);
        unit.right.faces.push_back(i);
    }
    // captured loops stay interior to the standalone closure; the free loops
    // on each span vertex become the two boundary sides of the unit
    std::vector<int> minus_free, plus_free;
    int minus_vertex = right_side ? s.interior_vertex : s.boundary_vertex;
    for (int e : unit.body.boundary_edges()) {
        int v = cob.body.edge_vertices(e).front();
        (v == minus_vertex ? minus_free : plus_free).push_back(e);
    }
    unit.left.boundary = minus_free;
    unit.right.boundary = plus_free;
    if (side.labeled()) {
        std::vector<int> faces;
        for (int f : side.ref_faces)
            for (size_t i = 0; i < side.faces.size(); ++i)
                if (side.faces[i] == f) faces.push_back(static_cast<int>(i));
        unit.left.ref_key = unit.right.ref_key = side.ref_key;
        unit.left.ref_edges = unit.right.ref_edges = side.ref_edges;
        unit.left.ref_faces = unit.right.ref_faces = faces;
    }
    validate_cobordism(unit);
    return unit;
}

std::pair<Complex, std::optional<int>> close_cycle(const Cobordism& cob) {
    SideStructure sr = analyze_side(cob, false);
    SideStructure sl = analyze_side(cob, true);
    {
        std::set<int> lf(cob.left.faces.begin(), cob.left.faces.end());
        for (int f : cob.right.faces)
            if (lf.count(f)) throw std::invalid_argument("close_cycle: sides overlap");
    }
    Complex clo_r = side_closure(cob, cob.right);
    Complex clo_l = side_closure(cob, cob.left);
    ComplexIso matching;
    if (cob.right.labeled() && cob.left.labeled() && cob.right.ref_key == cob.left.ref_key) {
        matching = matching_from_labels(cob.right, cob.left);
    } else {
        auto all = dual_matchings(clo_r, side_roles(sr, false), clo_l, side_roles(sl, true));
        if (all.empty()) throw std::invalid_argument("close_cycle: no matching collar isomorphism");
        matching = all.front();
    }

    std::vector<int> labels = cob.body.edge_labels();
    auto id_of = [&](int label) {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        return static_cast<int>(it - labels.begin());
    };
    ParityUnionFind uf(static_cast<int>(labels.size()));
    for (const auto& [e, img] : matching.edge_map)
        uf.unite(id_of(e), id_of(edge_label(img)), img < 0 ? 1 : 0);
    std::map<int, int> root_label;
    int next = 1;
    for (size_t i = 0; i < labels.size(); ++i) {
        auto [root, p] = uf.find(static_cast<int>(i));
        (void)p;
        if (root == static_cast<int>(i)) root_label[root] = next++;
    }
    auto rewrite = [&](SignedEdge s) {
        auto [root, parity] = uf.find(id_of(edge_label(s)));
        int label = root_label.at(root);
        bool negative = (s < 0) ^ (parity != 0);
        return negative ? -label : label;
    };
    std::set<int> dropped(cob.right.faces.begin(), cob.right.faces.end());
    std::vector<std::vector<int>> words;
    std::optional<int> mark;
    for (int f = 0; f < cob.body.face_count(); ++f) {
        if (dropped.count(f)) continue;
        if (cob.mark_face && f == *cob.mark_face) mark = static_cast<int>(words.size());
        std::vector<int> w;
        for (SignedEdge s : cob.body.faces()[f].word()) w.push_back(rewrite(s));
        words.push_back(std::move(w));
    }
    Complex closed = Complex::from_words(words);
    if (!closed.boundary_edges().empty()) throw std::logic_error("close_cycle: boundary remains");
    if (cob.mark_face && !mark) {
        // the mark sat on an identified face; follow the matching
        for (size_t i = 0; i < cob.right.faces.size(); ++i)
            if (cob.right.faces[i] == *cob.mark_face) {
                int target = cob.left.faces[matching.face_map[i]];
                int idx = 0;
                for (int f = 0; f < cob.body.face_count(); ++f) {
                    if (dropped.count(f)) continue;
                    if (f == target) mark = idx;
                    ++idx;
                }
            }
    }
    return {closed, mark};
}

PointedComplex build_omega(const OmegaSpec& spec, const std::pair<Cobordism, Cobordism>& blocks,
                           const std::pair<Cobordism, Cobordism>& fillings) {
    int len = static_cast<int>(spec.sequence.size());
    if (len == 0) throw std::invalid_argument("build_omega: empty sequence");
    if (spec.shape == OmegaSpec::Circle && len < 2)
        throw std::invalid_argument("build_omega: a circle needs length at least 2");
    if (spec.basepoint_index < 0 || spec.basepoint_index >= len)
        throw std::invalid_argument("build_omega: basepoint index out of range");

    auto block_at = [&](int i) {
        Cobordism b = spec.sequence[i] == 0 ? blocks.first : blocks.second;
        if (!b.mark_face) throw std::invalid_argument("build_omega: blocks need mark faces");
        if (i != spec.basepoint_index) b.mark_face.reset();
        return b;
    };

    Complex closed;
    std::optional<int> mark;
    if (spec.shape == OmegaSpec::Segment) {
        Cobordism acc = fillings.first;
        acc.mark_face.reset();
        for (int i = 0; i < len; ++i) acc = compose(acc, block_at(i));
        Cobordism out_cap = fillings.second;
        out_cap.mark_face.reset();
        acc = compose(acc, out_cap);
        if (!acc.body.boundary_edges().empty())
            throw std::logic_error("build_omega: segment did not close");
        closed = acc.body;
        mark = acc.mark_face;
    } else {
        Cobordism acc = block_at(0);
        for (int i = 1; i < len; ++i) acc = compose(acc, block_at(i));
        auto [c, m] = close_cycle(acc);
        closed = c;
        mark = m;
    }
    if (!mark) throw std::logic_error("build_omega: basepoint mark lost");
    PointedComplex pc;
    pc.complex = closed;
    pc.basepoint = closed.vertex_of(finish_end(closed.faces()[*mark].at(0)));
    return pc;
}

FiberReport orbit_map_fibers(int n, OmegaSpec::Shape shape,
                             const std::pair<Cobordism, Cobordism>& blocks,
                             const std::pair<Cobordism, Cobordism>& fillings) {
    if (shape == OmegaSpec::Segment ? (n < 0 || n > 3) : (n < 2 || n > 5))
        throw std::invalid_argument("orbit_map_fibers: scan bounded to segments n <= 3, circles n <= 5");
    int len = shape == OmegaSpec::Segment ? n + 1 : n;
    std::vector<std::vector<int>> seqs;
    for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> s(len);
        for (int k = 0; k < len; ++k) s[k] = (mask >> k) & 1;
        seqs.push_back(std::move(s));
    }
    std::vector<PointedComplex> built;
    for (const auto& s : seqs) {
        OmegaSpec spec;
        spec.sequence = s;
        spec.shape = shape;
        spec.basepoint_index = 0;
        built.push_back(build_omega(spec, blocks, fillings));
    }
    FiberReport rep;
    rep.total = static_cast<int>(seqs.size());
    std::vector<int> fiber_of(seqs.size(), -1);
    for (size_t i = 0; i < seqs.size(); ++i) {
        if (fiber_of[i] >= 0) continue;
        int id = static_cast<int>(rep.fibers.size());
        fiber_of[i] = id;
        rep.fibers.push_back({seqs[i]});
        for (size_t j = i + 1; j < seqs.size(); ++j) {
            if (fiber_of[j] >= 0) continue;
            if (isomorphic(built[i].complex, built[j].complex,
                           std::make_pair(built[i].basepoint, built[j].basepoint))) {
                fiber_of[j] = id;
                rep.fibers[id].push_back(seqs[j]);
            }
        }
    }
    auto reflect = [&](const std::vector<int>& s) {
        std::vector<int> r(s.size());
        for (size_t k = 0; k < s.size(); ++k)
            r[k] = shape == OmegaSpec::Circle ? s[(s.size() - k) % s.size()] : s[s.size() - 1 - k];
        return r;
    };
    for (const auto& fiber : rep.fibers) {
        rep.max_fiber = std::max(rep.max_fiber, static_cast<int>(fiber.size()));
        if (fiber.size() == 2) {
            if (reflect(fiber[0]) != fiber[1]) rep.reflection_pairs_only = false;
        } else if (fiber.size() > 2) {
            rep.reflection_pairs_only = false;
        }
    }
    return rep;
}

}  // namespace surg
