#include "surg/covers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace surg {

bool Cocycle2::valid_for(const Complex& c) const {
    for (const auto& f : c.faces()) {
        int sum = 0;
        for (SignedEdge s : f.word()) sum ^= values.at(edge_label(s));
        if (sum) return false;
    }
    return true;
}

namespace {

using Row = std::vector<int>;  // 0/1 entries

// Reduced row echelon basis over GF(2); returns the basis rows.
std::vector<Row> gf2_basis(std::vector<Row> rows) {
    std::vector<Row> basis;
    for (auto& r : rows) {
        Row cur = r;
        for (const auto& b : basis) {
            int lead = -1;
            for (size_t k = 0; k < b.size(); ++k)
                if (b[k]) {
                    lead = static_cast<int>(k);
                    break;
                }
            if (lead >= 0 && cur[lead]) {
                for (size_t k = 0; k < cur.size(); ++k) cur[k] ^= b[k];
            }
        }
        if (std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; })) basis.push_back(cur);
    }
    return basis;
}

bool in_span(const std::vector<Row>& basis, Row v) {
    for (const auto& b : basis) {
        int lead = -1;
        for (size_t k = 0; k < b.size(); ++k)
            if (b[k]) {
                lead = static_cast<int>(k);
                break;
            }
        if (lead >= 0 && v[lead])
            for (size_t k = 0; k < v.size(); ++k) v[k] ^= b[k];
    }
    return std::none_of(v.begin(), v.end(), [](int x) { return x != 0; });
}

// Solution basis of the homogeneous face system: one equation per face,
// unknowns indexed by edges.
std::vector<Row> cocycle_solution_basis(const Complex& c) {
    int n = c.edge_count();
    const auto& labels = c.edge_labels();
    auto idx = [&](int label) {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        return static_cast<int>(it - labels.begin());
    };
    // Gaussian elimination on the equation matrix to find the kernel.
    std::vector<Row> eqs;
    for (const auto& f : c.faces()) {
        Row r(n, 0);
        for (SignedEdge s : f.word()) r[idx(edge_label(s))] ^= 1;
        eqs.push_back(std::move(r));
    }
    auto echelon = gf2_basis(std::move(eqs));
    // kernel via back-substitution on free variables
    std::vector<int> lead_of(n, -1);
    for (size_t i = 0; i < echelon.size(); ++i)
        for (int k = 0; k < n; ++k)
            if (echelon[i][k]) {
                lead_of[k] = static_cast<int>(i);
                break;
            }
    std::vector<Row> kernel;
    for (int free = 0; free < n; ++free) {
        if (lead_of[free] >= 0) continue;
        Row v(n, 0);
        v[free] = 1;
        // satisfy each equation from the bottom up
        for (size_t i = echelon.size(); i-- > 0;) {
            int parity = 0;
            int lead = -1;
            for (int k = 0; k < n; ++k)
                if (echelon[i][k]) {
                    if (lead < 0) lead = k;
                    parity ^= v[k];
                }
            if (parity && lead >= 0) v[lead] ^= 1;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<Row> coboundary_basis(const Complex& c) {
    int n = c.edge_count();
    const auto& labels = c.edge_labels();
    std::vector<Row> rows;
    for (int v = 0; v < c.vertex_count(); ++v) {
        Row r(n, 0);
        for (int e = 0; e < n; ++e) {
            int ends_at_v = 0;
            if (c.vertex_of({labels[e], 0}) == v) ++ends_at_v;
            if (c.vertex_of({labels[e], 1}) == v) ++ends_at_v;
            r[e] = ends_at_v & 1;
        }
        rows.push_back(std::move(r));
    }
    return gf2_basis(std::move(rows));
}

int second_sheet_offset(const Complex& c) {
    int max_label = 0;
    for (int e : c.edge_labels()) max_label = std::max(max_label, e);
    int offset = 10;
    while (offset <= max_label) offset *= 10;
    return offset;
}

Complex build_cover(const Complex& c, const Cocycle2& z, int offset,
                    std::map<int, int>* projection) {
    std::vector<std::vector<int>> words;
    for (const auto& f : c.faces()) {
        for (int start_sheet = 0; start_sheet < 2; ++start_sheet) {
            std::vector<int> w;
            int sheet = start_sheet;
            for (SignedEdge s : f.word()) {
                int e = edge_label(s);
                int val = z.values.at(e);
                int copy_sheet = s > 0 ? sheet : sheet ^ val;
                int label = copy_sheet == 0 ? e : e + offset;
                w.push_back(s > 0 ? label : -label);
                sheet ^= val;
            }
            words.push_back(std::move(w));
        }
    }
    if (projection) {
        projection->clear();
        for (int e : c.edge_labels()) {
            (*projection)[e] = e;
            (*projection)[e + offset] = e;
        }
    }
    return Complex::from_words(words);
}

}  // namespace

int double_cover_class_dim(const Complex& c) {
    auto kernel = cocycle_solution_basis(c);
    auto cob = coboundary_basis(c);
    // coboundaries are cocycles; quotient dimension
    int dim = static_cast<int>(gf2_basis(kernel).size()) - static_cast<int>(cob.size());
    return dim;
}

std::vector<DoubleCover> enumerate_double_covers(const Complex& c) {
    auto kernel = cocycle_solution_basis(c);
    auto cob = coboundary_basis(c);
    // extend the coboundary basis to the full solution space; the added
    // vectors represent the quotient classes
    std::vector<Row> rep_basis;
    std::vector<Row> span = cob;
    for (const auto& v : kernel) {
        if (in_span(gf2_basis(span), v)) continue;
        rep_basis.push_back(v);
        span.push_back(v);
    }
    int offset = second_sheet_offset(c);
    const auto& labels = c.edge_labels();
    std::vector<DoubleCover> covers;
    int d = static_cast<int>(rep_basis.size());
    for (int mask = 1; mask < (1 << d); ++mask) {
        Row z(c.edge_count(), 0);
        for (int k = 0; k < d; ++k)
            if ((mask >> k) & 1)
                for (size_t e = 0; e < z.size(); ++e) z[e] ^= rep_basis[k][e];
        Cocycle2 cocycle;
        for (size_t e = 0; e < z.size(); ++e) cocycle.values[labels[e]] = z[e];
        DoubleCover dc;
        dc.cocycle = cocycle;
        dc.cover = build_cover(c, cocycle, offset, &dc.projection);
        bool duplicate = false;
        for (const auto& prev : covers)
            if (isomorphic(prev.cover, dc.cover)) {
                duplicate = true;
                break;
            }
        if (!duplicate) covers.push_back(std::move(dc));
    }
    return covers;
}

CoverVerdict verify_cover(const Complex& cover, const Complex& base,
                          const std::map<int, int>& edge_map) {
    for (int e : cover.edge_labels())
        if (!edge_map.count(e)) throw std::invalid_argument("verify_cover: map not total on cover edges");

    auto fail = [](const std::string& why) { return CoverVerdict{false, why}; };

    // every base edge has exactly two preimages
    std::map<int, int> edge_preimages;
    for (int e : cover.edge_labels()) {
        int img = edge_map.at(e);
        if (!base.has_edge(img)) return fail("image edge not in base");
        edge_preimages[img]++;
    }
    for (int e : base.edge_labels())
        if (edge_preimages[e] != 2) return fail("base edge without two preimages");

    // faces map to faces, two preimages each
    std::map<std::vector<SignedEdge>, int> base_count, cover_count;
    for (const auto& f : base.faces()) base_count[f.canonical()]++;
    for (const auto& f : cover.faces()) {
        std::vector<SignedEdge> w;
        for (SignedEdge s : f.word()) {
            int img = edge_map.at(edge_label(s));
            w.push_back(s > 0 ? img : -img);
        }
        cover_count[FaceWord(w).canonical()]++;
    }
    for (const auto& [word, n] : base_count)
        if (cover_count[word] != 2 * n) return fail("face fiber is not two-to-one");
    for (const auto& [word, n] : cover_count)
        if (!base_count.count(word)) return fail("cover face does not project to a base face");

    // vertices: induced map well-defined with two preimages each
    std::vector<int> vertex_image(cover.vertex_count(), -1);
    for (int v = 0; v < cover.vertex_count(); ++v) {
        for (EdgeEnd end : cover.vertex_members(v)) {
            int img_vertex = base.vertex_of({edge_map.at(end.label), end.end});
            if (vertex_image[v] < 0) vertex_image[v] = img_vertex;
            else if (vertex_image[v] != img_vertex)
                return fail("vertex image not well-defined");
        }
    }
    std::vector<int> vertex_preimages(base.vertex_count(), 0);
    for (int v = 0; v < cover.vertex_count(); ++v) vertex_preimages[vertex_image[v]]++;
    for (int n : vertex_preimages)
        if (n != 2) return fail("base vertex without two preimages");

    // links map isomorphically
    for (int v = 0; v < cover.vertex_count(); ++v) {
        auto cover_members = cover.link_vertices(v);
        auto base_members = base.link_vertices(vertex_image[v]);
        if (cover_members.size() != base_members.size()) return fail("link size mismatch");
        auto base_index = [&](EdgeEnd e) {
            auto it = std::lower_bound(base_members.begin(), base_members.end(), e);
            if (it == base_members.end() || *it != e) return -1;
            return static_cast<int>(it - base_members.begin());
        };
        std::vector<int> perm(cover_members.size());
        std::vector<char> hit(base_members.size(), 0);
        for (size_t i = 0; i < cover_members.size(); ++i) {
            int j = base_index({edge_map.at(cover_members[i].label), cover_members[i].end});
            if (j < 0 || hit[j]) return fail("link vertex map not bijective");
            hit[j] = 1;
            perm[i] = j;
        }
        MultiGraph lc = cover.link(v);
        MultiGraph lb = base.link(vertex_image[v]);
        std::multiset<std::pair<int, int>> mapped, want;
        for (auto [a, b] : lc.edges) {
            int x = perm[a], y = perm[b];
            if (x > y) std::swap(x, y);
            mapped.insert({x, y});
        }
        for (auto [a, b] : lb.edges) want.insert({a, b});
        if (mapped != want) return fail("link does not map isomorphically");
    }
    return {true, ""};
}

std::optional<ComplexIso> find_free_involution(const Complex& c) {
    std::optional<ComplexIso> found;
    for_each_isomorphism(c, c, [&](const ComplexIso& iso) {
        // order 2 on edges (with orientations)
        for (const auto& [e, img] : iso.edge_map) {
            int back = iso.map_signed(img);
            if (back != e) return false;
        }
        // no fixed edge, face, or vertex
        for (const auto& [e, img] : iso.edge_map)
            if (edge_label(img) == e) return false;
        for (size_t f = 0; f < iso.face_map.size(); ++f)
            if (iso.face_map[f] == static_cast<int>(f)) return false;
        for (int v = 0; v < c.vertex_count(); ++v) {
            EdgeEnd e0 = c.vertex_members(v).front();
            int sb = iso.edge_map.at(e0.label);
            EdgeEnd img = e0.end == 0 ? start_end(sb) : finish_end(sb);
            if (c.vertex_of(img) == v) return false;
        }
        found = iso;
        return true;  // stop
    });
    return found;
}

}  // namespace surg
