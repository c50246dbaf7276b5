#include "surg/type_system.hpp"

#include <stdexcept>

namespace surg {

TypeSpec TypeSpec::rank74() { return {"rank74", {moebius_kantor()}}; }
TypeSpec TypeSpec::a2q2() { return {"A2q2", {heawood()}}; }
TypeSpec TypeSpec::rank158() { return {"rank158", {moebius_kantor(), heawood()}}; }
TypeSpec TypeSpec::fake74() { return {"fake74", {fake_moebius_kantor()}}; }

TypeSpec TypeSpec::by_name(const std::string& name) {
    if (name == "rank74") return rank74();
    if (name == "A2q2" || name == "a2q2") return a2q2();
    if (name == "rank158") return rank158();
    if (name == "fake74") return fake74();
    throw std::invalid_argument("unknown type spec: " + name);
}

std::vector<MultiGraph> affiliated_type(const Complex& c) {
    std::vector<MultiGraph> out;
    for (int v : c.interior_vertices()) {
        auto lk = c.link(v);
        bool seen = false;
        for (const auto& g : out)
            if (iso_graph(lk, g)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(lk));
    }
    return out;
}

namespace {

VertexDiagnostic diagnose(const Complex& c, const TypeSpec& t, int v) {
    VertexDiagnostic d;
    d.vertex = v;
    d.interior = c.is_interior_vertex(v);
    auto lk = c.link(v);
    auto g = girth(lk);
    d.link_girth = g ? *g : -1;
    d.matched_allowed = -1;
    for (size_t i = 0; i < t.allowed_links.size(); ++i)
        if (iso_graph(lk, t.allowed_links[i])) {
            d.matched_allowed = static_cast<int>(i);
            break;
        }
    d.link_allowed = d.matched_allowed >= 0;
    return d;
}

}  // namespace

TypeVerdict check_type(const Complex& c, const TypeSpec& t, bool strict) {
    if (!c.all_triangles()) throw std::invalid_argument("check_type requires triangular faces");
    TypeVerdict verdict;
    verdict.pass = true;
    std::vector<char> realized(t.allowed_links.size(), 0);
    for (int v = 0; v < c.vertex_count(); ++v) {
        auto d = diagnose(c, t, v);
        if (d.interior) {
            if (!d.link_allowed) verdict.pass = false;
            if (d.matched_allowed >= 0) realized[d.matched_allowed] = 1;
        }
        verdict.diagnostics.push_back(d);
    }
    verdict.strict_pass = verdict.pass;
    for (size_t i = 0; i < realized.size(); ++i)
        if (!realized[i]) {
            verdict.strict_pass = false;
            verdict.unrealized_allowed.push_back(static_cast<int>(i));
        }
    if (!strict) verdict.strict_pass = verdict.pass;
    return verdict;
}

CurvatureVerdict curvature_check(const Complex& c) {
    if (!c.all_triangles()) throw std::invalid_argument("curvature_check requires triangular faces");
    CurvatureVerdict verdict;
    verdict.pass = true;
    for (int v : c.interior_vertices()) {
        auto g = girth(c.link(v));
        if (g && *g < 6) {
            VertexDiagnostic d;
            d.vertex = v;
            d.interior = true;
            d.link_allowed = false;
            d.matched_allowed = -1;
            d.link_girth = *g;
            verdict.failures.push_back(d);
            verdict.pass = false;
        }
    }
    return verdict;
}

}  // namespace surg
