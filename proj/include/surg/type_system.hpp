#ifndef SURG_TYPE_SYSTEM_HPP
#define SURG_TYPE_SYSTEM_HPP

#include <string>
#include <vector>

#include "surg/complex.hpp"
#include "surg/multigraph.hpp"

namespace surg {

/// A metric type: a finite set of allowed link graphs together with the
/// triangles-only shape convention (all edges of length pi/3, one
/// equilateral triangle).
struct TypeSpec {
    std::string name;
    std::vector<MultiGraph> allowed_links;

    static TypeSpec rank74();    // Moebius-Kantor link
    static TypeSpec a2q2();      // Heawood link (order-2 projective plane)
    static TypeSpec rank158();   // both of the above
    static TypeSpec fake74();    // the girth-5 surgery variant
    static TypeSpec by_name(const std::string& name);
};

/// Links at interior vertices, one representative per isomorphism class.
std::vector<MultiGraph> affiliated_type(const Complex& c);

struct VertexDiagnostic {
    int vertex;
    bool interior;
    bool link_allowed;      // isomorphic to some allowed graph
    int matched_allowed;    // index into allowed_links, or -1
    int link_girth;         // -1 when the link is a forest
};

struct TypeVerdict {
    bool pass = false;
    bool strict_pass = false;
    std::vector<VertexDiagnostic> diagnostics;
    std::vector<int> unrealized_allowed;  // indices not realized by any link
};

/// Type membership: every interior link isomorphic to an allowed graph.
/// Strict: additionally every allowed graph is realized. Throws on
/// non-triangular faces.
TypeVerdict check_type(const Complex& c, const TypeSpec& t, bool strict);

struct CurvatureVerdict {
    bool pass = false;
    std::vector<VertexDiagnostic> failures;  // interior vertices of girth < 6
};

/// Combinatorial nonpositive-curvature condition for equilateral pi/3
/// triangles: every interior link has girth >= 6.
CurvatureVerdict curvature_check(const Complex& c);

}  // namespace surg

#endif
