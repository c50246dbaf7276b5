#ifndef SURG_COLLAR_HPP
#define SURG_COLLAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "surg/complex.hpp"
#include "surg/multigraph.hpp"

namespace surg {

/// A separating collar: the triangle faces of a host complex whose corner
/// closure is exactly {x, y}, together with the derived nerve and its span
/// 2-coloring. Nerve vertices are the crossing edges, nerve edges the faces;
/// a face's nerve edge is colored by the span vertex at the corner between
/// its two crossing occurrences (color 0: apex at x, color 1: apex at y).
struct Collar {
    Complex host;
    std::vector<int> faces;
    int x = -1, y = -1;
    std::vector<int> crossing_edges;  // sorted labels = nerve vertices
    ColoredGraph nerve;               // edges aligned with `faces`
    std::vector<int> minus_loops;     // loops at x used by collar faces
    std::vector<int> plus_loops;      // loops at y used by collar faces

    bool empty() const { return faces.empty(); }
    MultiGraph boundary_minus() const;  // bouquet of the minus loops at x
    MultiGraph boundary_plus() const;
};

/// Collar separating two adjacent vertices. Throws when the vertices are not
/// adjacent or a crossing face between them is not a triangle; an empty
/// collar results when no face closes onto {x, y}.
Collar separating_collar(const Complex& c, int x, int y);

/// The dual collar: x and y exchanged, nerve colors swapped.
Collar dual_collar(const Collar& col);

/// Catalog identifiers: "S", "T", "theta", "theta_prime", "cubic",
/// "octagonal", or "unknown". Matching is colored isomorphism up to a global
/// color swap.
std::string classify_nerve(const Collar& col);
std::string classify_nerve_graph(const ColoredGraph& nerve);

struct CollarPredicates {
    bool thick = false;
    bool acylindrical = false;
    bool boundary_injective = false;
    bool treeable = false;
    bool spans_two = false;
};

CollarPredicates collar_predicates(const Collar& col);

/// Thickness and treeability evaluated on a colored nerve alone.
struct NervePredicates {
    bool thick = false;
    bool treeable = false;
};

NervePredicates nerve_predicates(const ColoredGraph& nerve);

/// Witness that the collar is an h-collar: the retractions of the nerve onto
/// the two boundaries, recorded as face -> boundary-loop assignments (the
/// faces of the collapsed color class map to their opposite-side loops).
struct HCollarCertificate {
    std::vector<std::pair<int, int>> minus_retraction;  // face index -> loop at x
    std::vector<std::pair<int, int>> plus_retraction;   // face index -> loop at y
};

/// Present iff boundary_injective, treeable and spans_two hold.
std::optional<HCollarCertificate> h_collar_certificate(const Collar& col);

/// The minimal-thick-nerve enumeration: connected loop-free cubic
/// multigraphs on 4 vertices, up to isomorphism (expected: S and T).
std::vector<MultiGraph> st_lemma_enumerate();

/// The excluded sub-minimal cases (raw mode): two vertices, and the two
/// three-vertex doubled-triangle shapes.
struct StRawEnumeration {
    std::vector<MultiGraph> two_vertices;    // cubic on 2 vertices
    std::vector<MultiGraph> three_vertices;  // thick, <= double edges, 5 or 6 edges
};

StRawEnumeration st_lemma_enumerate_raw();

}  // namespace surg

#endif
