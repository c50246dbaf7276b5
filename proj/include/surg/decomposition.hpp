#ifndef SURG_DECOMPOSITION_HPP
#define SURG_DECOMPOSITION_HPP

#include <map>
#include <string>
#include <vector>

#include "surg/complex.hpp"
#include "surg/multigraph.hpp"

namespace surg {

/// Partition of the corner positions of face f. Adjacent corners (cyclically)
/// are merged when they lie at the same vertex of the complex; the edge
/// between two merged corners is then automatically a loop at that vertex.
/// Returned ids are normalized by first occurrence.
std::vector<int> corner_classes(const Complex& c, int face);

/// A face is crossing when its corners meet at least two distinct vertices,
/// equivalently when it has at least two corner classes.
bool is_crossing_face(const Complex& c, int face);

struct BoundarySlot {
    int edge;    // label with no end at the center
    int face;    // face through the center containing the occurrence
    int weight;  // |face| - 2
};

struct CornerFaceInfo {
    int face;
    std::vector<int> corner_positions;  // positions of corners at the center
    int classes_at_center;              // corner-class runs at the center
};

/// The star-like piece of the complex at one vertex: loops, half edges,
/// boundary edges with weights, core faces, and the germs of the crossing
/// faces through the center.
struct ModelGeometry {
    int center = 0;
    std::vector<int> loops;
    std::vector<int> half_edges;
    std::vector<BoundarySlot> boundary_edges;
    std::vector<int> core_faces;            // faces all of whose edges are loops at center
    std::vector<CornerFaceInfo> corner_faces;  // other faces through the center
};

ModelGeometry model_geometry(const Complex& c, int v);

/// Raw group presentation: generators are the loops of a core, relators the
/// core face words. Never simplified.
struct Presentation {
    std::vector<int> generators;
    std::vector<std::vector<SignedEdge>> relators;
    std::string text() const;
};

Presentation model_group(const Complex& c, int v);

/// Two ways of counting the edge occurrences of the crossing faces: per face
/// (lhs) and summed over the vertices' germ pieces, one unit per corner run
/// plus one per loop occurrence inside the run (rhs).
struct WeightEquationReport {
    long long lhs = 0;
    long long rhs = 0;
    int crossing_faces = 0;
    bool pass = false;
};

WeightEquationReport weight_equation_check(const Complex& c);

/// Every face meets at most two distinct vertices. Triangles only.
bool is_two_thirds_transitive(const Complex& c);

/// Every crossing face has exactly two corner classes.
bool is_mildly_transitive(const Complex& c);

/// One vertex per vertex class, one edge per unordered pair of distinct
/// adjacent vertices (simple graph, no loops).
MultiGraph base_graph(const Complex& c);

}  // namespace surg

#endif
