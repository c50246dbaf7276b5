#ifndef SURG_COBORDISM_HPP
#define SURG_COBORDISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "surg/collar.hpp"
#include "surg/complex.hpp"
#include "surg/type_system.hpp"

namespace surg {

/// One side of a cobordism: the faces of a collar closure inside the body
/// together with the boundary edges realizing that side's half of the
/// topological boundary. A filling has an empty side.
///
/// A side may carry a labeling against a reference collar closure (the
/// embedding of the abstract collar). Labeled sides with equal keys compose
/// through the unique label-determined matching, which makes composition
/// strictly associative; unlabeled sides fall back to the least isomorphism.
struct CollarSide {
    std::vector<int> faces;     // indices into the body's face list
    std::vector<int> boundary;  // edge labels on the body's boundary

    std::string ref_key;           // identity of the reference object
    std::map<int, int> ref_edges;  // reference edge label -> signed body edge
    std::vector<int> ref_faces;    // reference face index -> body face index

    bool empty() const { return faces.empty() && boundary.empty(); }
    bool labeled() const { return !ref_key.empty(); }
};

/// A group cobordism: a complex with boundary split between two collar
/// closures. `left` realizes the domain collar (its boundary edges are the
/// minus side), `right` the range collar (plus side).
struct Cobordism {
    Complex body;
    CollarSide left, right;
    std::optional<int> mark_face;  // anchor face, carried through composition

    std::string text() const;
};

Cobordism parse_cobordism(const std::string& text);
Cobordism load_cobordism(const std::string& path);

/// Derived combinatorics of one side's collar closure.
struct SideStructure {
    int boundary_vertex = -1;  // span vertex carrying the boundary loops
    int interior_vertex = -1;  // span vertex glued into the body
    std::vector<int> crossing;        // crossing edge labels, sorted
    std::vector<int> boundary_loops;  // == side.boundary, sorted
    std::vector<int> captured_loops;  // at the boundary vertex but interior to the side
    std::vector<int> interior_loops;  // loops at the interior span vertex
    std::vector<char> apex_interior;  // per side face: apex at interior vertex
    ColoredGraph nerve;  // vertices = crossing edges; color 0 = apex at boundary side
};

SideStructure analyze_side(const Cobordism& cob, bool left_side);

/// Structural checks: the body boundary splits as left.boundary plus
/// right.boundary, and both sides are collar closures. Throws on violation.
void validate_cobordism(const Cobordism& cob);

/// The collar closure of a side as a standalone cobordism (the unit arrow of
/// the category at that object).
Cobordism collar_identity(const Cobordism& cob, bool right_side);

/// The standard self-dual S-collar closure used as the reference object of
/// the rank-7/4 corpus cobordisms (key "S"): minus loops 3,4,5 and plus
/// loops 13,14,15.
Cobordism s_collar_reference();

/// Attach a reference labeling to one side: the least isomorphism from the
/// reference closure that respects the minus/plus polarity. Throws when no
/// such isomorphism exists.
void label_side(Cobordism& cob, bool left_side, const Complex& ref,
                const std::vector<int>& ref_minus, const std::vector<int>& ref_plus,
                const std::string& key);

/// Label a side against the standard S reference if it matches, otherwise
/// against its own closure keyed by canonical form.
void label_side_auto(Cobordism& cob, bool left_side);

struct ComposeOptions {
    std::optional<ComplexIso> matching;  // explicit closure matching
    bool require_unique = false;         // error when several matchings exist
    std::optional<TypeSpec> assert_type; // re-check interior links afterwards
};

/// Glues x's range closure to y's domain closure (sides matched dually) and
/// relabels edges to a fresh contiguous range. Without an explicit matching
/// the lexicographically least role-preserving isomorphism is used.
Cobordism compose(const Cobordism& x, const Cobordism& y, const ComposeOptions& opts = {});

/// Swap domain and range; the body is unchanged. dual(dual(x)) = x.
Cobordism dual(const Cobordism& x);

/// Cobordisms x, y equivalent as arrows: a body isomorphism matching left to
/// left and right to right.
bool cobordism_isomorphic(const Cobordism& a, const Cobordism& b);

/// Isomorphism from x to dual(x), if one exists.
std::optional<ComplexIso> self_duality(const Cobordism& x);

/// Replace face-word entries: (face index, position, new signed edge).
Complex flip_surgery(const Complex& c,
                     const std::vector<std::tuple<int, int, SignedEdge>>& replacements);

/// Cut a two-vertex complex along its separating collar into two fillings;
/// composing them reproduces the complex up to isomorphism.
std::pair<Cobordism, Cobordism> split_along_collar(const Complex& c, const Collar& col);

/// Identify the range closure of a cobordism with its own domain closure
/// (the circle construction). Returns the closed complex and the image of
/// the mark face.
std::pair<Complex, std::optional<int>> close_cycle(const Cobordism& cob);

/// A word over the two block kinds: 0 composes the first block, 1 the
/// second. Segments are capped by fillings at both ends; circles close up
/// cyclically and need length >= 2.
struct OmegaSpec {
    std::vector<int> sequence;
    enum Shape { Segment, Circle } shape = Segment;
    int basepoint_index = 0;
};

/// Builds the parametrized complex and points it at the interior vertex of
/// the block at basepoint_index. `fillings` = (in: empty domain, out: empty
/// range). Validates that every vertex link matches the blocks' type.
PointedComplex build_omega(const OmegaSpec& spec, const std::pair<Cobordism, Cobordism>& blocks,
                           const std::pair<Cobordism, Cobordism>& fillings);

struct FiberReport {
    int total = 0;
    std::vector<std::vector<std::vector<int>>> fibers;  // groups of sequences
    int max_fiber = 0;
    bool reflection_pairs_only = true;  // size-2 fibers are reflection-related
};

/// Pointed-isomorphism fibers of the parametrization of given length.
FiberReport orbit_map_fibers(int n, OmegaSpec::Shape shape,
                             const std::pair<Cobordism, Cobordism>& blocks,
                             const std::pair<Cobordism, Cobordism>& fillings);

}  // namespace surg

#endif
