#ifndef SURG_COVERS_HPP
#define SURG_COVERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surg/complex.hpp"

namespace surg {

/// A Z/2 edge cocycle: values summing to 0 mod 2 around every face word.
struct Cocycle2 {
    std::map<int, int> values;  // edge label -> 0/1
    bool valid_for(const Complex& c) const;
};

struct DoubleCover {
    Cocycle2 cocycle;
    Complex cover;
    std::map<int, int> projection;  // cover edge label -> base edge label
};

/// Dimension of the space of Z/2 cocycle classes modulo coboundaries; the
/// number of (possibly disconnected) double covers is 2^d - 1.
int double_cover_class_dim(const Complex& c);

/// One cover per nonzero cocycle class, deduplicated by isomorphism. Second
/// sheets are labeled with a decimal-shift convention (edge x lifts to x and
/// 1x).
std::vector<DoubleCover> enumerate_double_covers(const Complex& c);

struct CoverVerdict {
    bool pass = false;
    std::string reason;
};

/// Degree-2 covering check: faces map to faces, every base cell has exactly
/// two preimages in each dimension, and each cover link maps isomorphically
/// onto the base link. Throws when the map is not total on the cover edges.
CoverVerdict verify_cover(const Complex& cover, const Complex& base,
                          const std::map<int, int>& edge_map);

/// A fixed-cell-free automorphism of order 2 (no fixed vertex, edge, or
/// face), if one exists. A connected complex is a double cover exactly when
/// one does.
std::optional<ComplexIso> find_free_involution(const Complex& c);

}  // namespace surg

#endif
