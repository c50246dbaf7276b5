#ifndef SURG_ST_CLASSIFIER_HPP
#define SURG_ST_CLASSIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surg/cobordism.hpp"
#include "surg/multigraph.hpp"

namespace surg {

/// An embedded path of simplicial length 3 in a link graph.
struct Root {
    std::array<int, 4> path;

    std::vector<int> as_vector() const { return {path[0], path[1], path[2], path[3]}; }
    Root reversed() const { return {{path[3], path[2], path[1], path[0]}}; }
    Root normalized() const;
    bool operator==(const Root&) const = default;
    bool operator<(const Root& o) const { return path < o.path; }
};

/// All embedded length-3 paths of g, one representative per reversal pair,
/// sorted. Girth >= 6 guarantees non-backtracking walks are embedded.
std::vector<Root> enumerate_roots(const MultiGraph& g);

/// Orbit partition of the roots under Aut(g); each orbit lists indices into
/// the root list.
std::vector<std::vector<int>> root_orbits(const MultiGraph& g, const std::vector<Root>& roots);

enum class ComplementShape { Segment5, RootPlusEdge, Other };

/// Shape of the induced graph on the vertices at distance >= 2 from the
/// root: a segment of simplicial length 5 (rank-2 orbit) or the disjoint
/// union of a root and an edge (rank-3/2 orbit).
ComplementShape root_complement_shape(const MultiGraph& g, const Root& alpha);
std::string shape_name(ComplementShape s);

struct PartnerSearch {
    std::vector<Root> raw_candidates;  // embedded 3-paths avoiding N1(alpha)
    std::vector<Root> partners;        // candidates passing the loop-pairing constraint
};

/// Roots disjoint from the closed 1-neighborhood of alpha, filtered by the
/// existence of a loop pairing of the free link vertices respecting the
/// loop trichotomy.
PartnerSearch partner_roots(const MultiGraph& g, const Root& alpha);

/// A complete solution of the local-geometry constraints: interior loops as
/// vertex pairs of the link, the collar faces' loop attachments on each
/// side, and the two core faces as signed loop words.
struct Configuration {
    Root alpha, beta;
    std::vector<std::pair<int, int>> loops;  // pairs of link vertices (tail, head)

    struct CollarFace {
        int vi, vj;      // indices into the side's root path
        int loop;        // index into loops
        int end_i, end_j;  // link vertices: end_i adjacent to path[vi], end_j to path[vj]
    };
    std::array<std::vector<CollarFace>, 2> collar;  // [0] = alpha side, [1] = beta side

    struct CoreOccurrence {
        int loop;
        int sign;  // +1 tail->head, -1 reversed
    };
    std::vector<std::array<CoreOccurrence, 3>> core;  // the two core faces

    std::array<bool, 2> t_pattern{false, false};  // which nerve completion each side used
};

/// Backtracking over loop pairings, collar-face attachments (both the S and
/// the T nerve completion are attempted on each side) and core-face words
/// whose corners consume the free-free link edges exactly.
std::vector<Configuration> enumerate_configurations(const MultiGraph& g, const Root& alpha,
                                                    const Root& beta);

/// Builds the cobordism of a configuration and verifies that the interior
/// link reproduces the given graph end-for-end.
Cobordism assemble_cobordism(const MultiGraph& g, const Configuration& conf);

struct StCase {
    Root alpha;
    ComplementShape shape = ComplementShape::Other;
    int raw_partner_candidates = 0;
    std::vector<Root> partners;
    int raw_configurations = 0;
    bool used_t_pattern = false;              // any surviving configuration with a T side
    std::vector<Cobordism> classes;           // configurations up to isomorphism
    std::vector<std::string> collar_types;    // classification of both boundary collars
    std::vector<bool> self_dual;
};

struct StClassification {
    int root_count = 0;
    std::vector<std::vector<int>> orbits;
    std::vector<StCase> cases;
    std::vector<Cobordism> classes;  // global dedup across cases
    bool first_duality_eight_transpositions = false;

    bool checkpoints_pass() const;
    std::string report() const;  // one line per checkpoint
};

/// The full classification pipeline over the Moebius-Kantor link (or a
/// relabeled copy, for stability tests).
StClassification classify_st(const MultiGraph& link);
StClassification classify_st();

}  // namespace surg

#endif
