#ifndef SURG_MULTIGRAPH_HPP
#define SURG_MULTIGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace surg {

/// Undirected multigraph on vertices 0..n-1. Parallel edges and loops are
/// allowed; edges are stored as unordered pairs with multiset semantics.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with first <= second

    MultiGraph() = default;
    explicit MultiGraph(int vertex_count) : n(vertex_count) {}

    void add_edge(int u, int v);
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;          // loops count twice
    int loop_count(int v) const;
    bool has_loop() const;
    bool has_parallel() const;
    bool connected() const;           // vacuously true when n == 0

    /// Multiplicity of the pair {u, v} (u == v counts loops).
    int multiplicity(int u, int v) const;

    bool operator==(const MultiGraph&) const = default;
};

/// Multigraph with a 2-coloring of its edge multiset, aligned with `edges`.
/// Color values are 0 and 1 (the two sides of a span decomposition).
struct ColoredGraph {
    MultiGraph graph;
    std::vector<int> edge_colors;

    MultiGraph color_class(int color) const;
};

/// Length of a shortest cycle: 1 for a loop, 2 for a parallel pair,
/// std::nullopt for a forest.
std::optional<int> girth(const MultiGraph& g);

/// Vertex bijection a -> b preserving edge multiplicities, or nullopt.
/// Deterministic: returns the lexicographically least image sequence.
std::optional<std::vector<int>> iso_graph(const MultiGraph& a, const MultiGraph& b);

/// Colored variant. Colors must be preserved exactly; with allow_color_swap
/// a globally swapped matching is also accepted.
std::optional<std::vector<int>> colored_iso(const ColoredGraph& a, const ColoredGraph& b,
                                            bool allow_color_swap);

struct AutomorphismGroup {
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<int>> elements;  // the full group, sorted
    long long order() const { return static_cast<long long>(elements.size()); }
};

/// Generators and order of Aut(g). Search bound: vertex_count <= 64.
AutomorphismGroup automorphisms(const MultiGraph& g);

/// Orbit partition of `items` under the full automorphism group, where each
/// item is a vertex tuple and tuples are identified up to reversal.
std::vector<std::vector<int>> tuple_orbits(const AutomorphismGroup& aut,
                                           const std::vector<std::vector<int>>& items);

/// Deterministic canonical relabeling; equal strings iff isomorphic.
std::string canonical_graph_key(const MultiGraph& g);

/// ---- named-graph catalog ----------------------------------------------

MultiGraph moebius_kantor();        // generalized Petersen GP(8,3)
MultiGraph heawood();               // Fano plane incidence graph
MultiGraph fake_moebius_kantor();   // link of the flip-surgered double cover
ColoredGraph nerve_S();             // 4-cycle with two opposite edges doubled
ColoredGraph nerve_T();             // K4
ColoredGraph nerve_theta();
ColoredGraph nerve_theta_prime();
ColoredGraph nerve_cube();
ColoredGraph nerve_octagonal();

/// Catalog lookup by identifier; throws std::invalid_argument on unknown
/// names. Nerves are returned with their span coloring.
ColoredGraph named_graph(const std::string& name);
std::vector<std::string> catalog_names();

/// Name of the catalog entry isomorphic to g (ignoring colors), if any.
std::optional<std::string> catalog_match(const MultiGraph& g);

/// Text form: line "n=<count>" then one "u v" line per edge; a matching
/// catalog entry is annotated with "name=<identifier>".
std::string graph_text(const MultiGraph& g);

/// Connected loop-free multigraphs on v vertices with all degrees exactly 3
/// (e = 3v/2), up to isomorphism.
std::vector<MultiGraph> cubic_multigraphs(int vertex_count);

/// Connected loop-free multigraphs with min degree >= 3, exactly e edges and
/// edge multiplicities at most max_multiplicity, up to isomorphism (the raw
/// mode of the minimal-nerve enumeration).
std::vector<MultiGraph> thick_multigraphs(int vertex_count, int edge_count,
                                          int max_multiplicity = 1 << 20);

}  // namespace surg

#endif
