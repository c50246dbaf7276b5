#ifndef SURG_COMPLEX_HPP
#define SURG_COMPLEX_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surg/multigraph.hpp"

namespace surg {

/// A signed edge occurrence in a face word: a positive label traversed with
/// (+) or against (-) its orientation, encoded as a nonzero integer.
using SignedEdge = int;

inline int edge_label(SignedEdge s) { return s < 0 ? -s : s; }
inline bool edge_reversed(SignedEdge s) { return s < 0; }

/// Ordering used for lexicographic comparisons of words: label first, the
/// positive traversal before the negative one.
inline int signed_key(SignedEdge s) { return 2 * edge_label(s) + (s < 0 ? 1 : 0); }

/// Cyclic word of signed edges attached along a polygonal face. The stored
/// representative is kept as given; `canonical()` quotients by rotation and
/// sign-flipped reversal, and face equality means equal canonical forms.
class FaceWord {
  public:
    FaceWord() = default;
    explicit FaceWord(std::vector<SignedEdge> word);

    const std::vector<SignedEdge>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    SignedEdge at(int i) const { return word_[((i % size()) + size()) % size()]; }

    /// Lexicographically least among all rotations of the word and of its
    /// sign-flipped reversal.
    const std::vector<SignedEdge>& canonical() const { return canon_; }

    bool same_face(const FaceWord& other) const { return canon_ == other.canon_; }

  private:
    std::vector<SignedEdge> word_;
    std::vector<SignedEdge> canon_;
};

/// An edge end: (label, 0) is the tail, (label, 1) the head.
struct EdgeEnd {
    int label = 0;
    int end = 0;
    auto operator<=>(const EdgeEnd&) const = default;
};

inline EdgeEnd start_end(SignedEdge s) { return {edge_label(s), s < 0 ? 1 : 0}; }
inline EdgeEnd finish_end(SignedEdge s) { return {edge_label(s), s < 0 ? 0 : 1}; }

/// 2-complex presented by face words. Vertices are never part of the input;
/// they are derived as the union-find closure of corner identifications:
/// for consecutive occurrences s_i, s_{i+1} (cyclically) in each face,
/// finish_end(s_i) ~ start_end(s_{i+1}).
class Complex {
  public:
    Complex() = default;
    explicit Complex(std::vector<FaceWord> faces);
    static Complex from_words(const std::vector<std::vector<int>>& words);

    const std::vector<FaceWord>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& edge_labels() const { return edge_labels_; }
    int edge_count() const { return static_cast<int>(edge_labels_.size()); }
    int occurrence_count(int label) const;
    bool has_edge(int label) const;

    int vertex_count() const { return vertex_count_; }
    /// Vertex class of an edge end.
    int vertex_of(EdgeEnd e) const;
    /// Members of a vertex class, sorted.
    std::vector<EdgeEnd> vertex_members(int v) const;
    /// Vertex class of every corner of face f (one entry per position; the
    /// corner at position i follows occurrence i).
    std::vector<int> face_corner_vertices(int f) const;
    /// Distinct vertex classes met by face f.
    std::vector<int> face_vertex_closure(int f) const;

    bool is_boundary_edge(int label) const { return occurrence_count(label) == 1; }
    std::vector<int> boundary_edges() const;
    /// A vertex is interior when no boundary edge has an end in its class.
    bool is_interior_vertex(int v) const;
    std::vector<int> interior_vertices() const;

    bool is_loop(int label) const;  // both ends in one vertex class
    /// Vertex classes containing an end of the edge (size 1 or 2).
    std::vector<int> edge_vertices(int label) const;
    bool adjacent(int u, int v) const;

    int euler_characteristic() const;
    bool all_triangles() const;
    bool connected() const;

    /// The link at vertex v: one graph vertex per edge end in the class, one
    /// graph edge per face corner at v. Returns the graph and the edge ends
    /// indexing its vertices.
    MultiGraph link(int v) const;
    std::vector<EdgeEnd> link_vertices(int v) const;

    std::string text(bool multiline = false) const;

  private:
    std::vector<FaceWord> faces_;
    std::vector<int> edge_labels_;
    std::map<int, int> occurrence_;
    std::vector<EdgeEnd> ends_;          // sorted, 2 per edge
    std::vector<int> end_vertex_;        // aligned with ends_
    int vertex_count_ = 0;

    void derive();
};

/// A complex with a distinguished vertex.
struct PointedComplex {
    Complex complex;
    int basepoint = 0;
};

/// Parse the bracketed face-list format: `[[1,2,3],[−4,5,...],...]`, with
/// `#`-to-end-of-line comments and arbitrary whitespace. Throws
/// std::runtime_error with line:column positions on malformed input, zero
/// literals, or an empty inner face list.
Complex parse_complex(const std::string& text);
Complex load_complex(const std::string& path);

/// An isomorphism a -> b: each edge label of a maps to a signed edge of b
/// (negative = orientation reversed). Faces and vertices map accordingly.
struct ComplexIso {
    std::map<int, int> edge_map;
    std::vector<int> face_map;  // face index of a -> face index of b

    int map_signed(SignedEdge s) const {
        int img = edge_map.at(edge_label(s));
        return s < 0 ? -img : img;
    }
};

/// Backtracking isomorphism search with invariant pruning; deterministic.
/// When `pointed` is set the basepoint classes must correspond.
std::optional<ComplexIso> isomorphic(const Complex& a, const Complex& b,
                                     std::optional<std::pair<int, int>> pointed = std::nullopt);

/// Visit every isomorphism a -> b (used for automorphism scans). The visitor
/// returns false to keep enumerating, true to stop early.
void for_each_isomorphism(const Complex& a, const Complex& b,
                          const std::function<bool(const ComplexIso&)>& visit);

/// Relabels edges 1..n and orders faces so that isomorphic complexes produce
/// identical output; idempotent.
Complex canonical_form(const Complex& c);

/// Canonical form with the basepoint pinned; equal texts iff pointed-isomorphic.
std::string pointed_canonical_text(const PointedComplex& pc);

/// Disjoint union, offsetting b's labels past a's.
Complex disjoint_union(const Complex& a, const Complex& b);

}  // namespace surg

#endif
