#pragma once

#include <vector>

#include "covers/polyhedron.hpp"

namespace covers {

/// Cyclic label (b_1, ..., b_n): lateral face i has b_i + 3 sides.
struct Label {
  std::vector<int> entries;

  int n() const { return static_cast<int>(entries.size()); }
  /// Lexicographically minimal rotation (rotation-only class representative).
  Label canonical() const;
  Label rotated(int r) const;
  Label reversed() const;
  bool cyclically_equal(const Label& other) const;
  friend bool operator==(const Label&, const Label&) = default;
};

/// Necessary label conditions for a simple n-pyramitoid:
/// 0 <= b_i <= n-3, at least two zeros, no cyclically adjacent pair of zeros
/// (except n = 3), and sum b_i = 2(n-3).  Necessary, not sufficient; see
/// label_realizable() for the realizability test.
bool validate_label(const Label& label, int n);

/// A polyhedron with n+1 faces, one of which (the basis) shares an edge with
/// every other face.  Lateral faces and basis edges are indexed 0..n-1 along
/// the stored cyclic order of the basis; lateral face i sits on basis edge i.
class Pyramitoid {
 public:
  Pyramitoid() = default;
  /// Throws NotABasis if `basis` does not share an edge with every face.
  Pyramitoid(CombinatorialPolyhedron poly, int basis);

  const CombinatorialPolyhedron& polyhedron() const { return poly_; }
  int basis() const { return basis_; }
  int n() const { return static_cast<int>(basis_cycle_.size()); }
  bool is_simple() const { return poly_.is_simple(); }

  const std::vector<int>& basis_cycle() const { return basis_cycle_; }
  /// Lateral face (polyhedron face index) on basis edge i.
  int lateral_face(int i) const { return lateral_faces_.at(i); }
  const std::vector<int>& lateral_faces() const { return lateral_faces_; }
  /// Basis edge i as an edge index of the polyhedron.
  int basis_edge(int i) const { return basis_edges_.at(i); }

  /// All edges not contained in the basis (a spanning tree).
  const std::vector<int>& essential_tree() const { return essential_edges_; }
  /// Essential tree minus its leaves.
  const std::vector<int>& core_tree() const { return core_edges_; }
  const std::vector<int>& leaves() const { return leaf_edges_; }
  /// Vertices of the core tree (= vertices not on the basis).
  const std::vector<int>& interior_vertices() const { return interior_vertices_; }

  /// Label anchored at basis edge 0.  Throws NotSimple.
  Label label() const;

 private:
  CombinatorialPolyhedron poly_;
  int basis_ = -1;
  std::vector<int> basis_cycle_;
  std::vector<int> basis_edges_;
  std::vector<int> lateral_faces_;
  std::vector<int> essential_edges_;
  std::vector<int> core_edges_;
  std::vector<int> leaf_edges_;
  std::vector<int> interior_vertices_;
};

/// All faces qualifying as a pyramitoid basis (may be empty).
std::vector<int> find_bases(const CombinatorialPolyhedron& poly);

inline Pyramitoid as_pyramitoid(CombinatorialPolyhedron poly, int basis) {
  return Pyramitoid(std::move(poly), basis);
}

/// Truncate the basis vertex at position i (the vertex between lateral faces
/// i-1 and i).  Label rewrite: (..., b_{i-1}+1, 0, b_i+1, ...).
/// Throws InvalidVertex.
Pyramitoid truncate_vertex(const Pyramitoid& pyr, int i);

/// The label rewrites of the two moves, as cyclic sequences (anchored at the
/// face following the touched position).
Label truncation_label_rewrite(const Label& l, int i);
Label contraction_label_rewrite(const Label& l, int i);

/// Contract the triangular lateral face at position i (b_i = 0); inverse of
/// truncation.  Label rewrite: (..., b_{i-1}-1, b_{i+1}-1, ...).
/// Throws NotATriangle / NeighborUnderflow.
Pyramitoid contract_triangle(const Pyramitoid& pyr, int i);

/// The n-prism with one vertical face collapsed to a segment: the simple
/// n-pyramitoid with an n-gon lateral face.
Pyramitoid n_book(int n);

/// Pyramid over the n-gon, viewed with the n-gon as basis.
Pyramitoid n_pyramid(int n);

}  // namespace covers
