#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace covers {

/// Undirected edge stored with a reference orientation tail -> head
/// (tail < head as vertex ids).
struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A closed 3-polyhedron given combinatorially: faces as cyclic vertex lists,
/// edges derived from consecutive pairs.
///
/// Face cycles are expected to be coherently oriented (counterclockwise as
/// seen from outside), so the two faces sharing an edge traverse it in
/// opposite directions.  validate() reports violated invariants as
/// diagnostics instead of throwing; all other queries assume a valid input.
class CombinatorialPolyhedron {
 public:
  CombinatorialPolyhedron() = default;
  CombinatorialPolyhedron(std::vector<int> vertices,
                          std::vector<std::vector<int>> faces);
  /// Vertex set derived from the faces.
  explicit CombinatorialPolyhedron(std::vector<std::vector<int>> faces);

  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const {
    return num_vertices() - num_edges() + num_faces();
  }

  /// Index of the undirected edge {u, v}, or -1.
  int edge_index(int u, int v) const;
  /// The (at most two) faces containing edge e, in no particular order.
  /// Slots beyond the actual count hold -1.
  std::array<int, 2> faces_of_edge(int e) const;
  /// +1 if face f traverses edge e tail->head, -1 if head->tail, 0 if absent.
  int face_edge_sign(int f, int e) const;
  /// Edge indices around face f, in the face's cyclic order.
  std::vector<int> edges_of_face(int f) const;
  bool face_contains_edge(int f, int e) const { return face_edge_sign(f, e) != 0; }

  int vertex_valence(int v) const;
  std::vector<int> faces_of_vertex(int v) const;
  std::vector<int> edges_of_vertex(int v) const;
  /// In the rotation system, the neighbor following `a` around `x`:
  /// the successor of x in the face that traverses a -> x.
  int next_around_vertex(int x, int a) const;

  /// Every violated structural invariant, with offending cell ids.
  /// Empty result == valid closed oriented polyhedron.
  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }

  /// True iff every vertex has valence exactly 3.
  bool is_simple() const;

  /// The mirror image: every face cycle reversed.
  CombinatorialPolyhedron reflected() const;

  /// Canonical encoding of the oriented combinatorial type (BFS over flags,
  /// minimum over all starting directed edges).  Equal encodings ==
  /// orientation-preserving isomorphism.
  std::vector<int> canonical_code() const;
  bool isomorphic_to(const CombinatorialPolyhedron& other,
                     bool allow_reflection = true) const;

  std::string to_json() const;
  static CombinatorialPolyhedron from_json(const std::string& text);
  static CombinatorialPolyhedron load_json_file(const std::string& path);

  // Stock polyhedra.
  static CombinatorialPolyhedron tetrahedron();
  static CombinatorialPolyhedron cube();
  static CombinatorialPolyhedron triangular_prism();
  /// Pyramid over an n-gon; apex valence n (non-simple for n > 3).
  static CombinatorialPolyhedron pyramid(int n);

 private:
  void build_edges();

  std::vector<int> vertex_ids_;  // sorted, unique
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;                       // sorted
  std::vector<std::array<int, 2>> edge_faces_;    // derived; -1 padding
};

}  // namespace covers
