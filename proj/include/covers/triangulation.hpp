#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "covers/pyramitoid.hpp"

namespace covers {

/// Maximal set of pairwise non-crossing diagonals of a convex n-gon
/// (vertices 0..n-1); always n-3 diagonals cutting the polygon into n-2
/// triangles.
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;  // (a < b), sorted

  Triangulation rotated(int r) const;
  Triangulation reflected() const;
  /// Rotation-minimal representative (rotation-only; no reflections).
  Triangulation canonical(bool dihedral = false) const;
  /// Orbit size under the cyclic group C_n.
  int orbit_size(bool dihedral = false) const;
  /// The n-2 triangles, each as a sorted vertex triple.
  std::vector<std::array<int, 3>> triangles() const;
  bool is_valid() const;
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

/// Arcs of the basis polygon dual to the core-tree edges: n-3 unordered,
/// non-adjacent, pairwise non-crossing pairs of basis-edge indices.  As
/// chords of the dual polygon these are exactly a triangulation.
struct Code {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (a < b), sorted
  bool is_valid() const;
  friend bool operator==(const Code&, const Code&) = default;
};

enum class CellType { I = 1, II = 2, III = 3 };

struct CellTypeStats {
  int m1 = 0, m2 = 0, m3 = 0;
  int total() const { return m1 + m2 + m3; }
};

struct BallCounts {
  long long balls_full = 0;
  long long balls_reduced = 0;      // defined for n > 4
  long long meridians_reduced = 0;  // defined for n > 4
};

inline constexpr int kEnumerationCap = 14;

/// The (n-2)nd Catalan number n(n+1)...(2n-4)/(n-2)!, exactly.
long long catalan_count(int n);

/// All triangulations of the n-gon, duplicate-free; size = catalan_count(n).
/// Throws EnumerationCapExceeded for n > kEnumerationCap.
std::vector<Triangulation> enumerate_triangulations(int n);

/// Number of orbits under the rotation group C_n only (no reflections);
/// set dihedral for the full dihedral count.
long long count_rotation_classes(int n, bool dihedral = false);
/// Same, by Burnside's lemma over explicit fixed-point counts (independent
/// cross-check of the canonicalization route).
long long count_rotation_classes_burnside(int n);

/// Descending multiset of orbit sizes.
std::vector<int> orbit_profile(int n, bool dihedral = false);

/// Canonical representative triangulations, one per rotation class, sorted.
std::vector<Triangulation> rotation_class_representatives(int n, bool dihedral = false);

/// The simple n-pyramitoid whose core tree is the dual tree of t
/// (lateral face i sits on basis edge i = dual-polygon vertex i).
Pyramitoid pyramitoid_from_triangulation(const Triangulation& t);

/// Inverse of pyramitoid_from_triangulation: diagonal {i, j} per core edge
/// shared by lateral faces i and j.  Throws NotSimple.
Triangulation triangulation_of(const Pyramitoid& pyr);

/// The code of the pyramitoid: one arc per core-tree edge, joining the basis
/// edges of the two lateral faces that meet along it.  Throws NotSimple.
Code code_of(const Pyramitoid& pyr);

/// Per-cell types of the code decomposition (one cell per core-tree vertex,
/// type = valence 1, 2 or 3) plus the m_j counts.
std::pair<std::vector<CellType>, CellTypeStats> code_cells(const Pyramitoid& pyr);

/// Ball decomposition sizes: (n-2)*2^(n-3) in full; for n > 4 the reduced
/// form keeps (n-2-m1)*2^(n-3) balls with 2^(n-3)*(2n-6-m1) meridian disks.
/// Throws std::domain_error for the reduced counts when n <= 4.
BallCounts ball_decomposition_counts(const Pyramitoid& pyr);

/// One representative simple pyramitoid per rotation class; length = N_n.
std::vector<Pyramitoid> smoothing_options(int n);

/// True iff some enumerated simple pyramitoid realizes the label up to
/// rotation.  Requires validate_label(label, n).
bool label_realizable(const Label& label);

/// CSV rows (n, catalan, N_n, orbit profile) for 4 <= n <= n_max.
std::string enumeration_csv(int n_max);

}  // namespace covers
