#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "covers/homology.hpp"
#include "covers/pyramitoid.hpp"
#include "covers/small_cover.hpp"
#include "covers/triangulation.hpp"

namespace covers {

/// How the two basis polygons are identified: north basis edge i is glued to
/// south basis edge (offset - i) mod n.  With `flip` the mirror image of the
/// south half is glued instead (offset then refers to the reflected
/// indexing).
struct Matching {
  int offset = 0;
  bool flip = false;
};

/// Two pyramitoids glued along their bases: the equator vertices dissolve,
/// so glued face i = north lateral i joined with south lateral sigma(i)
/// across the removed basis edge.
class Bipyramitoid {
 public:
  Bipyramitoid() = default;

  const Pyramitoid& north() const { return north_; }
  /// South half in glueing orientation (reflection already applied if the
  /// matching asked for it).
  const Pyramitoid& south() const { return south_; }
  const Matching& matching() const { return matching_; }
  const CombinatorialPolyhedron& glued() const { return glued_; }
  int n() const { return north_.n(); }
  /// sigma: north basis edge index -> south basis edge index.
  int south_edge(int i) const { return sigma_.at(i); }
  int north_edge_of_south(int j) const { return sigma_inv_.at(j); }
  /// Glued vertex id of an interior vertex of a half (side 0 = north).
  int glued_vertex(int side, int v) const;
  /// The crossed edges of the glued polyhedron, in equator order; feeding
  /// them back to split_bipyramitoid recovers the two halves.
  const std::vector<std::pair<int, int>>& equator() const { return equator_; }

 private:
  friend Bipyramitoid glue_bipyramitoid(const Pyramitoid&, const Pyramitoid&,
                                        const Matching&);
  Pyramitoid north_, south_;
  Matching matching_;
  std::vector<int> sigma_, sigma_inv_;
  CombinatorialPolyhedron glued_;
  std::map<int, int> north_vmap_, south_vmap_;  // interior vertex -> glued id
  std::vector<std::pair<int, int>> equator_;
};

/// Throws BasisMismatch when the halves have different basis sizes or a
/// matched face pair would degenerate (both triangles).
Bipyramitoid glue_bipyramitoid(const Pyramitoid& north, const Pyramitoid& south,
                               const Matching& matching);

/// Cut a polyhedron along an equator (ordered list of crossed edges, as
/// vertex pairs) that crosses every face exactly once.  Returns the two
/// halves re-glued, so `result.glued()` is the input up to relabeling.
/// Throws EquatorInvalid.
Bipyramitoid split_bipyramitoid(const CombinatorialPolyhedron& poly,
                                const std::vector<std::pair<int, int>>& equator);

/// Splitting-surface data: genus, the two meridian systems (lifted to the
/// shared surface, in north coordinates) and their crossing counts.
struct HeegaardData {
  long long genus = 0;
  std::vector<LiftedCircle> north_meridians;
  std::vector<LiftedCircle> south_meridians;
  /// intersections[i][j] = transverse crossings of north circle i with
  /// south circle j under the canonical push-off.
  std::vector<std::vector<int>> intersections;
  std::string to_json() const;
};

/// Throws NotSimple unless both halves are simple.
HeegaardData heegaard_data(const Bipyramitoid& b);

/// The south code with its arcs re-indexed through the matching, so both
/// curve systems live on the shared basis polygon in north coordinates.
Code south_code_in_north_frame(const Bipyramitoid& b);

struct TwoWayHomology {
  std::vector<HomologyGroup> direct;  // full-mirror cover of the glued solid
  std::vector<HomologyGroup> doubled; // two dome covers joined along the surface
  bool agree = false;
};

/// Homology of the reflection manifold two ways: directly from the glued
/// polyhedron, and from the two handlebody covers identified along their
/// boundary surfaces (coset coordinates aligned through the matching).
TwoWayHomology z_homology_two_ways(const Bipyramitoid& b);

/// The amalgamated chain complex used by the second route.
ChainComplex doubled_complex(const Bipyramitoid& b);

/// The n-trapezohedron (2n quadrilateral faces, two apices of valence n),
/// split by its zigzag equator.
Bipyramitoid trapezohedron(int n);
CombinatorialPolyhedron trapezohedron_polyhedron(int n);

/// Smoothing of the n-trapezohedron: two simple 2n-pyramitoids whose
/// triangular faces sit on alternating equatorial edges (even basis-edge
/// positions), glued with offset 1.  Throws CodeAlternationViolated.
Bipyramitoid smooth_trapezohedron(int n, const Code& north_code,
                                  const Code& south_code);

/// All admissible codes for a half of the smoothed n-trapezohedron.
std::vector<Code> trapezohedron_smoothing_codes(int n);

/// The 4-trapezohedron smoothing (two pentagonal prisms joined with a
/// quarter turn).
CombinatorialPolyhedron gyrobipentaprism();

}  // namespace covers
