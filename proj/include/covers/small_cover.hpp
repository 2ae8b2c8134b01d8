#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "covers/graph.hpp"
#include "covers/integer_matrix.hpp"
#include "covers/polyhedron.hpp"
#include "covers/pyramitoid.hpp"
#include "covers/triangulation.hpp"

namespace covers {

/// Regular cell structure of the base orbifold: cells per dimension with
/// signed facet incidence, plus for every cell the set of base facets
/// (2-faces of a 3-polytope, edges of a polygon) containing it.
struct BaseComplex {
  struct Cell {
    std::vector<std::pair<int, int>> facets;  // (cell index in dim-1, sign)
    uint32_t containing_facets = 0;           // bitmask over base facets
    int base_id = 0;  // vertex id / edge index / face index in the source
  };

  int dim = 0;
  int num_facets = 0;
  std::vector<std::vector<Cell>> cells;  // cells[d]

  static BaseComplex from_polyhedron(const CombinatorialPolyhedron& poly);
  static BaseComplex polygon(int n);
};

/// The cover of the base induced by reflections on a chosen mirror subset:
/// cells are (base cell, coset mask) pairs, the mask ranging over
/// (Z/2)^m modulo the subgroup spanned by the mirrors containing the base
/// cell (canonical representative: all spanned bits cleared).  Lifted
/// incidence equals base incidence; orientations transport because a
/// reflection whose mirror contains a cell fixes it pointwise.
class SmallCoverComplex {
 public:
  SmallCoverComplex() = default;
  /// mirror_facets: base facet ids in bit order (bit i <-> mirror_facets[i]).
  SmallCoverComplex(BaseComplex base, std::vector<int> mirror_facets);

  int dim() const { return base_.dim; }
  int num_mirrors() const { return m_; }
  const BaseComplex& base() const { return base_; }
  const std::vector<int>& mirror_facets() const { return mirrors_; }

  long long cells_in_dim(int d) const { return offsets_[d].back(); }
  long long total_cells() const;
  long long euler_characteristic() const;
  /// Boundary matrix C_d -> C_{d-1}, 1 <= d <= dim().
  const SparseIntMatrix& boundary(int d) const { return boundary_.at(d - 1); }

  /// Mirror bits spanned by the base cell (its coset subgroup).
  uint32_t span(int d, int base_idx) const { return span_[d][base_idx]; }
  long long cell_id(int d, int base_idx, uint32_t mask) const;
  std::pair<int, uint32_t> cell_info(int d, long long id) const;
  /// Base cell index in dimension d with the given source id, or -1.
  int base_cell_index(int d, int base_id) const;

  /// Per-dimension cell table plus boundary triplets, for external tools.
  std::string dump() const;

 private:
  BaseComplex base_;
  std::vector<int> mirrors_;
  int m_ = 0;
  std::vector<uint32_t> mirror_bit_of_facet_;   // facet id -> bit or ~0
  std::vector<std::vector<uint32_t>> span_;     // [d][base_idx]
  std::vector<std::vector<long long>> offsets_; // [d][base_idx], + total at end
  std::vector<SparseIntMatrix> boundary_;
};

/// Cover of a 3-polytope with the given mirror faces.
SmallCoverComplex small_cover_complex(const CombinatorialPolyhedron& poly,
                                      const std::set<int>& mirrors);
/// Cover of the n-gon with the given mirror edges (all of them by default).
SmallCoverComplex polygon_cover(int n, const std::set<int>* mirror_edges = nullptr);

/// Exact check that consecutive boundary matrices compose to zero.
bool check_dd_zero(const SmallCoverComplex& cx);

/// Cells lying over the non-mirror facets, as a complex one dimension lower,
/// with a map back to parent cell ids.  Empty when every facet is a mirror.
struct BoundarySubcomplex {
  SmallCoverComplex complex;
  std::vector<std::vector<long long>> to_parent;  // per dim
};
BoundarySubcomplex boundary_subcomplex(const SmallCoverComplex& cx);

/// True iff every (dim-1)-cell of the complex lies in exactly two top cells.
bool is_closed_pseudomanifold(const SmallCoverComplex& cx);

/// Dome cover of a pyramitoid: mirrors are the lateral faces in basis-edge
/// order (bit i <-> lateral face i), so codes, arcs and gluings share labels.
struct DomeCover {
  Pyramitoid pyr;
  SmallCoverComplex dome;
  SmallCoverComplex surface;                       // cells over the basis
  std::vector<std::vector<long long>> surf_to_dome;
};
DomeCover build_dome_cover(const Pyramitoid& pyr);

/// Preimage of the core tree in the dome cover: vertices/edges are cover
/// cell ids of dimensions 0/1.
Graph core_graph(const DomeCover& dc);

/// A lifted code arc: a closed curve on the boundary surface crossing four
/// face cells, each chord joining an a-side and a b-side edge cell.
struct LiftedCircle {
  std::pair<int, int> arc;   // basis-edge index pair (a < b)
  uint32_t rep_mask = 0;     // canonical coset representative of the orbit
  std::vector<long long> face_cells;  // 4 surface 2-cells, in cyclic order
  std::vector<long long> edge_cells;  // 4 crossed surface 1-cells; edge k
                                      // separates face k and face k+1
};
/// All lifted circles of all code arcs: (n-3) * 2^(n-2) circles, four arc
/// copies each.  Throws BasisMismatch when the code does not fit.
std::vector<LiftedCircle> lift_arcs(const DomeCover& dc, const Code& code);

/// Cellular 1-cycle on the surface homotopic to the circle (each chord slid
/// to the boundary path between the crossed edges' anchor vertices).
std::vector<Int> circle_chain(const DomeCover& dc, const LiftedCircle& c);

}  // namespace covers
