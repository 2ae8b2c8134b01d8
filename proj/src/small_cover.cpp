#include "covers/small_cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covers/errors.hpp"

namespace covers {

BaseComplex BaseComplex::from_polyhedron(const CombinatorialPolyhedron& poly) {
  BaseComplex bc;
  bc.dim = 3;
  bc.num_facets = poly.num_faces();
  bc.cells.resize(4);

  std::map<int, int> vindex;
  for (int i = 0; i < poly.num_vertices(); ++i)
    vindex[poly.vertex_ids()[i]] = i;

  // Vertices.
  for (int v : poly.vertex_ids()) {
    Cell c;
    c.base_id = v;
    for (int f : poly.faces_of_vertex(v)) c.containing_facets |= 1u << f;
    bc.cells[0].push_back(std::move(c));
  }
  // Edges, oriented tail -> head: boundary = head - tail.
  for (int e = 0; e < poly.num_edges(); ++e) {
    Cell c;
    c.base_id = e;
    const Edge& ed = poly.edges()[e];
    c.facets.push_back({vindex.at(ed.head), +1});
    c.facets.push_back({vindex.at(ed.tail), -1});
    auto f = poly.faces_of_edge(e);
    for (int fi : f)
      if (fi >= 0) c.containing_facets |= 1u << fi;
    bc.cells[1].push_back(std::move(c));
  }
  // Faces.
  for (int f = 0; f < poly.num_faces(); ++f) {
    Cell c;
    c.base_id = f;
    for (int e : poly.edges_of_face(f))
      c.facets.push_back({e, poly.face_edge_sign(f, e)});
    c.containing_facets = 1u << f;
    bc.cells[2].push_back(std::move(c));
  }
  // The solid cell; with coherent outward-facing cycles its boundary is the
  // plain sum of the faces.
  {
    Cell c;
    c.base_id = 0;
    for (int f = 0; f < poly.num_faces(); ++f) c.facets.push_back({f, +1});
    bc.cells[3].push_back(std::move(c));
  }
  return bc;
}

BaseComplex BaseComplex::polygon(int n) {
  BaseComplex bc;
  bc.dim = 2;
  bc.num_facets = n;
  bc.cells.resize(3);
  for (int i = 0; i < n; ++i) {
    Cell c;
    c.base_id = i;
    c.containing_facets = (1u << i) | (1u << ((i + n - 1) % n));
    bc.cells[0].push_back(std::move(c));
  }
  for (int i = 0; i < n; ++i) {
    Cell c;
    c.base_id = i;
    c.facets.push_back({(i + 1) % n, +1});
    c.facets.push_back({i, -1});
    c.containing_facets = 1u << i;
    bc.cells[1].push_back(std::move(c));
  }
  {
    Cell c;
    c.base_id = 0;
    for (int i = 0; i < n; ++i) c.facets.push_back({i, +1});
    bc.cells[2].push_back(std::move(c));
  }
  return bc;
}

namespace {

// Submasks of `free_bits` in increasing numeric order.
std::vector<uint32_t> submasks_ascending(uint32_t free_bits) {
  std::vector<uint32_t> out;
  uint32_t s = 0;
  while (true) {
    out.push_back(s);
    if (s == free_bits) break;
    s = (s - free_bits) & free_bits;
  }
  return out;
}

int popcount32(uint32_t x) { return __builtin_popcount(x); }

}  // namespace

SmallCoverComplex::SmallCoverComplex(BaseComplex base,
                                     std::vector<int> mirror_facets)
    : base_(std::move(base)), mirrors_(std::move(mirror_facets)) {
  m_ = static_cast<int>(mirrors_.size());
  if (base_.num_facets > 31 || m_ > 24)
    throw std::invalid_argument(
        "cover construction capped at 31 facets / 24 mirrors");
  mirror_bit_of_facet_.assign(base_.num_facets, ~0u);
  for (int b = 0; b < m_; ++b) mirror_bit_of_facet_[mirrors_[b]] = b;

  const int D = base_.dim;
  span_.resize(D + 1);
  offsets_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    span_[d].resize(base_.cells[d].size());
    offsets_[d].resize(base_.cells[d].size() + 1, 0);
    for (size_t i = 0; i < base_.cells[d].size(); ++i) {
      uint32_t sp = 0;
      uint32_t cf = base_.cells[d][i].containing_facets;
      for (int f = 0; f < base_.num_facets; ++f)
        if ((cf >> f) & 1u)
          if (mirror_bit_of_facet_[f] != ~0u) sp |= 1u << mirror_bit_of_facet_[f];
      span_[d][i] = sp;
      long long count = 1ll << (m_ - popcount32(sp));
      offsets_[d][i + 1] = offsets_[d][i] + count;
    }
  }

  boundary_.reserve(D);
  const uint32_t full = (m_ == 32) ? ~0u : ((1u << m_) - 1);
  for (int d = 1; d <= D; ++d) {
    SparseIntMatrix B(static_cast<int>(cells_in_dim(d - 1)),
                      static_cast<int>(cells_in_dim(d)));
    for (size_t i = 0; i < base_.cells[d].size(); ++i) {
      uint32_t free_bits = full & ~span_[d][i];
      for (uint32_t g : submasks_ascending(free_bits)) {
        long long col = cell_id(d, static_cast<int>(i), g);
        for (auto [j, sign] : base_.cells[d][i].facets) {
          long long row = cell_id(d - 1, j, g);
          B.add(static_cast<int>(row), static_cast<int>(col), sign);
        }
      }
    }
    B.compress();
    boundary_.push_back(std::move(B));
  }
}

long long SmallCoverComplex::total_cells() const {
  long long t = 0;
  for (int d = 0; d <= dim(); ++d) t += cells_in_dim(d);
  return t;
}

long long SmallCoverComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim(); ++d)
    chi += (d % 2 == 0) ? cells_in_dim(d) : -cells_in_dim(d);
  return chi;
}

long long SmallCoverComplex::cell_id(int d, int base_idx, uint32_t mask) const {
  uint32_t sp = span_[d][base_idx];
  uint32_t g = mask & ~sp;  // canonical coset representative
  // Rank of g among submasks of ~sp, by bit compression.
  long long rank = 0;
  int out_bit = 0;
  for (int b = 0; b < m_; ++b) {
    if ((sp >> b) & 1u) continue;
    if ((g >> b) & 1u) rank |= 1ll << out_bit;
    ++out_bit;
  }
  return offsets_[d][base_idx] + rank;
}

std::pair<int, uint32_t> SmallCoverComplex::cell_info(int d, long long id) const {
  const auto& off = offsets_[d];
  auto it = std::upper_bound(off.begin(), off.end(), id);
  int base_idx = static_cast<int>(it - off.begin()) - 1;
  long long rank = id - off[base_idx];
  uint32_t sp = span_[d][base_idx];
  uint32_t g = 0;
  int out_bit = 0;
  for (int b = 0; b < m_; ++b) {
    if ((sp >> b) & 1u) continue;
    if ((rank >> out_bit) & 1ll) g |= 1u << b;
    ++out_bit;
  }
  return {base_idx, g};
}

int SmallCoverComplex::base_cell_index(int d, int base_id) const {
  for (size_t i = 0; i < base_.cells[d].size(); ++i)
    if (base_.cells[d][i].base_id == base_id) return static_cast<int>(i);
  return -1;
}

std::string SmallCoverComplex::dump() const {
  std::ostringstream os;
  os << "dim " << dim() << " mirrors " << m_ << "\n";
  for (int d = 0; d <= dim(); ++d) {
    os << "cells " << d << " " << cells_in_dim(d) << "\n";
    for (long long id = 0; id < cells_in_dim(d); ++id) {
      auto [b, g] = cell_info(d, id);
      os << id << " " << base_.cells[d][b].base_id << " " << g << "\n";
    }
  }
  for (int d = 1; d <= dim(); ++d) {
    const auto& B = boundary(d);
    os << "boundary " << d << " " << B.rows() << " " << B.cols() << "\n";
    for (const auto& t : B.triplets())
      os << t.row << " " << t.col << " " << t.value << "\n";
  }
  return os.str();
}

SmallCoverComplex small_cover_complex(const CombinatorialPolyhedron& poly,
                                      const std::set<int>& mirrors) {
  std::vector<int> order(mirrors.begin(), mirrors.end());
  return SmallCoverComplex(BaseComplex::from_polyhedron(poly), order);
}

SmallCoverComplex polygon_cover(int n, const std::set<int>* mirror_edges) {
  std::vector<int> order;
  if (mirror_edges)
    order.assign(mirror_edges->begin(), mirror_edges->end());
  else {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  return SmallCoverComplex(BaseComplex::polygon(n), order);
}

bool check_dd_zero(const SmallCoverComplex& cx) {
  for (int d = 2; d <= cx.dim(); ++d)
    if (!cx.boundary(d - 1).multiply(cx.boundary(d)).is_zero()) return false;
  return true;
}

BoundarySubcomplex boundary_subcomplex(const SmallCoverComplex& cx) {
  const BaseComplex& base = cx.base();
  const int D = base.dim;
  uint32_t mirror_set = 0;
  for (int f : cx.mirror_facets()) mirror_set |= 1u << f;

  // Base cells lying in the closure of a non-mirror facet.
  std::vector<std::vector<int>> keep(D);        // new index -> old index
  std::vector<std::vector<int>> new_index(D);   // old index -> new or -1
  BaseComplex sub;
  sub.dim = D - 1;
  sub.num_facets = base.num_facets;
  sub.cells.resize(D);
  for (int d = 0; d < D; ++d) {
    new_index[d].assign(base.cells[d].size(), -1);
    for (size_t i = 0; i < base.cells[d].size(); ++i) {
      if ((base.cells[d][i].containing_facets & ~mirror_set) == 0) continue;
      new_index[d][i] = static_cast<int>(keep[d].size());
      keep[d].push_back(static_cast<int>(i));
    }
    for (int old_i : keep[d]) {
      BaseComplex::Cell c = base.cells[d][old_i];
      for (auto& [j, s] : c.facets) j = new_index[d - 1][j];
      sub.cells[d].push_back(std::move(c));
    }
  }

  BoundarySubcomplex out{SmallCoverComplex(sub, cx.mirror_facets()), {}};
  out.to_parent.resize(D);
  for (int d = 0; d < D; ++d) {
    out.to_parent[d].resize(out.complex.cells_in_dim(d));
    for (long long id = 0; id < out.complex.cells_in_dim(d); ++id) {
      auto [b, g] = out.complex.cell_info(d, id);
      out.to_parent[d][id] = cx.cell_id(d, keep[d][b], g);
    }
  }
  return out;
}

bool is_closed_pseudomanifold(const SmallCoverComplex& cx) {
  const int D = cx.dim();
  if (D < 1) return false;
  std::vector<int> count(cx.cells_in_dim(D - 1), 0);
  for (const auto& t : cx.boundary(D).triplets())
    count[t.row] += (t.value == 1 || t.value == -1) ? 1 : 0;
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
}

DomeCover build_dome_cover(const Pyramitoid& pyr) {
  DomeCover dc;
  dc.pyr = pyr;
  dc.dome = SmallCoverComplex(
      BaseComplex::from_polyhedron(pyr.polyhedron()), pyr.lateral_faces());
  BoundarySubcomplex bs = boundary_subcomplex(dc.dome);
  dc.surface = std::move(bs.complex);
  dc.surf_to_dome = std::move(bs.to_parent);
  return dc;
}

Graph core_graph(const DomeCover& dc) {
  const auto& poly = dc.pyr.polyhedron();
  Graph g;
  std::set<int> vcells;
  for (int e : dc.pyr.core_tree()) {
    int base_e = dc.dome.base_cell_index(1, e);
    uint32_t sp = dc.dome.span(1, base_e);
    const Edge& ed = poly.edges()[e];
    int bt = dc.dome.base_cell_index(0, ed.tail);
    int bh = dc.dome.base_cell_index(0, ed.head);
    const uint32_t full =
        (dc.dome.num_mirrors() == 32) ? ~0u : ((1u << dc.dome.num_mirrors()) - 1);
    uint32_t s = 0;
    while (true) {
      if ((s & sp) == 0) {
        long long vt = dc.dome.cell_id(0, bt, s);
        long long vh = dc.dome.cell_id(0, bh, s);
        vcells.insert(static_cast<int>(vt));
        vcells.insert(static_cast<int>(vh));
        g.add_edge(static_cast<int>(vt), static_cast<int>(vh));
      }
      if (s == full) break;
      ++s;
    }
  }
  g.vertices.assign(vcells.begin(), vcells.end());
  return g;
}

std::vector<LiftedCircle> lift_arcs(const DomeCover& dc, const Code& code) {
  const int n = dc.pyr.n();
  if (code.n != n || !code.is_valid())
    throw BasisMismatch("code does not match the pyramitoid basis");
  const SmallCoverComplex& F = dc.surface;
  const int basis_face_idx = F.base_cell_index(2, dc.pyr.basis());
  std::vector<int> edge_cell_idx(n);
  for (int i = 0; i < n; ++i)
    edge_cell_idx[i] = F.base_cell_index(1, dc.pyr.basis_edge(i));

  std::vector<LiftedCircle> out;
  const uint32_t full = (1u << n) - 1;
  for (auto [a, b] : code.arcs) {
    const uint32_t A = 1u << a, B = 1u << b;
    for (uint32_t g0 = 0; g0 <= full; ++g0) {
      if (g0 & (A | B)) continue;  // orbit representatives only
      LiftedCircle c;
      c.arc = {a, b};
      c.rep_mask = g0;
      uint32_t faces[4] = {g0, g0 ^ A, g0 ^ A ^ B, g0 ^ B};
      int cross[4] = {a, b, a, b};
      for (int k = 0; k < 4; ++k) {
        c.face_cells.push_back(F.cell_id(2, basis_face_idx, faces[k]));
        c.edge_cells.push_back(F.cell_id(1, edge_cell_idx[cross[k]], faces[k]));
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Int> circle_chain(const DomeCover& dc, const LiftedCircle& c) {
  const SmallCoverComplex& F = dc.surface;
  const auto& poly = dc.pyr.polyhedron();
  const auto& cyc = dc.pyr.basis_cycle();
  const int n = dc.pyr.n();
  std::vector<int> edge_cell_idx(n);
  for (int i = 0; i < n; ++i)
    edge_cell_idx[i] = F.base_cell_index(1, dc.pyr.basis_edge(i));

  std::vector<Int> chain(F.cells_in_dim(1), 0);
  auto [a, b] = c.arc;
  const uint32_t A = 1u << a, B = 1u << b;
  uint32_t faces[4] = {c.rep_mask, c.rep_mask ^ A, c.rep_mask ^ A ^ B,
                       c.rep_mask ^ B};
  int cross[4] = {a, b, a, b};
  for (int k = 0; k < 4; ++k) {
    uint32_t g = faces[k];
    int entry = cross[(k + 3) % 4];
    int exit = cross[k];
    // Walk the basis cycle forward from the entry anchor v_{entry+1} to the
    // exit anchor v_{exit+1}.
    for (int pos = (entry + 1) % n; pos != (exit + 1) % n; pos = (pos + 1) % n) {
      int vfrom = cyc[pos];
      int sign = (poly.edges()[dc.pyr.basis_edge(pos)].tail == vfrom) ? +1 : -1;
      long long eid = F.cell_id(1, edge_cell_idx[pos], g);
      chain[eid] += sign;
    }
  }
  return chain;
}

}  // namespace covers
