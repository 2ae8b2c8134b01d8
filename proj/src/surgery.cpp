#include "covers/surgery.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "covers/errors.hpp"
#include "json.hpp"

namespace covers {

namespace {

std::pair<int, int> norm_pair(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

// Interior run of lateral face i: the face cycle rotated to start
// [v_{i+1}, v_i, ...] with the two basis vertices dropped.
std::vector<int> interior_run(const Pyramitoid& pyr, int i) {
  const auto& cyc = pyr.basis_cycle();
  const int n = pyr.n();
  const int vi = cyc[i], vnext = cyc[(i + 1) % n];
  std::vector<int> face = pyr.polyhedron().faces()[pyr.lateral_face(i)];
  const int k = static_cast<int>(face.size());
  int start = -1;
  for (int p = 0; p < k; ++p)
    if (face[p] == vnext && face[(p + 1) % k] == vi) start = p;
  std::vector<int> out;
  for (int p = 2; p < k; ++p) out.push_back(face[(start + p) % k]);
  return out;
}

}  // namespace

int Bipyramitoid::glued_vertex(int side, int v) const {
  const auto& m = side == 0 ? north_vmap_ : south_vmap_;
  return m.at(v);
}

Bipyramitoid glue_bipyramitoid(const Pyramitoid& north, const Pyramitoid& south,
                               const Matching& matching) {
  if (north.n() != south.n())
    throw BasisMismatch("halves have different basis sizes");
  const int n = north.n();

  Bipyramitoid b;
  b.north_ = north;
  b.south_ = matching.flip
                 ? Pyramitoid(south.polyhedron().reflected(), south.basis())
                 : south;
  b.matching_ = matching;
  b.sigma_.resize(n);
  b.sigma_inv_.resize(n);
  for (int i = 0; i < n; ++i) {
    int j = ((matching.offset - i) % n + n) % n;
    b.sigma_[i] = j;
    b.sigma_inv_[j] = i;
  }

  int next_id = 0;
  for (int v : b.north_.interior_vertices()) b.north_vmap_[v] = next_id++;
  for (int v : b.south_.interior_vertices()) b.south_vmap_[v] = next_id++;

  std::vector<std::vector<int>> faces;
  for (int i = 0; i < n; ++i) {
    std::vector<int> f;
    for (int v : interior_run(b.north_, i)) f.push_back(b.north_vmap_.at(v));
    for (int v : interior_run(b.south_, b.sigma_[i]))
      f.push_back(b.south_vmap_.at(v));
    if (f.size() < 3)
      throw BasisMismatch("matched face pair would degenerate (both triangles)");
    faces.push_back(std::move(f));
  }
  b.glued_ = CombinatorialPolyhedron(std::move(faces));
  // The crossed edge at basis vertex v_k is the merged pair of leaves, i.e.
  // the joint between the two interior runs of the face before it.
  for (int k = 0; k < n; ++k) {
    int i = (k + n - 1) % n;
    auto rn = interior_run(b.north_, i);
    auto rs = interior_run(b.south_, b.sigma_[i]);
    b.equator_.push_back(
        {b.north_vmap_.at(rn.back()), b.south_vmap_.at(rs.front())});
  }
  return b;
}

Bipyramitoid split_bipyramitoid(const CombinatorialPolyhedron& poly,
                                const std::vector<std::pair<int, int>>& equator) {
  const int n = poly.num_faces();
  if (static_cast<int>(equator.size()) != n)
    throw EquatorInvalid("equator must cross each of the " + std::to_string(n) +
                         " faces exactly once");
  std::vector<int> crossed;
  for (auto [u, v] : equator) {
    int e = poly.edge_index(u, v);
    if (e < 0)
      throw EquatorInvalid("(" + std::to_string(u) + "," + std::to_string(v) +
                           ") is not an edge");
    crossed.push_back(e);
  }
  {
    std::set<int> dedup(crossed.begin(), crossed.end());
    if (static_cast<int>(dedup.size()) != n)
      throw EquatorInvalid("equator crosses an edge twice");
  }

  // Face between consecutive crossings.
  std::vector<int> between(n, -1);
  std::set<int> faces_seen;
  for (int k = 0; k < n; ++k) {
    auto f1 = poly.faces_of_edge(crossed[k]);
    auto f2 = poly.faces_of_edge(crossed[(k + 1) % n]);
    int shared = -1;
    for (int a : f1)
      for (int c : f2)
        if (a >= 0 && a == c) shared = a;
    if (shared < 0)
      throw EquatorInvalid("consecutive crossed edges share no face");
    between[k] = shared;
    if (!faces_seen.insert(shared).second)
      throw EquatorInvalid("equator crosses a face twice");
  }

  // Sides: the vertex graph minus crossed edges must fall into 2 components.
  std::map<int, int> comp;
  {
    std::map<int, std::vector<int>> adj;
    std::set<int> crossed_set(crossed.begin(), crossed.end());
    for (int e = 0; e < poly.num_edges(); ++e) {
      if (crossed_set.count(e)) continue;
      adj[poly.edges()[e].tail].push_back(poly.edges()[e].head);
      adj[poly.edges()[e].head].push_back(poly.edges()[e].tail);
    }
    int label = 0;
    for (int v0 : poly.vertex_ids()) {
      if (comp.count(v0)) continue;
      std::vector<int> stack{v0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (comp.count(v)) continue;
        comp[v] = label;
        for (int w : adj[v]) stack.push_back(w);
      }
      ++label;
    }
    if (label != 2) throw EquatorInvalid("equator does not separate the boundary");
    for (int e : crossed)
      if (comp.at(poly.edges()[e].tail) == comp.at(poly.edges()[e].head))
        throw EquatorInvalid("a crossed edge does not join the two sides");
  }

  // New equator vertex per crossing.
  int maxid = 0;
  for (int v : poly.vertex_ids()) maxid = std::max(maxid, v);
  auto xid = [&](int k) { return maxid + 1 + k; };
  std::map<int, int> x_of_edge;  // crossed edge -> crossing index
  for (int k = 0; k < n; ++k) x_of_edge[crossed[k]] = k;

  // One pyramitoid per side.
  auto build_half = [&](int side) {
    std::vector<std::vector<int>> laterals;
    std::vector<std::pair<int, int>> basis_dir;  // directed (first, last) x's
    for (int k = 0; k < n; ++k) {
      const auto& cyc = poly.faces()[between[k]];
      const int s = static_cast<int>(cyc.size());
      // Augment the cycle with the two crossing vertices.
      std::vector<int> aug;
      for (int p = 0; p < s; ++p) {
        aug.push_back(cyc[p]);
        int e = poly.edge_index(cyc[p], cyc[(p + 1) % s]);
        auto it = x_of_edge.find(e);
        if (it != x_of_edge.end()) aug.push_back(xid(it->second));
      }
      // Contiguous arc X ... X whose interior lies on this side.
      const int m = static_cast<int>(aug.size());
      std::vector<int> xpos;
      for (int p = 0; p < m; ++p)
        if (aug[p] > maxid) xpos.push_back(p);
      auto arc_from = [&](int from, int to) {
        std::vector<int> part;
        for (int p = from;; p = (p + 1) % m) {
          part.push_back(aug[p]);
          if (p == to) break;
        }
        return part;
      };
      auto on_side = [&](const std::vector<int>& part) {
        if (part.size() < 3) return false;
        for (size_t q = 1; q + 1 < part.size(); ++q)
          if (comp.at(part[q]) != side) return false;
        return true;
      };
      std::vector<int> part = arc_from(xpos[0], xpos[1]);
      if (!on_side(part)) part = arc_from(xpos[1], xpos[0]);
      if (!on_side(part))
        throw EquatorInvalid("crossed face has no arc on one side");
      laterals.push_back(part);
      basis_dir.push_back({part.front(), part.back()});
    }
    // Chain the directed basis edges into the basis cycle.
    std::map<int, int> nxt;
    for (auto [a, c] : basis_dir) nxt[a] = c;
    std::vector<int> basis;
    int start = basis_dir.front().first;
    for (int v = start; basis.empty() || v != start; v = nxt.at(v))
      basis.push_back(v);
    if (static_cast<int>(basis.size()) != n)
      throw EquatorInvalid("equator arcs do not close into a single basis");
    std::vector<std::vector<int>> faces;
    faces.push_back(basis);
    for (auto& f : laterals) faces.push_back(std::move(f));
    return Pyramitoid(CombinatorialPolyhedron(std::move(faces)), 0);
  };

  Pyramitoid north = build_half(comp.at(poly.vertex_ids().front()));
  Pyramitoid south = build_half(1 - comp.at(poly.vertex_ids().front()));

  // Matching from the shared crossing points: basis edge (x_k, x_{k+1}) of
  // either half lies in the face between crossings k and k+1.
  auto edge_pairs = [&](const Pyramitoid& p) {
    std::map<std::pair<int, int>, int> pos;
    for (int i = 0; i < n; ++i) {
      const Edge& e = p.polyhedron().edges()[p.basis_edge(i)];
      pos[norm_pair(e.tail, e.head)] = i;
    }
    return pos;
  };
  auto npos = edge_pairs(north);
  auto spos = edge_pairs(south);
  std::vector<int> sigma(n);
  for (auto& [pair, i] : npos) sigma[i] = spos.at(pair);
  int offset = sigma[0];
  for (int i = 0; i < n; ++i)
    if (sigma[i] != ((offset - i) % n + n) % n)
      throw EquatorInvalid("split produced an incoherent matching");

  return glue_bipyramitoid(north, south, Matching{offset, false});
}

// ---------------------------------------------------------------------------
// Heegaard data

namespace {

// Position of each arc endpoint along the boundary circle under the
// canonical push-off: north endpoints sit on the first half of each edge,
// south endpoints on the second half; within a system, arcs ending on the
// same edge are nested by cyclic distance of the far endpoint.
struct ChordLayout {
  int n;
  // position[system][arc_index][0/1] on the circle (0 <-> arcs.first).
  std::vector<std::vector<std::array<long long, 2>>> position;

  ChordLayout(int n_, const std::vector<std::pair<int, int>>& north,
              const std::vector<std::pair<int, int>>& south)
      : n(n_), position(2) {
    position[0].resize(north.size());
    position[1].resize(south.size());
    const long long stride = 4ll * n;
    for (int e = 0; e < n; ++e) {
      for (int sys = 0; sys < 2; ++sys) {
        const auto& arcs = sys == 0 ? north : south;
        std::vector<int> here;
        for (size_t a = 0; a < arcs.size(); ++a)
          if (arcs[a].first == e || arcs[a].second == e)
            here.push_back(static_cast<int>(a));
        std::sort(here.begin(), here.end(), [&](int a, int b) {
          int oa = arcs[a].first == e ? arcs[a].second : arcs[a].first;
          int ob = arcs[b].first == e ? arcs[b].second : arcs[b].first;
          return (oa - e + n) % n > (ob - e + n) % n;
        });
        for (size_t slot = 0; slot < here.size(); ++slot) {
          int a = here[slot];
          int end = arcs[a].first == e ? 0 : 1;
          position[sys][a][end] =
              stride * e + (sys == 0 ? 1 : 2 * n + 1) + static_cast<long long>(slot);
        }
      }
    }
  }

  bool crosses(int a_north, int a_south) const {
    long long p1 = position[0][a_north][0], p2 = position[0][a_north][1];
    if (p1 > p2) std::swap(p1, p2);
    long long q1 = position[1][a_south][0], q2 = position[1][a_south][1];
    bool in1 = p1 < q1 && q1 < p2;
    bool in2 = p1 < q2 && q2 < p2;
    return in1 != in2;
  }
};

}  // namespace

std::string HeegaardData::to_json() const {
  nlohmann::json j;
  j["genus"] = genus;
  auto dump_system = [](const std::vector<LiftedCircle>& sys) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sys) {
      nlohmann::json jc;
      jc["arc"] = {c.arc.first, c.arc.second};
      jc["rep_mask"] = c.rep_mask;
      jc["face_cells"] = c.face_cells;
      jc["edge_cells"] = c.edge_cells;
      arr.push_back(jc);
    }
    return arr;
  };
  j["north_meridians"] = dump_system(north_meridians);
  j["south_meridians"] = dump_system(south_meridians);
  j["intersections"] = intersections;
  return j.dump(2);
}

Code south_code_in_north_frame(const Bipyramitoid& b) {
  Code south_raw = code_of(b.south());
  Code out;
  out.n = b.n();
  for (auto [a, c] : south_raw.arcs)
    out.arcs.push_back(
        norm_pair(b.north_edge_of_south(a), b.north_edge_of_south(c)));
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

HeegaardData heegaard_data(const Bipyramitoid& b) {
  if (!b.north().is_simple() || !b.south().is_simple())
    throw NotSimple("Heegaard data needs simple halves");
  const int n = b.n();
  DomeCover dc = build_dome_cover(b.north());

  Code north_code = code_of(b.north());
  Code south_code = south_code_in_north_frame(b);

  HeegaardData out;
  out.genus = (2 - dc.surface.euler_characteristic()) / 2;
  out.north_meridians = lift_arcs(dc, north_code);
  out.south_meridians = lift_arcs(dc, south_code);

  std::map<std::pair<std::pair<int, int>, uint32_t>, int> nrow, scol;
  for (size_t i = 0; i < out.north_meridians.size(); ++i)
    nrow[{out.north_meridians[i].arc, out.north_meridians[i].rep_mask}] =
        static_cast<int>(i);
  for (size_t i = 0; i < out.south_meridians.size(); ++i)
    scol[{out.south_meridians[i].arc, out.south_meridians[i].rep_mask}] =
        static_cast<int>(i);

  ChordLayout layout(n, north_code.arcs, south_code.arcs);
  out.intersections.assign(out.north_meridians.size(),
                           std::vector<int>(out.south_meridians.size(), 0));
  const uint32_t full = (1u << n) - 1;
  for (uint32_t g = 0;; ++g) {
    for (size_t p = 0; p < north_code.arcs.size(); ++p) {
      uint32_t np = (1u << north_code.arcs[p].first) |
                    (1u << north_code.arcs[p].second);
      int row = nrow.at({north_code.arcs[p], g & ~np});
      for (size_t q = 0; q < south_code.arcs.size(); ++q) {
        if (!layout.crosses(static_cast<int>(p), static_cast<int>(q))) continue;
        uint32_t sq = (1u << south_code.arcs[q].first) |
                      (1u << south_code.arcs[q].second);
        int col = scol.at({south_code.arcs[q], g & ~sq});
        ++out.intersections[row][col];
      }
    }
    if (g == full) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homology two ways

namespace {

struct SurfaceTransport {
  // south dome cell id -> (north dome cell id, sign), per dimension 0..2.
  std::vector<std::map<long long, std::pair<long long, int>>> map;
};

SurfaceTransport make_transport(const Bipyramitoid& b, const DomeCover& ndc,
                                const DomeCover& sdc) {
  const int n = b.n();
  const Pyramitoid& N = b.north();
  const Pyramitoid& S = b.south();

  // Vertex and edge identifications by basis position: v_i == w_{sigma(i)+1}.
  std::map<int, int> vmap_ns;  // north vertex id -> south vertex id
  for (int i = 0; i < n; ++i)
    vmap_ns[N.basis_cycle()[i]] =
        S.basis_cycle()[(b.south_edge(i) + 1) % n];

  // Face sign: the mapped north basis cycle against the stored south cycle.
  int eps_face = 0;
  {
    std::vector<int> mapped;
    for (int v : N.basis_cycle()) mapped.push_back(vmap_ns.at(v));
    const auto& sc = S.basis_cycle();
    for (int r = 0; r < n && eps_face == 0; ++r) {
      bool fwd = true, bwd = true;
      for (int t = 0; t < n; ++t) {
        if (mapped[t] != sc[(r + t) % n]) fwd = false;
        if (mapped[t] != sc[(r - t % n + n) % n]) bwd = false;
      }
      if (fwd) eps_face = +1;
      if (bwd) eps_face = -1;
    }
    if (eps_face == 0)
      throw ChainComplexInvalid("basis identification is not a cycle map");
  }

  std::vector<int> eps_edge(n, 0);  // by north basis position
  for (int i = 0; i < n; ++i) {
    const Edge& ne = N.polyhedron().edges()[N.basis_edge(i)];
    const Edge& se = S.polyhedron().edges()[S.basis_edge(b.south_edge(i))];
    eps_edge[i] = (vmap_ns.at(ne.tail) == se.tail) ? +1 : -1;
  }

  auto pi_inv = [&](uint32_t h) {
    uint32_t g = 0;
    for (int i = 0; i < n; ++i)
      if ((h >> b.south_edge(i)) & 1u) g |= 1u << i;
    return g;
  };

  // South basis positions.
  std::map<int, int> s_vertex_pos, s_edge_pos;
  for (int j = 0; j < n; ++j) {
    s_vertex_pos[S.basis_cycle()[j]] = j;
    s_edge_pos[S.basis_edge(j)] = j;
  }

  SurfaceTransport tr;
  tr.map.resize(3);
  for (int d = 0; d <= 2; ++d) {
    for (long long sid = 0; sid < sdc.surface.cells_in_dim(d); ++sid) {
      auto [sbase, h] = sdc.surface.cell_info(d, sid);
      int base_id = sdc.surface.base().cells[d][sbase].base_id;
      int nbase_id = -1, sign = +1;
      if (d == 0) {
        int j = s_vertex_pos.at(base_id);
        int i = b.north_edge_of_south((j - 1 + n) % n);
        nbase_id = N.basis_cycle()[i];
      } else if (d == 1) {
        int j = s_edge_pos.at(base_id);
        int i = b.north_edge_of_south(j);
        nbase_id = N.basis_edge(i);
        sign = eps_edge[i];
      } else {
        nbase_id = N.basis();
        sign = eps_face;
      }
      int nbase = ndc.surface.base_cell_index(d, nbase_id);
      long long nsurf = ndc.surface.cell_id(d, nbase, pi_inv(h));
      tr.map[d][sdc.surf_to_dome[d][sid]] = {ndc.surf_to_dome[d][nsurf], sign};
    }
  }
  return tr;
}

}  // namespace

ChainComplex doubled_complex(const Bipyramitoid& b) {
  DomeCover ndc = build_dome_cover(b.north());
  DomeCover sdc = build_dome_cover(b.south());
  SurfaceTransport tr = make_transport(b, ndc, sdc);

  // South cells that survive (not on the surface) get fresh indices.
  const int D = 3;
  std::vector<std::vector<long long>> s_new(D + 1);
  std::vector<long long> counts(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    long long nn = ndc.dome.cells_in_dim(d);
    s_new[d].assign(sdc.dome.cells_in_dim(d), -1);
    long long next = nn;
    for (long long c = 0; c < sdc.dome.cells_in_dim(d); ++c) {
      if (d <= 2 && tr.map[d].count(c)) continue;
      s_new[d][c] = next++;
    }
    counts[d] = next;
  }

  // Consistency: the identification must be a chain map.
  for (int d = 1; d <= 2; ++d) {
    const SparseIntMatrix& SB = sdc.dome.boundary(d);
    const SparseIntMatrix& NB = ndc.dome.boundary(d);
    std::map<long long, std::map<long long, Int>> ncols;
    for (const auto& t : NB.triplets()) ncols[t.col][t.row] = t.value;
    std::map<long long, std::map<long long, Int>> scols;
    for (const auto& t : SB.triplets()) scols[t.col][t.row] = t.value;
    for (const auto& [sc, pr] : tr.map[d]) {
      auto [ncell, sgn] = pr;
      std::map<long long, Int> mapped;
      for (const auto& [r, v] : scols[sc]) {
        auto [nr, rs] = tr.map[d - 1].at(r);
        mapped[nr] += v * rs * sgn;
      }
      if (mapped != ncols[ncell])
        throw ChainComplexInvalid("surface identification is not a chain map");
    }
  }

  ChainComplex out;
  out.num_cells = counts;
  for (int d = 1; d <= D; ++d) {
    SparseIntMatrix B(static_cast<int>(counts[d - 1]),
                      static_cast<int>(counts[d]));
    for (const auto& t : ndc.dome.boundary(d).triplets())
      B.add(t.row, t.col, t.value);
    for (const auto& t : sdc.dome.boundary(d).triplets()) {
      // Shared columns keep the north copy of their boundary.
      if (d <= 2 && tr.map[d].count(t.col)) continue;
      long long col = s_new[d][t.col];
      long long row;
      Int v = t.value;
      auto it = tr.map[d - 1].find(t.row);
      if (it != tr.map[d - 1].end()) {
        row = it->second.first;
        v *= it->second.second;
      } else {
        row = s_new[d - 1][t.row];
      }
      B.add(static_cast<int>(row), static_cast<int>(col), v);
    }
    B.compress();
    out.boundary.push_back(std::move(B));
  }
  return out;
}

TwoWayHomology z_homology_two_ways(const Bipyramitoid& b) {
  TwoWayHomology out;
  std::set<int> all;
  for (int f = 0; f < b.glued().num_faces(); ++f) all.insert(f);
  out.direct = homology(small_cover_complex(b.glued(), all));
  out.doubled = homology(doubled_complex(b));
  out.agree = out.direct == out.doubled;
  return out;
}

// ---------------------------------------------------------------------------
// Trapezohedra

CombinatorialPolyhedron trapezohedron_polyhedron(int n) {
  if (n < 3) throw std::invalid_argument("trapezohedron: need n >= 3");
  const int N = 0, S = 1;
  auto u = [](int i) { return 2 + i; };
  auto w = [n](int i) { return 2 + n + i; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < n; ++i)
    faces.push_back({N, u(i), w(i), u((i + 1) % n)});
  for (int i = 0; i < n; ++i)
    faces.push_back({S, w((i + 1) % n), u((i + 1) % n), w(i)});
  return CombinatorialPolyhedron(std::move(faces));
}

Bipyramitoid trapezohedron(int n) {
  CombinatorialPolyhedron poly = trapezohedron_polyhedron(n);
  auto u = [](int i) { return 2 + i; };
  auto w = [n](int i) { return 2 + n + i; };
  std::vector<std::pair<int, int>> equator;
  for (int i = 0; i < n; ++i) {
    equator.push_back({u(i), w(i)});
    equator.push_back({w(i), u((i + 1) % n)});
  }
  return split_bipyramitoid(poly, equator);
}

std::vector<Code> trapezohedron_smoothing_codes(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  std::vector<Code> out;
  for (const auto& t : enumerate_triangulations(n)) {
    Code c;
    c.n = 2 * n;
    for (int j = 0; j < n; ++j)
      c.arcs.push_back(norm_pair(2 * j + 1, (2 * j + 3) % (2 * n)));
    for (auto [a, b] : t.diagonals)
      c.arcs.push_back(norm_pair(2 * a + 1, 2 * b + 1));
    std::sort(c.arcs.begin(), c.arcs.end());
    out.push_back(std::move(c));
  }
  return out;
}

Bipyramitoid smooth_trapezohedron(int n, const Code& north_code,
                                  const Code& south_code) {
  for (const Code* c : {&north_code, &south_code}) {
    if (c->n != 2 * n || !c->is_valid())
      throw CodeAlternationViolated("need valid codes on a 2n-gon");
    std::vector<bool> touched(2 * n, false);
    for (auto [a, b] : c->arcs) touched[a] = touched[b] = true;
    for (int i = 0; i < 2 * n; ++i)
      if (touched[i] != (i % 2 == 1))
        throw CodeAlternationViolated(
            "triangular faces must sit on the even equatorial edges");
  }
  Pyramitoid north =
      pyramitoid_from_triangulation(Triangulation{2 * n, north_code.arcs});
  Pyramitoid south =
      pyramitoid_from_triangulation(Triangulation{2 * n, south_code.arcs});
  return glue_bipyramitoid(north, south, Matching{1, false});
}

CombinatorialPolyhedron gyrobipentaprism() {
  auto codes = trapezohedron_smoothing_codes(4);
  return smooth_trapezohedron(4, codes.front(), codes.front()).glued();
}

}  // namespace covers
