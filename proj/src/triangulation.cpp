#include "covers/triangulation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "covers/errors.hpp"

namespace covers {

namespace {

std::pair<int, int> norm_pair(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

bool adjacent_mod(int a, int b, int n) {
  int d = (a - b + n) % n;
  return d == 1 || d == n - 1 || d == 0;
}

// Strict interleaving of {a,b} and {c,d} on the n-cycle.
bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto inside = [&](int v) { return x.first < v && v < x.second; };
  return inside(y.first) != inside(y.second) && y.first != x.first &&
         y.first != x.second && y.second != x.first && y.second != x.second;
}

}  // namespace

Triangulation Triangulation::rotated(int r) const {
  Triangulation out;
  out.n = n;
  for (auto [a, b] : diagonals)
    out.diagonals.push_back(norm_pair((a + r) % n, (b + r) % n));
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

Triangulation Triangulation::reflected() const {
  Triangulation out;
  out.n = n;
  for (auto [a, b] : diagonals)
    out.diagonals.push_back(norm_pair((n - a) % n, (n - b) % n));
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

Triangulation Triangulation::canonical(bool dihedral) const {
  Triangulation best = rotated(0);
  for (int r = 1; r < n; ++r) {
    Triangulation cand = rotated(r);
    if (cand.diagonals < best.diagonals) best = cand;
  }
  if (dihedral) {
    Triangulation refl = reflected();
    for (int r = 0; r < n; ++r) {
      Triangulation cand = refl.rotated(r);
      if (cand.diagonals < best.diagonals) best = cand;
    }
  }
  return best;
}

int Triangulation::orbit_size(bool dihedral) const {
  std::set<std::vector<std::pair<int, int>>> orbit;
  for (int r = 0; r < n; ++r) orbit.insert(rotated(r).diagonals);
  if (dihedral) {
    Triangulation refl = reflected();
    for (int r = 0; r < n; ++r) orbit.insert(refl.rotated(r).diagonals);
  }
  return static_cast<int>(orbit.size());
}

bool Triangulation::is_valid() const {
  if (static_cast<int>(diagonals.size()) != n - 3) return false;
  for (size_t i = 0; i < diagonals.size(); ++i) {
    auto [a, b] = diagonals[i];
    if (a < 0 || b >= n || adjacent_mod(a, b, n)) return false;
    for (size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) return false;
      if (chords_cross(diagonals[i], diagonals[j])) return false;
    }
  }
  return true;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  std::set<std::pair<int, int>> E(diagonals.begin(), diagonals.end());
  auto has_edge = [&](int a, int b) {
    if (adjacent_mod(a, b, n)) return a != b;
    return E.count(norm_pair(a, b)) > 0;
  };
  std::vector<std::array<int, 3>> out;
  // Split recursively on polygon intervals; the triangle over the chord
  // (lo, hi) has its apex at the unique m with edges (lo,m) and (m,hi).
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    for (int m = lo + 1; m < hi; ++m) {
      if (has_edge(lo, m) && has_edge(m, hi)) {
        out.push_back({lo, m, hi});
        stack.push_back({lo, m});
        stack.push_back({m, hi});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Code::is_valid() const {
  Triangulation t{n, arcs};
  return t.is_valid();
}

long long catalan_count(int n) {
  if (n < 3) throw std::invalid_argument("catalan_count: need n >= 3");
  const int m = n - 2;  // C_m = binom(2m, m) / (m+1)
  long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

void gen_triangulations(int lo, int hi,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
  if (hi - lo < 2) {
    out.push_back({});
    return;
  }
  for (int m = lo + 1; m < hi; ++m) {
    std::vector<std::vector<std::pair<int, int>>> left, right;
    gen_triangulations(lo, m, left);
    gen_triangulations(m, hi, right);
    for (const auto& L : left)
      for (const auto& R : right) {
        std::vector<std::pair<int, int>> d = L;
        d.insert(d.end(), R.begin(), R.end());
        if (m > lo + 1) d.push_back({lo, m});
        if (hi > m + 1) d.push_back({m, hi});
        std::sort(d.begin(), d.end());
        out.push_back(std::move(d));
      }
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_triangulations: need n >= 3");
  if (n > kEnumerationCap)
    throw EnumerationCapExceeded("enumeration capped at n = " +
                                 std::to_string(kEnumerationCap));
  std::vector<std::vector<std::pair<int, int>>> raw;
  gen_triangulations(0, n - 1, raw);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& d : raw) out.push_back(Triangulation{n, std::move(d)});
  return out;
}

std::vector<Triangulation> rotation_class_representatives(int n, bool dihedral) {
  std::map<std::vector<std::pair<int, int>>, Triangulation> reps;
  for (const auto& t : enumerate_triangulations(n)) {
    Triangulation c = t.canonical(dihedral);
    reps.emplace(c.diagonals, c);
  }
  std::vector<Triangulation> out;
  out.reserve(reps.size());
  for (auto& [k, v] : reps) out.push_back(v);
  return out;
}

long long count_rotation_classes(int n, bool dihedral) {
  return static_cast<long long>(rotation_class_representatives(n, dihedral).size());
}

long long count_rotation_classes_burnside(int n) {
  auto all = enumerate_triangulations(n);
  long long fixed_total = 0;
  for (int r = 0; r < n; ++r)
    for (const auto& t : all)
      if (t.rotated(r).diagonals == t.diagonals) ++fixed_total;
  return fixed_total / n;
}

std::vector<int> orbit_profile(int n, bool dihedral) {
  std::vector<int> sizes;
  for (const auto& rep : rotation_class_representatives(n, dihedral))
    sizes.push_back(rep.orbit_size(dihedral));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Pyramitoid pyramitoid_from_triangulation(const Triangulation& t) {
  const int n = t.n;
  auto tris = t.triangles();
  std::set<std::pair<int, int>> diag(t.diagonals.begin(), t.diagonals.end());

  // Interior vertex ids n + triangle index; basis ids 0..n-1.
  std::map<std::array<int, 3>, int> tri_id;
  for (size_t k = 0; k < tris.size(); ++k) tri_id[tris[k]] = n + static_cast<int>(k);

  // Neighbors of dual-polygon vertex i, sorted by cyclic distance from i.
  auto fan = [&](int i) {
    std::vector<int> nb;
    for (int d = 1; d < n; ++d) {
      int j = (i + d) % n;
      if (d == 1 || d == n - 1 || diag.count(norm_pair(i, j))) nb.push_back(j);
    }
    std::vector<int> cells;  // triangle ids at vertex i, fan order
    for (size_t k = 0; k + 1 < nb.size(); ++k) {
      std::array<int, 3> key{i, nb[k], nb[k + 1]};
      std::sort(key.begin(), key.end());
      cells.push_back(tri_id.at(key));
    }
    return cells;
  };

  std::vector<std::vector<int>> faces;
  std::vector<int> basis(n);
  std::iota(basis.begin(), basis.end(), 0);
  faces.push_back(basis);
  for (int i = 0; i < n; ++i) {
    std::vector<int> cyc{(i + 1) % n, i};
    auto cells = fan(i);
    // Fan runs from the {i,i+1} side down to the {i-1,i} side when reversed.
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) cyc.push_back(*it);
    faces.push_back(std::move(cyc));
  }
  return Pyramitoid(CombinatorialPolyhedron(std::move(faces)), 0);
}

Triangulation triangulation_of(const Pyramitoid& pyr) {
  if (!pyr.is_simple()) throw NotSimple("triangulation of a non-simple pyramitoid");
  const auto& poly = pyr.polyhedron();
  std::map<int, int> face_pos;  // polyhedron face -> basis edge index
  for (int i = 0; i < pyr.n(); ++i) face_pos[pyr.lateral_face(i)] = i;
  Triangulation t;
  t.n = pyr.n();
  for (int e : pyr.core_tree()) {
    auto f = poly.faces_of_edge(e);
    t.diagonals.push_back(norm_pair(face_pos.at(f[0]), face_pos.at(f[1])));
  }
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

Code code_of(const Pyramitoid& pyr) {
  Triangulation t = triangulation_of(pyr);
  return Code{t.n, t.diagonals};
}

std::pair<std::vector<CellType>, CellTypeStats> code_cells(const Pyramitoid& pyr) {
  Triangulation t = triangulation_of(pyr);
  std::set<std::pair<int, int>> diag(t.diagonals.begin(), t.diagonals.end());
  std::vector<CellType> cells;
  CellTypeStats stats;
  for (const auto& tri : t.triangles()) {
    int sides = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (diag.count(norm_pair(tri[a], tri[b]))) ++sides;
    CellType ty = static_cast<CellType>(sides);
    cells.push_back(ty);
    if (sides == 1) ++stats.m1;
    if (sides == 2) ++stats.m2;
    if (sides == 3) ++stats.m3;
  }
  return {cells, stats};
}

BallCounts ball_decomposition_counts(const Pyramitoid& pyr) {
  const int n = pyr.n();
  auto [cells, stats] = code_cells(pyr);
  BallCounts out;
  out.balls_full = static_cast<long long>(n - 2) << (n - 3);
  if (n > 4) {
    out.balls_reduced = static_cast<long long>(n - 2 - stats.m1) << (n - 3);
    out.meridians_reduced = static_cast<long long>(2 * n - 6 - stats.m1) << (n - 3);
  } else {
    out.balls_reduced = out.meridians_reduced = -1;
  }
  return out;
}

std::vector<Pyramitoid> smoothing_options(int n) {
  if (n < 4) throw std::invalid_argument("smoothing_options: need n >= 4");
  std::vector<Pyramitoid> out;
  for (const auto& rep : rotation_class_representatives(n))
    out.push_back(pyramitoid_from_triangulation(rep));
  return out;
}

bool label_realizable(const Label& label) {
  const int n = label.n();
  if (!validate_label(label, n)) return false;
  Label target = label.canonical();
  for (const auto& rep : rotation_class_representatives(n)) {
    // The label of a class is the diagonal-degree sequence of any of its
    // triangulations, up to rotation.
    std::vector<int> deg(n, 0);
    for (auto [a, b] : rep.diagonals) {
      ++deg[a];
      ++deg[b];
    }
    Label l{deg};
    if (l.cyclically_equal(target)) return true;
  }
  return false;
}

std::string enumeration_csv(int n_max) {
  std::ostringstream os;
  os << "n,catalan,classes,orbit_profile\n";
  for (int n = 4; n <= n_max; ++n) {
    os << n << ',' << catalan_count(n) << ',' << count_rotation_classes(n) << ',';
    auto prof = orbit_profile(n);
    for (size_t i = 0; i < prof.size(); ++i) os << (i ? " " : "") << prof[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace covers
