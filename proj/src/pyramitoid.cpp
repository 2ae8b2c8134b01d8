#include "covers/pyramitoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "covers/errors.hpp"

namespace covers {

Label Label::rotated(int r) const {
  const int k = n();
  Label out;
  out.entries.resize(k);
  for (int i = 0; i < k; ++i) out.entries[i] = entries[(i + r) % k];
  return out;
}

Label Label::reversed() const {
  Label out = *this;
  std::reverse(out.entries.begin(), out.entries.end());
  return out;
}

Label Label::canonical() const {
  Label best = *this;
  for (int r = 1; r < n(); ++r) {
    Label cand = rotated(r);
    if (cand.entries < best.entries) best = cand;
  }
  return best;
}

bool Label::cyclically_equal(const Label& other) const {
  if (n() != other.n()) return false;
  return canonical().entries == other.canonical().entries;
}

bool validate_label(const Label& label, int n) {
  if (label.n() != n || n < 3) return false;
  int zeros = 0, sum = 0;
  for (int i = 0; i < n; ++i) {
    int b = label.entries[i];
    if (b < 0 || b > n - 3) return false;
    if (b == 0) ++zeros;
    sum += b;
    if (b == 0 && label.entries[(i + 1) % n] == 0 && n != 3) return false;
  }
  if (zeros < 2) return false;
  return sum == 2 * (n - 3);
}

std::vector<int> find_bases(const CombinatorialPolyhedron& poly) {
  std::vector<int> out;
  for (int f = 0; f < poly.num_faces(); ++f) {
    bool ok = true;
    for (int g = 0; g < poly.num_faces() && ok; ++g) {
      if (g == f) continue;
      bool shares = false;
      for (int e : poly.edges_of_face(f)) {
        auto ef = poly.faces_of_edge(e);
        if (ef[0] == g || ef[1] == g) {
          shares = true;
          break;
        }
      }
      ok = shares;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

Pyramitoid::Pyramitoid(CombinatorialPolyhedron poly, int basis)
    : poly_(std::move(poly)), basis_(basis) {
  if (basis_ < 0 || basis_ >= poly_.num_faces())
    throw NotABasis("face index out of range");
  basis_cycle_ = poly_.faces()[basis_];
  const int n = static_cast<int>(basis_cycle_.size());

  basis_edges_.resize(n);
  lateral_faces_.resize(n);
  std::set<int> basis_edge_set;
  for (int i = 0; i < n; ++i) {
    int e = poly_.edge_index(basis_cycle_[i], basis_cycle_[(i + 1) % n]);
    basis_edges_[i] = e;
    basis_edge_set.insert(e);
    auto ef = poly_.faces_of_edge(e);
    lateral_faces_[i] = (ef[0] == basis_) ? ef[1] : ef[0];
  }
  // A basis must meet every other face along an edge.
  std::set<int> met(lateral_faces_.begin(), lateral_faces_.end());
  if (static_cast<int>(met.size()) != poly_.num_faces() - 1 || met.count(basis_))
    throw NotABasis("face " + std::to_string(basis_) +
                    " does not share an edge with every other face");

  std::set<int> on_basis(basis_cycle_.begin(), basis_cycle_.end());
  for (int e = 0; e < poly_.num_edges(); ++e) {
    if (basis_edge_set.count(e)) continue;
    essential_edges_.push_back(e);
    const Edge& ed = poly_.edges()[e];
    bool tail_in = on_basis.count(ed.tail) > 0;
    bool head_in = on_basis.count(ed.head) > 0;
    if (tail_in || head_in)
      leaf_edges_.push_back(e);
    else
      core_edges_.push_back(e);
  }
  for (int v : poly_.vertex_ids())
    if (!on_basis.count(v)) interior_vertices_.push_back(v);
}

Label Pyramitoid::label() const {
  if (!is_simple()) throw NotSimple("label is defined for simple pyramitoids");
  Label l;
  l.entries.resize(n());
  for (int i = 0; i < n(); ++i)
    l.entries[i] =
        static_cast<int>(poly_.faces()[lateral_faces_[i]].size()) - 3;
  return l;
}

namespace {

int max_vertex_id(const CombinatorialPolyhedron& poly) {
  int m = -1;
  for (int v : poly.vertex_ids()) m = std::max(m, v);
  return m;
}

// Replace vertex `v` in `cycle` by the run `repl` (in order).
void splice_vertex(std::vector<int>& cycle, int v, const std::vector<int>& repl) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  if (it == cycle.end()) return;
  size_t pos = static_cast<size_t>(it - cycle.begin());
  cycle.erase(it);
  cycle.insert(cycle.begin() + pos, repl.begin(), repl.end());
}

}  // namespace

Pyramitoid truncate_vertex(const Pyramitoid& pyr, int i) {
  const int n = pyr.n();
  if (i < 0 || i >= n) throw InvalidVertex("basis vertex position out of range");
  const CombinatorialPolyhedron& poly = pyr.polyhedron();
  const auto& cyc = pyr.basis_cycle();
  const int v = cyc[i];
  if (poly.vertex_valence(v) != 3)
    throw InvalidVertex("vertex " + std::to_string(v) + " is not trivalent");
  const int base_id = max_vertex_id(poly);
  const int a = base_id + 1;  // on the basis edge into v
  const int b = base_id + 2;  // on the basis edge out of v
  const int c = base_id + 3;  // on the leaf at v

  const int faceL = pyr.lateral_face((i + n - 1) % n);
  const int faceR = pyr.lateral_face(i);

  std::vector<std::vector<int>> faces = poly.faces();
  splice_vertex(faces[pyr.basis()], v, {a, b});
  splice_vertex(faces[faceL], v, {c, a});
  splice_vertex(faces[faceR], v, {b, c});
  faces.push_back({b, a, c});

  return Pyramitoid(CombinatorialPolyhedron(std::move(faces)), pyr.basis());
}

Label truncation_label_rewrite(const Label& l, int i) {
  const int n = l.n();
  Label out;
  out.entries.push_back(l.entries[i % n] + 1);
  for (int k = 1; k <= n - 2; ++k)
    out.entries.push_back(l.entries[(i + k) % n]);
  out.entries.push_back(l.entries[(i + n - 1) % n] + 1);
  out.entries.push_back(0);
  return out;
}

Label contraction_label_rewrite(const Label& l, int i) {
  const int n = l.n();
  Label out;
  out.entries.push_back(l.entries[(i + 1) % n] - 1);
  for (int k = 2; k <= n - 2; ++k)
    out.entries.push_back(l.entries[(i + k) % n]);
  out.entries.push_back(l.entries[(i + n - 1) % n] - 1);
  return out;
}

Pyramitoid contract_triangle(const Pyramitoid& pyr, int i) {
  const int n = pyr.n();
  if (n < 4)
    throw NotATriangle("contraction needs a pyramitoid with n >= 4");
  if (i < 0 || i >= n) throw NotATriangle("face position out of range");
  const CombinatorialPolyhedron& poly = pyr.polyhedron();
  const int tface = pyr.lateral_face(i);
  if (poly.faces()[tface].size() != 3)
    throw NotATriangle("lateral face " + std::to_string(i) + " is not a triangle");
  const int faceL = pyr.lateral_face((i + n - 1) % n);
  const int faceR = pyr.lateral_face((i + 1) % n);
  if (poly.faces()[faceL].size() <= 3 || poly.faces()[faceR].size() <= 3)
    throw NeighborUnderflow("a cyclic neighbor of the triangle is itself a triangle");

  const auto& cyc = pyr.basis_cycle();
  const int x = cyc[i];               // tail of basis edge i
  const int y = cyc[(i + 1) % n];     // head of basis edge i
  int z = -1;                         // apex of the triangle
  for (int w : poly.faces()[tface])
    if (w != x && w != y) z = w;

  const int w_id = max_vertex_id(poly) + 1;
  std::vector<std::vector<int>> faces;
  faces.reserve(poly.num_faces() - 1);
  int new_basis = -1;
  for (int f = 0; f < poly.num_faces(); ++f) {
    if (f == tface) continue;
    std::vector<int> c;
    for (int v : poly.faces()[f]) {
      int vv = (v == x || v == y || v == z) ? w_id : v;
      if (c.empty() || c.back() != vv) c.push_back(vv);
    }
    while (c.size() > 1 && c.front() == c.back()) c.pop_back();
    if (f == pyr.basis()) new_basis = static_cast<int>(faces.size());
    faces.push_back(std::move(c));
  }
  return Pyramitoid(CombinatorialPolyhedron(std::move(faces)), new_basis);
}

Pyramitoid n_book(int n) {
  if (n < 3) throw std::invalid_argument("n_book: need n >= 3");
  if (n == 3)
    return Pyramitoid(CombinatorialPolyhedron::tetrahedron(), 0);
  // Basis v_0..v_{n-1} (ids 0..n-1), interior chain w_0..w_{n-3} (ids n..2n-4).
  auto v = [](int i) { return i; };
  auto w = [n](int j) { return n + j; };
  std::vector<std::vector<int>> faces;
  std::vector<int> basis(n);
  std::iota(basis.begin(), basis.end(), 0);
  faces.push_back(basis);
  faces.push_back({v(1), v(0), w(0)});  // triangle on basis edge (v0, v1)
  for (int i = 1; i <= n - 3; ++i)
    faces.push_back({v(i + 1), v(i), w(i - 1), w(i)});
  faces.push_back({v(n - 1), v(n - 2), w(n - 3)});  // triangle on (v_{n-2}, v_{n-1})
  std::vector<int> big{v(0), v(n - 1)};
  for (int j = n - 3; j >= 0; --j) big.push_back(w(j));
  faces.push_back(big);  // the n-gon lateral face on basis edge (v_{n-1}, v0)
  return Pyramitoid(CombinatorialPolyhedron(std::move(faces)), 0);
}

Pyramitoid n_pyramid(int n) {
  return Pyramitoid(CombinatorialPolyhedron::pyramid(n), 0);
}

}  // namespace covers
