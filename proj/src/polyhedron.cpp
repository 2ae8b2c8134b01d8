#include "covers/polyhedron.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace covers {

CombinatorialPolyhedron::CombinatorialPolyhedron(
    std::vector<int> vertices, std::vector<std::vector<int>> faces)
    : vertex_ids_(std::move(vertices)), faces_(std::move(faces)) {
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  vertex_ids_.erase(std::unique(vertex_ids_.begin(), vertex_ids_.end()),
                    vertex_ids_.end());
  build_edges();
}

CombinatorialPolyhedron::CombinatorialPolyhedron(
    std::vector<std::vector<int>> faces)
    : faces_(std::move(faces)) {
  std::set<int> ids;
  for (const auto& f : faces_) ids.insert(f.begin(), f.end());
  vertex_ids_.assign(ids.begin(), ids.end());
  build_edges();
}

void CombinatorialPolyhedron::build_edges() {
  std::set<Edge> seen;
  for (const auto& f : faces_) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k];
      if (u == v) continue;
      seen.insert(Edge{std::min(u, v), std::max(u, v)});
    }
  }
  edges_.assign(seen.begin(), seen.end());
  edge_faces_.assign(edges_.size(), {-1, -1});
  for (int fi = 0; fi < num_faces(); ++fi) {
    const auto& f = faces_[fi];
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      int e = edge_index(f[i], f[(i + 1) % k]);
      if (e < 0) continue;
      if (edge_faces_[e][0] == -1)
        edge_faces_[e][0] = fi;
      else if (edge_faces_[e][1] == -1 && edge_faces_[e][0] != fi)
        edge_faces_[e][1] = fi;
    }
  }
}

int CombinatorialPolyhedron::edge_index(int u, int v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::array<int, 2> CombinatorialPolyhedron::faces_of_edge(int e) const {
  return edge_faces_.at(e);
}

int CombinatorialPolyhedron::face_edge_sign(int f, int e) const {
  const auto& cyc = faces_.at(f);
  const Edge& ed = edges_.at(e);
  const int k = static_cast<int>(cyc.size());
  for (int i = 0; i < k; ++i) {
    int u = cyc[i], v = cyc[(i + 1) % k];
    if (u == ed.tail && v == ed.head) return +1;
    if (u == ed.head && v == ed.tail) return -1;
  }
  return 0;
}

std::vector<int> CombinatorialPolyhedron::edges_of_face(int f) const {
  const auto& cyc = faces_.at(f);
  const int k = static_cast<int>(cyc.size());
  std::vector<int> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(edge_index(cyc[i], cyc[(i + 1) % k]));
  return out;
}

int CombinatorialPolyhedron::vertex_valence(int v) const {
  int c = 0;
  for (const auto& e : edges_)
    if (e.tail == v || e.head == v) ++c;
  return c;
}

std::vector<int> CombinatorialPolyhedron::faces_of_vertex(int v) const {
  std::vector<int> out;
  for (int fi = 0; fi < num_faces(); ++fi)
    if (std::find(faces_[fi].begin(), faces_[fi].end(), v) != faces_[fi].end())
      out.push_back(fi);
  return out;
}

std::vector<int> CombinatorialPolyhedron::edges_of_vertex(int v) const {
  std::vector<int> out;
  for (int ei = 0; ei < num_edges(); ++ei)
    if (edges_[ei].tail == v || edges_[ei].head == v) out.push_back(ei);
  return out;
}

int CombinatorialPolyhedron::next_around_vertex(int x, int a) const {
  // Face traversing a -> x, then the successor of x in that face.
  for (int fi = 0; fi < num_faces(); ++fi) {
    const auto& cyc = faces_[fi];
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      if (cyc[i] == a && cyc[(i + 1) % k] == x) return cyc[(i + 2) % k];
    }
  }
  return -1;
}

std::vector<std::string> CombinatorialPolyhedron::validate() const {
  std::vector<std::string> diag;
  auto report = [&diag](const std::string& s) { diag.push_back(s); };

  if (faces_.empty()) {
    report("no faces");
    return diag;
  }

  std::set<int> declared(vertex_ids_.begin(), vertex_ids_.end());
  std::set<int> used;
  for (int fi = 0; fi < num_faces(); ++fi) {
    const auto& f = faces_[fi];
    if (f.size() < 3)
      report("face " + std::to_string(fi) + " has fewer than 3 vertices");
    std::set<int> dedup(f.begin(), f.end());
    if (dedup.size() != f.size())
      report("face " + std::to_string(fi) + " is not a simple cycle");
    for (int v : f) {
      used.insert(v);
      if (!declared.count(v))
        report("face " + std::to_string(fi) + " uses undeclared vertex " +
               std::to_string(v));
    }
  }
  for (int v : declared)
    if (!used.count(v)) report("vertex " + std::to_string(v) + " lies in no face");

  // Edge/face incidence: every edge in exactly two faces, traversed in
  // opposite directions.
  for (int e = 0; e < num_edges(); ++e) {
    int count = 0, signsum = 0;
    for (int fi = 0; fi < num_faces(); ++fi) {
      const auto& cyc = faces_[fi];
      const int k = static_cast<int>(cyc.size());
      for (int i = 0; i < k; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % k];
        if (std::min(u, v) == edges_[e].tail && std::max(u, v) == edges_[e].head) {
          ++count;
          signsum += (u == edges_[e].tail) ? +1 : -1;
        }
      }
    }
    if (count != 2)
      report("face/edge mismatch: edge (" + std::to_string(edges_[e].tail) +
             "," + std::to_string(edges_[e].head) + ") lies in " +
             std::to_string(count) + " face sides");
    else if (signsum != 0)
      report("edge (" + std::to_string(edges_[e].tail) + "," +
             std::to_string(edges_[e].head) +
             ") traversed twice in the same direction");
  }

  // Connectivity of the vertex-edge graph.
  if (!vertex_ids_.empty()) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges_) {
      adj[e.tail].push_back(e.head);
      adj[e.head].push_back(e.tail);
    }
    std::set<int> reach;
    std::vector<int> stack{vertex_ids_.front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!reach.insert(v).second) continue;
      for (int w : adj[v]) stack.push_back(w);
    }
    if (reach.size() != vertex_ids_.size()) report("incidence structure is disconnected");
  }

  if (euler_characteristic() != 2)
    report("Euler characteristic V-E+F = " +
           std::to_string(euler_characteristic()) + ", expected 2");

  return diag;
}

bool CombinatorialPolyhedron::is_simple() const {
  for (int v : vertex_ids_)
    if (vertex_valence(v) != 3) return false;
  return true;
}

CombinatorialPolyhedron CombinatorialPolyhedron::reflected() const {
  std::vector<std::vector<int>> rf = faces_;
  for (auto& f : rf) std::reverse(f.begin(), f.end());
  return CombinatorialPolyhedron(vertex_ids_, std::move(rf));
}

std::vector<int> CombinatorialPolyhedron::canonical_code() const {
  // BFS relabeling from every directed edge; rotation order around each
  // vertex comes from the face cycles.  The minimum code over all starts is
  // the canonical form of the oriented map.
  std::vector<int> best;
  for (const auto& e : edges_) {
    for (int dir = 0; dir < 2; ++dir) {
      int u0 = dir ? e.head : e.tail;
      int v0 = dir ? e.tail : e.head;
      std::map<int, int> label;
      std::vector<int> order;
      auto lab = [&](int v) {
        auto it = label.find(v);
        if (it != label.end()) return it->second;
        int id = static_cast<int>(label.size());
        label[v] = id;
        order.push_back(v);
        return id;
      };
      std::map<int, int> entry;  // vertex -> neighbor the BFS reached it from
      lab(u0);
      entry[u0] = v0;
      std::vector<int> code;
      for (size_t qi = 0; qi < order.size(); ++qi) {
        int x = order[qi];
        int a0 = entry[x];
        int a = a0;
        do {
          int was = label.count(a) ? label[a] : -1;
          int l = lab(a);
          if (was < 0) entry[a] = x;
          code.push_back(l);
          a = next_around_vertex(x, a);
        } while (a != a0 && a != -1);
        code.push_back(-1);
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

bool CombinatorialPolyhedron::isomorphic_to(const CombinatorialPolyhedron& other,
                                            bool allow_reflection) const {
  if (num_vertices() != other.num_vertices() || num_edges() != other.num_edges() ||
      num_faces() != other.num_faces())
    return false;
  auto mine = canonical_code();
  if (mine == other.canonical_code()) return true;
  if (!allow_reflection) return false;
  return mine == other.reflected().canonical_code();
}

std::string CombinatorialPolyhedron::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_ids_;
  j["faces"] = faces_;
  return j.dump(2);
}

CombinatorialPolyhedron CombinatorialPolyhedron::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  std::vector<std::vector<int>> faces =
      j.at("faces").get<std::vector<std::vector<int>>>();
  return CombinatorialPolyhedron(std::move(vertices), std::move(faces));
}

CombinatorialPolyhedron CombinatorialPolyhedron::load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

CombinatorialPolyhedron CombinatorialPolyhedron::tetrahedron() {
  return CombinatorialPolyhedron(
      {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

CombinatorialPolyhedron CombinatorialPolyhedron::cube() {
  return CombinatorialPolyhedron({{0, 3, 2, 1},
                                  {4, 5, 6, 7},
                                  {0, 1, 5, 4},
                                  {1, 2, 6, 5},
                                  {2, 3, 7, 6},
                                  {3, 0, 4, 7}});
}

CombinatorialPolyhedron CombinatorialPolyhedron::triangular_prism() {
  return CombinatorialPolyhedron(
      {{0, 2, 1}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}});
}

CombinatorialPolyhedron CombinatorialPolyhedron::pyramid(int n) {
  if (n < 3) throw std::invalid_argument("pyramid: need n >= 3");
  std::vector<std::vector<int>> faces;
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  faces.push_back(base);
  for (int i = 0; i < n; ++i)
    faces.push_back({0, 1 + (i + 1) % n, 1 + i});
  return CombinatorialPolyhedron(std::move(faces));
}

}  // namespace covers
