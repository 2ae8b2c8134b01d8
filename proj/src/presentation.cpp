#include "covers/presentation.hpp"

#include <sstream>

#include "covers/errors.hpp"

namespace covers {

std::string GroupPresentation::to_text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : generators) os << ' ' << g;
  os << '\n';
  for (const auto& r : relations) os << r << '\n';
  return os.str();
}

GroupPresentation racg_presentation(const Graph& g, const std::string& prefix) {
  GroupPresentation p;
  p.tag = "racg";
  for (int v : g.vertices) p.generators.push_back(prefix + std::to_string(v));
  for (int v : g.vertices)
    p.relations.push_back(prefix + std::to_string(v) + "^2");
  for (auto [a, b] : g.edges)
    p.relations.push_back("[" + prefix + std::to_string(a) + "," + prefix +
                          std::to_string(b) + "]");
  return p;
}

GroupPresentation bipyramitoid_pi1_presentation(const Code& north,
                                                const Code& south) {
  if (north.n != south.n)
    throw BasisMismatch("codes live on polygons of different sizes");
  const int n = north.n;
  GroupPresentation p = racg_presentation(cycle_graph(n), "g");
  p.tag = "surface-kernel-quotient";
  for (const auto* code : {&north, &south})
    for (auto [a, b] : code->arcs)
      p.relations.push_back("[g" + std::to_string(a) + ",g" + std::to_string(b) +
                            "]");
  p.rho_images.resize(n);
  for (int i = 0; i < n; ++i) p.rho_images[i] = i;
  return p;
}

}  // namespace covers
