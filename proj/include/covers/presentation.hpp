#pragma once

#include <string>
#include <vector>

#include "covers/graph.hpp"
#include "covers/triangulation.hpp"

namespace covers {

/// Finite group presentation: generator symbols plus relator words in
/// `gen^2` / `[a,b]` notation, one relation per line in the text form.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::string tag;  // "racg", "surface-kernel-quotient", ...
  /// Map recorded alongside surface-kernel quotients: generator -> image
  /// basis vector index in (Z/2)^n.
  std::vector<int> rho_images;

  std::string to_text() const;
};

/// Right-angled Coxeter group of a defining graph: one involutive generator
/// per vertex, one commutator per edge.
GroupPresentation racg_presentation(const Graph& g,
                                    const std::string& prefix = "x");

/// Fundamental-group presentation attached to a Heegaard splitting given by
/// two codes on the same basis polygon: the cycle RACG on g1..gn plus one
/// commutator per arc of each code, with rho sending generator i to basis
/// vector e_i.  Emission only; no group computation.
GroupPresentation bipyramitoid_pi1_presentation(const Code& north,
                                                const Code& south);

}  // namespace covers
