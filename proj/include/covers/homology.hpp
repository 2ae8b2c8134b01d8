#pragma once

#include <vector>

#include "covers/integer_matrix.hpp"
#include "covers/small_cover.hpp"
#include "covers/smith.hpp"

namespace covers {

/// Finitely generated abelian group: free rank plus invariant factors
/// d_1 | d_2 | ... (each > 1).
struct HomologyGroup {
  long long free_rank = 0;
  std::vector<Int> torsion;
  bool is_free() const { return torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Bare chain complex: cell counts per dimension and boundary matrices
/// boundary[d-1] : C_d -> C_{d-1} for d = 1..dim.
struct ChainComplex {
  std::vector<long long> num_cells;
  std::vector<SparseIntMatrix> boundary;
  int dim() const { return static_cast<int>(num_cells.size()) - 1; }
};

ChainComplex chain_complex_of(const SmallCoverComplex& cx);

/// Integral homology in every degree via Smith normal form.
/// Throws ChainComplexInvalid unless consecutive boundaries compose to zero.
std::vector<HomologyGroup> homology(const ChainComplex& cx);
std::vector<HomologyGroup> homology(const SmallCoverComplex& cx);

/// Ranks of the homology with Z/2 coefficients.  Equals the rational Betti
/// numbers in a degree exactly when no even torsion meets that degree, so
/// agreement certifies the absence of 2-torsion only.
std::vector<long long> betti_mod2(const ChainComplex& cx);
std::vector<long long> betti_mod2(const SmallCoverComplex& cx);

std::vector<long long> betti_numbers(const std::vector<HomologyGroup>& h);

/// (n-4) 2^(n-3) + 1 for n >= 4; b_3 = 0.
long long b_n_formula(int n);
/// Closed form against the recurrence b_n = 2 b_{n-1} + 2^(n-3) - 1.
bool b_n_recurrence_check(int limit);
/// Genus of the surface obtained by reflecting the right-angled n-gon in its
/// edges, from chi = n 2^(n-2) - n 2^(n-1) + 2^n; equals b_n for n >= 4.
long long surface_genus_formula(int n);

}  // namespace covers
