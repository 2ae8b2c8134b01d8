#pragma once

#include <optional>
#include <vector>

#include "covers/integer_matrix.hpp"

namespace covers {

/// Invariant-factor decomposition U * M * V = D with U, V unimodular and
/// D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithResult {
  std::vector<Int> factors;  // nonzero diagonal entries, divisibility chain
  long long rank = 0;
  std::optional<SparseIntMatrix> U;  // rows x rows
  std::optional<SparseIntMatrix> V;  // cols x cols
  /// Factors > 1 (the torsion part).
  std::vector<Int> nontrivial_factors() const;
};

/// Exact Smith normal form.  Pivoting prefers unit entries with minimal
/// fill; non-unit leftovers are finished with gcd reductions and the
/// diagonal divisibility fix-up.  U/V are tracked only when requested.
SmithResult smith_normal_form(const SparseIntMatrix& M, bool want_U = false,
                              bool want_V = false);

/// Exact check U * M * V == diag(factors) (requires U and V present).
bool verify_smith_certificate(const SparseIntMatrix& M, const SmithResult& snf);

/// Cheaper consistency checks for large instances: rank against an
/// independent GF(p) elimination for primes not dividing any factor, and
/// d_1 == gcd of all entries.
bool spot_check_smith(const SparseIntMatrix& M, const SmithResult& snf);

/// Does z lie in the column span of M over the integers?  Uses the SNF of M
/// (must carry U).
bool in_image(const SmithResult& snf_of_M, const std::vector<Int>& z);

}  // namespace covers
