#include "covers/homology.hpp"

#include <stdexcept>

#include "covers/errors.hpp"

namespace covers {

ChainComplex chain_complex_of(const SmallCoverComplex& cx) {
  ChainComplex out;
  for (int d = 0; d <= cx.dim(); ++d) out.num_cells.push_back(cx.cells_in_dim(d));
  for (int d = 1; d <= cx.dim(); ++d) out.boundary.push_back(cx.boundary(d));
  return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& cx) {
  const int D = cx.dim();
  for (int d = 2; d <= D; ++d)
    if (!cx.boundary[d - 2].multiply(cx.boundary[d - 1]).is_zero())
      throw ChainComplexInvalid("boundary of boundary is nonzero in degree " +
                                std::to_string(d));
  // rank and invariant factors of each boundary map
  std::vector<long long> rank(D + 2, 0);
  std::vector<std::vector<Int>> tors(D + 2);
  for (int d = 1; d <= D; ++d) {
    SmithResult s = smith_normal_form(cx.boundary[d - 1]);
    rank[d] = s.rank;
    tors[d] = s.nontrivial_factors();
  }
  std::vector<HomologyGroup> h(D + 1);
  for (int k = 0; k <= D; ++k) {
    h[k].free_rank = cx.num_cells[k] - rank[k] - rank[k + 1];
    h[k].torsion = tors[k + 1];
  }
  return h;
}

std::vector<HomologyGroup> homology(const SmallCoverComplex& cx) {
  return homology(chain_complex_of(cx));
}

std::vector<long long> betti_mod2(const ChainComplex& cx) {
  const int D = cx.dim();
  std::vector<long long> rank(D + 2, 0);
  for (int d = 1; d <= D; ++d) rank[d] = rank_mod2(cx.boundary[d - 1]);
  std::vector<long long> b(D + 1);
  for (int k = 0; k <= D; ++k) b[k] = cx.num_cells[k] - rank[k] - rank[k + 1];
  return b;
}

std::vector<long long> betti_mod2(const SmallCoverComplex& cx) {
  return betti_mod2(chain_complex_of(cx));
}

std::vector<long long> betti_numbers(const std::vector<HomologyGroup>& h) {
  std::vector<long long> b;
  b.reserve(h.size());
  for (const auto& g : h) b.push_back(g.free_rank);
  return b;
}

long long b_n_formula(int n) {
  if (n == 3) return 0;
  if (n < 3) throw std::invalid_argument("b_n_formula: need n >= 3");
  return (static_cast<long long>(n) - 4) * (1ll << (n - 3)) + 1;
}

bool b_n_recurrence_check(int limit) {
  long long prev = 0;  // b_3
  for (int n = 4; n <= limit; ++n) {
    long long rec = 2 * prev + (1ll << (n - 3)) - 1;
    if (rec != b_n_formula(n)) return false;
    prev = rec;
  }
  return true;
}

long long surface_genus_formula(int n) {
  if (n < 3) throw std::invalid_argument("surface_genus_formula: need n >= 3");
  long long chi = static_cast<long long>(n) * (1ll << (n - 2)) -
                  static_cast<long long>(n) * (1ll << (n - 1)) + (1ll << n);
  return (2 - chi) / 2;
}

}  // namespace covers
