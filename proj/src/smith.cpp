#include "covers/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace covers {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// g = gcd(a, b) = x*a + y*b.
void egcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  g = old_r;
  x = old_x;
  y = old_y;
}

// Sparse row-major workspace with column occupancy sets.
struct Workspace {
  int R = 0, C = 0;
  std::vector<std::map<int, Int>> row;   // row -> (col -> value)
  std::vector<std::set<int>> col_rows;   // col -> rows with a nonzero
  std::vector<bool> row_done, col_done;

  // Optional transform tracking: cur = U * M * V.
  bool track_U = false, track_V = false;
  std::vector<std::map<int, Int>> U_row;  // R x R, row-major
  std::vector<std::map<int, Int>> V_col;  // C x C, column-major

  explicit Workspace(const SparseIntMatrix& M, bool want_U, bool want_V)
      : R(M.rows()),
        C(M.cols()),
        row(M.rows()),
        col_rows(M.cols()),
        row_done(M.rows(), false),
        col_done(M.cols(), false),
        track_U(want_U),
        track_V(want_V) {
    SparseIntMatrix Mc = M;
    Mc.compress();
    for (const auto& t : Mc.triplets()) {
      row[t.row][t.col] = t.value;
      col_rows[t.col].insert(t.row);
    }
    if (track_U) {
      U_row.resize(R);
      for (int i = 0; i < R; ++i) U_row[i][i] = 1;
    }
    if (track_V) {
      V_col.resize(C);
      for (int j = 0; j < C; ++j) V_col[j][j] = 1;
    }
  }

  const Int* at(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? nullptr : &it->second;
  }

  void set_entry(int r, int c, Int v) {
    if (v == 0) {
      if (row[r].erase(c)) col_rows[c].erase(r);
    } else {
      if (!row[r].count(c)) col_rows[c].insert(r);
      row[r][c] = std::move(v);
    }
  }

  // row_i += k * row_j  (on the working matrix and U).
  void row_addmul(int i, int j, const Int& k) {
    if (k == 0) return;
    for (const auto& [c, v] : row[j]) {
      auto it = row[i].find(c);
      if (it == row[i].end()) {
        row[i][c] = k * v;
        col_rows[c].insert(i);
      } else {
        it->second += k * v;
        if (it->second == 0) {
          row[i].erase(it);
          col_rows[c].erase(i);
        }
      }
    }
    if (track_U)
      for (const auto& [c, v] : U_row[j]) {
        auto it = U_row[i].find(c);
        if (it == U_row[i].end())
          U_row[i][c] = k * v;
        else {
          it->second += k * v;
          if (it->second == 0) U_row[i].erase(it);
        }
      }
  }

  // col_i += k * col_j.
  void col_addmul(int i, int j, const Int& k) {
    if (k == 0) return;
    std::vector<std::pair<int, Int>> updates;
    for (int r : col_rows[j]) updates.push_back({r, row[r].at(j)});
    for (auto& [r, v] : updates) {
      auto it = row[r].find(i);
      if (it == row[r].end()) {
        row[r][i] = k * v;
        col_rows[i].insert(r);
      } else {
        it->second += k * v;
        if (it->second == 0) {
          row[r].erase(it);
          col_rows[i].erase(r);
        }
      }
    }
    if (track_V)
      for (const auto& [r, v] : V_col[j]) {
        auto it = V_col[i].find(r);
        if (it == V_col[i].end())
          V_col[i][r] = k * v;
        else {
          it->second += k * v;
          if (it->second == 0) V_col[i].erase(it);
        }
      }
  }

  void row_negate(int i) {
    for (auto& [c, v] : row[i]) v = -v;
    if (track_U)
      for (auto& [c, v] : U_row[i]) v = -v;
  }

  // General unimodular 2x2 on rows (i, j): (r_i, r_j) <- (a r_i + b r_j,
  // c r_i + d r_j) with ad - bc = +-1.
  void row_transform2(int i, int j, const Int& a, const Int& b, const Int& c,
                      const Int& d) {
    std::map<int, Int> ri = row[i], rj = row[j];
    auto combine = [&](const std::map<int, Int>& x, const std::map<int, Int>& y,
                       const Int& kx, const Int& ky) {
      std::map<int, Int> out;
      for (const auto& [cc, v] : x) out[cc] += kx * v;
      for (const auto& [cc, v] : y) out[cc] += ky * v;
      for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
      return out;
    };
    auto new_i = combine(ri, rj, a, b);
    auto new_j = combine(ri, rj, c, d);
    for (const auto& [cc, v] : ri) col_rows[cc].erase(i);
    for (const auto& [cc, v] : rj) col_rows[cc].erase(j);
    row[i] = std::move(new_i);
    row[j] = std::move(new_j);
    for (const auto& [cc, v] : row[i]) col_rows[cc].insert(i);
    for (const auto& [cc, v] : row[j]) col_rows[cc].insert(j);
    if (track_U) {
      auto ui = U_row[i], uj = U_row[j];
      U_row[i] = combine(ui, uj, a, b);
      U_row[j] = combine(ui, uj, c, d);
    }
  }

  void col_transform2(int i, int j, const Int& a, const Int& b, const Int& c,
                      const Int& d) {
    std::map<int, Int> ci, cj;
    for (int r : col_rows[i]) ci[r] = row[r].at(i);
    for (int r : col_rows[j]) cj[r] = row[r].at(j);
    auto combine = [&](const std::map<int, Int>& x, const std::map<int, Int>& y,
                       const Int& kx, const Int& ky) {
      std::map<int, Int> out;
      for (const auto& [rr, v] : x) out[rr] += kx * v;
      for (const auto& [rr, v] : y) out[rr] += ky * v;
      for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
      return out;
    };
    auto new_i = combine(ci, cj, a, b);
    auto new_j = combine(ci, cj, c, d);
    for (const auto& [rr, v] : ci) {
      row[rr].erase(i);
      col_rows[i].erase(rr);
    }
    for (const auto& [rr, v] : cj) {
      row[rr].erase(j);
      col_rows[j].erase(rr);
    }
    for (const auto& [rr, v] : new_i) {
      row[rr][i] = v;
      col_rows[i].insert(rr);
    }
    for (const auto& [rr, v] : new_j) {
      row[rr][j] = v;
      col_rows[j].insert(rr);
    }
    if (track_V) {
      auto vi = V_col[i], vj = V_col[j];
      V_col[i] = combine(vi, vj, a, b);
      V_col[j] = combine(vi, vj, c, d);
    }
  }
};

}  // namespace

std::vector<Int> SmithResult::nontrivial_factors() const {
  std::vector<Int> out;
  for (const auto& d : factors)
    if (d > 1) out.push_back(d);
  return out;
}

SmithResult smith_normal_form(const SparseIntMatrix& M, bool want_U,
                              bool want_V) {
  Workspace w(M, want_U, want_V);
  std::vector<std::pair<int, int>> pivot_pos;  // (row, col) in pivot order

  auto clear_pivot = [&](int pr, int pc) {
    const Int piv = *w.at(pr, pc);
    // Exact multiples only at this point.
    std::vector<int> col_targets(w.col_rows[pc].begin(), w.col_rows[pc].end());
    for (int r : col_targets) {
      if (r == pr) continue;
      Int q = *w.at(r, pc) / piv;
      w.row_addmul(r, pr, -q);
    }
    std::vector<int> row_targets;
    for (const auto& [c, v] : w.row[pr])
      if (c != pc) row_targets.push_back(c);
    for (int c : row_targets) {
      Int q = *w.at(pr, c) / piv;
      w.col_addmul(c, pc, -q);
    }
  };

  while (true) {
    // Pivot selection: unit entries first, minimal Markowitz fill.
    int best_r = -1, best_c = -1;
    bool best_unit = false;
    long long best_score = -1;
    bool settled = false;
    for (int r = 0; r < w.R && !settled; ++r) {
      if (w.row_done[r] || w.row[r].empty()) continue;
      for (const auto& [c, v] : w.row[r]) {
        if (w.col_done[c]) continue;
        bool unit = (v == 1 || v == -1);
        long long score =
            static_cast<long long>(w.row[r].size() - 1) *
            static_cast<long long>(w.col_rows[c].size() - 1);
        bool better;
        if (best_r < 0)
          better = true;
        else if (unit != best_unit)
          better = unit;
        else
          better = score < best_score;
        if (better) {
          best_r = r;
          best_c = c;
          best_unit = unit;
          best_score = score;
          if (unit && score == 0) {
            settled = true;
            break;
          }
        }
      }
    }
    if (best_r < 0) break;

    int pr = best_r, pc = best_c;
    if (!best_unit) {
      // Euclidean descent until the pivot divides its row and column.
      bool changed = true;
      while (changed) {
        changed = false;
        Int piv = *w.at(pr, pc);
        std::vector<int> col_targets(w.col_rows[pc].begin(),
                                     w.col_rows[pc].end());
        for (int r : col_targets) {
          if (r == pr) continue;
          Int v = *w.at(r, pc);
          if (v % piv != 0) {
            Int q = v / piv;
            w.row_addmul(r, pr, -q);
            pr = r;  // remainder is strictly smaller
            changed = true;
            break;
          }
        }
        if (changed) continue;
        std::vector<int> row_targets;
        for (const auto& [c, v] : w.row[pr])
          if (c != pc) row_targets.push_back(c);
        for (int c : row_targets) {
          Int v = *w.at(pr, c);
          if (v % piv != 0) {
            Int q = v / piv;
            w.col_addmul(c, pc, -q);
            pc = c;
            changed = true;
            break;
          }
        }
      }
    }
    if (*w.at(pr, pc) < 0) w.row_negate(pr);
    clear_pivot(pr, pc);
    w.row_done[pr] = true;
    w.col_done[pc] = true;
    pivot_pos.push_back({pr, pc});
  }

  SmithResult res;
  res.rank = static_cast<long long>(pivot_pos.size());
  res.factors.reserve(pivot_pos.size());
  for (auto [r, c] : pivot_pos) res.factors.push_back(*w.at(r, c));

  // Row/column permutations bringing pivot k to position (k, k); the
  // transforms pick them up so U*M*V stays literally diagonal.
  std::vector<int> row_perm(w.R, -1), col_perm(w.C, -1);
  {
    std::vector<bool> row_used(w.R, false), col_used(w.C, false);
    for (size_t k = 0; k < pivot_pos.size(); ++k) {
      row_perm[pivot_pos[k].first] = static_cast<int>(k);
      col_perm[pivot_pos[k].second] = static_cast<int>(k);
      row_used[pivot_pos[k].first] = true;
      col_used[pivot_pos[k].second] = true;
    }
    int nr = static_cast<int>(pivot_pos.size());
    for (int r = 0; r < w.R; ++r)
      if (!row_used[r]) row_perm[r] = nr++;
    int nc = static_cast<int>(pivot_pos.size());
    for (int c = 0; c < w.C; ++c)
      if (!col_used[c]) col_perm[c] = nc++;
  }

  // Divisibility chain on the diagonal via 2x2 gcd/lcm transforms.  With
  // transforms tracked the operations are applied for real; otherwise only
  // the diagonal values change.
  auto fix_pair = [&](size_t k, size_t l) {
    Int a = res.factors[k], b = res.factors[l];
    if (a == 0 || b % a == 0) return false;
    Int g, x, y;
    egcd(a, b, g, x, y);
    Int lc = a / g * b;
    if (want_U || want_V) {
      int rk = pivot_pos[k].first, ck = pivot_pos[k].second;
      int rl = pivot_pos[l].first, cl = pivot_pos[l].second;
      // U2 = [[x, y], [-b/g, a/g]]; V2 sends (ck, cl) to
      // (ck + cl, -(y b/g) ck + (x a/g) cl).
      w.row_transform2(rk, rl, x, y, -(b / g), a / g);
      w.col_transform2(ck, cl, 1, 1, -(y * b / g), x * a / g);
    }
    res.factors[k] = g;
    res.factors[l] = lc;
    return true;
  };
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (size_t k = 0; k + 1 < res.factors.size(); ++k)
      for (size_t l = k + 1; l < res.factors.size(); ++l)
        if (fix_pair(k, l)) dirty = true;
  }

  if (want_U) {
    SparseIntMatrix U(w.R, w.R);
    for (int r = 0; r < w.R; ++r)
      for (const auto& [c, v] : w.U_row[r]) U.add(row_perm[r], c, v);
    U.compress();
    res.U = std::move(U);
  }
  if (want_V) {
    SparseIntMatrix V(w.C, w.C);
    for (int j = 0; j < w.C; ++j)
      for (const auto& [r, v] : w.V_col[j]) V.add(r, col_perm[j], v);
    V.compress();
    res.V = std::move(V);
  }
  return res;
}

bool verify_smith_certificate(const SparseIntMatrix& M, const SmithResult& snf) {
  if (!snf.U || !snf.V) return false;
  SparseIntMatrix prod = snf.U->multiply(M).multiply(*snf.V);
  SparseIntMatrix D(M.rows(), M.cols());
  for (size_t k = 0; k < snf.factors.size(); ++k)
    D.add(static_cast<int>(k), static_cast<int>(k), snf.factors[k]);
  if (!prod.equals(D)) return false;
  for (size_t k = 0; k + 1 < snf.factors.size(); ++k)
    if (snf.factors[k + 1] % snf.factors[k] != 0) return false;
  return true;
}

bool spot_check_smith(const SparseIntMatrix& M, const SmithResult& snf) {
  // d_1 = gcd of all entries.
  Int g = 0;
  for (const auto& t : M.triplets()) g = gcd_int(g, t.value);
  if (snf.factors.empty()) {
    if (g != 0) return false;
  } else if (g != snf.factors.front()) {
    return false;
  }
  // Divisibility chain.
  for (size_t k = 0; k + 1 < snf.factors.size(); ++k)
    if (snf.factors[k] == 0 || snf.factors[k + 1] % snf.factors[k] != 0)
      return false;
  // Rank against GF(2) when no factor is even (then ranks must agree).
  bool has_even = false;
  for (const auto& d : snf.factors)
    if (d % 2 == 0) has_even = true;
  if (!has_even && rank_mod2(M) != snf.rank) return false;
  return true;
}

bool in_image(const SmithResult& snf, const std::vector<Int>& z) {
  if (!snf.U) throw std::invalid_argument("in_image needs the row transform U");
  std::vector<Int> w = matvec(*snf.U, z);
  for (size_t i = 0; i < w.size(); ++i) {
    if (i < snf.factors.size()) {
      if (snf.factors[i] == 0) {
        if (w[i] != 0) return false;
      } else if (w[i] % snf.factors[i] != 0) {
        return false;
      }
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace covers
