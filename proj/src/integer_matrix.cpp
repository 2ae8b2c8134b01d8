#include "covers/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace covers {

void SparseIntMatrix::add(int r, int c, Int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseIntMatrix::add");
  if (v == 0) return;
  entries_.push_back({r, c, std::move(v)});
}

void SparseIntMatrix::compress() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Triplet& a, const Triplet& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (auto& t : entries_) {
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
      out.back().value += t.value;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Triplet& t) { return t.value == 0; }),
            out.end());
  entries_ = std::move(out);
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix out(cols_, rows_);
  for (const auto& t : entries_) out.add(t.col, t.row, t.value);
  return out;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
  // Row-major accumulation.
  std::vector<std::vector<std::pair<int, const Int*>>> rows_of_b(other.rows_);
  for (const auto& t : other.entries_)
    rows_of_b[t.row].push_back({t.col, &t.value});
  std::vector<std::vector<std::pair<int, const Int*>>> rows_of_a(rows_);
  for (const auto& t : entries_) rows_of_a[t.row].push_back({t.col, &t.value});

  SparseIntMatrix out(rows_, other.cols_);
  std::map<int, Int> acc;
  for (int r = 0; r < rows_; ++r) {
    acc.clear();
    for (auto [k, va] : rows_of_a[r])
      for (auto [c, vb] : rows_of_b[k]) acc[c] += (*va) * (*vb);
    for (auto& [c, v] : acc)
      if (v != 0) out.add(r, c, std::move(v));
  }
  return out;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& t : entries_)
    if (t.value != 0) return false;
  return true;
}

bool SparseIntMatrix::equals(const SparseIntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  SparseIntMatrix a = *this, b = other;
  a.compress();
  b.compress();
  if (a.entries_.size() != b.entries_.size()) return false;
  for (size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].row != b.entries_[i].row ||
        a.entries_[i].col != b.entries_[i].col ||
        a.entries_[i].value != b.entries_[i].value)
      return false;
  }
  return true;
}

std::vector<std::vector<Int>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, 0));
  for (const auto& t : entries_) d[t.row][t.col] += t.value;
  return d;
}

std::string SparseIntMatrix::to_triplet_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  SparseIntMatrix c = *this;
  c.compress();
  for (const auto& t : c.entries_)
    os << t.row << ' ' << t.col << ' ' << t.value << '\n';
  return os.str();
}

SparseIntMatrix SparseIntMatrix::from_triplet_text(const std::string& text) {
  std::istringstream is(text);
  int rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw std::invalid_argument("bad triplet header");
  SparseIntMatrix m(rows, cols);
  int r, c;
  std::string v;
  while (is >> r >> c >> v) m.add(r, c, Int(v));
  m.compress();
  return m;
}

std::vector<Int> matvec(const SparseIntMatrix& M, const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != M.cols())
    throw std::invalid_argument("apply: shape mismatch");
  std::vector<Int> y(M.rows(), 0);
  for (const auto& t : M.triplets()) y[t.row] += t.value * x[t.col];
  return y;
}

long long rank_mod2(const SparseIntMatrix& M) {
  const int words = (M.cols() + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(M.rows(),
                                          std::vector<uint64_t>(words, 0));
  for (const auto& t : M.triplets())
    if ((t.value & 1) != 0) rows[t.row][t.col / 64] ^= 1ull << (t.col % 64);

  long long rank = 0;
  int row_at = 0;
  for (int c = 0; c < M.cols() && row_at < M.rows(); ++c) {
    int pivot = -1;
    for (int r = row_at; r < M.rows(); ++r)
      if ((rows[r][c / 64] >> (c % 64)) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[row_at]);
    for (int r = 0; r < M.rows(); ++r)
      if (r != row_at && ((rows[r][c / 64] >> (c % 64)) & 1))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[row_at][w];
    ++row_at;
    ++rank;
  }
  return rank;
}

}  // namespace covers
