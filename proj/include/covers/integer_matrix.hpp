#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace covers {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix as a triplet list; no duplicate positions, no
/// stored zeros.  Entries are arbitrary-precision.
class SparseIntMatrix {
 public:
  struct Triplet {
    int row = 0;
    int col = 0;
    Int value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Triplet>& triplets() const { return entries_; }
  long long nnz() const { return static_cast<long long>(entries_.size()); }

  /// Adds to the entry (duplicates are combined; zeros dropped on compress).
  void add(int r, int c, Int v);
  /// Merge duplicate positions and drop zeros.
  void compress();

  static SparseIntMatrix identity(int n);
  SparseIntMatrix transposed() const;

  /// Exact product (this * other).
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const;
  bool equals(const SparseIntMatrix& other) const;

  /// Dense row view (small matrices / tests).
  std::vector<std::vector<Int>> to_dense() const;

  /// Text form: first line "rows cols", then one "row col value" per line.
  std::string to_triplet_text() const;
  static SparseIntMatrix from_triplet_text(const std::string& text);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Triplet> entries_;
};

/// Matrix-vector product M x (x dense).
std::vector<Int> matvec(const SparseIntMatrix& M, const std::vector<Int>& x);

/// Rank over GF(2).
long long rank_mod2(const SparseIntMatrix& M);

}  // namespace covers
