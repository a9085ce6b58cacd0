#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace leraytk {

using BigInt = boost::multiprecision::cpp_int;

// Column-oriented sparse integer matrix. Columns keep their entries sorted
// by row with no explicit zeros.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::int64_t value;
    bool operator==(const Entry&) const = default;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  // Replaces column `col`; duplicate rows are summed and zeros dropped.
  void set_column(std::size_t col, std::vector<Entry> entries);
  std::span<const Entry> column(std::size_t col) const { return columns_[col]; }

  std::int64_t at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  // Exact product; throws std::overflow_error if an entry leaves int64.
  SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
  bool operator==(const SparseIntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// Rank over Q. Small matrices go through dense Bareiss elimination, larger
// ones through sparse fraction-free column reduction. Both run on checked
// 64-bit integers and redo the work on BigInt if an entry would overflow.
std::size_t exact_rank(const SparseIntMatrix& m);

std::size_t rank_dense_bareiss(const SparseIntMatrix& m);
std::size_t rank_sparse_fraction_free(const SparseIntMatrix& m);

}  // namespace leraytk
