#include "leraytk/integer_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace leraytk {

void SparseIntMatrix::set_column(std::size_t col, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::vector<Entry> merged;
  for (const auto& e : entries) {
    if (e.row >= rows_) throw std::out_of_range("matrix row out of range");
    if (!merged.empty() && merged.back().row == e.row) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  columns_.at(col) = std::move(merged);
}

std::int64_t SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  return (it != c.end() && it->row == row) ? it->value : 0;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("matrix shapes do not compose");
  SparseIntMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    std::unordered_map<std::size_t, std::int64_t> acc;
    for (const auto& [k, b] : rhs.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc[i], prod, &acc[i])) {
          throw std::overflow_error("matrix product overflows int64");
        }
      }
    }
    std::vector<Entry> entries;
    for (const auto& [i, v] : acc) entries.push_back({i, v});
    out.set_column(j, std::move(entries));
  }
  return out;
}

namespace {

struct Overflow {};

// Arithmetic policy: int64 with overflow detection, or BigInt.
struct CheckedInt64 {
  using Int = std::int64_t;
  static Int from(std::int64_t v) { return v; }
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int gcd(Int a, Int b) { return std::gcd(a, b); }
  static Int div_exact(Int a, Int b) {
    if (b == -1) return sub(0, a);
    if (a % b != 0) throw std::logic_error("inexact Bareiss division");
    return a / b;
  }
  static bool is_zero(Int a) { return a == 0; }
};

struct Arbitrary {
  using Int = BigInt;
  static Int from(std::int64_t v) { return Int(v); }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("inexact Bareiss division");
    return q;
  }
  static bool is_zero(const Int& a) { return a.is_zero(); }
};

template <class P>
std::size_t bareiss_rank(const SparseIntMatrix& m) {
  using Int = typename P::Int;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, P::from(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& e : m.column(j)) a[e.row][j] = P::from(e.value);
  }
  std::size_t rank = 0;
  Int previous = P::from(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && P::is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = P::div_exact(
            P::sub(P::mul(a[rank][c], a[i][j]), P::mul(a[i][c], a[rank][j])), previous);
      }
      a[i][c] = P::from(0);
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

template <class P>
std::size_t sparse_rank(const SparseIntMatrix& m) {
  using Int = typename P::Int;
  using Column = std::vector<std::pair<std::size_t, Int>>;
  // Reduced columns keyed by their pivot, the largest row index present.
  std::unordered_map<std::size_t, Column> reduced;

  auto normalize = [](Column& col) {
    Int g = P::from(0);
    for (const auto& [row, v] : col) g = P::gcd(g, v);
    if (g < 0) g = P::sub(P::from(0), g);
    if (g != P::from(1) && !P::is_zero(g)) {
      for (auto& [row, v] : col) v = P::div_exact(v, g);
    }
  };

  for (std::size_t j = 0; j < m.cols(); ++j) {
    Column col;
    for (const auto& e : m.column(j)) col.emplace_back(e.row, P::from(e.value));
    while (!col.empty()) {
      auto hit = reduced.find(col.back().first);
      if (hit == reduced.end()) {
        normalize(col);
        reduced.emplace(col.back().first, std::move(col));
        break;
      }
      const Column& other = hit->second;
      const Int a = other.back().second;
      const Int b = col.back().second;
      // col <- a*col - b*other clears the shared pivot.
      Column next;
      next.reserve(col.size() + other.size());
      auto x = col.begin();
      auto y = other.begin();
      while (x != col.end() || y != other.end()) {
        if (y == other.end() || (x != col.end() && x->first < y->first)) {
          next.emplace_back(x->first, P::mul(a, x->second));
          ++x;
        } else if (x == col.end() || y->first < x->first) {
          next.emplace_back(y->first, P::sub(P::from(0), P::mul(b, y->second)));
          ++y;
        } else {
          Int v = P::sub(P::mul(a, x->second), P::mul(b, y->second));
          if (!P::is_zero(v)) next.emplace_back(x->first, std::move(v));
          ++x;
          ++y;
        }
      }
      normalize(next);
      col = std::move(next);
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t rank_dense_bareiss(const SparseIntMatrix& m) {
  try {
    return bareiss_rank<CheckedInt64>(m);
  } catch (const Overflow&) {
    return bareiss_rank<Arbitrary>(m);
  }
}

std::size_t rank_sparse_fraction_free(const SparseIntMatrix& m) {
  try {
    return sparse_rank<CheckedInt64>(m);
  } catch (const Overflow&) {
    return sparse_rank<Arbitrary>(m);
  }
}

std::size_t exact_rank(const SparseIntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.cols() < 64 && m.rows() < 256) return rank_dense_bareiss(m);
  return rank_sparse_fraction_free(m);
}

}  // namespace leraytk
