#include "curvegrp/smith.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "curvegrp/error.hpp"

namespace curvegrp {

namespace {

[[noreturn]] void overflow() { throw ComputationLimit("overflow; matrix out of supported range"); }

__extension__ typedef __int128 Wide;

template <class T>
T checked_mul(T a, T b) {
  T r = 0;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

template <class T>
T checked_add(T a, T b) {
  T r = 0;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

template <class T>
T checked_neg(T a) {
  T r = 0;
  if (__builtin_sub_overflow(T{0}, a, &r)) overflow();
  return r;
}

template <class T>
T abs_of(T a) {
  return a < 0 ? checked_neg(a) : a;
}

// Working matrix with 128-bit entries; only the final transforms must fit in 64 bits.
class WideMatrix {
 public:
  WideMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit WideMatrix(const IntMatrix& m) : WideMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = m(r, c);
  }
  static WideMatrix identity(std::size_t n) {
    WideMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Wide& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Wide operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix narrow() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const Wide v = (*this)(r, c);
        if (v > INT64_MAX || v < -INT64_MAX) overflow();
        m(r, c) = static_cast<std::int64_t>(v);
      }
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Wide> data_;
};

// row[dst] += factor * row[src]
void add_row(WideMatrix& m, std::size_t dst, std::size_t src, Wide factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_add(m(dst, c), checked_mul(factor, m(src, c)));
}

void add_col(WideMatrix& m, std::size_t dst, std::size_t src, Wide factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_add(m(r, dst), checked_mul(factor, m(r, src)));
}

void swap_rows(WideMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(WideMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void negate_row(WideMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = checked_neg(m(r, c));
}

WideMatrix transpose(const WideMatrix& m) {
  WideMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient leaving a remainder of absolute value at most |b| / 2.
Wide nearest_div(Wide a, Wide b) {
  Wide q = floor_div(a, b);
  const Wide r = abs_of(a - q * b);
  if (r != 0 && r > abs_of(b) - r) ++q;
  return q;
}

// Norms only steer heuristics, so floating point is enough.
long double dot(const WideMatrix& m, std::size_t i, std::size_t j) {
  long double s = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    s += static_cast<long double>(m(i, c)) * static_cast<long double>(m(j, c));
  return s;
}

bool zero_row(const WideMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(r, c) != 0) return false;
  return true;
}

// Row echelon form by Euclidean steps, always pivoting on the entry of least
// absolute value in the current column; entries above a pivot are reduced
// into [0, pivot).  Every row operation is mirrored on t.
void row_echelon(WideMatrix& a, WideMatrix& t) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (p == a.rows()) {
          p = i;
          continue;
        }
        const Wide ai = abs_of(a(i, c)), ap = abs_of(a(p, c));
        if (ai < ap || (ai == ap && dot(t, i, i) < dot(t, p, p))) p = i;
      }
      if (p == a.rows()) break;
      found = true;
      swap_rows(a, r, p);
      swap_rows(t, r, p);
      bool clear = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        const Wide q = nearest_div(a(i, c), a(r, c));
        add_row(a, i, r, checked_neg(q));
        add_row(t, i, r, checked_neg(q));
        clear = clear && a(i, c) == 0;
      }
      if (clear) break;
    }
    if (!found) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(t, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Wide q = floor_div(a(k, c), a(r, c));
      if (q != 0) {
        add_row(a, k, r, checked_neg(q));
        add_row(t, k, r, checked_neg(q));
      }
    }
    ++r;
  }
}

// Rows of t belonging to zero rows of a may be added to any row without
// changing t * a; use them to shorten every row of t.
void reduce_by_kernel(const WideMatrix& a, WideMatrix& t) {
  std::vector<std::size_t> kernel;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (zero_row(a, r)) kernel.push_back(r);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j : kernel) {
      const long double nj = dot(t, j, j);
      if (nj == 0) continue;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (i == j) continue;
        const long double ratio = std::round(dot(t, i, j) / nj);
        if (ratio == 0 || std::fabs(ratio) > 1e30L) continue;
        const Wide q = static_cast<Wide>(ratio);
        std::vector<Wide> row(t.cols());
        long double norm = 0;
        for (std::size_t c = 0; c < t.cols(); ++c) {
          row[c] = checked_add(t(i, c), checked_neg(checked_mul(q, t(j, c))));
          norm += static_cast<long double>(row[c]) * static_cast<long double>(row[c]);
        }
        if (norm >= dot(t, i, i) * (1 - 1e-12L)) continue;
        for (std::size_t c = 0; c < t.cols(); ++c) t(i, c) = row[c];
        changed = true;
      }
    }
  }
}

bool monomial(const WideMatrix& a) {
  std::vector<int> per_col(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    int n = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) {
        ++n;
        ++per_col[c];
      }
    if (n > 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](int n) { return n <= 1; });
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shapes do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = checked_add<std::int64_t>(acc, checked_mul<std::int64_t>(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  WideMatrix a(m);
  WideMatrix left = WideMatrix::identity(m.rows());
  WideMatrix right = WideMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  // Alternate row and column echelon passes until each row and column holds
  // at most one nonzero entry, then move those entries onto the diagonal.
  // A diagonal pair violating divisibility is mixed by a column operation and
  // the passes resume.
  std::size_t placed = 0;
  bool rows = a.rows() <= a.cols();
  for (;;) {
    for (; !monomial(a); rows = !rows) {
      if (rows) {
        row_echelon(a, left);
        reduce_by_kernel(a, left);
      } else {
        WideMatrix at = transpose(a), rt = transpose(right);
        row_echelon(at, rt);
        reduce_by_kernel(at, rt);
        a = transpose(at);
        right = transpose(rt);
      }
    }

    placed = 0;
    for (std::size_t r = 0; r < a.rows() && placed < n; ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(r, c) == 0) continue;
        swap_rows(a, placed, r);
        swap_rows(left, placed, r);
        swap_cols(a, placed, c);
        swap_cols(right, placed, c);
        if (a(placed, placed) < 0) {
          negate_row(a, placed);
          negate_row(left, placed);
        }
        r = placed++;
        break;
      }

    bool chain = true;
    for (std::size_t i = 0; i + 1 < placed && chain; ++i)
      for (std::size_t j = i + 1; j < placed; ++j)
        if (a(j, j) % a(i, i) != 0) {
          add_col(a, i, j, 1);
          add_col(right, i, j, 1);
          rows = true;
          chain = false;
          break;
        }
    if (chain) break;
  }

  SmithForm out;
  out.diagonal.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) > INT64_MAX) overflow();
    out.diagonal[i] = static_cast<std::int64_t>(a(i, i));
  }
  out.left = left.narrow();
  out.right = right.narrow();
  return out;
}

}  // namespace curvegrp
