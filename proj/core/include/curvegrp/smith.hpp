#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace curvegrp {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Overflow-checked product; throws ComputationLimit.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  // min(rows, cols) entries, nonnegative, each dividing the next.
  std::vector<std::int64_t> diagonal;
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular
};

// left * m * right == diag(diagonal).  All arithmetic is overflow-checked;
// on overflow throws ComputationLimit("overflow; matrix out of supported range").
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace curvegrp
