#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fiberscope/error.hpp"

namespace fiberscope {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix over the integers with arbitrary-precision entries.
/// All homology computations run through this type; intermediate values in
/// normal-form algorithms routinely overflow machine words.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw ValidationError("IntegerMatrix: entry count does not match shape");
  }

  /// Row-major construction from machine integers, for literals in tests.
  static IntegerMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) {
    return IntegerMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Int>& entries() const { return data_; }

  bool operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }
  bool operator!=(const IntegerMatrix& other) const {
    return !(*this == other);
  }

  bool is_identity() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;

  /// A^k for k >= 0 by binary exponentiation.
  IntegerMatrix pow(const Int& k) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// [A | B]: matrices side by side; row counts must agree.
IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix hstack(const std::vector<IntegerMatrix>& mats,
                     std::size_t rows_hint);

/// [A ; B]: matrices stacked vertically; column counts must agree.
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const std::vector<IntegerMatrix>& mats,
                     std::size_t cols_hint);

}  // namespace fiberscope
