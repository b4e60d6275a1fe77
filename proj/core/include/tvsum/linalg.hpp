#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvsum/exactnum.hpp"

namespace tvsum {

// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, int rows, int cols);
  static Matrix identity(const FieldSpec& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  FieldElement& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const FieldElement& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(const FieldElement& s) const;
  Matrix transposed() const;
  bool operator==(const Matrix& b) const;
  bool operator!=(const Matrix& b) const { return !(*this == b); }
  bool is_identity() const;
  bool is_zero() const;

  std::optional<Matrix> inverse() const;
  int rank() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElement> data_;
};

}  // namespace tvsum
