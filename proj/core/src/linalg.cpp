#include "tvsum/linalg.hpp"

#include "tvsum/error.hpp"

namespace tvsum {

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, FieldElement::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
  Matrix r(field_, rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a * b(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch in sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch in difference");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix Matrix::scaled(const FieldElement& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  Matrix a = *this, inv = identity(field_, n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    FieldElement p = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      FieldElement f = a(i, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

int Matrix::rank() const {
  Matrix a = *this;
  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int piv = r;
    while (piv < rows_ && a(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
    FieldElement p = a(r, col).inverse();
    for (int i = r + 1; i < rows_; ++i) {
      if (a(i, col).is_zero()) continue;
      FieldElement f = a(i, col) * p;
      for (int j = col; j < cols_; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

}  // namespace tvsum
