#pragma once

#include <span>
#include <string>
#include <vector>

#include "dicosa/errors.hpp"

namespace dicosa::numkit {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. All shape validation happens in the
// operations; element access is unchecked.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw Error::shape("negative matrix dimension");
  }

  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix row_vector(const Vector& v);
  static Matrix column_vector(const Vector& v);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(int r, int c) noexcept {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const noexcept {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  double* data() noexcept { return data_.data(); }
  const double* data() const noexcept { return data_.data(); }

  std::span<double> row(int r) noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(int r) const noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  bool same_shape(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  bool operator==(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// C = op(a) * op(b), where the flags select transposition. Backed by Eigen.
Matrix gemm(const Matrix& a, const Matrix& b, bool trans_a = false, bool trans_b = false);

// Plain product with shape validation and a finiteness check on the result.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

// softmax(logits / temperature), computed with max subtraction.
Vector softmax(const Vector& logits, double temperature);

// Standardizes every column over the batch axis: (x - mean) / sqrt(var + epsilon),
// population variance. Requires at least two rows.
Matrix batch_standardize(const Matrix& x, double epsilon = 1e-8);

// Cosine similarity; returns 0 when either norm is below 1e-12.
double cosine(std::span<const double> a, std::span<const double> b);

bool all_finite(const Matrix& m);
bool all_finite(std::span<const double> v);
void ensure_finite(const Matrix& m, const std::string& context);

}  // namespace dicosa::numkit
