#include "dicosa/numkit.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

namespace dicosa::numkit {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenRowMajor>;
using Map = Eigen::Map<EigenRowMajor>;

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows.front().size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error::shape("from_rows: ragged row lengths");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::row_vector(const Vector& v) {
  Matrix m(1, static_cast<int>(v.size()));
  std::copy(v.begin(), v.end(), m.row(0).begin());
  return m;
}

Matrix Matrix::column_vector(const Vector& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (int r = 0; r < m.rows(); ++r) m(r, 0) = v[r];
  return m;
}

Matrix gemm(const Matrix& a, const Matrix& b, bool trans_a, bool trans_b) {
  const int ar = trans_a ? a.cols() : a.rows();
  const int ac = trans_a ? a.rows() : a.cols();
  const int br = trans_b ? b.cols() : b.rows();
  const int bc = trans_b ? b.rows() : b.cols();
  if (ac != br)
    throw Error::shape("gemm: inner dimensions differ (" + std::to_string(ac) +
                       " vs " + std::to_string(br) + ")");
  Matrix c(ar, bc);
  ConstMap ma(a.data(), a.rows(), a.cols());
  ConstMap mb(b.data(), b.rows(), b.cols());
  Map mc(c.data(), ar, bc);
  if (!trans_a && !trans_b)
    mc.noalias() = ma * mb;
  else if (trans_a && !trans_b)
    mc.noalias() = ma.transpose() * mb;
  else if (!trans_a && trans_b)
    mc.noalias() = ma * mb.transpose();
  else
    mc.noalias() = ma.transpose() * mb.transpose();
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix c = gemm(a, b);
  ensure_finite(c, "matmul");
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error::shape("dot: length mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vector softmax(const Vector& logits, double temperature) {
  if (logits.empty()) throw Error::shape("softmax: empty input");
  if (!(temperature > 0.0))
    throw Error::param("softmax: temperature must be positive, got " +
                       std::to_string(temperature));
  if (!all_finite(logits)) throw Error::numeric("softmax: non-finite logits");

  const double hi = *std::max_element(logits.begin(), logits.end());
  Vector out(logits.size());
  double z = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp((logits[i] - hi) / temperature);
    z += out[i];
  }
  for (double& v : out) v /= z;
  return out;
}

Matrix batch_standardize(const Matrix& x, double epsilon) {
  if (x.rows() < 2)
    throw Error::batch("batch_standardize: need at least 2 rows, got " +
                       std::to_string(x.rows()));
  const int b = x.rows();
  Matrix z(b, x.cols());
  for (int c = 0; c < x.cols(); ++c) {
    double mean = 0.0;
    for (int r = 0; r < b; ++r) mean += x(r, c);
    mean /= b;
    double var = 0.0;
    for (int r = 0; r < b; ++r) {
      const double d = x(r, c) - mean;
      var += d * d;
    }
    var /= b;
    const double inv = 1.0 / std::sqrt(var + epsilon);
    for (int r = 0; r < b; ++r) z(r, c) = (x(r, c) - mean) * inv;
  }
  return z;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error::shape("cosine: dimension mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  const double na = norm(a);
  const double nb = norm(b);
  if (na < 1e-12 || nb < 1e-12) return 0.0;  // degenerate factors score zero
  const double c = dot(a, b) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

bool all_finite(const Matrix& m) {
  return all_finite(std::span<const double>(m.data(), m.size()));
}

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void ensure_finite(const Matrix& m, const std::string& context) {
  if (!all_finite(m)) throw Error::numeric(context + ": non-finite values");
}

}  // namespace dicosa::numkit
