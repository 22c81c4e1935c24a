#include "homlie/tensor.hpp"

#include <algorithm>

namespace homlie {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::string dims(const Tensor3& t) {
  return std::to_string(t.dim1()) + "x" + std::to_string(t.dim2()) + "x" + std::to_string(t.dim3());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

// out(.., i, ..) = sum_p m(i, p) t(.., p, ..) along the given slot.
Tensor3 mode_product(const Matrix& m, const Tensor3& t, int slot) {
  std::size_t d[3] = {t.dim1(), t.dim2(), t.dim3()};
  std::size_t out_d[3] = {d[0], d[1], d[2]};
  out_d[slot] = m.rows();
  Tensor3 out(out_d[0], out_d[1], out_d[2]);
  for (std::size_t i = 0; i < d[0]; ++i) {
    for (std::size_t j = 0; j < d[1]; ++j) {
      for (std::size_t k = 0; k < d[2]; ++k) {
        const Rational& v = t(i, j, k);
        if (v.is_zero()) continue;
        std::size_t idx[3] = {i, j, k};
        std::size_t p = idx[slot];
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (m(r, p).is_zero()) continue;
          idx[slot] = r;
          out(idx[0], idx[1], idx[2]).add_product(m(r, p), v);
        }
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector Vector::basis(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q.is_zero(); });
}

Vector& Vector::operator+=(const Vector& rhs) {
  require(dim() == rhs.dim(), "vector sum: dims " + std::to_string(dim()) + " and " +
                                  std::to_string(rhs.dim()));
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require(dim() == rhs.dim(), "vector difference: dims " + std::to_string(dim()) + " and " +
                                  std::to_string(rhs.dim()));
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs[i];
  return *this;
}

Vector operator*(const Rational& s, Vector v) {
  for (auto& e : v.entries_) e *= s;
  return v;
}

Vector Vector::operator-() const { return Rational(-1) * *this; }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "matrix literal: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].dim() == rows, "from_columns: column " + std::to_string(j) + " has dim " +
                                          std::to_string(columns[j].dim()));
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix sum: " + dims(*this) + " and " + dims(rhs));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix difference: " + dims(*this) + " and " + dims(rhs));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& e : m.data_) e *= s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: " + dims(a) + " times " + dims(b));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < a.cols(); ++p) {
      const Rational& aip = a(i, p);
      if (aip.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(aip, b(p, j));
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols() == v.dim(),
          "matrix-vector product: " + dims(a) + " times vector of dim " + std::to_string(v.dim()));
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i].add_product(a(i, j), v[j]);
  return out;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

// ---------------------------------------------------------------- Tensor3

Tensor3 Tensor3::outer(const Vector& a, const Vector& b, const Vector& c) {
  Tensor3 t(a.dim(), b.dim(), c.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) t(i, j, k) = a[i] * b[j] * c[k];
  return t;
}

Matrix Tensor3::slice(std::size_t i) const {
  Matrix m(d2_, d3_);
  for (std::size_t j = 0; j < d2_; ++j)
    for (std::size_t k = 0; k < d3_; ++k) m(j, k) = (*this)(i, j, k);
  return m;
}

void Tensor3::set_slice(std::size_t i, const Matrix& m) {
  require(m.rows() == d2_ && m.cols() == d3_,
          "set_slice: slice " + dims(m) + " into tensor " + dims(*this));
  for (std::size_t j = 0; j < d2_; ++j)
    for (std::size_t k = 0; k < d3_; ++k) (*this)(i, j, k) = m(j, k);
}

bool Tensor3::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

Tensor3& Tensor3::operator+=(const Tensor3& rhs) {
  require(d1_ == rhs.d1_ && d2_ == rhs.d2_ && d3_ == rhs.d3_,
          "tensor sum: " + dims(*this) + " and " + dims(rhs));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& rhs) {
  require(d1_ == rhs.d1_ && d2_ == rhs.d2_ && d3_ == rhs.d3_,
          "tensor difference: " + dims(*this) + " and " + dims(rhs));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Tensor3 operator*(const Rational& s, Tensor3 t) {
  for (auto& e : t.data_) e *= s;
  return t;
}

Tensor3 Tensor3::operator-() const { return Rational(-1) * *this; }

// ---------------------------------------------------------------- operations

Matrix apply_pair(const Matrix& a, const Matrix& b, const Matrix& t) {
  require(a.cols() == t.rows(), "apply_pair: first map " + dims(a) + " on tensor " + dims(t));
  require(b.cols() == t.cols(), "apply_pair: second map " + dims(b) + " on tensor " + dims(t));
  return a * t * b.transpose();
}

Tensor3 apply_triple(const Matrix& a, const Matrix& b, const Matrix& c, const Tensor3& t) {
  require(a.cols() == t.dim1(), "apply_triple: first map " + dims(a) + " on tensor " + dims(t));
  require(b.cols() == t.dim2(), "apply_triple: second map " + dims(b) + " on tensor " + dims(t));
  require(c.cols() == t.dim3(), "apply_triple: third map " + dims(c) + " on tensor " + dims(t));
  return mode_product(c, mode_product(b, mode_product(a, t, 0), 1), 2);
}

Matrix sigma2(const Matrix& t) { return t.transpose(); }

Tensor3 cyclic3(const Tensor3& t, int times) {
  times = ((times % 3) + 3) % 3;
  Tensor3 cur = t;
  for (int s = 0; s < times; ++s) {
    Tensor3 next(cur.dim3(), cur.dim1(), cur.dim2());
    for (std::size_t i = 0; i < cur.dim1(); ++i)
      for (std::size_t j = 0; j < cur.dim2(); ++j)
        for (std::size_t k = 0; k < cur.dim3(); ++k) next(k, i, j) = cur(i, j, k);
    cur = std::move(next);
  }
  return cur;
}

Tensor3 cyclic_sum(const Tensor3& t) {
  require(t.dim1() == t.dim2() && t.dim2() == t.dim3(), "cyclic_sum: tensor " + dims(t) + " not cubic");
  return t + cyclic3(t, 1) + cyclic3(t, 2);
}

Rational pair_dual(const Vector& xi, const Vector& v) {
  require(xi.dim() == v.dim(), "pair_dual: dual vector of dim " + std::to_string(xi.dim()) +
                                   " against vector of dim " + std::to_string(v.dim()));
  Rational s;
  for (std::size_t i = 0; i < v.dim(); ++i) s.add_product(xi[i], v[i]);
  return s;
}

Rational pair_dual(const Matrix& t, const Vector& a, const Vector& b) {
  require(a.dim() == t.rows() && b.dim() == t.cols(), "pair_dual: tensor " + dims(t) +
                                                          " against vectors of dims " +
                                                          std::to_string(a.dim()) + "," +
                                                          std::to_string(b.dim()));
  Rational s;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) s.add_product(t(i, j), a[i] * b[j]);
  return s;
}

Rational pair_dual(const Tensor3& t, const Vector& a, const Vector& b, const Vector& c) {
  return pair_dual(contract12(t, a, b), c);
}

Vector contract12(const Tensor3& t, const Vector& a, const Vector& b) {
  require(a.dim() == t.dim1() && b.dim() == t.dim2(),
          "contract12: tensor " + dims(t) + " against vectors of dims " + std::to_string(a.dim()) +
              "," + std::to_string(b.dim()));
  Vector out(t.dim3());
  for (std::size_t i = 0; i < t.dim1(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim2(); ++j) {
      if (b[j].is_zero()) continue;
      Rational w = a[i] * b[j];
      for (std::size_t k = 0; k < t.dim3(); ++k) out[k].add_product(w, t(i, j, k));
    }
  }
  return out;
}

Vector contract1(const Matrix& t, const Vector& a) {
  require(a.dim() == t.rows(), "contract1: tensor " + dims(t) + " against vector of dim " +
                                   std::to_string(a.dim()));
  return t.transpose() * a;
}

Matrix outer(const Vector& a, const Vector& b) {
  Matrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace homlie
