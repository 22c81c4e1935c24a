#include "homlie/fuzz.hpp"

#include "homlie/linalg.hpp"

namespace homlie {

Rational Fuzzer::rational() {
  std::uniform_int_distribution<long> num(-2, 2);
  std::uniform_int_distribution<long> den(1, 2);
  long p = num(engine_);
  return Rational(p, den(engine_));
}

Rational Fuzzer::nonzero_rational() {
  for (;;) {
    Rational q = rational();
    if (!q.is_zero()) return q;
  }
}

std::size_t Fuzzer::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> d(0, bound - 1);
  return d(engine_);
}

Matrix Fuzzer::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
  return m;
}

Vector Fuzzer::vector(std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational();
  return v;
}

Tensor3 Fuzzer::tensor(std::size_t d1, std::size_t d2, std::size_t d3) {
  Tensor3 t(d1, d2, d3);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < d3; ++k) t(i, j, k) = rational();
  return t;
}

Matrix Fuzzer::invertible(std::size_t n) {
  for (;;) {
    Matrix m = matrix(n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix Fuzzer::r_matrix(std::size_t n) { return matrix(n, n); }

Matrix Fuzzer::kernel_point(std::size_t rows, std::size_t cols,
                            const std::function<Matrix(const Matrix&)>& f) {
  // Columns of the system are the images of the elementary matrices.
  std::vector<Vector> columns;
  std::size_t out_size = 0;
  for (std::size_t p = 0; p < rows; ++p)
    for (std::size_t q = 0; q < cols; ++q) {
      Matrix e(rows, cols);
      e(p, q) = 1;
      Matrix img = f(e);
      out_size = img.rows() * img.cols();
      Vector v(out_size);
      for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j) v[i * img.cols() + j] = img(i, j);
      columns.push_back(std::move(v));
    }
  Matrix system = Matrix::from_columns(columns, out_size);
  Matrix x(rows, cols);
  for (const Vector& b : nullspace(system)) {
    Rational c = rational();
    for (std::size_t p = 0; p < rows; ++p)
      for (std::size_t q = 0; q < cols; ++q) x(p, q) += c * b[p * cols + q];
  }
  return x;
}

Matrix Fuzzer::twist_compatible_r(const HomLieAlgebra& a) {
  const Matrix& phi = a.twist();
  return kernel_point(a.dim(), a.dim(), [&](const Matrix& r) { return phi * r - r * phi.transpose(); });
}

Matrix Fuzzer::skew_twist_compatible_r(const HomLieAlgebra& a) {
  const Matrix& phi = a.twist();
  std::size_t n = a.dim();
  return kernel_point(n, n, [&](const Matrix& r) {
    Matrix compat = phi * r - r * phi.transpose();
    Matrix sym = r + r.transpose();
    Matrix out(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = compat(i, j);
        out(n + i, j) = sym(i, j);
      }
    return out;
  });
}

Matrix Fuzzer::intertwining_t(const Representation& rep) {
  const Matrix& phi = rep.base.twist();
  const Matrix& beta = rep.beta;
  return kernel_point(rep.base.dim(), rep.carrier_dim(), [&](const Matrix& t) { return t * beta - phi * t; });
}

Tensor3 Fuzzer::corrupt_cobracket(const Tensor3& d) {
  Tensor3 out = d;
  out(index(d.dim1()), index(d.dim2()), index(d.dim3())) += nonzero_rational();
  return out;
}

}  // namespace homlie
