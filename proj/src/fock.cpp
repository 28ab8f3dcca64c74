#include "bellpf/fock.hpp"

#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace bellpf::fock {

namespace {

void check_dim(int n) {
  if (n < 2) throw std::invalid_argument("fock: dimension must be >= 2");
}

}  // namespace

Matrix build_annihilation(int n) {
  check_dim(n);
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  return a;
}

Matrix build_creation(int n) { return build_annihilation(n).adjoint(); }

Matrix number_operator(int n) {
  check_dim(n);
  Matrix m = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

Matrix matrix_exponential(const Matrix& m, std::complex<double> scale) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: square input only");
  Matrix scaled = scale * m;
  Matrix result = scaled.exp();
  if (!result.allFinite()) {
    throw std::overflow_error("matrix_exponential: result exceeds double range");
  }
  return result;
}

CoherentVector make_coherent(int n, std::complex<double> z) {
  check_dim(n);
  CoherentVector v;
  v.dim = n;
  v.z = z;
  v.components.resize(n);
  v.components(0) = std::exp(-0.5 * std::norm(z));
  for (int k = 1; k < n; ++k) {
    v.components(k) = v.components(k - 1) * z / std::sqrt(static_cast<double>(k));
  }
  v.tail_bound = std::max(0.0, 1.0 - v.components.squaredNorm());
  return v;
}

std::complex<double> expectation(const CoherentVector& v, const Matrix& m) {
  if (m.rows() != v.dim || m.cols() != v.dim) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (v.components.adjoint() * m * v.components)(0, 0);
}

Matrix word_matrix(const BosonWord& w, int n) {
  check_dim(n);
  Matrix a = build_annihilation(n);
  Matrix ad = build_creation(n);
  Matrix acc = Matrix::Identity(n, n);
  for (BosonOp op : w) {
    acc = acc * (op == BosonOp::Ann ? a : ad);
  }
  return acc;
}

Matrix normal_polynomial_matrix(const NormalPolynomial& p, int n) {
  check_dim(n);
  Matrix a = build_annihilation(n);
  Matrix ad = build_creation(n);
  // Cache powers; exponents are small in practice.
  std::vector<Matrix> apow{Matrix::Identity(n, n)};
  std::vector<Matrix> adpow{Matrix::Identity(n, n)};
  auto power = [n](std::vector<Matrix>& cache, const Matrix& base, unsigned e) -> const Matrix& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Matrix acc = Matrix::Zero(n, n);
  for (const auto& [k, c] : p.terms()) {
    acc += std::complex<double>(c.get_d()) * (power(adpow, ad, k.first) * power(apow, a, k.second));
  }
  return acc;
}

TraceResult trace_real(const Matrix& m) {
  std::complex<double> t = m.trace();
  return {t.real(), t.imag()};
}

double trace_thermal(const MatrixBuilder& builder, double rel_tol, int n_start, int n_max) {
  double prev = 0.0;
  bool have_prev = false;
  for (int n = n_start; n <= n_max; n *= 2) {
    TraceResult t = trace_real(builder(n));
    const double scale = std::max(1.0, std::abs(t.value));
    if (std::abs(t.imag_residue) > rel_tol * scale) {
      throw NonConvergenceError("trace_thermal: trace has a non-negligible imaginary part");
    }
    if (have_prev && std::abs(t.value - prev) <= rel_tol * scale) {
      return t.value;
    }
    prev = t.value;
    have_prev = true;
  }
  throw NonConvergenceError("trace_thermal: no convergence up to n_max");
}

std::complex<double> coherent_matrix_expectation(const MatrixBuilder& builder,
                                                 std::complex<double> z, double rel_tol,
                                                 int n_start, int n_max) {
  std::complex<double> prev;
  bool have_prev = false;
  for (int n = n_start; n <= n_max; n *= 2) {
    std::complex<double> value = expectation(make_coherent(n, z), builder(n));
    if (have_prev && std::abs(value - prev) <= rel_tol * std::max(1.0, std::abs(value))) {
      return value;
    }
    prev = value;
    have_prev = true;
  }
  throw NonConvergenceError("coherent_matrix_expectation: no convergence up to n_max");
}

}  // namespace bellpf::fock
