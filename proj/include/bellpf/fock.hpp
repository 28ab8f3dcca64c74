#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>

#include "bellpf/boson.hpp"

namespace bellpf::fock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ladder operators truncated to the first n number states.
Matrix build_annihilation(int n);
Matrix build_creation(int n);
Matrix number_operator(int n);

// exp(scale * m) by scaling and squaring; throws std::overflow_error when the
// result leaves the double range.
Matrix matrix_exponential(const Matrix& m, std::complex<double> scale = 1.0);

struct CoherentVector {
  int dim = 0;
  std::complex<double> z;
  Vector components;
  double tail_bound = 0.0;  // 1 - |projection|^2, the weight lost to truncation
};

CoherentVector make_coherent(int n, std::complex<double> z);
std::complex<double> expectation(const CoherentVector& v, const Matrix& m);

// Matrix image of an operator word (letters applied left to right as written)
// and of a normally ordered polynomial.
Matrix word_matrix(const BosonWord& w, int n);
Matrix normal_polynomial_matrix(const NormalPolynomial& p, int n);

struct TraceResult {
  double value = 0.0;
  double imag_residue = 0.0;
};

TraceResult trace_real(const Matrix& m);

// builder(n) must return the matrix under study at truncation n. Both
// routines double n until two consecutive results agree to rel_tol, and
// throw NonConvergenceError past n_max.
using MatrixBuilder = std::function<Matrix(int)>;

double trace_thermal(const MatrixBuilder& builder, double rel_tol = 1e-8, int n_start = 100,
                     int n_max = 800);
std::complex<double> coherent_matrix_expectation(const MatrixBuilder& builder,
                                                 std::complex<double> z, double rel_tol = 1e-8,
                                                 int n_start = 100, int n_max = 800);

}  // namespace bellpf::fock
