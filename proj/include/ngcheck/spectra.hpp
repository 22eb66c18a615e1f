#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ngcheck/graph.hpp"

namespace ngcheck {

/// Dense symmetric matrix, row-major; set() writes both triangles.
class SymMatrix {
 public:
  explicit SymMatrix(int n);
  static SymMatrix identity(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double value);
  double trace() const;
  std::span<const double> data() const { return data_; }

 private:
  int n_;
  std::vector<double> data_;
};

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralSummary {
  std::vector<double> eigenvalues;  // nondecreasing
  double lambda2 = 0.0;
  bool connected = false;
};

SymMatrix combinatorial_laplacian(const Graph& g);

/// D^{-1/2} (D - A) D^{-1/2}; an isolated vertex gets a zero row and column,
/// diagonal included, so it contributes one zero eigenvalue.
SymMatrix normalized_laplacian(const Graph& g);

/// All eigenvalues in nondecreasing order via cyclic Jacobi rotations.
/// Converges when the off-diagonal Frobenius norm drops below 1e-14 times
/// max(1, ||m||_F); throws EigenSolverError after 100 sweeps.
std::vector<double> eigenvalues(const SymMatrix& m);

SpectralSummary normalized_spectrum(const Graph& g);
SpectralSummary combinatorial_spectrum(const Graph& g);

/// Second-smallest normalized Laplacian eigenvalue; exactly 0.0 when g is disconnected.
double lambda2(const Graph& g);
/// Second-smallest combinatorial Laplacian eigenvalue; exactly 0.0 when g is disconnected.
double mu2(const Graph& g);

/// Closed-form normalized spectrum of K1 joined with C1 + C2, where C1 and C2
/// are connected k-regular graphs of orders n1, n2 with the given adjacency
/// spectra. Returns {0, 1/(k+1), 1 + 1/(k+1)} together with 1 - theta/(k+1)
/// for every adjacency eigenvalue theta left after removing one copy of k
/// from each component spectrum; sorted, length n1 + n2 + 1.
/// Throws std::invalid_argument if a spectrum does not fit k-regularity.
std::vector<double> join_regular_spectrum_oracle(int k, std::span<const double> spectrum1,
                                                 std::span<const double> spectrum2, int n1, int n2,
                                                 double tol = 1e-9);

SymMatrix adjacency_matrix(const Graph& g);

/// mu_i(G^c) = n - mu_{n-i+2}(G) for i = 2..n (1-based), within tol.
bool complement_mu_identity_check(const Graph& g, double tol = 1e-8);

}  // namespace ngcheck
