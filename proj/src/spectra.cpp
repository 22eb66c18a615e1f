#include "ngcheck/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ngcheck {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-14;

}  // namespace

SymMatrix::SymMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 1 || n > Graph::kMaxOrder) throw std::invalid_argument("matrix dimension outside [1, 62]");
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("matrix entries must be finite");
  data_[static_cast<std::size_t>(i) * n_ + j] = value;
  data_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SymMatrix combinatorial_laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

SymMatrix normalized_laplacian(const Graph& g) {
  const int n = g.order();
  SymMatrix m(n);
  std::vector<double> inv_sqrt(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d > 0) {
      inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(d));
      m.set(v, v, 1.0);
    }
  }
  for (auto [u, v] : g.edges()) m.set(u, v, -inv_sqrt[u] * inv_sqrt[v]);
  return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

std::vector<double> eigenvalues(const SymMatrix& m) {
  const int n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double stop = kOffDiagonalThreshold * std::max(1.0, std::sqrt(frob));

  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (std::sqrt(2.0 * off) <= stop) break;
    if (sweep == kMaxSweeps) {
      throw EigenSolverError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                             " sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

SpectralSummary normalized_spectrum(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("spectral summary needs n >= 2");
  SpectralSummary s;
  s.eigenvalues = eigenvalues(normalized_laplacian(g));
  s.connected = is_connected(g);
  s.lambda2 = s.connected ? s.eigenvalues[1] : 0.0;
  return s;
}

SpectralSummary combinatorial_spectrum(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("spectral summary needs n >= 2");
  SpectralSummary s;
  s.eigenvalues = eigenvalues(combinatorial_laplacian(g));
  s.connected = is_connected(g);
  s.lambda2 = s.connected ? s.eigenvalues[1] : 0.0;
  return s;
}

double lambda2(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("lambda2 needs n >= 2");
  if (!is_connected(g)) return 0.0;
  return eigenvalues(normalized_laplacian(g))[1];
}

double mu2(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("mu2 needs n >= 2");
  if (!is_connected(g)) return 0.0;
  return eigenvalues(combinatorial_laplacian(g))[1];
}

std::vector<double> join_regular_spectrum_oracle(int k, std::span<const double> spectrum1,
                                                 std::span<const double> spectrum2, int n1, int n2,
                                                 double tol) {
  if (k < 0) throw std::invalid_argument("regularity degree must be nonnegative");
  const double kk = static_cast<double>(k);
  const double scale = kk + 1.0;

  std::vector<double> out{0.0, 1.0 / scale, 1.0 + 1.0 / scale};
  auto consume = [&](std::span<const double> spectrum, int order, const char* which) {
    if (order < 1 || static_cast<int>(spectrum.size()) != order) {
      throw std::invalid_argument(std::string("component ") + which + " spectrum length != order");
    }
    if (k > order - 1) throw std::invalid_argument(std::string("component ") + which + " too small for k");
    bool removed = false;
    for (double theta : spectrum) {
      if (std::abs(theta) > kk + tol) {
        throw std::invalid_argument(std::string("component ") + which + " eigenvalue exceeds k");
      }
      if (!removed && std::abs(theta - kk) <= tol) {
        removed = true;
        continue;
      }
      out.push_back(1.0 - theta / scale);
    }
    if (!removed) {
      throw std::invalid_argument(std::string("component ") + which + " spectrum lacks eigenvalue k");
    }
  };
  consume(spectrum1, n1, "1");
  consume(spectrum2, n2, "2");
  std::sort(out.begin(), out.end());
  return out;
}

bool complement_mu_identity_check(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("identity check needs n >= 2");
  const auto mu = eigenvalues(combinatorial_laplacian(g));
  const auto mu_c = eigenvalues(combinatorial_laplacian(complement(g)));
  // 1-based mu_i(G^c) = n - mu_{n-i+2}(G)  ->  0-based mu_c[i] = n - mu[n - i].
  for (int i = 1; i < n; ++i) {
    if (std::abs(mu_c[i] - (n - mu[n - i])) > tol) return false;
  }
  return true;
}

}  // namespace ngcheck
