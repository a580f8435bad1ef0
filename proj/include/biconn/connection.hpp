#ifndef BICONN_CONNECTION_HPP
#define BICONN_CONNECTION_HPP

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biconn/field.hpp"
#include "biconn/gaussian.hpp"
#include "biconn/lie_algebra.hpp"
#include "biconn/rational.hpp"
#include "biconn/reductive.hpp"

namespace biconn {

/// Spin connection coefficients omega^{ab}_mu on a chart grid. Antisymmetry
/// is structural: only pairs a < b are stored, in the lex order of
/// basis_indices(n). Scalar type T is double in pipelines and Rational in
/// exact formula checks.
template <class T>
struct SpinConnectionField {
  int n = 0;
  ComponentField<T> f;  // comps = n(n+1)/2 pairs, dirs = n+1

  SpinConnectionField() = default;
  SpinConnectionField(int n_, Grid grid)
      : n(n_), f(std::move(grid), std::size_t(n_) * (n_ + 1) / 2, std::size_t(n_) + 1) {
    if (grid_n_mismatch()) throw std::invalid_argument("grid dimension mismatch");
  }

  bool grid_n_mismatch() const { return f.grid.n != n; }

  /// Index of pair (a, b), a < b, in lex order over 0..n.
  std::size_t pair_index(int a, int b) const {
    if (a < 0 || b <= a || b > n) throw std::out_of_range("bad pair index");
    // pairs (0,1)..(0,n), (1,2)..: offset of row a is sum of (n - t) for t < a
    std::size_t off = 0;
    for (int t = 0; t < a; ++t) off += std::size_t(n - t);
    return off + std::size_t(b - a - 1);
  }

  T& omega(int a, int b, std::size_t mu, std::size_t p) { return f.at(pair_index(a, b), mu, p); }
  const T& omega(int a, int b, std::size_t mu, std::size_t p) const {
    return f.at(pair_index(a, b), mu, p);
  }
};

/// The (A, K) pair with BI parameter beta. For n = 3, A is in the su(2)
/// basis {(1/2) tau_k} with 3 components; for n > 3 it is the raw omega^{ij}
/// block with n(n-1)/2 components. K always has n components K^k = omega^{0k}.
template <class T>
struct BIField {
  int n = 0;
  T beta{};
  ComponentField<T> A;
  ComponentField<T> K;

  BIField() = default;
  BIField(int n_, T beta_, Grid grid)
      : n(n_), beta(beta_),
        A(grid, n_ == 3 ? 3 : std::size_t(n_) * (n_ - 1) / 2, std::size_t(n_) + 1),
        K(std::move(grid), std::size_t(n_), std::size_t(n_) + 1) {}
};

namespace detail {
/// eps_ij^k for 1 <= i < j <= 3 paired with the complementary k.
inline int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int perm = (j - i) * (k - j) * (k - i);
  return perm > 0 ? 1 : -1;
}
}  // namespace detail

/// A^k = (1/2) eps_ij^k omega^ij + beta omega^0k (full Einstein sum over i,j,
/// equivalently a plain sum over i < j), K^k = omega^0k. For n > 3 the
/// formula degenerates to the block split with beta forced to 0.
template <class T>
BIField<T> decompose(const SpinConnectionField<T>& om, const T& beta) {
  const int n = om.n;
  if (n > 3 && !(beta == T{}))
    throw rigid_splitting_error("rigid splitting: beta must be 0 for n > 3");
  BIField<T> out(n, beta, om.f.grid);
  const std::size_t np = om.f.grid.npoints();
  for (std::size_t mu = 0; mu <= std::size_t(n); ++mu)
    for (std::size_t p = 0; p < np; ++p) {
      for (int k = 1; k <= n; ++k) out.K.at(k - 1, mu, p) = om.omega(0, k, mu, p);
      if (n == 3) {
        for (int k = 1; k <= 3; ++k) {
          T a{};
          for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
              int e = detail::eps3(i, j, k);
              if (e == 1)
                a = a + om.omega(i, j, mu, p);
              else if (e == -1)
                a = a - om.omega(i, j, mu, p);
            }
          a = a + beta * om.omega(0, k, mu, p);
          out.A.at(k - 1, mu, p) = a;
        }
      } else {
        std::size_t c = 0;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) out.A.at(c++, mu, p) = om.omega(i, j, mu, p);
      }
    }
  return out;
}

/// Exact inverse of decompose: omega^0k = K^k and, for n = 3,
/// omega^ij = eps^ij_k (A^k - beta K^k).
template <class T>
SpinConnectionField<T> recompose(const BIField<T>& pair) {
  const int n = pair.n;
  SpinConnectionField<T> om(n, pair.A.grid);
  const std::size_t np = pair.A.grid.npoints();
  for (std::size_t mu = 0; mu <= std::size_t(n); ++mu)
    for (std::size_t p = 0; p < np; ++p) {
      for (int k = 1; k <= n; ++k) om.omega(0, k, mu, p) = pair.K.at(k - 1, mu, p);
      if (n == 3) {
        for (int i = 1; i <= 3; ++i)
          for (int j = i + 1; j <= 3; ++j) {
            int k = 6 - i - j;
            int e = detail::eps3(i, j, k);
            T v = pair.A.at(k - 1, mu, p) - pair.beta * pair.K.at(k - 1, mu, p);
            om.omega(i, j, mu, p) = e == 1 ? v : T{} - v;
          }
      } else {
        std::size_t c = 0;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) om.omega(i, j, mu, p) = pair.A.at(c++, mu, p);
      }
    }
  return om;
}

struct Su2BasisReport {
  bool passed = false;
  int draws_checked = 0;
  bool intermediate_factor_ok = false;  // the 2 omega^{0k} (x) T_0k step
  std::string detail;
};

/// Machine-checked version of the change of basis from {T_ab} coordinates to
/// the ({(1/2) tau_k}, {-(1/2)(sigma_k + beta tau_k)}) coordinates for n = 3:
/// evaluates both routes in exact Gaussian-rational arithmetic on random
/// rational omega draws and compares.
inline Su2BasisReport su2_basis_report(unsigned seed = 20240811, int draws = 100) {
  Su2BasisReport rep;
  std::mt19937_64 rng(seed);
  const int n = 3;
  auto idx = basis_indices(n);

  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> om(idx.size());
    for (auto& q : om) q = random_rational(rng);
    Rational beta = random_rational(rng);

    // Route 1: omega = sum_{a<b} 2 omega^{ab} T_ab through the Pauli images.
    GaussianMatrix2 lhs;
    bool boost_factor_ok = true;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      lhs = lhs + pauli_image(idx[t]) * GaussianRational(om[t] * 2);
      if (idx[t].a == 0) {
        // the 2 omega^{0k} (x) T_0k intermediate of the displayed computation
        GaussianMatrix2 full_sum = pauli_image(idx[t]) * GaussianRational(om[t] * 2);
        GaussianMatrix2 direct =
            pauli_sigma(idx[t].b) * GaussianRational(om[t] * Rational(-1, 2));
        if (!(full_sum - direct).is_zero()) boost_factor_ok = false;
      }
    }

    // Route 2: K^k (-(1/2))(sigma_k + beta tau_k) + A^k ((1/2) tau_k).
    GaussianMatrix2 rhs;
    for (int k = 1; k <= 3; ++k) {
      Rational K = om[k - 1];  // pairs (0,1),(0,2),(0,3) lead the lex order
      Rational A = beta * K;
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
          int e = detail::eps3(i, j, k);
          if (e != 0) {
            // pair (i,j) sits at lex index 3 + offset
            std::size_t t = 3 + (i == 1 ? std::size_t(j - 2) : 2);
            A += Rational(e) * om[t];
          }
        }
      GaussianMatrix2 mb = (pauli_sigma(k) + pauli_tau(k) * GaussianRational(beta)) *
                           GaussianRational(Rational(-1, 2));
      rhs = rhs + mb * GaussianRational(K) + pauli_tau(k) * GaussianRational(A * Rational(1, 2));
    }

    ++rep.draws_checked;
    rep.intermediate_factor_ok = boost_factor_ok;
    if (!(lhs - rhs).is_zero() || !boost_factor_ok) {
      std::ostringstream os;
      os << "identity failed on draw " << d;
      rep.detail = os.str();
      return rep;
    }
  }
  rep.passed = true;
  rep.detail = "basis change identity holds on all draws";
  return rep;
}

}  // namespace biconn

#endif
