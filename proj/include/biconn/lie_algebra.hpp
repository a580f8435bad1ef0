#ifndef BICONN_LIE_ALGEBRA_HPP
#define BICONN_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "biconn/clifford.hpp"
#include "biconn/exact_matrix.hpp"
#include "biconn/gaussian.hpp"
#include "biconn/rational.hpp"

namespace biconn {

/// Ordered generator index (a, b), 0 <= a < b <= n, lexicographic enumeration.
struct BasisIndex {
  int a, b;

  BasisIndex(int a_, int b_) : a(a_), b(b_) {
    if (a < 0 || b <= a) throw std::invalid_argument("basis index must satisfy 0 <= a < b");
  }
  bool operator==(const BasisIndex&) const = default;
};

inline std::vector<BasisIndex> basis_indices(int n) {
  std::vector<BasisIndex> out;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

/// Spatial pairs only: 1 <= i < j <= n, the so(n) subalgebra index set.
inline std::vector<BasisIndex> spatial_indices(int n) {
  std::vector<BasisIndex> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

/// Element of so(n,1) as an exact (n+1)x(n+1) matrix, row/column indices
/// 0..n, acting on column vectors. eta = diag(-1, +1, ..., +1).
struct LieElement {
  int n;
  ExactMatrix m;

  explicit LieElement(int n_) : n(n_), m(n_ + 1, n_ + 1) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  }

  bool operator==(const LieElement& o) const { return n == o.n && m == o.m; }
  bool is_zero() const { return m.is_zero(); }

  LieElement operator+(const LieElement& o) const {
    LieElement r(n);
    r.m = m + o.m;
    return r;
  }
  LieElement operator*(const Rational& c) const {
    LieElement r(n);
    r.m = m * c;
    return r;
  }

  /// Entrywise check of M^T eta + eta M = 0.
  bool eta_antisymmetric() const {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        Rational lhs = m(b, a) * eta(b) + eta(a) * m(a, b);
        if (lhs != 0) return false;
      }
    return true;
  }

  static int eta(int a) { return a == 0 ? -1 : 1; }
};

/// T_ab acting by T_ab(e_c) = (1/2)(eta_ac e_b - eta_bc e_a).
inline LieElement generator(int n, const BasisIndex& idx) {
  if (idx.b > n) throw std::out_of_range("generator index out of range");
  LieElement t(n);
  t.m(idx.b, idx.a) = Rational(LieElement::eta(idx.a), 2);
  t.m(idx.a, idx.b) = Rational(-LieElement::eta(idx.b), 2);
  return t;
}

inline LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.n != y.n) throw std::invalid_argument("dimension mismatch");
  LieElement r(x.n);
  r.m = commutator(x.m, y.m);
  return r;
}

/// Coordinates of an eta-antisymmetric matrix in the T_ab basis: since T_ab
/// has its only entries at (b,a) and (a,b), c_ab = 2 eta_aa M(b,a).
inline std::vector<Rational> t_coordinates(const LieElement& x) {
  std::vector<Rational> c;
  for (const auto& idx : basis_indices(x.n))
    c.push_back(Rational(2 * LieElement::eta(idx.a)) * x.m(idx.b, idx.a));
  return c;
}

inline LieElement from_t_coordinates(int n, const std::vector<Rational>& c) {
  auto idx = basis_indices(n);
  if (c.size() != idx.size()) throw std::invalid_argument("coordinate length mismatch");
  LieElement x(n);
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (c[k] != 0) x = x + generator(n, idx[k]) * c[k];
  return x;
}

// ---------------------------------------------------------------------------
// Structure reports
// ---------------------------------------------------------------------------

struct IsoReport {
  bool passed = false;
  int n = 0;
  std::optional<Rational> alpha;  // the scalar with alpha * e_a e_b |-> T_ab
  std::string detail;
};

/// Find the scalar alpha such that alpha * e_a e_b |-> T_ab intertwines
/// Clifford commutators with matrix brackets, then verify bracket
/// preservation on every basis pair.
inline IsoReport clifford_matrix_iso_check(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  IsoReport rep;
  rep.n = n;
  Signature sig(n, 1);
  auto idx = basis_indices(n);
  auto cl_basis = spin_algebra_basis(sig);  // B_ab = (1/2) e_a e_b, same order
  std::vector<LieElement> t_basis;
  for (const auto& i : idx) t_basis.push_back(generator(n, i));

  // Coordinates of a grade-2 multivector in the B_ab basis.
  auto b_coords = [&](const Multivector& x) {
    std::vector<Rational> c(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Blade bl = (Blade(1) << idx[k].a) | (Blade(1) << idx[k].b);
      c[k] = x.coeff(bl) * 2;  // basis element carries coefficient 1/2
    }
    return c;
  };

  // B_ab |-> c T_ab is a homomorphism iff for every pair the Clifford
  // bracket coordinates equal c times the matrix bracket coordinates.
  std::optional<Rational> c_fit;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      auto cl = b_coords(commutator(cl_basis[p], cl_basis[q]));
      auto mt = t_coordinates(bracket(t_basis[p], t_basis[q]));
      for (std::size_t k = 0; k < cl.size(); ++k) {
        if (cl[k] == 0 && mt[k] == 0) continue;
        if (mt[k] == 0) {
          rep.detail = "no single scaling works";
          return rep;
        }
        Rational c = cl[k] / mt[k];
        if (!c_fit) c_fit = c;
        if (*c_fit != c) {
          rep.detail = "inconsistent scaling across bracket pairs";
          return rep;
        }
      }
    }
  if (!c_fit || *c_fit == 0) {
    rep.detail = "degenerate bracket tables";
    return rep;
  }
  // phi(B_ab) = c T_ab with B_ab = (1/2) e_a e_b, so alpha = 1 / (2c).
  rep.alpha = Rational(1) / (Rational(2) * *c_fit);
  rep.passed = true;
  std::ostringstream os;
  os << "alpha = " << *rep.alpha;
  rep.detail = os.str();
  return rep;
}

struct PauliReport {
  bool passed = false;
  int pairs_checked = 0;
  int bracket_sign = 0;  // s with P([X,Y]) = s [P(X), P(Y)] on every pair
  std::string detail;
};

/// Image of T_ab under the n=3 assignment T_0k = -(1/4) sigma_k,
/// T_ij = (1/4) eps_ij^k tau_k.
inline GaussianMatrix2 pauli_image(const BasisIndex& idx) {
  if (idx.a == 0) return pauli_sigma(idx.b) * GaussianRational(Rational(-1, 4));
  // eps_ij^k with (i,j) = (1,2),(1,3),(2,3) -> k = 3, -2, 1
  int i = idx.a, j = idx.b;
  int k = 6 - i - j;
  int eps = (i == 1 && j == 3) ? -1 : 1;
  return pauli_tau(k) * GaussianRational(Rational(eps, 4));
}

/// Check that T_ab |-> pauli_image(T_ab) intertwines so(3,1) brackets with
/// 2x2 matrix brackets on all 105 unordered basis pairs, in exact
/// Gaussian-rational arithmetic. The assignment fixes the matrix orientation
/// only up to one global sign (acting on columns vs rows flips every
/// structure constant), so the check solves for the single s in {+1, -1}
/// with P([X,Y]) = s [P(X), P(Y)] and demands it is the same on every pair.
inline PauliReport pauli_structure_check() {
  PauliReport rep;
  const int n = 3;
  auto idx = basis_indices(n);
  std::vector<LieElement> t_basis;
  std::vector<GaussianMatrix2> p_basis;
  for (const auto& i : idx) {
    t_basis.push_back(generator(n, i));
    p_basis.push_back(pauli_image(i));
  }
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      auto coords = t_coordinates(bracket(t_basis[p], t_basis[q]));
      GaussianMatrix2 lhs;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0) lhs = lhs + p_basis[k] * GaussianRational(coords[k]);
      GaussianMatrix2 rhs = commutator(p_basis[p], p_basis[q]);
      ++rep.pairs_checked;
      if (lhs.is_zero() && rhs.is_zero()) continue;
      int sign = 0;
      if ((lhs - rhs).is_zero()) sign = 1;
      if ((lhs + rhs).is_zero()) sign = -1;
      if (sign == 0 || (rep.bracket_sign != 0 && sign != rep.bracket_sign)) {
        std::ostringstream os;
        os << "mismatch at pair (" << idx[p].a << "," << idx[p].b << "),(" << idx[q].a
           << "," << idx[q].b << ")";
        rep.detail = os.str();
        return rep;
      }
      rep.bracket_sign = sign;
    }
  rep.passed = rep.bracket_sign != 0;
  std::ostringstream os;
  os << "all pairs consistent with bracket orientation " << (rep.bracket_sign > 0 ? "+" : "-")
     << "1";
  rep.detail = os.str();
  return rep;
}

struct StabilizerReport {
  bool passed = false;
  int annihilating = 0;  // generators with T x0 = 0, expected n(n-1)/2
  int moving = 0;        // generators with T x0 != 0, expected n
  std::string detail;
};

/// Infinitesimal stabilizer of x0 = (1, 0, ..., 0): every spatial generator
/// must annihilate x0 exactly, every boost generator must move it.
inline StabilizerReport stabilizer_check(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  StabilizerReport rep;
  for (const auto& idx : basis_indices(n)) {
    LieElement t = generator(n, idx);
    bool zero = true;
    for (int d = 0; d <= n; ++d)
      if (t.m(d, 0) != 0) zero = false;  // image of x0 is column 0
    if (zero)
      ++rep.annihilating;
    else
      ++rep.moving;
    if (zero != (idx.a != 0)) {
      rep.detail = "unexpected stabilizer behavior";
      return rep;
    }
  }
  rep.passed = rep.annihilating == n * (n - 1) / 2 && rep.moving == n;
  if (rep.passed) rep.detail = "stabilizer = span of spatial generators";
  return rep;
}

// ---------------------------------------------------------------------------
// Hyperboloid orbit (floating point)
// ---------------------------------------------------------------------------

struct HyperboloidPoint {
  // extended precision: at rapidity chi the coordinates grow like cosh(chi),
  // and the quadric residual would otherwise be dominated by coordinate
  // rounding of order ulp(t^2)
  long double t;
  std::vector<long double> x;

  double quadric_residual() const {
    long double s = -t * t + 1.0L;
    for (long double xi : x) s += xi * xi;
    return double(s);
  }
};

/// Exponentiate a real combination of generators and apply it to the apex
/// x0 = (1, 0, ..., 0). Parameters are indexed like basis_indices(n); the
/// generators are rescaled so that the coefficient on a (0,k) pair is the
/// standard rapidity (boost (cosh, sinh)) and on an (i,j) pair the standard
/// rotation angle.
inline HyperboloidPoint orbit_map(int n, const std::vector<double>& params) {
  auto idx = basis_indices(n);
  if (params.size() != idx.size()) throw std::invalid_argument("parameter count mismatch");
  for (double p : params)
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite orbit parameter");

  // long double keeps the exponential's rounding below the quadric tolerance
  // even at large rapidity, where the entries grow like cosh of the boost norm
  using MatrixXl = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  MatrixXl gen = MatrixXl::Zero(n + 1, n + 1);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& [a, b] = idx[k];
    if (a == 0) {
      // standard boost generator: M(0,b) = M(b,0) = 1 (equals -2 T_0b)
      gen(0, b) += params[k];
      gen(b, 0) += params[k];
    } else {
      // standard rotation generator: M(b,a) = 1, M(a,b) = -1 (equals 2 T_ab)
      gen(b, a) += params[k];
      gen(a, b) -= params[k];
    }
  }
  MatrixXl g = gen.exp();
  HyperboloidPoint p;
  p.t = g(0, 0);
  p.x.resize(n);
  for (int i = 1; i <= n; ++i) p.x[i - 1] = g(i, 0);
  return p;
}

}  // namespace biconn

#endif
