#ifndef BICONN_HOLONOMY_HPP
#define BICONN_HOLONOMY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "biconn/connection.hpp"
#include "biconn/field.hpp"

namespace biconn {

using SU2Element = Eigen::Matrix2cd;

inline double su2_unitarity_defect(const SU2Element& u) {
  return ((u.adjoint() * u) - SU2Element::Identity()).cwiseAbs().maxCoeff();
}

inline double su2_det_defect(const SU2Element& u) { return std::abs(u.determinant() - 1.0); }

/// Project a near-SU(2) matrix back onto SU(2): an exact SU(2) matrix has the
/// form [[a, b], [-conj(b), conj(a)]] with |a|^2 + |b|^2 = 1.
inline SU2Element su2_renormalize(const SU2Element& u) {
  std::complex<double> a = (u(0, 0) + std::conj(u(1, 1))) / 2.0;
  std::complex<double> b = (u(0, 1) - std::conj(u(1, 0))) / 2.0;
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  SU2Element r;
  r << a, b, -std::conj(b), std::conj(a);
  return r;
}

/// exp(-(i/2) c . sigma) in closed form: cos(t) I - i sin(t) (c/|c|) . sigma
/// with t = |c| / 2. This is the segment transporter for a connection valued
/// in the {(1/2) tau_k} basis, tau_k = i sigma_k.
inline SU2Element su2_exp_minus_half(const std::array<double, 3>& c) {
  const std::complex<double> I(0, 1);
  double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  SU2Element r = SU2Element::Identity() * std::cos(norm / 2);
  if (norm > 0) {
    double f = std::sin(norm / 2) / norm;
    // n . sigma entries, scaled
    SU2Element ns;
    ns << c[2], std::complex<double>(c[0], -c[1]), std::complex<double>(c[0], c[1]), -c[2];
    r -= I * f * ns;
  }
  return r;
}

/// Closed discretized loop in chart coordinates. Points are in physical
/// units (grid point i along axis mu sits at i * spacing[mu]).
struct LoopPath {
  std::vector<std::vector<double>> points;

  void validate(std::size_t axes) const {
    if (points.size() < 2) throw std::invalid_argument("loop needs at least 2 points");
    for (const auto& p : points)
      if (p.size() != axes) throw std::invalid_argument("loop point dimension mismatch");
    if (points.front() != points.back()) throw std::invalid_argument("open path: loop must close");
  }

  LoopPath reversed() const {
    LoopPath r;
    r.points.assign(points.rbegin(), points.rend());
    return r;
  }
};

namespace detail {

/// Multilinear interpolation of component (c, mu) at chart position x.
inline double interpolate(const ComponentField<double>& f, std::size_t c, std::size_t mu,
                          const std::vector<double>& x) {
  const auto& g = f.grid;
  const std::size_t ax = g.axes();
  std::vector<std::size_t> base(ax);
  std::vector<double> w(ax, 0.0);
  for (std::size_t a = 0; a < ax; ++a) {
    if (g.dims[a] == 1) continue;  // constant along this axis
    double u = x[a] / g.spacing[a];
    if (u < -1e-9 || u > double(g.dims[a] - 1) + 1e-9)
      throw std::invalid_argument("loop exits grid");
    double fl = std::floor(u);
    std::size_t i = std::size_t(std::max(0.0, std::min(fl, double(g.dims[a] - 2))));
    base[a] = i;
    w[a] = u - double(i);
  }
  double out = 0;
  const std::size_t corners = std::size_t(1) << ax;
  std::vector<std::size_t> idx(ax);
  for (std::size_t corner = 0; corner < corners; ++corner) {
    double weight = 1;
    for (std::size_t a = 0; a < ax; ++a) {
      bool hi = corner & (std::size_t(1) << a);
      if (g.dims[a] == 1) {
        if (hi) weight = 0;
        idx[a] = 0;
      } else {
        weight *= hi ? w[a] : 1.0 - w[a];
        idx[a] = base[a] + (hi ? 1 : 0);
      }
    }
    if (weight != 0) out += weight * f.at(c, mu, g.linear(idx));
  }
  return out;
}

}  // namespace detail

/// Path-ordered product of segment exponentials
/// exp(-A^k_mu(midpoint) dx^mu (1/2) tau_k) over the loop segments, composed
/// in traversal order (later segments multiply on the left). Requires n = 3.
inline SU2Element holonomy(const BIField<double>& bi, const LoopPath& loop) {
  if (bi.n != 3) throw std::invalid_argument("holonomy needs n = 3 (su(2)-valued A)");
  loop.validate(bi.A.grid.axes());
  SU2Element u = SU2Element::Identity();
  int since_renorm = 0;
  const std::size_t ax = bi.A.grid.axes();
  for (std::size_t s = 0; s + 1 < loop.points.size(); ++s) {
    const auto& p = loop.points[s];
    const auto& q = loop.points[s + 1];
    std::vector<double> mid(ax);
    for (std::size_t a = 0; a < ax; ++a) mid[a] = 0.5 * (p[a] + q[a]);
    std::array<double, 3> c{0, 0, 0};
    for (int k = 0; k < 3; ++k)
      for (std::size_t mu = 0; mu < ax; ++mu)
        c[k] += detail::interpolate(bi.A, k, mu, mid) * (q[mu] - p[mu]);
    u = su2_exp_minus_half(c) * u;
    if (++since_renorm == 64) {
      u = su2_renormalize(u);
      since_renorm = 0;
    }
  }
  return su2_renormalize(u);
}

struct HolonomySweepEntry {
  double beta;
  SU2Element u;
  std::complex<double> trace;
};

/// Holonomy of A(beta) over the same loop for a sweep of beta values; the
/// concrete handle on how holonomies depend on the BI parameter.
inline std::vector<HolonomySweepEntry> compare_holonomies(const SpinConnectionField<double>& om,
                                                          const std::vector<double>& betas,
                                                          const LoopPath& loop) {
  std::vector<HolonomySweepEntry> out;
  for (double b : betas) {
    auto bi = decompose(om, b);
    SU2Element u = holonomy(bi, loop);
    out.push_back({b, u, u.trace()});
  }
  return out;
}

}  // namespace biconn

#endif
