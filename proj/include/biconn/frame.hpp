#ifndef BICONN_FRAME_HPP
#define BICONN_FRAME_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "biconn/connection.hpp"
#include "biconn/field.hpp"

namespace biconn {

/// Sampled orthonormal coframe e^a_mu (and its inverse frame e_a^mu) on a
/// chart grid, doubles. The coframe is the stored input; the frame is
/// recovered pointwise by matrix inversion.
struct FrameField {
  int n = 0;
  ComponentField<double> coframe;  // comps = frame index a, dirs = mu
  ComponentField<double> frame;    // e_a^mu, same layout

  FrameField() = default;
  FrameField(int n_, Grid grid)
      : n(n_), coframe(grid, std::size_t(n_) + 1, std::size_t(n_) + 1),
        frame(std::move(grid), std::size_t(n_) + 1, std::size_t(n_) + 1) {}

  /// Invert the coframe at every point and check nondegeneracy and duality.
  void finalize(double det_tol = 1e-8, double duality_tol = 1e-10) {
    const int m = n + 1;
    const std::size_t np = coframe.grid.npoints();
    Eigen::MatrixXd e(m, m);
    for (std::size_t p = 0; p < np; ++p) {
      for (int a = 0; a < m; ++a)
        for (int mu = 0; mu < m; ++mu) e(a, mu) = coframe.at(a, mu, p);
      if (std::abs(e.determinant()) <= det_tol)
        throw std::invalid_argument("degenerate frame at grid point " + std::to_string(p));
      Eigen::MatrixXd einv = e.inverse();  // einv(mu, a) = e_a^mu
      for (int a = 0; a < m; ++a)
        for (int mu = 0; mu < m; ++mu) frame.at(a, mu, p) = einv(mu, a);
      if (((e * einv) - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > duality_tol)
        throw std::invalid_argument("frame/coframe duality violated");
    }
  }
};

/// g_{mu nu} per grid point, symmetric, doubles.
struct MetricField {
  int n = 0;
  ComponentField<double> g;  // comps = mu, dirs = nu (symmetric)

  MetricField() = default;
  MetricField(int n_, Grid grid)
      : n(n_), g(std::move(grid), std::size_t(n_) + 1, std::size_t(n_) + 1) {}

  /// One negative and n positive eigenvalues at every point.
  bool lorentzian_signature() const {
    const int m = n + 1;
    Eigen::MatrixXd gp(m, m);
    for (std::size_t p = 0; p < g.grid.npoints(); ++p) {
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) gp(mu, nu) = g.at(mu, nu, p);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gp, Eigen::EigenvaluesOnly);
      int neg = 0;
      for (int i = 0; i < m; ++i)
        if (es.eigenvalues()[i] < 0) ++neg;
      if (neg != 1) return false;
    }
    return true;
  }
};

/// g_{mu nu} = eta_ab e^a_mu e^b_nu pointwise.
inline MetricField metric_from_frame(const FrameField& F) {
  const int m = F.n + 1;
  MetricField out(F.n, F.coframe.grid);
  for (std::size_t p = 0; p < F.coframe.grid.npoints(); ++p)
    for (int mu = 0; mu < m; ++mu)
      for (int nu = 0; nu < m; ++nu) {
        double s = 0;
        for (int a = 0; a < m; ++a)
          s += LieElement::eta(a) * F.coframe.at(a, mu, p) * F.coframe.at(a, nu, p);
        out.g.at(mu, nu, p) = s;
      }
  return out;
}

namespace detail {

/// d/dx_axis of component (c, mu) of a field, 2nd order: central in the
/// interior, one-sided at the boundary, zero along size-1 axes.
inline double fd_partial(const ComponentField<double>& f, std::size_t c, std::size_t mu,
                         const std::vector<std::size_t>& idx, std::size_t axis) {
  const auto& g = f.grid;
  const std::size_t d = g.dims[axis];
  if (d == 1) return 0.0;
  const double h = g.spacing[axis];
  std::vector<std::size_t> i = idx;
  auto val = [&](std::size_t pos) {
    i[axis] = pos;
    return f.at(c, mu, g.linear(i));
  };
  const std::size_t k = idx[axis];
  if (k == 0) return (-3 * val(0) + 4 * val(1) - val(2)) / (2 * h);
  if (k == d - 1) return (3 * val(d - 1) - 4 * val(d - 2) + val(d - 3)) / (2 * h);
  return (val(k + 1) - val(k - 1)) / (2 * h);
}

}  // namespace detail

/// Unique metric-compatible torsion-free spin connection from the coframe:
///   omega_mu^{ab} = (1/2) e^{a nu} C^b_{mu nu} - (1/2) e^{b nu} C^a_{mu nu}
///                 - (1/2) e^{a nu} e^{b sigma} C^c_{nu sigma} e_{c mu}
/// with C^a_{mu nu} = d_mu e^a_nu - d_nu e^a_mu the anholonomy two-form of
/// the coframe; frame indices raised and lowered with eta. Index conventions
/// match the T_ab basis of the lie algebra module (a < b stored).
inline SpinConnectionField<double> spin_connection_from_frame(const FrameField& F) {
  const int m = F.n + 1;
  const auto& g = F.coframe.grid;
  for (std::size_t a = 0; a < g.axes(); ++a)
    if (g.dims[a] != 1 && g.dims[a] < 5)
      throw std::invalid_argument("grid axes need 1 or >= 5 points for the stencil");

  SpinConnectionField<double> out(F.n, g);
  std::vector<double> C(m * m * m);  // C^a_{mu nu}
  auto cidx = [m](int a, int mu, int nu) { return (a * m + mu) * m + nu; };

  for (std::size_t p = 0; p < g.npoints(); ++p) {
    auto idx = g.unlinear(p);
    for (int a = 0; a < m; ++a)
      for (int mu = 0; mu < m; ++mu)
        for (int nu = mu + 1; nu < m; ++nu) {
          double c = detail::fd_partial(F.coframe, a, nu, idx, mu) -
                     detail::fd_partial(F.coframe, a, mu, idx, nu);
          C[cidx(a, mu, nu)] = c;
          C[cidx(a, nu, mu)] = -c;
        }
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int mu = 0; mu < m; ++mu) {
          double s = 0;
          for (int nu = 0; nu < m; ++nu) {
            // e^{a nu} = eta^{aa} e_a^nu (diagonal eta)
            s += 0.5 * LieElement::eta(a) * F.frame.at(a, nu, p) * C[cidx(b, mu, nu)];
            s -= 0.5 * LieElement::eta(b) * F.frame.at(b, nu, p) * C[cidx(a, mu, nu)];
            for (int sg = 0; sg < m; ++sg)
              for (int c = 0; c < m; ++c)
                s -= 0.5 * LieElement::eta(a) * F.frame.at(a, nu, p) * LieElement::eta(b) *
                     F.frame.at(b, sg, p) * C[cidx(c, nu, sg)] * LieElement::eta(c) *
                     F.coframe.at(c, mu, p);
          }
          out.omega(a, b, mu, p) = s;
        }
  }
  return out;
}

/// End-to-end path from frame samples to BI variables:
/// spin_connection_from_frame followed by decompose.
inline BIField<double> bi_pipeline(const FrameField& F, double beta) {
  return decompose(spin_connection_from_frame(F), beta);
}

}  // namespace biconn

#endif
