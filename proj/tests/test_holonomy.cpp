#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "biconn/holonomy.hpp"

using namespace biconn;

namespace {

Grid plane_grid(std::size_t N, double h) {
  return Grid(3, {1, N, N, 1}, {1.0, h, h, 1.0});
}

/// Square loop in the (x, y) chart plane, m segments per side, corners
/// (lo, lo) .. (hi, hi), t = z = 0.
LoopPath square_loop(double lo, double hi, int m) {
  LoopPath loop;
  auto push = [&](double x, double y) { loop.points.push_back({0.0, x, y, 0.0}); };
  double step = (hi - lo) / m;
  for (int i = 0; i < m; ++i) push(lo + i * step, lo);
  for (int i = 0; i < m; ++i) push(hi, lo + i * step);
  for (int i = 0; i < m; ++i) push(hi - i * step, hi);
  for (int i = 0; i < m; ++i) push(lo, hi - i * step);
  push(lo, lo);
  return loop;
}

/// A^1_x = 0.3 + 0.2 y, A^2_y = -0.4 + 0.1 x: linear, so the multilinear
/// interpolation is exact and only the path discretization limits accuracy.
BIField<double> nonabelian_field(std::size_t N, double h) {
  BIField<double> bi(3, 0.0, plane_grid(N, h));
  const auto& g = bi.A.grid;
  for (std::size_t p = 0; p < g.npoints(); ++p) {
    auto idx = g.unlinear(p);
    double x = double(idx[1]) * h, y = double(idx[2]) * h;
    bi.A.at(0, 1, p) = 0.3 + 0.2 * y;
    bi.A.at(1, 1, p) = 0.15 * x;  // non-commuting variation along each side
    bi.A.at(1, 2, p) = -0.4 + 0.1 * x;
    bi.A.at(2, 2, p) = 0.25 * y;
  }
  return bi;
}

double su2_distance(const SU2Element& a, const SU2Element& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("closed-form segment exponential matches the matrix exponential") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const std::complex<double> I(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 3> c{u(rng), u(rng), u(rng)};
    SU2Element arg;
    arg << c[2], std::complex<double>(c[0], -c[1]), std::complex<double>(c[0], c[1]), -c[2];
    SU2Element ref = (-0.5 * I * arg).exp();
    REQUIRE(su2_distance(su2_exp_minus_half(c), ref) < 1e-13);
  }
  REQUIRE(su2_distance(su2_exp_minus_half({0, 0, 0}), SU2Element::Identity()) == 0.0);
}

TEST_CASE("flat connection gives the identity holonomy") {
  BIField<double> bi(3, 0.0, plane_grid(6, 0.2));
  auto u = holonomy(bi, square_loop(0.1, 0.9, 5));
  REQUIRE(su2_distance(u, SU2Element::Identity()) < 1e-14);
}

TEST_CASE("abelian holonomy equals the exponential of the loop integral") {
  // single nonzero direction k = 3: every segment factor commutes, so the
  // path-ordered product collapses to one exponential of the midpoint sum.
  BIField<double> bi(3, 0.0, plane_grid(8, 0.2));
  const auto& g = bi.A.grid;
  for (std::size_t p = 0; p < g.npoints(); ++p) {
    auto idx = g.unlinear(p);
    double x = double(idx[1]) * 0.2, y = double(idx[2]) * 0.2;
    bi.A.at(2, 1, p) = -0.8 * y;  // A^3_x
    bi.A.at(2, 2, p) = 0.5 * x;   // A^3_y
  }
  auto loop = square_loop(0.2, 1.2, 25);
  double phi = 0.0;  // independent midpoint line integral of A^3
  for (std::size_t s = 0; s + 1 < loop.points.size(); ++s) {
    const auto& p = loop.points[s];
    const auto& q = loop.points[s + 1];
    double mx = 0.5 * (p[1] + q[1]), my = 0.5 * (p[2] + q[2]);
    phi += (-0.8 * my) * (q[1] - p[1]) + (0.5 * mx) * (q[2] - p[2]);
  }
  auto u = holonomy(bi, loop);
  REQUIRE(su2_distance(u, su2_exp_minus_half({0, 0, phi})) < 1e-12);
  // sanity: the flux is the curl (0.5 + 0.8) times the enclosed area
  REQUIRE(phi == Catch::Approx(1.3 * 1.0).epsilon(1e-10));
}

TEST_CASE("holonomy of the reversed loop is the inverse") {
  auto bi = nonabelian_field(8, 0.2);
  auto loop = square_loop(0.2, 1.2, 12);
  auto u = holonomy(bi, loop);
  auto v = holonomy(bi, loop.reversed());
  REQUIRE(su2_distance(v, u.inverse()) < 1e-12);
}

TEST_CASE("holonomy of concatenated loops is the ordered product") {
  auto bi = nonabelian_field(10, 0.2);
  auto l1 = square_loop(0.2, 0.8, 10);
  auto l2 = square_loop(0.2, 1.4, 10);
  LoopPath cat;
  cat.points = l1.points;
  cat.points.insert(cat.points.end(), l2.points.begin(), l2.points.end());
  auto u = holonomy(bi, cat);
  auto prod = holonomy(bi, l2) * holonomy(bi, l1);  // later loop on the left
  REQUIRE(su2_distance(u, prod) < 1e-12);
}

TEST_CASE("refinement converges at second order") {
  auto bi = nonabelian_field(10, 0.2);
  auto u1 = holonomy(bi, square_loop(0.2, 1.4, 8));
  auto u2 = holonomy(bi, square_loop(0.2, 1.4, 16));
  auto u3 = holonomy(bi, square_loop(0.2, 1.4, 32));
  double d1 = su2_distance(u1, u3);
  double d2 = su2_distance(u2, u3);
  INFO("defects " << d1 << " -> " << d2);
  REQUIRE(d1 / d2 >= 3.0);  // ~4 for a second-order midpoint rule
}

TEST_CASE("result stays on SU(2) over a long path") {
  auto bi = nonabelian_field(10, 0.2);
  // many laps around the same square: thousands of segment factors
  LoopPath laps;
  for (int lap = 0; lap < 40; ++lap) {
    auto l = square_loop(0.2, 1.4, 50);
    if (lap > 0) l.points.erase(l.points.begin());
    laps.points.insert(laps.points.end(), l.points.begin(), l.points.end());
  }
  auto u = holonomy(bi, laps);
  REQUIRE(su2_unitarity_defect(u) < 1e-12);
  REQUIRE(su2_det_defect(u) < 1e-12);
}

TEST_CASE("validation: open paths, off-grid loops, and n != 3 are rejected") {
  auto bi = nonabelian_field(6, 0.2);
  LoopPath open;
  open.points = {{0, 0.1, 0.1, 0}, {0, 0.5, 0.1, 0}, {0, 0.5, 0.5, 0}};
  REQUIRE_THROWS_AS(holonomy(bi, open), std::invalid_argument);
  REQUIRE_THROWS_AS(holonomy(bi, square_loop(0.1, 5.0, 4)), std::invalid_argument);
  BIField<double> bi4(4, 0.0, Grid(4, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}));
  LoopPath tiny;
  tiny.points = {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
  REQUIRE_THROWS_AS(holonomy(bi4, tiny), std::invalid_argument);
}

TEST_CASE("beta sweep over a fixed loop") {
  // omega with a boost component so the holonomy actually depends on beta
  SpinConnectionField<double> om(3, plane_grid(8, 0.2));
  const auto& g = om.f.grid;
  for (std::size_t p = 0; p < g.npoints(); ++p) {
    auto idx = g.unlinear(p);
    double x = double(idx[1]) * 0.2, y = double(idx[2]) * 0.2;
    om.omega(1, 2, 1, p) = 0.2 * y;
    om.omega(0, 3, 2, p) = 0.6 * x;
  }
  auto loop = square_loop(0.2, 1.2, 16);
  auto sweep = compare_holonomies(om, {0.0, 0.5, 1.0}, loop);
  REQUIRE(sweep.size() == 3);
  for (const auto& e : sweep) {
    REQUIRE(su2_unitarity_defect(e.u) < 1e-12);
    REQUIRE(e.trace == e.u.trace());
    auto direct = holonomy(decompose(om, e.beta), loop);
    REQUIRE(su2_distance(e.u, direct) == 0.0);
  }
  // distinct beta, distinct holonomy on this loop
  REQUIRE(su2_distance(sweep[0].u, sweep[2].u) > 1e-6);
}
