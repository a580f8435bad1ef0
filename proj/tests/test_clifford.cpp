#include <catch_amalgamated.hpp>

#include "biconn/clifford.hpp"

using namespace biconn;

namespace {

Multivector blade_mv(const Signature& sig, std::initializer_list<int> idx, Rational c) {
  Multivector m(sig);
  m.set(blade_from_indices(idx, sig.dim()), c);
  return m;
}

}  // namespace

TEST_CASE("basis_vector returns grade-1 blades") {
  Signature s31(3, 1);
  auto e0 = basis_vector(s31, 0);
  REQUIRE(e0.terms().size() == 1);
  REQUIRE(e0.coeff(Blade(1)) == 1);
  REQUIRE(blade_grade(e0.terms().begin()->first) == 1);

  auto e5 = basis_vector(Signature(5, 1), 5);
  REQUIRE(e5.coeff(Blade(1) << 5) == 1);

  REQUIRE_THROWS_AS(basis_vector(s31, 4), std::out_of_range);
  REQUIRE_THROWS_AS(basis_vector(s31, -1), std::out_of_range);
}

TEST_CASE("lorentzian squares: e_0^2 = -1, e_i^2 = +1") {
  Signature s(3, 1);
  auto e0 = basis_vector(s, 0);
  auto sq = geometric_product(e0, e0);
  REQUIRE(sq == Multivector::scalar(s, -1));
  for (int i = 1; i <= 3; ++i) {
    auto ei = basis_vector(s, i);
    REQUIRE(geometric_product(ei, ei) == Multivector::scalar(s, 1));
  }
}

TEST_CASE("anticommutation e_a e_b = -e_b e_a for a != b") {
  Signature s(3, 1);
  auto e1 = basis_vector(s, 1);
  auto e2 = basis_vector(s, 2);
  REQUIRE(geometric_product(e1, e2) == blade_mv(s, {1, 2}, 1));
  REQUIRE(geometric_product(e2, e1) == blade_mv(s, {1, 2}, -1));
}

TEST_CASE("(e_0 e_1)^2 = +1 in (3,1)") {
  Signature s(3, 1);
  auto e01 = geometric_product(basis_vector(s, 0), basis_vector(s, 1));
  REQUIRE(geometric_product(e01, e01) == Multivector::scalar(s, 1));
}

TEST_CASE("signature mismatch is rejected") {
  auto x = basis_vector(Signature(3, 1), 0);
  auto y = basis_vector(Signature(2, 1), 0);
  REQUIRE_THROWS_AS(geometric_product(x, y), std::invalid_argument);
  REQUIRE_THROWS_AS(commutator(x, y), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  Signature s(3, 1);
  auto e12 = blade_mv(s, {1, 2}, Rational(1, 2));
  auto e23 = blade_mv(s, {2, 3}, Rational(1, 2));
  REQUIRE(commutator(e12, e12).is_zero());
  // [(1/2)e1e2, (1/2)e2e3] = (1/4)(e1e2e2e3 - e2e3e1e2) = (1/2) e1e3
  REQUIRE(commutator(e12, e23) == blade_mv(s, {1, 3}, Rational(1, 2)));
  auto scalar = Multivector::scalar(s, Rational(7, 3));
  auto x = blade_mv(s, {0, 2}, 5) + blade_mv(s, {1}, -2);
  REQUIRE(commutator(scalar, x).is_zero());
}

TEST_CASE("grade projection") {
  Signature s(3, 1);
  auto x = Multivector::scalar(s, 1) + blade_mv(s, {0, 1}, 1);
  REQUIRE(grade_project(x, 2) == blade_mv(s, {0, 1}, 1));
  REQUIRE(grade_project(basis_vector(s, 1), 2).is_zero());
  auto tri = blade_mv(s, {0, 1, 2}, 1);
  REQUIRE(grade_project(tri, 3) == tri);
}

TEST_CASE("spin algebra basis sizes") {
  REQUIRE(spin_algebra_basis(Signature(3, 1)).size() == 6);
  REQUIRE(spin_algebra_basis(Signature(2, 0)).size() == 1);
  REQUIRE(spin_algebra_basis(Signature(5, 1)).size() == 15);
  REQUIRE_THROWS_AS(spin_algebra_basis(Signature(1, 0)), std::invalid_argument);
}

TEST_CASE("property: associativity on blades up to grade 3, m <= 6") {
  for (auto [r, s] : {std::pair{3, 1}, {5, 1}, {4, 0}}) {
    Signature sig(r, s);
    std::vector<Multivector> gens;
    // all blades of grade <= 3
    for (Blade b = 0; b < (Blade(1) << sig.dim()); ++b)
      if (blade_grade(b) <= 3) {
        Multivector m(sig);
        m.set(b, 1);
        gens.push_back(std::move(m));
      }
    // exhaustive would be cubic in ~40 blades; sample a deterministic stride
    for (std::size_t i = 0; i < gens.size(); i += 3)
      for (std::size_t j = 0; j < gens.size(); j += 5)
        for (std::size_t k = 0; k < gens.size(); k += 7) {
          auto lhs = geometric_product(geometric_product(gens[i], gens[j]), gens[k]);
          auto rhs = geometric_product(gens[i], geometric_product(gens[j], gens[k]));
          REQUIRE(lhs == rhs);
        }
  }
}

TEST_CASE("property: e_a e_b + e_b e_a = 2 eta(e_a,e_b)") {
  Signature sig(4, 1);
  for (int a = 0; a < sig.dim(); ++a)
    for (int b = 0; b < sig.dim(); ++b) {
      auto ea = basis_vector(sig, a);
      auto eb = basis_vector(sig, b);
      auto anti = geometric_product(ea, eb) + geometric_product(eb, ea);
      Rational expected = a == b ? Rational(2 * sig.metric(a)) : Rational(0);
      REQUIRE(anti == Multivector::scalar(sig, expected));
    }
}

TEST_CASE("property: grade bound and parity of products") {
  Signature sig(3, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Multivector x(sig), y(sig);
    std::uniform_int_distribution<Blade> blades(0, (Blade(1) << sig.dim()) - 1);
    for (int t = 0; t < 3; ++t) {
      x.set(blades(rng), random_rational(rng));
      y.set(blades(rng), random_rational(rng));
    }
    int jmax = 0, kmax = 0;
    for (const auto& [b, c] : x.terms()) jmax = std::max(jmax, blade_grade(b));
    for (const auto& [b, c] : y.terms()) kmax = std::max(kmax, blade_grade(b));
    auto prod = geometric_product(x, y);
    for (const auto& [b, c] : prod.terms()) REQUIRE(blade_grade(b) <= jmax + kmax);
    // parity: product of two homogeneous elements keeps grade parity j+k
    for (const auto& [bx, cx] : x.terms())
      for (const auto& [by, cy] : y.terms()) {
        Multivector hx(sig), hy(sig);
        hx.set(bx, cx);
        hy.set(by, cy);
        auto hprod = geometric_product(hx, hy);
        for (const auto& [b, c] : hprod.terms())
          REQUIRE((blade_grade(b) % 2) == ((blade_grade(bx) + blade_grade(by)) % 2));
      }
  }
}
