#include <catch_amalgamated.hpp>

#include "biconn/exact_matrix.hpp"

using namespace biconn;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  ExactMatrix m(rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool in_nullspace(const ExactMatrix& a, const ExactMatrix& basis, std::size_t col) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * basis(j, col);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  REQUIRE(rank(ExactMatrix::identity(4)) == 4);
  REQUIRE(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  REQUIRE(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("bareiss nullspace of a rank-deficient matrix") {
  auto a = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  auto ns = bareiss_nullspace(a);
  REQUIRE(ns.cols() == 1);
  REQUIRE(in_nullspace(a, ns, 0));
}

TEST_CASE("bareiss nullspace of full-rank matrix is empty") {
  REQUIRE(bareiss_nullspace(ExactMatrix::identity(3)).cols() == 0);
}

TEST_CASE("row reducer agrees with bareiss on random rational matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(2, 7);
    std::size_t m = dim(rng), n = dim(rng);
    ExactMatrix a(m, n);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = Rational(entry(rng), 1 + std::abs(entry(rng)));
    RowReducer red(n);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
      red.add_row(std::move(row));
    }
    auto ns_b = bareiss_nullspace(a);
    auto ns_r = red.nullspace();
    REQUIRE(ns_b.cols() == ns_r.size());
    REQUIRE(red.rank() + ns_b.cols() == n);
    for (std::size_t c = 0; c < ns_b.cols(); ++c) REQUIRE(in_nullspace(a, ns_b, c));
    for (const auto& v : ns_r) {
      for (std::size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
        REQUIRE(s == 0);
      }
    }
  }
}

TEST_CASE("exact solve: consistent, inconsistent, underdetermined") {
  auto a = from_rows({{2, 1}, {1, 3}});
  auto x = solve(a, {Rational(5), Rational(10)});
  REQUIRE(x.has_value());
  REQUIRE((*x)[0] == 1);
  REQUIRE((*x)[1] == 3);

  auto sing = from_rows({{1, 2}, {2, 4}});
  REQUIRE_FALSE(solve(sing, {Rational(1), Rational(3)}).has_value());

  auto under = solve(sing, {Rational(1), Rational(2)});
  REQUIRE(under.has_value());
  REQUIRE((*under)[0] + Rational(2) * (*under)[1] == 1);
}

TEST_CASE("matrix arithmetic and commutator") {
  auto a = from_rows({{0, 1}, {0, 0}});
  auto b = from_rows({{0, 0}, {1, 0}});
  auto c = commutator(a, b);
  REQUIRE(c == from_rows({{1, 0}, {0, -1}}));
  REQUIRE((a - a).is_zero());
  REQUIRE(a.transpose() == b);
}
