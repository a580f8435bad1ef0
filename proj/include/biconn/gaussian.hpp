#ifndef BICONN_GAUSSIAN_HPP
#define BICONN_GAUSSIAN_HPP

#include <array>
#include <string>

#include "biconn/rational.hpp"

namespace biconn {

/// Gaussian rational a + b*i, exact.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussianRational&) const = default;

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussianRational gq_i() { return {Rational(0), Rational(1)}; }

/// 2x2 matrix over Gaussian rationals, entries row-major.
struct GaussianMatrix2 {
  std::array<GaussianRational, 4> e{};

  GaussianRational& operator()(int i, int j) { return e[2 * i + j]; }
  const GaussianRational& operator()(int i, int j) const { return e[2 * i + j]; }

  bool operator==(const GaussianMatrix2&) const = default;

  GaussianMatrix2 operator+(const GaussianMatrix2& o) const {
    GaussianMatrix2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] + o.e[k];
    return r;
  }
  GaussianMatrix2 operator-(const GaussianMatrix2& o) const {
    GaussianMatrix2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] - o.e[k];
    return r;
  }
  GaussianMatrix2 operator*(const GaussianMatrix2& o) const {
    GaussianMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    return r;
  }
  GaussianMatrix2 operator*(const GaussianRational& c) const {
    GaussianMatrix2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] * c;
    return r;
  }
  bool is_zero() const {
    for (const auto& x : e)
      if (!x.is_zero()) return false;
    return true;
  }
};

inline GaussianMatrix2 commutator(const GaussianMatrix2& x, const GaussianMatrix2& y) {
  return x * y - y * x;
}

/// Pauli matrix sigma_k, k = 1, 2, 3.
inline GaussianMatrix2 pauli_sigma(int k) {
  GaussianMatrix2 m;
  switch (k) {
    case 1:
      m(0, 1) = Rational(1);
      m(1, 0) = Rational(1);
      break;
    case 2:
      m(0, 1) = -gq_i();
      m(1, 0) = gq_i();
      break;
    case 3:
      m(0, 0) = Rational(1);
      m(1, 1) = Rational(-1);
      break;
    default:
      throw std::out_of_range("pauli index must be 1..3");
  }
  return m;
}

/// tau_k = i * sigma_k.
inline GaussianMatrix2 pauli_tau(int k) { return pauli_sigma(k) * gq_i(); }

}  // namespace biconn

#endif
