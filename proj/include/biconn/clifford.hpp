#ifndef BICONN_CLIFFORD_HPP
#define BICONN_CLIFFORD_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "biconn/rational.hpp"

namespace biconn {

/// Signature (r, s): r basis vectors square to +1, s to -1. The s negative
/// vectors carry the lowest indices, so in lorentzian mode (s = 1) the
/// timelike vector is e_0 with eta(e_0, e_0) = -1 and eta(e_i, e_i) = +1.
struct Signature {
  int r = 0;
  int s = 0;

  Signature(int r_, int s_) : r(r_), s(s_) {
    if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("invalid signature");
    if (r + s > 62) throw std::invalid_argument("signature dimension too large");
  }

  int dim() const { return r + s; }
  bool lorentzian() const { return s == 1; }

  /// eta(e_a, e_a)
  int metric(int a) const {
    if (a < 0 || a >= dim()) throw std::out_of_range("basis index out of range");
    return a < s ? -1 : 1;
  }

  bool operator==(const Signature& o) const { return r == o.r && s == o.s; }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

/// Canonical blade: set of strictly increasing basis indices, stored as a
/// bitmask (bit a set <=> e_a present).
using Blade = std::uint64_t;

inline int blade_grade(Blade b) { return std::popcount(b); }

inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  for (int a = 0; b; ++a, b >>= 1)
    if (b & 1) idx.push_back(a);
  return idx;
}

inline Blade blade_from_indices(const std::vector<int>& idx, int dim) {
  Blade b = 0;
  for (int a : idx) {
    if (a < 0 || a >= dim) throw std::out_of_range("blade index out of range");
    if (b & (Blade(1) << a)) throw std::invalid_argument("repeated blade index");
    b |= Blade(1) << a;
  }
  return b;
}

/// Sign and metric factor of the canonical product of two blades.
/// Transpositions needed to interleave-sort the concatenation, then
/// contraction of repeated indices with eta.
inline Rational blade_product_sign(const Signature& sig, Blade x, Blade y) {
  int swaps = 0;
  Blade rest = x;
  for (int a = 0; a < sig.dim(); ++a) {
    if (!(y & (Blade(1) << a))) continue;
    Blade above = rest >> (a + 1);
    swaps += std::popcount(above);
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  Blade common = x & y;
  for (int a = 0; a < sig.dim(); ++a)
    if (common & (Blade(1) << a)) sign *= sig.metric(a);
  return Rational(sign);
}

/// Element of Cl(V, eta) with exact rational coefficients on canonical
/// blades. Zero coefficients are never stored.
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  const Signature& signature() const { return sig_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }

  static Multivector scalar(Signature sig, const Rational& c) {
    Multivector m(sig);
    m.set(0, c);
    return m;
  }

  void set(Blade b, const Rational& c) {
    if (c == 0)
      terms_.erase(b);
    else
      terms_[b] = c;
  }

  Rational coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Multivector& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
  }

  Multivector operator+(const Multivector& o) const {
    check_sig(o);
    Multivector r = *this;
    for (const auto& [b, c] : o.terms_) r.set(b, r.coeff(b) + c);
    return r;
  }

  Multivector operator-(const Multivector& o) const {
    check_sig(o);
    Multivector r = *this;
    for (const auto& [b, c] : o.terms_) r.set(b, r.coeff(b) - c);
    return r;
  }

  Multivector operator*(const Rational& c) const {
    Multivector r(sig_);
    if (c == 0) return r;
    for (const auto& [b, q] : terms_) r.terms_[b] = q * c;
    return r;
  }

 private:
  void check_sig(const Multivector& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
  }

  Signature sig_;
  std::map<Blade, Rational> terms_;
};

/// Grade-1 basis element e_a.
inline Multivector basis_vector(const Signature& sig, int a) {
  if (a < 0 || a >= sig.dim()) throw std::out_of_range("basis index out of range");
  Multivector m(sig);
  m.set(Blade(1) << a, 1);
  return m;
}

inline Multivector geometric_product(const Multivector& x, const Multivector& y) {
  if (x.signature() != y.signature()) throw std::invalid_argument("signature mismatch");
  Multivector r(x.signature());
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) {
      Rational s = blade_product_sign(x.signature(), bx, by);
      Blade b = bx ^ by;
      r.set(b, r.coeff(b) + cx * cy * s);
    }
  return r;
}

inline Multivector commutator(const Multivector& x, const Multivector& y) {
  return geometric_product(x, y) - geometric_product(y, x);
}

inline Multivector grade_project(const Multivector& x, int k) {
  if (k < 0) throw std::invalid_argument("negative grade");
  Multivector r(x.signature());
  for (const auto& [b, c] : x.terms())
    if (blade_grade(b) == k) r.set(b, c);
  return r;
}

/// Basis of spin(r,s) inside Cl(V, eta): the m(m-1)/2 bivectors
/// (1/2) e_a e_b with a < b, matching the T_ab = (1/2) e_a ^ e_b convention.
inline std::vector<Multivector> spin_algebra_basis(const Signature& sig) {
  if (sig.dim() < 2) throw std::invalid_argument("spin algebra needs dimension >= 2");
  std::vector<Multivector> basis;
  for (int a = 0; a < sig.dim(); ++a)
    for (int b = a + 1; b < sig.dim(); ++b) {
      Multivector m(sig);
      m.set((Blade(1) << a) | (Blade(1) << b), Rational(1, 2));
      basis.push_back(std::move(m));
    }
  return basis;
}

}  // namespace biconn

#endif
