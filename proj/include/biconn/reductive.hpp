#ifndef BICONN_REDUCTIVE_HPP
#define BICONN_REDUCTIVE_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biconn/exact_matrix.hpp"
#include "biconn/lie_algebra.hpp"
#include "biconn/rational.hpp"

namespace biconn {

/// Thrown when a splitting with beta != 0 is requested for n > 3, where the
/// reductive splitting is unique (no intertwiner exists).
struct rigid_splitting_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Solution space of the equivariance equation: linear maps
/// psi: W = R^n -> so(n), each stored as an (n(n-1)/2 x n) exact matrix in
/// (spatial pair, k) coordinates.
struct IntertwinerSpace {
  int n = 0;
  std::vector<ExactMatrix> basis;

  std::size_t dim() const { return basis.size(); }

  /// psi(e_k) of basis element b as an so(n,1) matrix (spatial block only).
  LieElement apply(std::size_t b, int k) const {
    auto spatial = spatial_indices(n);
    LieElement out(n);
    for (std::size_t p = 0; p < spatial.size(); ++p) {
      const Rational& c = basis[b](p, k - 1);
      if (c != 0) out = out + generator(n, spatial[p]) * c;
    }
    return out;
  }
};

/// Assemble and solve the infinitesimal equivariance system
///   ad(X)(psi(e_k)) - psi(X . e_k) = 0
/// for every so(n) basis generator X and every k = 1..n. The group-level
/// condition Ad(S) o psi = psi o l(S) reduces to this because Spin(n) is
/// connected. Unknowns are the entries psi_{(ij),k}; the exact nullspace of
/// the assembled system is the intertwiner space.
inline IntertwinerSpace solve_intertwiners(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  auto spatial = spatial_indices(n);
  const std::size_t nso = spatial.size();
  const std::size_t unknowns = nso * n;
  auto uidx = [&](std::size_t p, int k) { return p * std::size_t(n) + std::size_t(k - 1); };

  // Structure constants [T_pq, T_ij] within so(n), in spatial-pair coordinates.
  std::vector<LieElement> so_gen;
  for (const auto& s : spatial) so_gen.push_back(generator(n, s));
  auto spatial_coords = [&](const LieElement& x) {
    std::vector<Rational> c(nso);
    for (std::size_t p = 0; p < nso; ++p)
      c[p] = Rational(2) * x.m(spatial[p].b, spatial[p].a);  // eta = +1 spatially
    return c;
  };

  RowReducer red(unknowns);
  for (std::size_t xg = 0; xg < nso && !red.full_column_rank(); ++xg) {
    const int p = spatial[xg].a, q = spatial[xg].b;
    // Bracket coordinates ad(T_pq) T_ij for every spatial pair.
    std::vector<std::vector<Rational>> ad_coords(nso);
    for (std::size_t ij = 0; ij < nso; ++ij)
      ad_coords[ij] = spatial_coords(bracket(so_gen[xg], so_gen[ij]));
    for (int k = 1; k <= n && !red.full_column_rank(); ++k) {
      // Constraint element C = ad(T_pq)(psi(e_k)) - psi(T_pq . e_k), one row
      // per so(n) coordinate. Vector action: T_pq(e_k) = (1/2)(d_pk e_q - d_qk e_p).
      for (std::size_t out = 0; out < nso; ++out) {
        std::vector<Rational> row(unknowns);
        bool nonzero = false;
        for (std::size_t ij = 0; ij < nso; ++ij) {
          if (ad_coords[ij][out] != 0) {
            row[uidx(ij, k)] += ad_coords[ij][out];
            nonzero = true;
          }
        }
        if (p == k) {
          row[uidx(out, q)] -= Rational(1, 2);
          nonzero = true;
        }
        if (q == k) {
          row[uidx(out, p)] += Rational(1, 2);
          nonzero = true;
        }
        if (nonzero) red.add_row(std::move(row));
      }
    }
  }

  IntertwinerSpace space;
  space.n = n;
  for (const auto& v : red.nullspace()) {
    ExactMatrix psi(nso, n);
    for (std::size_t p = 0; p < nso; ++p)
      for (int k = 1; k <= n; ++k) psi(p, k - 1) = v[uidx(p, k)];
    space.basis.push_back(std::move(psi));
  }
  // Normalization for n = 3: scale so that psi(e_3) = -T_12. The m_beta
  // direction sigma_k + beta tau_k translates to T_0k - beta (dual of e_k)
  // under T_0k = -(1/4) sigma_k, tau_3 = 4 T_12; this choice makes the
  // splitting's beta coincide with the connection-decomposition beta.
  if (n == 3 && space.dim() == 1) {
    const Rational& pivot = space.basis[0](0, 2);  // pair (1,2), k = 3
    if (pivot != 0) space.basis[0] = space.basis[0] * (Rational(-1) / pivot);
  }
  return space;
}

/// Reductive splitting spin(n,1) = spin(n) (+) m.
struct ReductiveSplitting {
  int n = 0;
  Rational beta = 0;
  std::vector<LieElement> h_basis;  // T_ij, spatial pairs in lex order
  std::vector<LieElement> m_basis;  // T_0k + beta psi1(e_k), k = 1..n
};

/// m_beta basis T_0k + beta psi1(e_k); for n > 3 only beta = 0 is admissible
/// (the splitting is rigid).
inline ReductiveSplitting build_splitting(int n, const Rational& beta) {
  if (n < 3) throw std::invalid_argument("dimension must be >= 3");
  if (n > 3 && beta != 0)
    throw rigid_splitting_error(
        "no such reductive splitting exists: for n > 3 the splitting is rigid (beta = 0)");
  ReductiveSplitting split;
  split.n = n;
  split.beta = beta;
  for (const auto& idx : spatial_indices(n)) split.h_basis.push_back(generator(n, idx));
  std::optional<IntertwinerSpace> space;
  if (n == 3 && beta != 0) {
    space = solve_intertwiners(n);
    if (space->dim() != 1) throw std::logic_error("expected one-dimensional intertwiner space");
  }
  for (int k = 1; k <= n; ++k) {
    LieElement mk = generator(n, BasisIndex(0, k));
    if (space) mk = mk + space->apply(0, k) * beta;
    split.m_basis.push_back(std::move(mk));
  }
  return split;
}

struct ReductiveReport {
  bool passed = false;
  bool direct_sum = false;
  std::optional<std::pair<BasisIndex, int>> counterexample;  // (h index, m index k)
  std::string detail;
};

/// Exact check of the reductive condition [h, m] in span(m_basis), plus the
/// direct-sum rank condition.
inline ReductiveReport verify_reductive(const ReductiveSplitting& split) {
  ReductiveReport rep;
  const int n = split.n;
  auto all = basis_indices(n);
  const std::size_t full = all.size();

  // Direct sum: (h | m) coordinate matrix must have full rank n(n+1)/2.
  ExactMatrix coords(full, split.h_basis.size() + split.m_basis.size());
  std::size_t col = 0;
  for (const auto& x : split.h_basis) {
    auto c = t_coordinates(x);
    for (std::size_t r = 0; r < full; ++r) coords(r, col) = c[r];
    ++col;
  }
  for (const auto& x : split.m_basis) {
    auto c = t_coordinates(x);
    for (std::size_t r = 0; r < full; ++r) coords(r, col) = c[r];
    ++col;
  }
  rep.direct_sum = rank(coords) == full && col == full;
  if (!rep.direct_sum) {
    rep.detail = "h + m does not span spin(n,1)";
    return rep;
  }

  ExactMatrix m_mat(full, split.m_basis.size());
  for (std::size_t j = 0; j < split.m_basis.size(); ++j) {
    auto c = t_coordinates(split.m_basis[j]);
    for (std::size_t r = 0; r < full; ++r) m_mat(r, j) = c[r];
  }
  auto spatial = spatial_indices(n);
  for (std::size_t h = 0; h < split.h_basis.size(); ++h)
    for (std::size_t k = 0; k < split.m_basis.size(); ++k) {
      auto c = t_coordinates(bracket(split.h_basis[h], split.m_basis[k]));
      auto sol = solve(m_mat, c);
      if (!sol) {
        rep.counterexample = {spatial[h], int(k + 1)};
        std::ostringstream os;
        os << "[T_" << spatial[h].a << spatial[h].b << ", m_" << k + 1
           << "] has a component outside span(m)";
        rep.detail = os.str();
        return rep;
      }
    }
  rep.passed = true;
  rep.detail = "Ad(h) m in m verified on all basis pairs";
  return rep;
}

struct DimensionRow {
  int n;
  std::size_t intertwiner_dim;
  std::size_t family_dim;  // dimension of the family of reductive splittings
};

/// (n, dim of intertwiner space, family dimension) for n = 3..n_max.
inline std::vector<DimensionRow> schur_dimension_table(int n_max) {
  if (n_max < 3) throw std::invalid_argument("n_max must be >= 3");
  std::vector<DimensionRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    auto space = solve_intertwiners(n);
    rows.push_back({n, space.dim(), space.dim()});
  }
  return rows;
}

}  // namespace biconn

#endif
