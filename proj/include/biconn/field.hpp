#ifndef BICONN_FIELD_HPP
#define BICONN_FIELD_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace biconn {

/// Uniform rectangular chart grid with n+1 axes (mu = 0..n). Axes of size 1
/// represent directions the fields do not depend on (derivatives vanish);
/// axes used for finite differences need at least 5 points.
struct Grid {
  int n = 0;
  std::vector<std::size_t> dims;  // n+1 entries
  std::vector<double> spacing;    // n+1 entries

  Grid() = default;
  Grid(int n_, std::vector<std::size_t> dims_, std::vector<double> spacing_)
      : n(n_), dims(std::move(dims_)), spacing(std::move(spacing_)) {
    if (dims.size() != std::size_t(n + 1) || spacing.size() != std::size_t(n + 1))
      throw std::invalid_argument("grid needs n+1 dims and spacings");
    for (auto d : dims)
      if (d == 0) throw std::invalid_argument("zero-size grid axis");
    for (auto h : spacing)
      if (!(h > 0)) throw std::invalid_argument("grid spacing must be positive");
  }

  std::size_t axes() const { return dims.size(); }

  std::size_t npoints() const {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
  }

  /// Row-major linearization, axis 0 slowest.
  std::size_t linear(const std::vector<std::size_t>& idx) const {
    std::size_t lin = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) lin = lin * dims[a] + idx[a];
    return lin;
  }

  std::vector<std::size_t> unlinear(std::size_t lin) const {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
      idx[a] = lin % dims[a];
      lin /= dims[a];
    }
    return idx;
  }

  bool operator==(const Grid& o) const {
    return n == o.n && dims == o.dims && spacing == o.spacing;
  }
};

/// Scalar component field over a grid: `comps` components x `dirs` chart
/// directions x grid points, layout (component, direction, linear point).
template <class T>
struct ComponentField {
  Grid grid;
  std::size_t comps = 0;
  std::size_t dirs = 0;
  std::vector<T> data;

  ComponentField() = default;
  ComponentField(Grid g, std::size_t comps_, std::size_t dirs_)
      : grid(std::move(g)), comps(comps_), dirs(dirs_),
        data(comps_ * dirs_ * grid.npoints()) {}

  T& at(std::size_t c, std::size_t mu, std::size_t p) {
    return data[(c * dirs + mu) * grid.npoints() + p];
  }
  const T& at(std::size_t c, std::size_t mu, std::size_t p) const {
    return data[(c * dirs + mu) * grid.npoints() + p];
  }

  bool same_shape(const ComponentField& o) const {
    return grid == o.grid && comps == o.comps && dirs == o.dirs;
  }
};

}  // namespace biconn

#endif
