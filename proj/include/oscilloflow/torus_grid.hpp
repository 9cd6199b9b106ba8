#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oscilloflow/errors.hpp"

namespace oscf {

/// Uniform grid on the periodic box [0, 2pi)^d, d in {2,3}.
///
/// With period 2pi the physical wavenumbers coincide with the integer
/// lattice. Axis wavenumbers run over [-n/2, n/2); the Nyquist plane
/// (axis wavenumber -n/2) is kept identically zero by every operator.
class TorusGrid {
public:
    TorusGrid(int dim, int points_per_axis) : dim_(dim), n_(points_per_axis) {
        if (dim != 2 && dim != 3)
            throw ConfigError("TorusGrid: dim must be 2 or 3, got " + std::to_string(dim));
        if (n_ < 8 || n_ % 2 != 0)
            throw ConfigError("TorusGrid: points_per_axis must be even and >= 8, got " +
                              std::to_string(n_));
        wavenumbers_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            wavenumbers_[static_cast<std::size_t>(i)] = (i < n_ / 2) ? i : i - n_;
    }

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double period() const { return 6.283185307179586476925286766559; } // 2pi per axis

    /// Total lattice size n^d.
    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < dim_; ++a) s *= static_cast<std::size_t>(n_);
        return s;
    }

    /// Wavenumber of axis index i in [0, n): i for i < n/2, i - n otherwise.
    int wavenumber(int i) const { return wavenumbers_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& axis_wavenumbers() const { return wavenumbers_; }

    /// Grid spacing 2pi/n.
    double dx() const { return period() / static_cast<double>(n_); }

    /// (2pi)^d, the measure of the box.
    double volume() const {
        double v = 1.0;
        for (int a = 0; a < dim_; ++a) v *= period();
        return v;
    }

    bool operator==(const TorusGrid& o) const { return dim_ == o.dim_ && n_ == o.n_; }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }

private:
    int dim_;
    int n_;
    std::vector<int> wavenumbers_;
};

/// Visit every lattice mode in row-major order. f(flat_index, k) receives the
/// integer wavenumber vector (k[2] is 0 in 2D).
template <class F>
inline void for_each_mode(const TorusGrid& g, F&& f) {
    const int n = g.points_per_axis();
    const std::vector<int>& kv = g.axis_wavenumbers();
    std::array<int, 3> k{0, 0, 0};
    std::size_t idx = 0;
    if (g.dim() == 2) {
        for (int i0 = 0; i0 < n; ++i0) {
            k[0] = kv[static_cast<std::size_t>(i0)];
            for (int i1 = 0; i1 < n; ++i1, ++idx) {
                k[1] = kv[static_cast<std::size_t>(i1)];
                f(idx, k);
            }
        }
    } else {
        for (int i0 = 0; i0 < n; ++i0) {
            k[0] = kv[static_cast<std::size_t>(i0)];
            for (int i1 = 0; i1 < n; ++i1) {
                k[1] = kv[static_cast<std::size_t>(i1)];
                for (int i2 = 0; i2 < n; ++i2, ++idx) {
                    k[2] = kv[static_cast<std::size_t>(i2)];
                    f(idx, k);
                }
            }
        }
    }
}

} // namespace oscf
