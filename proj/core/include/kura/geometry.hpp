#ifndef KURA_GEOMETRY_HPP
#define KURA_GEOMETRY_HPP

#include <array>
#include <compare>

#include "kura/errors.hpp"
#include "kura/rational.hpp"

namespace kura {

/// Ambient dimension, 1 or 2. One-dimensional data lives in the x coordinate;
/// the y slot of every point and normal is zero.
struct Space {
    int dim = 2;

    explicit Space(int d = 2) : dim(d) {
        if (d != 1 && d != 2) throw SemanticError("space dimension must be 1 or 2");
    }
    friend bool operator==(const Space&, const Space&) = default;
};

using Point = std::array<Rational, 2>;
using IVec  = std::array<Integer, 2>;

inline Rational dot(const IVec& a, const Point& x) {
    return Rational(a[0]) * x[0] + Rational(a[1]) * x[1];
}
inline Integer dot(const IVec& a, const IVec& d) { return a[0] * d[0] + a[1] * d[1]; }
inline Integer cross(const IVec& u, const IVec& v) { return u[0] * v[1] - u[1] * v[0]; }
inline IVec neg(const IVec& v) { return {-v[0], -v[1]}; }
inline IVec add(const IVec& u, const IVec& v) { return {u[0] + v[0], u[1] + v[1]}; }
inline bool is_zero(const IVec& v) { return v[0] == 0 && v[1] == 0; }

/// Strict-weak angular order on nonzero integer vectors, counterclockwise
/// starting from the positive x axis. Exact: half-plane discriminator first,
/// then cross product.
struct AngleLess {
    static int half(const IVec& v) {
        // 0 for angles in [0, pi), 1 for [pi, 2*pi)
        if (v[1] != 0) return v[1] > 0 ? 0 : 1;
        return v[0] > 0 ? 0 : 1;
    }
    bool operator()(const IVec& u, const IVec& v) const {
        int hu = half(u), hv = half(v);
        if (hu != hv) return hu < hv;
        return cross(u, v) > 0;
    }
};

}  // namespace kura

#endif
