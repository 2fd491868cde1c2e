#include "ars3d/group.hpp"

#include "ars3d/error.hpp"

#include <cmath>
#include <sstream>

namespace ars3d {

Theta Theta::jordan() { return {Kind::Jordan, 0.0, Mat2{1.0, 1.0, 0.0, 1.0}}; }

Theta Theta::diagonal(double lambda) {
    if (!std::isfinite(lambda) || lambda < -1.0 || lambda > 1.0) {
        throw Error(ErrorCode::InvalidInput, "diagonal theta requires lambda in [-1, 1]");
    }
    return {Kind::Diagonal, lambda, Mat2::diag(1.0, lambda)};
}

Theta Theta::complex(double lambda) {
    if (!std::isfinite(lambda)) {
        throw Error(ErrorCode::InvalidInput, "complex theta requires a finite lambda");
    }
    return {Kind::Complex, lambda, Mat2{lambda, -1.0, 1.0, lambda}};
}

std::string Theta::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Jordan: os << "jordan"; break;
        case Kind::Diagonal: os << "diagonal(" << lambda_ << ")"; break;
        case Kind::Complex: os << "complex(" << lambda_ << ")"; break;
    }
    return os.str();
}

double norm(const Tangent& z) { return std::sqrt(z.a * z.a + dot(z.w, z.w)); }

double distance(const GroupElement& g, const GroupElement& h) {
    return std::fmax(std::fabs(g.t - h.t), max_abs(g.v - h.v));
}

AlgebraElement bracket(const Theta& theta, const AlgebraElement& x, const AlgebraElement& y) {
    const Mat2& th = theta.matrix();
    return {0.0, x.a * (th * y.w) - y.a * (th * x.w)};
}

GroupElement mul(const Theta& theta, const GroupElement& g, const GroupElement& h) {
    return {g.t + h.t, g.v + theta.rho(g.t) * h.v};
}

GroupElement inv(const Theta& theta, const GroupElement& g) {
    return {-g.t, -(theta.rho(-g.t) * g.v)};
}

GroupElement group_exp(const Theta& theta, const AlgebraElement& x) {
    if (x.a == 0.0) return {0.0, x.w};
    return {x.a, lambda_over_t(theta.matrix(), x.a) * x.w};
}

Tangent d_left(const Theta& theta, const GroupElement& g, const Tangent& z) {
    return {z.a, theta.rho(g.t) * z.w};
}

Tangent d_right(const Theta& theta, const GroupElement& g, const GroupElement& h, const Tangent& z) {
    return {z.a, z.w + z.a * (theta.matrix() * (theta.rho(h.t) * g.v))};
}

Tangent left_invariant(const Theta& theta, const AlgebraElement& y, const GroupElement& g) {
    return d_left(theta, g, as_tangent(y));
}

Tangent right_invariant(const Theta& theta, const AlgebraElement& y, const GroupElement& g) {
    return {y.a, y.w + y.a * (theta.matrix() * g.v)};
}

}  // namespace ars3d
