#pragma once

#include "ars3d/linalg2.hpp"

#include <string>

namespace ars3d {

/// Structure matrix of g(theta) = R x_theta R^2, restricted to the three
/// canonical families every solvable nonnilpotent 3D algebra reduces to.
class Theta {
public:
    enum class Kind { Jordan, Diagonal, Complex };

    static Theta jordan();
    /// diag(1, lambda), lambda in [-1, 1].
    static Theta diagonal(double lambda);
    /// [[lambda, -1], [1, lambda]].
    static Theta complex(double lambda);

    Kind kind() const { return kind_; }
    /// Family parameter; 0 for the Jordan block.
    double lambda() const { return lambda_; }
    const Mat2& matrix() const { return matrix_; }

    /// rho_t = e^{t theta}.
    Mat2 rho(double t) const { return expm(matrix_, t); }
    /// Lambda^theta_t.
    Mat2 lambda_at(double t) const { return lambda_op(matrix_, t); }

    std::string describe() const;

    friend bool operator==(const Theta&, const Theta&) = default;

private:
    Theta(Kind kind, double lambda, const Mat2& matrix)
        : kind_(kind), lambda_(lambda), matrix_(matrix) {}

    Kind kind_;
    double lambda_;
    Mat2 matrix_;
};

/// (a, w) in g(theta).
struct AlgebraElement {
    double a{0.0};
    Vec2 w;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// (t, v) in G(theta).
struct GroupElement {
    double t{0.0};
    Vec2 v;

    static constexpr GroupElement identity() { return {}; }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Tangent vector in the global product chart R x R^2.
struct Tangent {
    double a{0.0};
    Vec2 w;

    friend Tangent operator+(const Tangent& x, const Tangent& y) { return {x.a + y.a, x.w + y.w}; }
    friend Tangent operator-(const Tangent& x, const Tangent& y) { return {x.a - y.a, x.w - y.w}; }
    friend Tangent operator*(double s, const Tangent& x) { return {s * x.a, s * x.w}; }
    friend bool operator==(const Tangent&, const Tangent&) = default;
};

inline Tangent as_tangent(const AlgebraElement& y) { return {y.a, y.w}; }
double norm(const Tangent& z);
double distance(const GroupElement& g, const GroupElement& h);

AlgebraElement bracket(const Theta& theta, const AlgebraElement& x, const AlgebraElement& y);

GroupElement mul(const Theta& theta, const GroupElement& g, const GroupElement& h);
GroupElement inv(const Theta& theta, const GroupElement& g);

/// exp(a, w) = (0, w) for a = 0, (a, Lambda^theta_a w / a) otherwise; both
/// branches are evaluated through the analytic continuation of Lambda_a / a.
GroupElement group_exp(const Theta& theta, const AlgebraElement& x);

/// (dL_g)_h (a, w) = (a, rho_{t_g} w); independent of the base point h.
Tangent d_left(const Theta& theta, const GroupElement& g, const Tangent& z);
/// (dR_g)_h (a, w) = (a, w + a theta rho_{t_h} v_g).
Tangent d_right(const Theta& theta, const GroupElement& g, const GroupElement& h, const Tangent& z);

/// Y^L(t, v) = (a, rho_t w).
Tangent left_invariant(const Theta& theta, const AlgebraElement& y, const GroupElement& g);
/// Y^R(t, v) = (a, w + a theta v).
Tangent right_invariant(const Theta& theta, const AlgebraElement& y, const GroupElement& g);

}  // namespace ars3d
