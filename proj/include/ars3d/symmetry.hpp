#pragma once

#include "ars3d/group.hpp"
#include "ars3d/linalg2.hpp"

namespace ars3d {

/// Absolute per-entry tolerance for the commutation constraints.
inline constexpr double kConstraintTol = 1e-9;

/// Linear map of g(theta) of the form [[corner, 0], [column, block]], the
/// shape shared by every derivation and automorphism of g(theta).
struct BlockMatrix {
    double corner{0.0};
    Vec2 column;
    Mat2 block;

    static BlockMatrix identity() { return {1.0, {}, Mat2::identity()}; }

    Tangent apply(const Tangent& z) const { return {corner * z.a, z.a * column + block * z.w}; }

    friend BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y) {
        return {x.corner * y.corner, y.corner * x.column + x.block * y.column, x.block * y.block};
    }
    friend BlockMatrix operator+(const BlockMatrix& x, const BlockMatrix& y) {
        return {x.corner + y.corner, x.column + y.column, x.block + y.block};
    }
    friend BlockMatrix operator*(double s, const BlockMatrix& x) {
        return {s * x.corner, s * x.column, s * x.block};
    }
};

double max_abs(const BlockMatrix& m);

/// A theta = theta A within tol (the only constraint on (xi, A)).
bool check_derivation(const Theta& theta, const Vec2& xi, const Mat2& a, double tol = kConstraintTol);

/// P theta = eps theta P, det P != 0, eps in {-1, 1} and eps = 1 whenever tr theta != 0.
bool check_automorphism(const Theta& theta, int epsilon, const Mat2& p, const Vec2& eta,
                        double tol = kConstraintTol);

/// phi(t, v) = (eps t, P v + eps Lambda^theta_{eps t} eta).
class Automorphism {
public:
    /// Throws InvalidAutomorphism when check_automorphism fails.
    static Automorphism make(const Theta& theta, int epsilon, const Mat2& p, const Vec2& eta,
                             double tol = kConstraintTol);
    static Automorphism identity(const Theta& theta);

    const Theta& theta() const { return theta_; }
    int epsilon() const { return epsilon_; }
    const Mat2& p() const { return p_; }
    const Vec2& eta() const { return eta_; }

    GroupElement apply(const GroupElement& g) const;
    /// (d phi)_g.
    Tangent differential(const GroupElement& g, const Tangent& z) const;
    /// (d phi)_e as the block matrix [[eps, 0], [eta, P]].
    BlockMatrix differential_at_identity() const;

private:
    Automorphism(const Theta& theta, int epsilon, const Mat2& p, const Vec2& eta)
        : theta_(theta), epsilon_(epsilon), p_(p), eta_(eta) {}

    Theta theta_;
    int epsilon_;
    Mat2 p_;
    Vec2 eta_;
};

/// Applies phi after confirming it was built for theta.
GroupElement aut_apply(const Theta& theta, const Automorphism& phi, const GroupElement& g);

/// X(t, v) = (0, A v + Lambda^theta_t xi) with A theta = theta A enforced at
/// construction; there is no other way to obtain an instance.
class LinearField {
public:
    /// Throws InvalidLinearField when A does not commute with theta.
    static LinearField make(const Theta& theta, const Vec2& xi, const Mat2& a,
                            double tol = kConstraintTol);

    const Theta& theta() const { return theta_; }
    const Vec2& xi() const { return xi_; }
    const Mat2& a() const { return a_; }

    /// The associated derivation [[0, 0], [xi, A]].
    BlockMatrix derivation() const { return {0.0, xi_, a_}; }

private:
    LinearField(const Theta& theta, const Vec2& xi, const Mat2& a) : theta_(theta), xi_(xi), a_(a) {}

    Theta theta_;
    Vec2 xi_;
    Mat2 a_;
};

Tangent field_eval(const LinearField& x, const GroupElement& g);

/// varphi_s(t, v) = (t, e^{sA} v + Lambda^theta_t Lambda^A_s xi).
GroupElement flow(const LinearField& x, double s, const GroupElement& g);

/// (d varphi_s)_e = [[1, 0], [Lambda^A_s xi, e^{sA}]].
BlockMatrix flow_differential_at_identity(const LinearField& x, double s);

/// True iff |X(g)| <= tol.
bool field_singularities_check(const LinearField& x, const GroupElement& g, double tol);

namespace detail {
/// The flow formula without the commutation check; only the verification
/// suite's negative control uses it directly.
GroupElement flow_formula(const Theta& theta, const Vec2& xi, const Mat2& a, double s,
                          const GroupElement& g);
}  // namespace detail

}  // namespace ars3d
