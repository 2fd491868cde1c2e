#include "ars3d/symmetry.hpp"

#include "ars3d/error.hpp"

#include <algorithm>
#include <cmath>

namespace ars3d {

double max_abs(const BlockMatrix& m) {
    return std::max({std::fabs(m.corner), max_abs(m.column), max_abs(m.block)});
}

bool check_derivation(const Theta& theta, const Vec2& xi, const Mat2& a, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
    if (!is_finite(xi) || !is_finite(a)) return false;
    const Mat2& th = theta.matrix();
    return max_abs(a * th - th * a) <= tol;
}

bool check_automorphism(const Theta& theta, int epsilon, const Mat2& p, const Vec2& eta, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
    if (epsilon != 1 && epsilon != -1) return false;
    if (!is_finite(p) || !is_finite(eta)) return false;
    if (!(std::fabs(p.det()) > tol)) return false;
    const Mat2& th = theta.matrix();
    if (epsilon == -1 && std::fabs(th.trace()) > tol) return false;
    return max_abs(p * th - static_cast<double>(epsilon) * (th * p)) <= tol;
}

Automorphism Automorphism::make(const Theta& theta, int epsilon, const Mat2& p, const Vec2& eta,
                                double tol) {
    if (!check_automorphism(theta, epsilon, p, eta, tol)) {
        throw Error(ErrorCode::InvalidAutomorphism,
                    "P theta != eps theta P, det P = 0, or eps = -1 with tr theta != 0");
    }
    return {theta, epsilon, p, eta};
}

Automorphism Automorphism::identity(const Theta& theta) {
    return {theta, 1, Mat2::identity(), Vec2{}};
}

GroupElement Automorphism::apply(const GroupElement& g) const {
    const double eps = epsilon_;
    const double t = eps * g.t;
    return {t, p_ * g.v + eps * (theta_.lambda_at(t) * eta_)};
}

Tangent Automorphism::differential(const GroupElement& g, const Tangent& z) const {
    const double eps = epsilon_;
    return {eps * z.a, p_ * z.w + z.a * (theta_.rho(eps * g.t) * eta_)};
}

BlockMatrix Automorphism::differential_at_identity() const {
    return {static_cast<double>(epsilon_), eta_, p_};
}

GroupElement aut_apply(const Theta& theta, const Automorphism& phi, const GroupElement& g) {
    if (!(phi.theta() == theta)) {
        throw Error(ErrorCode::InvalidAutomorphism, "automorphism was built for a different theta");
    }
    return phi.apply(g);
}

LinearField LinearField::make(const Theta& theta, const Vec2& xi, const Mat2& a, double tol) {
    if (!check_derivation(theta, xi, a, tol)) {
        throw Error(ErrorCode::InvalidLinearField, "A must commute with theta and be finite");
    }
    return {theta, xi, a};
}

Tangent field_eval(const LinearField& x, const GroupElement& g) {
    return {0.0, x.a() * g.v + x.theta().lambda_at(g.t) * x.xi()};
}

GroupElement detail::flow_formula(const Theta& theta, const Vec2& xi, const Mat2& a, double s,
                                  const GroupElement& g) {
    return {g.t, expm(a, s) * g.v + theta.lambda_at(g.t) * (lambda_op(a, s) * xi)};
}

GroupElement flow(const LinearField& x, double s, const GroupElement& g) {
    return detail::flow_formula(x.theta(), x.xi(), x.a(), s, g);
}

BlockMatrix flow_differential_at_identity(const LinearField& x, double s) {
    return {1.0, lambda_op(x.a(), s) * x.xi(), expm(x.a(), s)};
}

bool field_singularities_check(const LinearField& x, const GroupElement& g, double tol) {
    return norm(field_eval(x, g)) <= tol;
}

}  // namespace ars3d
