#include "ars3d/crossing.hpp"

#include "ars3d/error.hpp"

#include <algorithm>
#include <cmath>

namespace ars3d {

namespace {

/// p = rho_{-t}(A v + Lambda_t xi), so that F(g) = <p, u>.
Vec2 pulled_field(const LinearField& x, const GroupElement& g) {
    return x.theta().rho(-g.t) * (x.a() * g.v + x.theta().lambda_at(g.t) * x.xi());
}

}  // namespace

double exp_curve_value(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y, double s) {
    const LinearField& x = sigma.field();
    const Vec2& u = sigma.line().normal;
    const Theta& th = x.theta();
    if (y.a == 0.0) {
        return normal_component(x, u, g) + s * dot(x.a() * y.w, u);
    }
    const Vec2 p = x.a() * g.v + th.lambda_at(g.t) * x.xi();
    const Vec2 q = x.a() * y.w + y.a * x.xi();
    return dot(th.rho(-g.t - y.a * s) * p, u) - dot(th.lambda_at(-y.a * s) * q, u) / y.a;
}

ScalarCurve exp_curve_reduce(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y) {
    const LinearField& x = sigma.field();
    const Vec2& u = sigma.line().normal;
    const Mat2 th = x.theta().matrix();
    const double a = y.a;
    if (a == 0.0) return Affine{dot(x.a() * y.w, u), normal_component(x, u, g)};

    const Vec2 p = pulled_field(x, g);
    const Vec2 q = x.a() * y.w + a * x.xi();
    if (std::fabs(th.det()) > kSingularTol) {
        const Vec2 c = solve2(th, q, 0.0) / a;
        return MatExpForm{-a * th, p - c, u, dot(c, u)};
    }
    // theta = diag(1, 0)
    return ExpAffine{(p.x - q.x / a) * u.x, -a, q.y * u.y, p.y * u.y + q.x * u.x / a};
}

MatExpForm flow_curve(const SimpleARS& sigma, const GroupElement& g) {
    const LinearField& x = sigma.field();
    const Vec2 y = x.a() * g.v + x.theta().lambda_at(g.t) * x.xi();
    return {x.a(), y, x.theta().rho(-g.t).transposed() * sigma.line().normal, 0.0};
}

std::string_view to_string(Behavior b) {
    switch (b) {
        case Behavior::StaysInComponent: return "StaysInComponent";
        case Behavior::DiscreteCrossings: return "DiscreteCrossings";
        case Behavior::RemainsInLocus: return "RemainsInLocus";
    }
    return "Unknown";
}

namespace {

double nearest_nonzero(const std::vector<Zero>& zs, double at_zero) {
    double best = std::numeric_limits<double>::infinity();
    for (const Zero& z : zs) {
        if (std::fabs(z.t) > at_zero) best = std::min(best, std::fabs(z.t));
    }
    return best;
}

void finish(CrossingProfile& p, const ScalarCurve& curve, double s_min, double s_max, double scale, double tol) {
    p.report = zero_classify(curve, s_min, s_max, {tol, scale});
    const ZeroReport& r = p.report;
    switch (r.classification) {
        case ZeroClass::IdenticallyZero:
            p.behavior = Behavior::RemainsInLocus;
            p.delta = 0.0;
            return;
        case ZeroClass::ConstantNonzero:
        case ZeroClass::NoZeros:
            p.behavior = Behavior::StaysInComponent;
            return;
        case ZeroClass::FiniteZeros:
            p.delta = nearest_nonzero(r.all_zeros, 1e-9);
            break;
        case ZeroClass::InfiniteDiscrete: {
            p.delta = nearest_nonzero(r.zeros, 1e-9);
            if (!std::isfinite(p.delta)) p.delta = std::max(std::fabs(s_min), std::fabs(s_max));
            break;
        }
    }
    p.zeros = r.zeros;
    p.behavior = p.zeros.empty() ? Behavior::StaysInComponent : Behavior::DiscreteCrossings;
}

double magnitude(const ScalarCurve& c) {
    return std::visit(
        [](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Affine>) {
                return std::max(std::fabs(f.slope), std::fabs(f.intercept));
            } else if constexpr (std::is_same_v<T, MatExpForm>) {
                return std::max(norm(f.u) * norm(f.v), std::fabs(f.tau));
            } else if constexpr (std::is_same_v<T, ExpAffine>) {
                return std::max({std::fabs(f.coef), std::fabs(f.slope), std::fabs(f.c)});
            } else {
                return 1.0;
            }
        },
        c);
}

}  // namespace

CrossingProfile exp_curve_profile(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y,
                                  double s_min, double s_max, double zero_tol) {
    const LocusFunction f(sigma);
    CrossingProfile p;
    p.base = g;
    p.direction = y;
    p.start = component_of(f, g);
    p.best_effort = numerical_rank(sigma.field().a()) == 0;
    const ScalarCurve curve = exp_curve_reduce(sigma, g, y);
    finish(p, curve, s_min, s_max, std::max(1.0, magnitude(curve)), zero_tol);
    return p;
}

CrossingProfile flow_crossing(const SimpleARS& sigma, const GroupElement& g, double s_min, double s_max,
                              double zero_tol) {
    const LocusFunction f(sigma);
    CrossingProfile p;
    p.base = g;
    p.flow = true;
    p.start = component_of(f, g);
    p.best_effort = numerical_rank(sigma.field().a()) == 0;
    const MatExpForm curve = flow_curve(sigma, g);
    finish(p, curve, s_min, s_max, std::max(1.0, magnitude(curve)), zero_tol);

    // an A-invariant l_Delta makes F(phi_s(g)) = e^{s mu} F(g)
    const Vec2 dir = sigma.line().direction;
    const Mat2& a = sigma.field().a();
    const bool invariant = std::fabs(cross(dir, a * dir)) <= kClassifyTol * std::max(1.0, max_abs(a));
    if (invariant && !p.zeros.empty()) {
        p.behavior = Behavior::RemainsInLocus;
        p.delta = 0.0;
    }
    return p;
}

}  // namespace ars3d
