#include "ars3d/ars.hpp"

#include "ars3d/error.hpp"

#include <cmath>

namespace ars3d {

namespace {

struct Vec3 {
    double a, x, y;
};

Vec3 lift(const AlgebraElement& e) { return {e.a, e.w.x, e.w.y}; }

double dot3(const Vec3& p, const Vec3& q) { return p.a * q.a + p.x * q.x + p.y * q.y; }

Vec3 cross3(const Vec3& p, const Vec3& q) {
    return {p.x * q.y - p.y * q.x, p.y * q.a - p.a * q.y, p.a * q.x - p.x * q.a};
}

double norm3(const Vec3& p) { return std::sqrt(dot3(p, p)); }

// Parallel test scaled by the operands.
bool parallel(const Vec2& p, const Vec2& q, double tol) {
    return std::fabs(cross(p, q)) <= tol * std::fmax(1.0, norm(p) * norm(q));
}

bool in_line(const Vec2& direction, const Vec2& w, double tol) {
    return std::fabs(cross(direction, w)) <= tol * std::fmax(1.0, norm(w));
}

std::array<AlgebraElement, 2> orthonormalize(const Distribution& delta) {
    const auto& b = delta.basis();
    const Mat2& g = delta.gram();
    const double n1 = std::sqrt(g.a11);
    const double proj = g.a12 / g.a11;
    const double n2 = std::sqrt(g.a22 - g.a12 * proj);
    const AlgebraElement y1{b[0].a / n1, b[0].w / n1};
    const AlgebraElement y2{(b[1].a - proj * b[0].a) / n2, (b[1].w - proj * b[0].w) / n2};
    return {y1, y2};
}

GroupElement find_witness(const LinearField& x, const Vec2& u, double tol) {
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) {
            for (int k = 0; k < 11; ++k) {
                const GroupElement g{-5.0 + i, Vec2{-5.0 + j, -5.0 + k}};
                if (std::fabs(normal_component(x, u, g)) > tol * (1.0 + norm(g.v))) return g;
            }
        }
    }
    throw Error(ErrorCode::NoRegularPoint, "X(g) lies in Delta^L(g) on the whole witness grid");
}

}  // namespace

Distribution Distribution::make(const AlgebraElement& b1, const AlgebraElement& b2, const Mat2& gram,
                                double tol) {
    const Vec3 p = lift(b1);
    const Vec3 q = lift(b2);
    for (double e : {p.a, p.x, p.y, q.a, q.x, q.y}) {
        if (!std::isfinite(e)) throw Error(ErrorCode::InvalidInput, "distribution basis is not finite");
    }
    if (!(norm3(cross3(p, q)) > tol * norm3(p) * norm3(q)) || norm3(p) == 0.0 || norm3(q) == 0.0) {
        throw Error(ErrorCode::InvalidInput, "distribution basis is linearly dependent");
    }
    if (!is_finite(gram) || std::fabs(gram.a12 - gram.a21) > tol * std::fmax(1.0, max_abs(gram))) {
        throw Error(ErrorCode::InvalidInput, "gram matrix must be finite and symmetric");
    }
    Mat2 sym = gram;
    sym.a21 = sym.a12;
    if (!(sym.a11 > 0.0) || !(sym.det() > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "gram matrix must be positive definite");
    }
    return {{b1, b2}, sym};
}

DeltaLine delta_line(const Distribution& delta, double tol) {
    const auto& b = delta.basis();
    // d holds the spatial components of the plane normal b0 x b1; its time
    // component is cross(w0, w1). Comparing the two gives a basis-independent test.
    const Vec2 d = b[0].a * b[1].w - b[1].a * b[0].w;
    const double n = std::hypot(norm(d), cross(b[0].w, b[1].w));
    if (!(norm(d) > tol * n)) {
        throw Error(ErrorCode::DegenerateDistribution, "Delta = {0} x R^2 fails the LARC");
    }
    const Vec2 dir = normalized(d);
    return {dir, perp(dir)};
}

bool is_subalgebra(const Theta& theta, const Distribution& delta, double tol) {
    const DeltaLine line = delta_line(delta, tol);
    return parallel(line.direction, theta.matrix() * line.direction, tol);
}

std::string_view to_string(LarcReason r) {
    switch (r) {
        case LarcReason::NotSubalgebra: return "NotSubalgebra";
        case LarcReason::DerivationNotInvariant: return "DerivationNotInvariant";
        case LarcReason::ALineNotInvariant: return "ALineNotInvariant";
        case LarcReason::XiOutsideLine: return "XiOutsideLine";
        case LarcReason::Fails: return "Fails";
    }
    return "Unknown";
}

bool contains_time_direction(const Distribution& delta, double tol) {
    const auto& b = delta.basis();
    return parallel(b[0].w, b[1].w, tol);
}

LarcVerdict larc(const LinearField& x, const Distribution& delta, double tol) {
    const DeltaLine line = delta_line(delta, tol);
    if (!is_subalgebra(x.theta(), delta, tol)) return {true, LarcReason::NotSubalgebra};

    if (contains_time_direction(delta, tol)) {
        if (!in_line(line.direction, x.a() * line.direction, tol)) {
            return {true, LarcReason::ALineNotInvariant};
        }
        if (!in_line(line.direction, x.xi(), tol)) return {true, LarcReason::XiOutsideLine};
        return {false, LarcReason::Fails};
    }
    // D (sigma, u) = (0, sigma xi + A u) lies in Delta iff it lies in {0} x l_Delta.
    for (const auto& b : delta.basis()) {
        if (!in_line(line.direction, b.a * x.xi() + x.a() * b.w, tol)) {
            return {true, LarcReason::DerivationNotInvariant};
        }
    }
    return {false, LarcReason::Fails};
}

double normal_component(const LinearField& x, const Vec2& u, const GroupElement& g) {
    const Vec2 xv = x.a() * g.v + x.theta().lambda_at(g.t) * x.xi();
    return dot(x.theta().rho(-g.t) * xv, u);
}

SimpleARS SimpleARS::make(const LinearField& x, const Distribution& delta, double tol) {
    const DeltaLine line = delta_line(delta, tol);
    const LarcVerdict verdict = larc(x, delta, tol);
    if (!verdict.satisfied) {
        throw Error(ErrorCode::LarcNotSatisfied, "Delta is a subalgebra invariant under the derivation");
    }
    const GroupElement witness = find_witness(x, line.normal, tol);
    return {x, delta, line, verdict.reason, orthonormalize(delta), witness};
}

double ar_norm(const SimpleARS& sigma, const GroupElement& g, const Tangent& z) {
    // Left-trivialize: dL_g^-1 maps the frame to {(0, x), Y1, Y2}.
    const Mat2 back = sigma.theta().rho(-g.t);
    const Tangent xg = field_eval(sigma.field(), g);
    const Vec2 xw = back * xg.w;
    const Vec3 x0{0.0, xw.x, xw.y};
    const Vec3 y1 = lift(sigma.frame()[0]);
    const Vec3 y2 = lift(sigma.frame()[1]);
    const Vec3 zz{z.a, (back * z.w).x, (back * z.w).y};

    const Vec3 n = cross3(y1, y2);
    const double det = dot3(x0, n);
    const double scale = norm3(n) * std::fmax(1.0, norm3(x0));
    if (std::fabs(det) > 1e-10 * scale) {
        // Cramer's rule on [x0 | y1 | y2] alpha = zz.
        const double a0 = dot3(zz, n) / det;
        const double a1 = dot3(x0, cross3(zz, y2)) / det;
        const double a2 = dot3(x0, cross3(y1, zz)) / det;
        return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2);
    }

    // Rank 2: x0 lies in Delta. z must too, and the solution set is a line.
    const double nn = norm3(n);
    if (std::fabs(dot3(zz, n)) > 1e-10 * nn * std::fmax(1.0, norm3(zz))) {
        return std::numeric_limits<double>::infinity();
    }
    const Mat2 gram{dot3(y1, y1), dot3(y1, y2), dot3(y2, y1), dot3(y2, y2)};
    const Vec2 beta = solve2(gram, {dot3(y1, zz), dot3(y2, zz)}, 0.0);
    const Vec2 gamma = solve2(gram, {dot3(y1, x0), dot3(y2, x0)}, 0.0);
    // Particular solution (0, beta); null direction (1, -gamma).
    const double nd = 1.0 + dot(gamma, gamma);
    const double k = -dot(beta, gamma) / nd;
    const double a0 = -k;
    const Vec2 rest = beta + k * gamma;
    return std::sqrt(a0 * a0 + dot(rest, rest));
}

SimpleARS pushforward(const SimpleARS& sigma, const Automorphism& psi) {
    if (!(psi.theta() == sigma.theta())) {
        throw Error(ErrorCode::InvalidAutomorphism, "automorphism was built for a different theta");
    }
    const LinearField& x = sigma.field();
    const double eps = psi.epsilon();
    const Mat2 pinv = inverse(psi.p(), 0.0);
    const Vec2 xi = pinv * (eps * x.xi() + x.a() * psi.eta());
    const Mat2 a = pinv * x.a() * psi.p();
    const LinearField moved = LinearField::make(sigma.theta(), xi, a, 1e-8 * std::fmax(1.0, max_abs(a)));

    const auto& b = sigma.distribution().basis();
    auto back = [&](const AlgebraElement& e) {
        return AlgebraElement{eps * e.a, pinv * (e.w - (eps * e.a) * psi.eta())};
    };
    const Distribution delta = Distribution::make(back(b[0]), back(b[1]), sigma.distribution().gram());
    return SimpleARS::make(moved, delta);
}

Automorphism psi1(const LinearField& x) {
    const Vec2 eta = -solve2(x.a(), x.xi(), kSingularTol);
    return Automorphism::make(x.theta(), 1, Mat2::identity(), eta);
}

Automorphism psi2(const Theta& theta, const AlgebraElement& element) {
    if (!(std::fabs(element.a) > kSingularTol)) {
        throw Error(ErrorCode::CannotNormalize, "psi_2 needs an element with sigma != 0");
    }
    return Automorphism::make(theta, 1, Mat2::identity(), element.w / element.a);
}

Normalized normalize(const SimpleARS& sigma, NormalizeTarget target) {
    const LinearField& x = sigma.field();
    const auto& b = sigma.distribution().basis();
    const int pivot = std::fabs(b[0].a) >= std::fabs(b[1].a) ? 0 : 1;
    const bool can_psi2 = std::fabs(b[pivot].a) > kSingularTol;
    const bool can_psi1 = std::fabs(x.a().det()) > kSingularTol;

    if (target == NormalizeTarget::TimeDirection && can_psi2) {
        const Automorphism psi = psi2(sigma.theta(), b[pivot]);
        const SimpleARS moved = pushforward(sigma, psi);
        auto basis = moved.distribution().basis();
        basis[pivot].w = Vec2{};
        const Distribution delta = Distribution::make(basis[0], basis[1], moved.distribution().gram());
        return {SimpleARS::make(moved.field(), delta), psi};
    }
    if (can_psi1) {
        const Automorphism psi = psi1(x);
        const SimpleARS moved = pushforward(sigma, psi);
        const LinearField snapped = LinearField::make(sigma.theta(), Vec2{}, moved.field().a(),
                                                      1e-8 * std::fmax(1.0, max_abs(moved.field().a())));
        return {SimpleARS::make(snapped, moved.distribution()), psi};
    }
    throw Error(ErrorCode::CannotNormalize,
                target == NormalizeTarget::ZeroXi ? "psi_1 needs det A != 0"
                                                  : "no basis element with sigma != 0 and det A = 0");
}

}  // namespace ars3d
