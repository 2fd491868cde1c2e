#include "ars3d/verify.hpp"

#include "ars3d/ars.hpp"
#include "ars3d/covering.hpp"
#include "ars3d/crossing.hpp"
#include "ars3d/error.hpp"
#include "ars3d/locus.hpp"
#include "ars3d/oracles.hpp"
#include "ars3d/random.hpp"
#include "ars3d/symmetry.hpp"
#include "ars3d/zeros.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace ars3d {

bool SuiteResult::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const PropertyResult& r) { return r.pass; });
}

void PropertyTracker::record(double residual, double size, const std::function<std::string()>& describe) {
    ++row_.cases;
    // NaN counts as a failure and as the worst residual
    const double r = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
    row_.max_residual = std::max(row_.max_residual, r);
    if (r <= row_.tolerance) return;
    if (row_.pass || size < best_size_) {
        row_.counterexample = describe();
        best_size_ = size;
    }
    row_.pass = false;
}

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{"lambda", "group", "symmetry", "ars",
                                                     "locus",  "crossing", "covering"};
    return names;
}

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string str(const Vec2& v) { return "(" + num(v.x) + ", " + num(v.y) + ")"; }
std::string str(const Mat2& m) {
    return "[[" + num(m.a11) + ", " + num(m.a12) + "], [" + num(m.a21) + ", " + num(m.a22) + "]]";
}
std::string str(const GroupElement& g) { return "(" + num(g.t) + ", " + str(g.v) + ")"; }
std::string str(const AlgebraElement& y) { return "(" + num(y.a) + ", " + str(y.w) + ")"; }
std::string str(const SimpleARS& s) {
    const auto& b = s.distribution().basis();
    return "theta=" + s.theta().describe() + " xi=" + str(s.field().xi()) + " A=" + str(s.field().a()) +
           " delta={" + str(b[0]) + ", " + str(b[1]) + "}";
}

double rel(const Mat2& a, const Mat2& b) {
    return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}

double rel(const GroupElement& a, const GroupElement& b) {
    const double scale = std::max({1.0, std::fabs(a.t), max_abs(a.v), std::fabs(b.t), max_abs(b.v)});
    return distance(a, b) / scale;
}

double rel(const Tangent& a, const Tangent& b) {
    const double d = std::max(std::fabs(a.a - b.a), max_abs(a.w - b.w));
    return d / std::max({1.0, std::fabs(a.a), max_abs(a.w), std::fabs(b.a), max_abs(b.w)});
}

double size_of(const GroupElement& g) { return std::fabs(g.t) + max_abs(g.v); }

// A matrix with the eigen-structure of the given theta family, in a random basis.
Mat2 family_matrix(Random& rng, Family f) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(0.2, 1.0);
    Mat2 m;
    switch (f) {
        case Family::Jordan: m = Mat2{a, b, 0.0, a}; break;
        case Family::Diagonal: m = Mat2::diag(a, rng.uniform(-1.0, 1.0)); break;
        case Family::Complex: m = Mat2{a, -b, b, a}; break;
    }
    for (;;) {
        const Mat2 s = Mat2::identity() + 0.5 * rng.mat();
        if (std::fabs(s.det()) >= 0.3) return s * m * inverse(s);
    }
}

using Rows = std::vector<PropertyResult>;

Rows lambda_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker zero("lambda: Lambda_0 = 0", 0.0);
    PropertyTracker deriv("lambda: d/dt Lambda_t = e^{tM} (central, h=1e-6)", 1e-6);
    PropertyTracker deriv5("lambda: d/dt Lambda_t = e^{tM} (five-point, h=1e-3)", 1e-9);
    PropertyTracker cocycle("lambda: Lambda_{t+s} = Lambda_t + e^{tM} Lambda_s", 1e-9);
    PropertyTracker fundamental("lambda: e^{tM} - M Lambda_t = id", 1e-9);
    PropertyTracker commute("lambda: e^{sM} Lambda_t = Lambda_t e^{sM}", 1e-9);
    PropertyTracker invertible("lambda: Lambda_t = (e^{tM} - id) M^-1", 1e-9);
    PropertyTracker diag0("lambda: diag(l, 0) closed form", 1e-9);
    PropertyTracker quad("lambda: agrees with Simpson quadrature, |t| <= 10", 1e-8);

    for (Family f : kFamilies) {
        for (int i = 0; i < opt.cases; ++i) {
            const Mat2 m = family_matrix(rng, f);
            const double t = rng.uniform(-3.0, 3.0);
            const double s = rng.uniform(-3.0, 3.0);
            const double size = max_abs(m) + std::fabs(t) + std::fabs(s);
            auto show = [&] { return "M=" + str(m) + " t=" + num(t) + " s=" + num(s); };
            const Mat2 lt = lambda_op(m, t);
            const Mat2 et = expm(m, t);

            zero.record(max_abs(lambda_op(m, 0.0)), size, show);
            const double h = 1e-6;
            deriv.record(rel((1.0 / (2 * h)) * (lambda_op(m, t + h) - lambda_op(m, t - h)), et), size, show);
            const double k = 1e-3;
            const Mat2 five = (1.0 / (12 * k)) * (8.0 * (lambda_op(m, t + k) - lambda_op(m, t - k)) -
                                                  (lambda_op(m, t + 2 * k) - lambda_op(m, t - 2 * k)));
            deriv5.record(rel(five, et), size, show);
            cocycle.record(rel(lambda_op(m, t + s), lt + et * lambda_op(m, s)), size, show);
            fundamental.record(rel(et - m * lt, Mat2::identity()), size, show);
            commute.record(rel(expm(m, s) * lt, lt * expm(m, s)), size, show);
            if (std::fabs(m.det()) > 1e-3) {
                invertible.record(rel(lt, (et - Mat2::identity()) * inverse(m)), size, show);
            }
        }
        for (int i = 0; i < std::max(10, opt.cases / 10); ++i) {
            const Mat2 m = family_matrix(rng, f);
            const double t = rng.uniform(-10.0, 10.0);
            quad.record(rel(lambda_op(m, t), oracle::lambda_oracle(m, t, 4096)), std::fabs(t),
                        [&] { return "M=" + str(m) + " t=" + num(t); });
        }
    }
    for (int i = 0; i < opt.cases; ++i) {
        double l = rng.uniform(-1.0, 1.0);
        if (l == 0.0) l = 0.5;
        const double t = rng.uniform(-3.0, 3.0);
        const Mat2 expect = Mat2::diag(std::expm1(t * l) / l, t);
        diag0.record(rel(lambda_op(Mat2::diag(l, 0.0), t), expect), std::fabs(t),
                     [&] { return "lambda=" + num(l) + " t=" + num(t); });
    }
    return {zero.result(),       deriv.result(),   deriv5.result(), cocycle.result(), fundamental.result(),
            commute.result(),    invertible.result(), diag0.result(), quad.result()};
}

Rows group_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker assoc("group: associativity", 1e-10);
    PropertyTracker inverse_law("group: g^-1 g = e", 1e-9);
    PropertyTracker one_param("group: exp((s+r)X) = exp(sX) exp(rX)", 1e-9);
    PropertyTracker left("group: dL_g equals Y^L", 0.0);
    PropertyTracker rk("group: exp(sY) against RK4 on Y^L", 1e-6);

    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const GroupElement g = rng.element();
        const GroupElement h = rng.element();
        const GroupElement k = rng.element();
        const double size = size_of(g) + size_of(h) + size_of(k);
        auto show = [&] { return "theta=" + th.describe() + " g=" + str(g) + " h=" + str(h) + " k=" + str(k); };
        assoc.record(rel(mul(th, mul(th, g, h), k), mul(th, g, mul(th, h, k))), size, show);
        inverse_law.record(rel(mul(th, inv(th, g), g), GroupElement::identity()), size, show);

        const AlgebraElement x = rng.algebra();
        const double s = rng.uniform(-2.0, 2.0);
        const double r = rng.uniform(-2.0, 2.0);
        auto scaled = [&](double c) { return AlgebraElement{c * x.a, c * x.w}; };
        one_param.record(rel(group_exp(th, scaled(s + r)), mul(th, group_exp(th, scaled(s)), group_exp(th, scaled(r)))),
                         std::fabs(s) + std::fabs(r),
                         [&] { return "theta=" + th.describe() + " X=" + str(x) + " s=" + num(s) + " r=" + num(r); });
        left.record(rel(d_left(th, g, as_tangent(x)), left_invariant(th, x, g)), size, show);
    }
    for (int i = 0; i < std::max(10, opt.cases / 10); ++i) {
        const Theta th = random_theta(rng);
        const AlgebraElement y = rng.algebra();
        const double s = rng.uniform(0.0, 1.0);
        auto field = [&](const GroupElement& g) { return left_invariant(th, y, g); };
        const GroupElement ode = oracle::rk4(field, GroupElement::identity(), s, 200);
        rk.record(distance(ode, group_exp(th, {s * y.a, s * y.w})), s,
                  [&] { return "theta=" + th.describe() + " Y=" + str(y) + " s=" + num(s); });
    }
    return {assoc.result(), inverse_law.result(), one_param.result(), left.result(), rk.result()};
}

Rows symmetry_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker hom("symmetry: phi_s(gh) = phi_s(g) phi_s(h)", 1e-9);
    PropertyTracker semigroup("symmetry: phi_s phi_r = phi_{s+r}", 1e-9);
    PropertyTracker deriv("symmetry: d/ds phi_s(g) at 0 = X(g)", 1e-6);
    PropertyTracker block("symmetry: (d phi_s)_e = e^{sD}", 1e-9);
    PropertyTracker aut("symmetry: automorphisms are homomorphisms", 1e-9);
    PropertyTracker aut_d("symmetry: automorphism differential", 1e-6);

    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const LinearField x = random_field(rng, th);
        Mat2 a = x.a();
        if (opt.inject_fault) a = a + Mat2{0.0, 1.0, 0.0, 0.0};
        auto phi = [&](double s, const GroupElement& g) { return detail::flow_formula(th, x.xi(), a, s, g); };

        const GroupElement g = rng.element();
        const GroupElement h = rng.element();
        const double s = rng.uniform(-2.0, 2.0);
        const double r = rng.uniform(-2.0, 2.0);
        const double size = size_of(g) + size_of(h) + std::fabs(s) + max_abs(a) + max_abs(x.xi());
        auto show = [&] {
            return "theta=" + th.describe() + " xi=" + str(x.xi()) + " A=" + str(a) + " s=" + num(s) +
                   " g=" + str(g) + " h=" + str(h);
        };
        hom.record(rel(phi(s, mul(th, g, h)), mul(th, phi(s, g), phi(s, h))), size, show);
        semigroup.record(rel(phi(s, phi(r, g)), phi(s + r, g)), size, show);

        const double step = 1e-6;
        const GroupElement p = phi(step, g);
        const GroupElement m = phi(-step, g);
        deriv.record(rel(Tangent{(p.t - m.t) / (2 * step), (p.v - m.v) / (2 * step)}, field_eval(x, g)), size,
                     show);

        BlockMatrix term = BlockMatrix::identity();
        BlockMatrix sum = BlockMatrix::identity();
        for (int n = 1; n < 40; ++n) {
            term = (s / n) * (term * x.derivation());
            sum = sum + term;
        }
        block.record(max_abs(sum + (-1.0) * flow_differential_at_identity(x, s)), size, show);

        const Automorphism psi = random_automorphism(rng, th);
        auto show_aut = [&] {
            return "theta=" + th.describe() + " eps=" + std::to_string(psi.epsilon()) + " P=" + str(psi.p()) +
                   " eta=" + str(psi.eta()) + " g=" + str(g) + " h=" + str(h);
        };
        aut.record(rel(psi.apply(mul(th, g, h)), mul(th, psi.apply(g), psi.apply(h))), size, show_aut);
        const Tangent z{rng.uniform(-1, 1), rng.vec()};
        const GroupElement gp = psi.apply({g.t + step * z.a, g.v + step * z.w});
        const GroupElement gm = psi.apply({g.t - step * z.a, g.v - step * z.w});
        aut_d.record(rel(Tangent{(gp.t - gm.t) / (2 * step), (gp.v - gm.v) / (2 * step)}, psi.differential(g, z)),
                     size, show_aut);
    }
    return {hom.result(), semigroup.result(), deriv.result(), block.result(), aut.result(), aut_d.result()};
}

Rows ars_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker iso("ars: pushforward is an isometry", 1e-8);
    PropertyTracker conj("ars: d psi (X_psi) = X o psi", 1e-9);
    PropertyTracker larc_kept("ars: LARC survives pushforward", 0.0);
    PropertyTracker sub("ars: subalgebra Delta, theta != id => A l_Delta in l_Delta", 1e-9);
    PropertyTracker left("ars: norm of Y^L is constant off the locus", 1e-9);
    PropertyTracker time_dir("ars: psi_2 puts (sigma, 0) in Delta exactly", 0.0);
    PropertyTracker zero_xi("ars: psi_1 gives xi = 0 exactly", 0.0);

    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const SimpleARS s = random_ars(rng, th);
        const Automorphism psi = random_automorphism(rng, th);
        const GroupElement g = rng.element();
        const Tangent z{rng.uniform(-1, 1), rng.vec()};
        auto show = [&] {
            return str(s) + " eps=" + std::to_string(psi.epsilon()) + " P=" + str(psi.p()) + " eta=" +
                   str(psi.eta()) + " g=" + str(g);
        };
        const SimpleARS moved = pushforward(s, psi);
        const double lhs = ar_norm(moved, g, z);
        const double rhs = ar_norm(s, psi.apply(g), psi.differential(g, z));
        double r = 0.0;
        if (std::isinf(lhs) || std::isinf(rhs)) {
            r = lhs == rhs ? 0.0 : std::numeric_limits<double>::infinity();
        } else {
            r = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
        }
        iso.record(r, size_of(g), show);
        conj.record(rel(psi.differential(g, field_eval(moved.field(), g)), field_eval(s.field(), psi.apply(g))),
                    size_of(g), show);
        larc_kept.record(larc(moved.field(), moved.distribution()).satisfied ? 0.0 : 1.0, size_of(g), show);

        // premise of the subalgebra implication, biased to fire often
        if (!(th.matrix() == Mat2::identity()) && th.kind() != Theta::Kind::Complex) {
            const Vec2 eig = th.kind() == Theta::Kind::Jordan || rng.coin() ? Vec2::e1() : Vec2::e2();
            const Distribution d = Distribution::make({rng.uniform(0.5, 1.0), rng.vec()}, {0.0, eig});
            if (is_subalgebra(th, d)) {
                const Vec2 dir = delta_line(d).direction;
                const Mat2& a = s.field().a();
                sub.record(std::fabs(cross(dir, a * dir)) / std::max(1.0, max_abs(a)), 0.0,
                           [&] { return "theta=" + th.describe() + " A=" + str(a) + " l=" + str(dir); });
            }
        }

        const double c1 = rng.uniform(-1, 1), c2 = rng.uniform(-1, 1);
        const AlgebraElement y{c1 * s.frame()[0].a + c2 * s.frame()[1].a, c1 * s.frame()[0].w + c2 * s.frame()[1].w};
        if (std::fabs(normal_component(s.field(), s.line().normal, g)) > 1e-3) {
            left.record(std::fabs(ar_norm(s, g, left_invariant(th, y, g)) - std::hypot(c1, c2)), size_of(g), show);
        }

        const Normalized n = normalize(s);
        const auto& b = n.sigma.distribution().basis();
        const bool exact = (b[0].a != 0.0 && b[0].w == Vec2{}) || (b[1].a != 0.0 && b[1].w == Vec2{});
        time_dir.record(exact ? 0.0 : 1.0, 0.0, [&] { return str(s); });
        if (std::fabs(s.field().a().det()) > 1e-6) {
            const Normalized q = normalize(s, NormalizeTarget::ZeroXi);
            zero_xi.record(max_abs(q.sigma.field().xi()), 0.0, [&] { return str(s); });
        }
    }
    return {iso.result(),  conj.result(),     larc_kept.result(), sub.result(),
            left.result(), time_dir.result(), zero_xi.result()};
}

Rows locus_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker fh("locus: F(H(t, v)) = <v, u>", 1e-9);
    PropertyTracker hh("locus: H H^-1 = H^-1 H = id", 1e-10);
    PropertyTracker fi("locus: F(I(t, v)) = e^{-beta t} <v, w1> <A w1, u>", 1e-9);
    PropertyTracker ii("locus: I I^-1 = I^-1 I = id", 1e-10);
    PropertyTracker param("locus: F vanishes on the parametrization", 1e-9);
    PropertyTracker grad("locus: gradient against central differences", 1e-6);
    PropertyTracker sample("locus: samples on the locus, fiber neighbours off it", 1e-8);
    PropertyTracker audit("locus: regular value audit violations", 0.0);

    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const LocusFunction f(random_ars_with(rng, th, random_invertible_commuting(rng, th)));
        const GroupElement g = rng.element();
        auto show = [&] { return str(f.sigma()) + " g=" + str(g); };
        fh.record(std::fabs(f(h_map(f, g)) - dot(g.v, f.u())), size_of(g), show);
        hh.record(std::max(distance(h_map(f, h_map_inverse(f, g)), g), distance(h_map_inverse(f, h_map(f, g)), g)),
                  size_of(g), show);
        const LocusDescription d = describe_locus(f, -2, 2);
        param.record(std::fabs(f(locus_param(d, f, g.v.x, g.t))), size_of(g), show);

        const LocusFunction any(random_ars(rng, th));
        const Gradient gr = locus_gradient(any, g);
        const double h = 1e-6;
        const double dt = oracle::central_difference([&](double s) { return any({s, g.v}); }, g.t, h);
        const double dx = oracle::central_difference([&](double s) { return any({g.t, {s, g.v.y}}); }, g.v.x, h);
        const double dy = oracle::central_difference([&](double s) { return any({g.t, {g.v.x, s}}); }, g.v.y, h);
        grad.record(std::max({std::fabs(dt - gr.dt), std::fabs(dx - gr.dv.x), std::fabs(dy - gr.dv.y)}), size_of(g),
                    [&] { return str(any.sigma()) + " g=" + str(g); });
    }
    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, i % 2 == 0 ? Family::Jordan : Family::Diagonal);
        const LocusFunction f(random_ars_with(rng, th, random_rank_one_commuting(rng, th)));
        const LocusDescription d = describe_locus(f, -2, 2);
        const auto* m = std::get_if<Imap>(&d.shape);
        if (m == nullptr) continue;  // A w1 in l_Delta: a single plane, no I map
        const GroupElement g = rng.element();
        auto show = [&] { return str(f.sigma()) + " g=" + str(g); };
        const Vec2 aw1 = f.sigma().field().a() * m->w1;
        const double expect = std::exp(-m->beta * g.t) * dot(g.v, m->w1) * dot(aw1, f.u());
        fi.record(std::fabs(f(i_map(f, *m, g)) - expect), size_of(g), show);
        ii.record(std::max(distance(i_map(f, *m, i_map_inverse(f, *m, g)), g),
                           distance(i_map_inverse(f, *m, i_map(f, *m, g)), g)),
                  size_of(g), show);
        param.record(std::fabs(f(locus_param(d, f, g.v.x, g.t))), size_of(g), show);
    }

    const int structures = std::max(4, opt.cases / 100);
    for (int i = 0; i < structures; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const LocusFunction f(random_ars_with(rng, th, random_invertible_commuting(rng, th)));
        std::vector<GroupElement> points;
        for (const LocusSample& p : locus_sample(f, -1.5, 1.5, 10)) {
            const Gradient gr = locus_gradient(f, p.g);
            const GroupElement off{p.g.t, p.g.v + 0.1 * normalized(gr.dv)};
            const double r = f(off) == 0.0 ? std::numeric_limits<double>::infinity() : std::fabs(p.residual);
            sample.record(r, size_of(p.g), [&] { return str(f.sigma()) + " point=" + str(p.g); });
            points.push_back(p.g);
        }
        for (int k = 0; k < opt.cases; ++k) {
            points.push_back(locus_param(describe_locus(f, -2, 2), f, rng.uniform(-2, 2), rng.uniform(-2, 2)));
        }
        const AuditReport rep = regular_value_audit(f, points);
        audit.record(static_cast<double>(rep.violations.size()), 0.0, [&] {
            return str(f.sigma()) + " first violation=" + str(rep.violations.front());
        });
    }
    return {fh.result(), hh.result(), fi.result(), ii.result(), param.result(),
            grad.result(), sample.result(), audit.result()};
}

// Random curves for the zero-count checks, one shape per index.
ScalarCurve random_curve(Random& rng, int i) {
    switch (i % 3) {
        case 0: {
            ExpPoly c{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.1, 1.0),
                      rng.uniform(-1.0, -0.1)};
            if (i % 9 == 0) c.b = 0.0;  // the single-exponential sub-case
            return c;
        }
        case 1: {
            ExpLinear c{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            if (i % 7 == 1) c.b = 0.0;
            return c;
        }
        default:
            return ExpCos{rng.uniform(0.1, 1), rng.uniform(-0.3, 0.3), rng.uniform(-pi, pi), rng.uniform(-1.5, 1.5),
                          1.0};
    }
}

std::string curve_str(const ScalarCurve& c) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ExpPoly>) {
                return "ExpPoly{" + num(f.a) + ", " + num(f.b) + ", " + num(f.c) + ", " + num(f.lambda1) + ", " +
                       num(f.lambda2) + "}";
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                return "ExpLinear{" + num(f.a) + ", " + num(f.b) + ", " + num(f.c) + ", " + num(f.lambda) + "}";
            } else if constexpr (std::is_same_v<T, ExpCos>) {
                return "ExpCos{" + num(f.amplitude) + ", " + num(f.lambda) + ", " + num(f.phase) + ", " +
                       num(f.c) + ", " + num(f.frequency) + "}";
            } else if constexpr (std::is_same_v<T, MatExpForm>) {
                return "MatExpForm{" + str(f.a) + ", " + str(f.u) + ", " + str(f.v) + ", " + num(f.tau) + "}";
            } else {
                return "curve";
            }
        },
        c);
}

Rows crossing_suite(Random& rng, const VerifyOptions& opt) {
    PropertyTracker closed("crossing: closed form equals F(g exp(sY))", 1e-9);
    PropertyTracker reduced("crossing: reduced curve equals the closed form", 1e-9);
    PropertyTracker flow_form("crossing: flow curve equals F(phi_s(g))", 1e-9);
    PropertyTracker counts("crossing: zero count matches a 10^4-point sign scan", 0.0);
    PropertyTracker ceiling("crossing: zero count within the lemma's ceiling", 0.0);
    PropertyTracker case12("crossing: constant-tau case iff eigenvector u with u.v = 0", 0.0);
    PropertyTracker tri("crossing: off-locus profiles never remain in the locus", 0.0);
    PropertyTracker dich("crossing: on-locus dichotomy agrees with a 10^3-point grid", 0.0);
    PropertyTracker inv("crossing: A-invariant l_Delta keeps a touching flow in the locus", 1e-8);

    for (int i = 0; i < opt.cases; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const SimpleARS s = random_ars(rng, th);
        const GroupElement g = rng.element();
        AlgebraElement y = rng.algebra();
        if (i % 4 == 0) y.a = 0.0;
        const double t = rng.uniform(-2.0, 2.0);
        auto show = [&] { return str(s) + " g=" + str(g) + " Y=" + str(y) + " s=" + num(t); };
        const GroupElement moved = mul(th, g, group_exp(th, {t * y.a, t * y.w}));
        const double direct = normal_component(s.field(), s.line().normal, moved);
        const double value = exp_curve_value(s, g, y, t);
        const double scale = std::max(1.0, std::fabs(direct));
        closed.record(std::fabs(value - direct) / scale, size_of(g), show);
        reduced.record(std::fabs(evaluate(exp_curve_reduce(s, g, y), t) - value) / scale, size_of(g), show);
        const double along = normal_component(s.field(), s.line().normal, flow(s.field(), t, g));
        flow_form.record(std::fabs(evaluate(flow_curve(s, g), t) - along) / std::max(1.0, std::fabs(along)),
                         size_of(g), show);
    }

    for (int i = 0; i < opt.cases; ++i) {
        const ScalarCurve c = random_curve(rng, i);
        const ZeroReport r = zero_classify(c, -20, 20);
        const auto scan = oracle::sign_scan([&](double t) { return evaluate(c, t); }, -20, 20, 10000);
        auto show = [&] { return curve_str(c); };
        counts.record(std::fabs(static_cast<double>(r.zeros.size()) - static_cast<double>(scan.size())), 0.0, show);
        if (r.max_count >= 0) {
            ceiling.record(std::max(0.0, static_cast<double>(r.all_zeros.size()) - r.max_count), 0.0, show);
        }
    }

    for (int i = 0; i < opt.cases; ++i) {
        // A = S diag(l1, l2) S^-1 with known eigenvector S e1, or a complex pair
        Mat2 sm;
        do {
            sm = rng.mat();
        } while (std::fabs(sm.det()) < 0.3);
        const bool complex_pair = i % 5 == 4;
        const Mat2 core = complex_pair ? Mat2{0.2, -1.0, 1.0, 0.2} : Mat2::diag(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const Mat2 a = sm * core * inverse(sm);
        const Vec2 eig{sm.a11, sm.a21};
        Vec2 u = rng.vec();
        Vec2 v = rng.vec();
        const int pick = i % 4;
        if (pick == 0 || pick == 1) u = rng.uniform(0.5, 1.5) * eig;   // eigenvector
        if (pick == 0 || pick == 2) v = rng.uniform(0.5, 1.5) * perp(u);  // orthogonal
        const bool expect = !complex_pair && pick == 0;
        const MatExpForm form{a, u, v, rng.uniform(-1, 1)};
        const bool got = reduce(form).lemma_case == LemmaCase::RealConstantTau;
        case12.record(got == expect ? 0.0 : 1.0, 0.0, [&] { return curve_str(form); });
    }

    for (int i = 0; i < opt.cases / 2; ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const SimpleARS s = random_ars_with(rng, th, random_invertible_commuting(rng, th));
        const GroupElement g = rng.element();
        if (component_of(LocusFunction(s), g) == Component::OnLocus) continue;
        const AlgebraElement y = rng.algebra();
        const CrossingProfile p = exp_curve_profile(s, g, y, -5, 5);
        const CrossingProfile q = flow_crossing(s, g, -5, 5);
        const bool bad = p.behavior == Behavior::RemainsInLocus || q.behavior == Behavior::RemainsInLocus;
        tri.record(bad ? 1.0 : 0.0, size_of(g), [&] { return str(s) + " g=" + str(g) + " Y=" + str(y); });
    }

    for (int i = 0; i < std::max(10, opt.cases / 10); ++i) {
        const Theta th = random_theta(rng, kFamilies[i % 3]);
        const SimpleARS s = random_ars_with(rng, th, random_invertible_commuting(rng, th));
        const LocusFunction f(s);
        const GroupElement g = locus_param(describe_locus(f, -1, 1), f, rng.uniform(-1, 1), rng.uniform(-1, 1));
        AlgebraElement y = rng.algebra();
        if (i % 2 == 0) y = {0.0, solve2(s.field().a(), rng.uniform(0.5, 1.5) * s.line().direction)};
        const CrossingProfile p = exp_curve_profile(s, g, y, -2, 2);
        const bool flat = p.behavior == Behavior::RemainsInLocus;
        double worst = 0.0;
        bool agree = true;
        int sign_left = 0, sign_right = 0;
        for (int k = 0; k < 1000; ++k) {
            const double sk = -2.0 + 4.0 * k / 999.0;
            const double val = exp_curve_value(s, g, y, sk);
            worst = std::max(worst, std::fabs(val));
            if (flat || std::fabs(sk) >= p.delta) continue;
            const int sg = val > 0.0 ? 1 : val < 0.0 ? -1 : 0;
            if (sg == 0) agree = false;
            int& side = sk < 0.0 ? sign_left : sign_right;
            if (side == 0) side = sg;
            if (side != sg) agree = false;
        }
        if (flat && worst > 1e-9) agree = false;
        dich.record(agree ? 0.0 : 1.0, size_of(g), [&] { return str(s) + " g=" + str(g) + " Y=" + str(y); });
    }

    for (int i = 0; i < std::max(10, opt.cases / 10); ++i) {
        // theta = id admits any A; an upper-triangular A leaves l_Delta = R e1 invariant
        const Mat2 a{rng.uniform(0.5, 1.5), rng.uniform(-1, 1), 0.0, rng.uniform(0.5, 1.5)};
        const LinearField x = LinearField::make(Theta::diagonal(1.0), {rng.uniform(-1, 1), 1.0}, a);
        const SimpleARS s = SimpleARS::make(x, Distribution::make({1.0, {}}, {0.0, Vec2::e1()}));
        const LocusFunction f(s);
        const GroupElement g = locus_param(describe_locus(f, -1, 1), f, rng.uniform(-1, 1), rng.uniform(-1, 1));
        const CrossingProfile p = flow_crossing(s, g, -2, 2);
        double worst = p.behavior == Behavior::RemainsInLocus ? 0.0 : std::numeric_limits<double>::infinity();
        for (int k = 0; k < 1000; ++k) {
            const GroupElement h = flow(x, -2.0 + 4.0 * k / 999.0, g);
            worst = std::max(worst, std::fabs(f(h)) / (1.0 + norm(h.v)));
        }
        inv.record(worst, size_of(g), [&] { return str(s) + " g=" + str(g); });
    }
    return {closed.result(),  reduced.result(), flow_form.result(), counts.result(), ceiling.result(),
            case12.result(), tri.result(),     dich.result(),      inv.result()};
}

Rows covering_suite(Random& rng, const VerifyOptions& opt) {
    const Theta rot = Theta::complex(0.0);
    PropertyTracker hom("covering: project(gh) = project(g) project(h)", 1e-10);
    PropertyTracker flows("covering: flows commute with the projection", 0.0);
    PropertyTracker descent("covering: locus membership is 2 pi periodic", 1e-9);

    for (int i = 0; i < opt.cases; ++i) {
        const GroupElement g = rng.element(10.0);
        const GroupElement h = rng.element(10.0);
        auto show = [&] { return "g=" + str(g) + " h=" + str(h); };
        hom.record(circular_distance(project(rot, mul(rot, g, h)), quotient_mul(project(rot, g), project(rot, h))),
                   size_of(g) + size_of(h), show);
        const LinearField x = random_field(rng, rot);
        const double s = rng.uniform(-2, 2);
        flows.record(flow_descends(x, s, g) ? 0.0 : 1.0, size_of(g), [&] {
            return "xi=" + str(x.xi()) + " A=" + str(x.a()) + " s=" + num(s) + " g=" + str(g);
        });
    }
    const LinearField ex = LinearField::make(rot, {1.0, 1.0}, Mat2::zero());
    std::vector<SimpleARS> structures{SimpleARS::make(ex, Distribution::make({1.0, {}}, {0.0, Vec2::e1()}))};
    for (int i = 0; i < std::max(5, opt.cases / 20); ++i) structures.push_back(random_ars(rng, rot));
    for (const SimpleARS& s : structures) {
        const DescentReport r = locus_descends(s);
        const double worst = r.mismatches.empty() ? r.max_residual : std::numeric_limits<double>::infinity();
        descent.record(worst, 0.0, [&] { return str(s); });
    }
    return {hom.result(), flows.result(), descent.result()};
}

}  // namespace

std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& opt) {
    if (opt.cases < 1) throw Error(ErrorCode::InvalidInput, "verify needs at least one case");
    const auto& names = suite_names();
    std::vector<std::string_view> chosen;
    if (name == "all") {
        chosen = names;
    } else if (std::find(names.begin(), names.end(), name) != names.end()) {
        chosen.push_back(name);
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown suite '" + std::string(name) + "'");
    }

    std::vector<SuiteResult> out;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        // each suite gets its own stream so results do not depend on which suites ran before
        const auto index = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), chosen[k]) - names.begin());
        Random rng(opt.seed * 1000003ULL + index);
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r;
        r.suite = std::string(chosen[k]);
        if (chosen[k] == "lambda") r.rows = lambda_suite(rng, opt);
        else if (chosen[k] == "group") r.rows = group_suite(rng, opt);
        else if (chosen[k] == "symmetry") r.rows = symmetry_suite(rng, opt);
        else if (chosen[k] == "ars") r.rows = ars_suite(rng, opt);
        else if (chosen[k] == "locus") r.rows = locus_suite(rng, opt);
        else if (chosen[k] == "crossing") r.rows = crossing_suite(rng, opt);
        else r.rows = covering_suite(rng, opt);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ars3d
