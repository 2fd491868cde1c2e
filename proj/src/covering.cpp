#include "ars3d/covering.hpp"

#include "ars3d/error.hpp"
#include "ars3d/locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ars3d {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

QuotientElement::QuotientElement(double t, const Vec2& v) : v_(v) {
    if (!std::isfinite(t) || !is_finite(v)) throw Error(ErrorCode::InvalidInput, "non-finite quotient element");
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod of a tiny negative can round up to 2 pi
    t_bar_ = r;
}

void require_rotation(const Theta& theta) {
    if (!(theta == Theta::complex(0.0))) {
        throw Error(ErrorCode::UnsupportedTheta, "the 2 pi quotient exists only for theta = complex(0), got " +
                                                     theta.describe());
    }
}

QuotientElement project(const Theta& theta, const GroupElement& g) {
    require_rotation(theta);
    return {g.t, g.v};
}

QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b) {
    const GroupElement p = mul(Theta::complex(0.0), a.lift(), b.lift());
    return {p.t, p.v};
}

double circular_distance(const QuotientElement& a, const QuotientElement& b) {
    const double d = std::fabs(a.t_bar() - b.t_bar());
    return std::max(std::min(d, kTwoPi - d), max_abs(a.v() - b.v()));
}

DescentReport locus_descends(const SimpleARS& sigma, int resolution, double tol) {
    require_rotation(sigma.theta());
    const LocusFunction f(sigma);
    std::vector<GroupElement> points;
    for (const LocusSample& s : locus_sample(f, 0.0, kTwoPi, resolution)) points.push_back(s.g);
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const double t = kTwoPi * i / resolution;
            const double x = -2.0 + 4.0 * j / (resolution - 1);
            points.push_back({t, {x, 0.5 * x - 1.0}});
        }
    }

    DescentReport report;
    for (const GroupElement& g : points) {
        const double base = f(g);
        const double band = tol * (1.0 + norm(g.v));
        const bool on = std::fabs(base) <= band;
        double worst = 0.0;
        bool same = true;
        for (int k = -2; k <= 2; ++k) {
            const double moved = f({g.t + kTwoPi * k, g.v});
            worst = std::max(worst, std::fabs(moved - base) / (1.0 + norm(g.v)));
            if ((std::fabs(moved) <= band) != on) same = false;
        }
        report.residuals.push_back(worst);
        report.max_residual = std::max(report.max_residual, worst);
        if (!same) report.mismatches.push_back(g);
        ++report.checked;
    }
    report.descends = report.mismatches.empty() && report.max_residual <= tol;
    return report;
}

bool flow_descends(const LinearField& x, double s, const GroupElement& g, double tol) {
    require_rotation(x.theta());
    const QuotientElement down = project(x.theta(), flow(x, s, g));
    const QuotientElement start = project(x.theta(), g);
    const GroupElement moved = flow(x, s, start.lift());
    return circular_distance(down, {moved.t, moved.v}) <= tol * std::max(1.0, norm(moved.v));
}

}  // namespace ars3d
