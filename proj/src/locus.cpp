#include "ars3d/locus.hpp"

#include "ars3d/error.hpp"

#include <algorithm>
#include <cmath>

namespace ars3d {

double LocusFunction::operator()(const GroupElement& g) const {
    return normal_component(sigma_.field(), u_, g);
}

double locus_value(const LocusFunction& f, const GroupElement& g) { return f(g); }

Gradient locus_gradient(const LocusFunction& f, const GroupElement& g) {
    const LinearField& x = f.sigma().field();
    const Mat2 back = x.theta().rho(-g.t);
    const Vec2 pulled = back.transposed() * f.u();
    const Mat2 th = x.theta().matrix();
    return {dot(back * (x.xi() - th * (x.a() * g.v)), f.u()), x.a().transposed() * pulled};
}

ScalarCurve plane_function(const LocusFunction& f) {
    const LinearField& x = f.sigma().field();
    const Mat2 th = x.theta().matrix();
    const Vec2& xi = x.xi();
    const Vec2& u = f.u();
    // h(t) = -<Lambda_{-t} xi, u>
    if (std::fabs(th.det()) > kSingularTol) {
        const Vec2 c = solve2(th, xi, 0.0);
        return MatExpForm{-1.0 * th, -1.0 * c, u, dot(c, u)};
    }
    // theta = diag(1, 0): Lambda_{-t} = diag(e^{-t} - 1, -t)
    return ExpAffine{-xi.x * u.x, -1.0, xi.y * u.y, xi.x * u.x};
}

AuditReport regular_value_audit(const LocusFunction& f, const std::vector<GroupElement>& samples, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "audit tolerance must be positive");
    AuditReport report;
    report.samples = samples.size();
    for (const GroupElement& g : samples) {
        if (std::fabs(f(g)) > tol * (1.0 + norm(g.v))) {
            throw Error(ErrorCode::SampleNotOnLocus, "audit sample is not on the singular locus");
        }
        const Gradient d = locus_gradient(f, g);
        const double n = std::hypot(d.dt, norm(d.dv));
        report.min_grad_norm = std::min(report.min_grad_norm, n);
        if (n <= tol) report.violations.push_back(g);
    }
    return report;
}

std::string_view shape_name(const LocusDescription& d) {
    if (std::holds_alternative<PlaneStack>(d.shape)) return "PlaneStack";
    if (std::holds_alternative<Hmap>(d.shape)) return "GraphOverPlane(Hmap)";
    return "GraphOverPlane(Imap)";
}

int numerical_rank(const Mat2& m, double cutoff) {
    const double fro = m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22;
    const double det = std::fabs(m.det());
    const double smax = std::sqrt(0.5 * (fro + std::sqrt(std::max(0.0, fro * fro - 4.0 * det * det))));
    if (smax <= cutoff) return 0;
    const double smin = det / smax;
    return smin <= cutoff * std::max(1.0, smax) ? 1 : 2;
}

namespace {

PlaneStack plane_stack(const LocusFunction& f, double t_min, double t_max, int& count) {
    const ScalarCurve h = plane_function(f);
    const Vec2& xi = f.sigma().field().xi();
    const ZeroReport r = zero_classify(h, t_min, t_max, {1e-12, std::max(1.0, norm(xi))});
    PlaneStack stack;
    stack.classification = r.classification;
    stack.period = r.period;
    stack.periodic = r.periodic;
    for (const Zero& z : r.zeros) {
        stack.times.push_back(z.t);
        stack.simple.push_back(z.sign_change);
    }
    count = r.classification == ZeroClass::FiniteZeros ? static_cast<int>(r.all_zeros.size())
            : r.classification == ZeroClass::InfiniteDiscrete ? -1
                                                              : 0;
    return stack;
}

Vec2 unit(const Vec2& v) { return v / norm(v); }

}  // namespace

LocusDescription describe_locus(const LocusFunction& f, double t_min, double t_max) {
    if (!(t_min <= t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
        throw Error(ErrorCode::InvalidInput, "locus window must be finite and nonempty");
    }
    const LinearField& x = f.sigma().field();
    const Mat2& a = x.a();
    LocusDescription d;
    d.t_min = t_min;
    d.t_max = t_max;

    const int rank = numerical_rank(a);
    if (rank == 2) {
        d.shape = Hmap{inverse(a, 0.0)};
        d.connected = true;
        d.component_count = 1;
        return d;
    }
    if (rank == 1) {
        // kernel from the longer row
        const Vec2 r0{a.a11, a.a12};
        const Vec2 r1{a.a21, a.a22};
        const Vec2 row = norm(r0) >= norm(r1) ? r0 : r1;
        Imap m;
        m.w2 = unit(perp(row));
        m.w1 = -1.0 * perp(m.w2);
        Vec2 aw1 = a * m.w1;
        const double along = dot(aw1, f.u());
        if (std::fabs(along) > 1e-10 * norm(aw1)) {
            if (along < 0.0) {
                m.w1 = -1.0 * m.w1;
                aw1 = -1.0 * aw1;
            }
            m.beta = dot(x.theta().matrix() * aw1, aw1) / dot(aw1, aw1);
            d.shape = m;
            d.connected = true;
            d.component_count = 1;
            return d;
        }
        // A w1 spans l_Delta, so F depends on t alone.
    }
    int count = 0;
    PlaneStack stack = plane_stack(f, t_min, t_max, count);
    stack.degenerate_rank_one = rank == 1;
    d.shape = std::move(stack);
    d.component_count = count;
    d.connected = count == 1;
    return d;
}

GroupElement h_map(const LocusFunction& f, const GroupElement& g) {
    const LinearField& x = f.sigma().field();
    const Vec2 rhs = x.theta().rho(g.t) * g.v - x.theta().lambda_at(g.t) * x.xi();
    return {g.t, solve2(x.a(), rhs, 0.0)};
}

GroupElement h_map_inverse(const LocusFunction& f, const GroupElement& g) {
    const LinearField& x = f.sigma().field();
    return {g.t, x.theta().rho(-g.t) * (x.a() * g.v + x.theta().lambda_at(g.t) * x.xi())};
}

namespace {

double i_shift(const LocusFunction& f, const Imap& m, double t) {
    const LinearField& x = f.sigma().field();
    const double num = dot(x.theta().lambda_at(-t) * x.xi(), f.u());
    const double den = dot(x.theta().rho(-t) * (x.a() * m.w1), f.u());
    return num / den;
}

}  // namespace

GroupElement i_map(const LocusFunction& f, const Imap& m, const GroupElement& g) {
    const double c1 = dot(g.v, m.w1) + i_shift(f, m, g.t);
    return {g.t, c1 * m.w1 + dot(g.v, m.w2) * m.w2};
}

GroupElement i_map_inverse(const LocusFunction& f, const Imap& m, const GroupElement& g) {
    const double c1 = dot(g.v, m.w1) - i_shift(f, m, g.t);
    return {g.t, c1 * m.w1 + dot(g.v, m.w2) * m.w2};
}

GroupElement locus_param(const LocusDescription& d, const LocusFunction& f, double s, double t) {
    if (std::holds_alternative<Hmap>(d.shape)) {
        return h_map(f, {t, s * f.sigma().line().direction});
    }
    if (const auto* m = std::get_if<Imap>(&d.shape)) {
        return i_map(f, *m, {t, s * m->w2});
    }
    throw Error(ErrorCode::WrongShape, "a plane stack has no graph parametrization");
}

std::string_view to_string(Component c) {
    switch (c) {
        case Component::CMinus: return "CMinus";
        case Component::OnLocus: return "OnLocus";
        case Component::CPlus: return "CPlus";
    }
    return "Unknown";
}

Component component_of(const LocusFunction& f, const GroupElement& g, double band) {
    const double v = f(g);
    if (std::fabs(v) <= band * (1.0 + norm(g.v))) return Component::OnLocus;
    return v < 0.0 ? Component::CMinus : Component::CPlus;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    if (lo == hi) return {lo};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
    return out;
}

}  // namespace

std::vector<LocusSample> locus_sample(const LocusFunction& f, double t_min, double t_max, int resolution,
                                      double extent) {
    if (resolution < 2) throw Error(ErrorCode::InvalidInput, "locus resolution must be at least 2");
    if (!(extent > 0.0)) throw Error(ErrorCode::InvalidInput, "sample extent must be positive");
    std::vector<LocusSample> out;
    if (!(t_min <= t_max)) return out;

    const LocusDescription d = describe_locus(f, t_min, t_max);
    const std::vector<double> params = linspace(-extent, extent, resolution);
    if (const auto* stack = std::get_if<PlaneStack>(&d.shape)) {
        out.reserve(stack->times.size() * params.size() * params.size());
        for (std::size_t k = 0; k < stack->times.size(); ++k) {
            for (double px : params) {
                for (double py : params) {
                    const GroupElement g{stack->times[k], {px, py}};
                    out.push_back({g, static_cast<int>(k), f(g)});
                }
            }
        }
        return out;
    }
    const std::vector<double> ts = linspace(t_min, t_max, resolution);
    out.reserve(ts.size() * params.size());
    for (double t : ts) {
        for (double s : params) {
            const GroupElement g = locus_param(d, f, s, t);
            out.push_back({g, -1, f(g)});
        }
    }
    return out;
}

}  // namespace ars3d
