#include "ars3d/zeros.hpp"

#include "ars3d/error.hpp"

#include <algorithm>
#include <functional>
#include <numbers>

namespace ars3d {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

double snap(double x, double thr) { return std::fabs(x) <= thr ? 0.0 : x; }

// A curve reduced to something the root finder can walk: piecewise monotone
// between known critical points, with known signs at +-infinity.
struct Shape {
    enum class Kind { Constant, Finite, Oscillating } kind{Kind::Constant};
    std::function<double(double)> f;
    std::function<double(double)> mag;  // sum of |terms|, for relative thresholds
    double constant{0.0};
    std::vector<double> crit;           // Finite: every real critical point
    int sign_lo{0};                     // eventual sign at -infinity
    int sign_hi{0};                     // eventual sign at +infinity
    int ceiling{0};
    bool bounded{false};
    ExpCos osc;                         // Oscillating only
    ScalarCurve reduced;
};

Shape constant_shape(double c, const ScalarCurve& reduced) {
    Shape s;
    s.kind = Shape::Kind::Constant;
    s.constant = c;
    s.bounded = true;
    s.f = [c](double) { return c; };
    s.mag = [c](double) { return std::fabs(c); };
    s.reduced = reduced;
    return s;
}

Shape shape_of(const Affine& in, double thr) {
    const Affine g{snap(in.slope, thr), in.intercept};
    if (g.slope == 0.0) return constant_shape(g.intercept, g);
    Shape s;
    s.kind = Shape::Kind::Finite;
    s.f = [g](double t) { return g.slope * t + g.intercept; };
    s.mag = [g](double t) { return std::fabs(g.slope * t) + std::fabs(g.intercept); };
    s.sign_hi = sgn(g.slope);
    s.sign_lo = -sgn(g.slope);
    s.ceiling = 1;
    s.reduced = g;
    return s;
}

// Sum of exponentials plus a constant. Terms with a zero rate fold into the
// constant and equal rates merge, so the remaining rates are distinct.
Shape shape_of(const ExpPoly& in, double thr) {
    const double rate_tol = 1e-12 * std::max({1.0, std::fabs(in.lambda1), std::fabs(in.lambda2)});
    double c = in.c;
    std::vector<std::pair<double, double>> terms;  // (coef, rate)
    for (auto [k, r] : {std::pair{in.a, in.lambda1}, std::pair{in.b, in.lambda2}}) {
        if (std::fabs(r) <= rate_tol) {
            c += k;
        } else if (!terms.empty() && terms.front().second == r) {
            terms.front().first += k;
        } else {
            terms.emplace_back(k, r);
        }
    }
    for (auto& t : terms) t.first = snap(t.first, thr);
    std::erase_if(terms, [](const auto& t) { return t.first == 0.0; });
    std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.second > y.second; });

    ExpPoly g{0.0, 0.0, c, in.lambda1, in.lambda2};
    if (terms.empty()) return constant_shape(c, g);
    g.a = terms[0].first;
    g.lambda1 = terms[0].second;
    if (terms.size() == 2) {
        g.b = terms[1].first;
        g.lambda2 = terms[1].second;
    } else {
        g.lambda2 = g.lambda1;
    }

    Shape s;
    s.kind = Shape::Kind::Finite;
    s.f = [g](double t) { return g.a * std::exp(g.lambda1 * t) + g.b * std::exp(g.lambda2 * t) + g.c; };
    s.mag = [g](double t) {
        return std::fabs(g.a * std::exp(g.lambda1 * t)) + std::fabs(g.b * std::exp(g.lambda2 * t)) +
               std::fabs(g.c);
    };
    std::vector<std::pair<double, double>> all = terms;
    if (c != 0.0) all.emplace_back(c, 0.0);
    std::sort(all.begin(), all.end(), [](auto& x, auto& y) { return x.second > y.second; });
    s.sign_hi = sgn(all.front().first);
    s.sign_lo = sgn(all.back().first);
    if (terms.size() == 2) {
        const double ratio = -(g.b * g.lambda2) / (g.a * g.lambda1);
        if (ratio > 0.0) s.crit.push_back(std::log(ratio) / (g.lambda1 - g.lambda2));
        s.ceiling = 2;
    } else {
        s.ceiling = 1;
    }
    s.reduced = g;
    return s;
}

Shape shape_of(const ExpLinear& in, double thr) {
    if (in.lambda == 0.0) return shape_of(Affine{in.a, in.b + in.c}, thr);
    const ExpLinear g{snap(in.a, thr), snap(in.b, thr), in.c, in.lambda};
    if (g.a == 0.0) return shape_of(ExpPoly{g.b, 0.0, g.c, g.lambda, g.lambda}, thr);

    Shape s;
    s.kind = Shape::Kind::Finite;
    s.f = [g](double t) { return std::exp(g.lambda * t) * (g.a * t + g.b) + g.c; };
    s.mag = [g](double t) {
        const double e = std::exp(g.lambda * t);
        return e * (std::fabs(g.a * t) + std::fabs(g.b)) + std::fabs(g.c);
    };
    s.crit.push_back(-(g.a + g.lambda * g.b) / (g.lambda * g.a));
    if (g.lambda > 0.0) {
        s.sign_hi = sgn(g.a);
        s.sign_lo = g.c != 0.0 ? sgn(g.c) : -sgn(g.a);
    } else {
        s.sign_hi = g.c != 0.0 ? sgn(g.c) : sgn(g.a);
        s.sign_lo = -sgn(g.a);
    }
    s.ceiling = 2;
    s.reduced = g;
    return s;
}

Shape shape_of(const ExpAffine& in, double thr) {
    if (in.rate == 0.0) return shape_of(Affine{in.slope, in.coef + in.c}, thr);
    const ExpAffine g{snap(in.coef, thr), in.rate, snap(in.slope, thr), in.c};
    if (g.coef == 0.0) return shape_of(Affine{g.slope, g.c}, thr);
    if (g.slope == 0.0) return shape_of(ExpPoly{g.coef, 0.0, g.c, g.rate, g.rate}, thr);

    Shape s;
    s.kind = Shape::Kind::Finite;
    s.f = [g](double t) { return g.coef * std::exp(g.rate * t) + g.slope * t + g.c; };
    s.mag = [g](double t) {
        return std::fabs(g.coef * std::exp(g.rate * t)) + std::fabs(g.slope * t) + std::fabs(g.c);
    };
    const double e = -g.slope / (g.coef * g.rate);
    if (e > 0.0) s.crit.push_back(std::log(e) / g.rate);
    if (g.rate > 0.0) {
        s.sign_hi = sgn(g.coef);
        s.sign_lo = -sgn(g.slope);
    } else {
        s.sign_hi = sgn(g.slope);
        s.sign_lo = sgn(g.coef);
    }
    s.ceiling = 2;
    s.reduced = g;
    return s;
}

Shape shape_of(const ExpCos& in, double thr) {
    ExpCos g = in;
    if (!std::isfinite(g.frequency)) throw Error(ErrorCode::InvalidInput, "ExpCos frequency must be finite");
    if (g.frequency < 0.0) {
        g.frequency = -g.frequency;
        g.phase = -g.phase;
    }
    g.amplitude = snap(g.amplitude, thr);
    if (g.amplitude == 0.0) return constant_shape(g.c, g);
    if (g.frequency == 0.0) {
        return shape_of(ExpPoly{g.amplitude * std::cos(g.phase), 0.0, g.c, g.lambda, g.lambda}, thr);
    }
    if (g.amplitude < 0.0) {
        g.amplitude = -g.amplitude;
        g.phase += std::numbers::pi;
    }
    g.phase = std::remainder(g.phase, 2.0 * std::numbers::pi);
    if (std::fabs(g.lambda) <= 1e-12 * std::max(1.0, g.frequency)) g.lambda = 0.0;

    Shape s;
    s.kind = Shape::Kind::Oscillating;
    s.f = [g](double t) {
        return g.amplitude * std::exp(g.lambda * t) * std::cos(g.frequency * t + g.phase) + g.c;
    };
    s.mag = [g](double t) { return g.amplitude * std::exp(g.lambda * t) + std::fabs(g.c); };
    s.bounded = g.lambda == 0.0;
    s.osc = g;
    s.reduced = g;
    return s;
}

Shape shape_of(const MatExpForm& in, double thr);

Shape shape_of_curve(const ScalarCurve& curve, double thr) {
    return std::visit([thr](const auto& c) { return shape_of(c, thr); }, curve);
}

Shape shape_of(const MatExpForm& in, double thr) {
    return shape_of_curve(reduce(in, {thr, 1.0}).curve, thr);
}

// Bisection on a bracket [l, r] with a strict sign change; runs until the
// midpoint no longer moves.
double bisect(const std::function<double(double)>& f, double l, double r, int sign_l) {
    double fl_abs = std::fabs(f(l));
    double fr_abs = std::fabs(f(r));
    for (int i = 0; i < 2200; ++i) {
        const double m = l + 0.5 * (r - l);
        if (m == l || m == r) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (sgn(fm) == sign_l) {
            l = m;
            fl_abs = std::fabs(fm);
        } else {
            r = m;
            fr_abs = std::fabs(fm);
        }
    }
    return fl_abs <= fr_abs ? l : r;
}

struct Anchor {
    double t;
    int sign;       // 0 when |f| falls under the double-root threshold
    bool critical;
};

Anchor make_anchor(const Shape& s, double t, bool critical, double tol) {
    const double v = s.f(t);
    const bool zero = std::fabs(v) <= tol * s.mag(t);
    return {t, zero ? 0 : sgn(v), critical};
}

// Walks ordered anchors, emitting zeros at anchors and inside sign-changing gaps.
void walk(const Shape& s, const std::vector<Anchor>& anchors, std::vector<Zero>& out) {
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const Anchor& a = anchors[i];
        if (a.sign == 0) out.push_back({a.t, !a.critical});
        if (i + 1 < anchors.size()) {
            const Anchor& b = anchors[i + 1];
            if (a.sign * b.sign < 0) out.push_back({bisect(s.f, a.t, b.t, a.sign), true});
        }
    }
}

// Extends from an anchor towards +-infinity until the eventual sign shows up.
void walk_tail(const Shape& s, const Anchor& a, int direction, int eventual, std::vector<Zero>& out) {
    if (a.sign == 0 || eventual == 0 || a.sign == eventual) return;
    double inner = a.t;
    double step = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double outer = a.t + direction * step;
        const double v = s.f(outer);
        if (std::isnan(v)) return;
        if (v == 0.0) {
            out.push_back({outer, true});
            return;
        }
        if (sgn(v) == eventual) {
            const double root = direction > 0 ? bisect(s.f, inner, outer, a.sign)
                                              : bisect(s.f, outer, inner, eventual);
            out.push_back({root, true});
            return;
        }
        inner = outer;
        step *= 2.0;
    }
}

void sort_unique(std::vector<Zero>& zs) {
    std::sort(zs.begin(), zs.end(), [](const Zero& x, const Zero& y) { return x.t < y.t; });
    std::vector<Zero> out;
    for (const Zero& z : zs) {
        if (!out.empty() && std::fabs(z.t - out.back().t) <= 1e-12 * std::max(1.0, std::fabs(z.t))) {
            out.back().sign_change = out.back().sign_change && z.sign_change;
            continue;
        }
        out.push_back(z);
    }
    zs = std::move(out);
}

std::vector<Zero> global_zeros(const Shape& s, double tol) {
    std::vector<double> pts = s.crit;
    std::sort(pts.begin(), pts.end());
    std::vector<Anchor> anchors;
    for (double c : pts) anchors.push_back(make_anchor(s, c, true, tol));
    if (anchors.empty()) anchors.push_back(make_anchor(s, 0.0, false, tol));

    std::vector<Zero> out;
    walk(s, anchors, out);
    walk_tail(s, anchors.front(), -1, s.sign_lo, out);
    walk_tail(s, anchors.back(), +1, s.sign_hi, out);
    sort_unique(out);
    return out;
}

// Restricts global zeros to [lo, hi]; a zero that rounding pushed just past
// an endpoint is pulled back when f vanishes there to working precision.
std::vector<Zero> clip(const Shape& s, const std::vector<Zero>& all, double lo, double hi, double tol) {
    std::vector<Zero> out;
    for (const Zero& z : all) {
        if (z.t >= lo && z.t <= hi) out.push_back(z);
    }
    for (double e : {lo, hi}) {
        if (std::fabs(s.f(e)) > tol * std::max(s.mag(e), 1e-300)) continue;
        for (const Zero& z : all) {
            if (std::fabs(z.t - e) <= 1e-9 * std::max(1.0, std::fabs(e)) && (z.t < lo || z.t > hi)) {
                out.push_back({e, z.sign_change});
            }
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Zero> oscillating_zeros(const Shape& s, double lo, double hi, double tol) {
    const ExpCos& g = s.osc;
    // f' vanishes where cos(frequency t + phase + delta) = 0.
    const double delta = std::atan2(g.frequency, g.lambda);
    const double half = std::numbers::pi / g.frequency;
    const double base = (0.5 * std::numbers::pi - g.phase - delta) / g.frequency;
    const double k_lo = std::ceil((lo - base) / half);
    const double k_hi = std::floor((hi - base) / half);
    if (k_hi - k_lo > 1e7) {
        throw Error(ErrorCode::InvalidInput, "window spans too many oscillations");
    }
    std::vector<Anchor> anchors;
    anchors.push_back(make_anchor(s, lo, false, tol));
    for (double k = k_lo; k <= k_hi; k += 1.0) {
        const double t = base + k * half;
        if (t > lo && t < hi) anchors.push_back(make_anchor(s, t, true, tol));
    }
    if (hi > lo) anchors.push_back(make_anchor(s, hi, false, tol));
    // an endpoint sitting on a critical point is a double root, not a crossing
    for (Anchor& a : anchors) {
        if (a.critical) continue;
        const double k = std::round((a.t - base) / half);
        if (std::fabs(base + k * half - a.t) <= 1e-9 * std::max(1.0, std::fabs(a.t))) a.critical = true;
    }
    std::vector<Zero> out;
    walk(s, anchors, out);
    sort_unique(out);
    return out;
}

}  // namespace

double evaluate(const ScalarCurve& curve, double t) {
    struct {
        double t;
        double operator()(const Affine& g) const { return g.slope * t + g.intercept; }
        double operator()(const ExpPoly& g) const {
            return g.a * std::exp(g.lambda1 * t) + g.b * std::exp(g.lambda2 * t) + g.c;
        }
        double operator()(const ExpLinear& g) const {
            return std::exp(g.lambda * t) * (g.a * t + g.b) + g.c;
        }
        double operator()(const ExpCos& g) const {
            return g.amplitude * std::exp(g.lambda * t) * std::cos(g.frequency * t + g.phase) + g.c;
        }
        double operator()(const ExpAffine& g) const {
            return g.coef * std::exp(g.rate * t) + g.slope * t + g.c;
        }
        double operator()(const MatExpForm& g) const { return dot(expm(g.a, t) * g.u, g.v) + g.tau; }
    } visitor{t};
    return std::visit(visitor, curve);
}

std::string_view to_string(ZeroClass c) {
    switch (c) {
        case ZeroClass::IdenticallyZero: return "IdenticallyZero";
        case ZeroClass::ConstantNonzero: return "ConstantNonzero";
        case ZeroClass::FiniteZeros: return "FiniteZeros";
        case ZeroClass::InfiniteDiscrete: return "InfiniteDiscrete";
        case ZeroClass::NoZeros: return "NoZeros";
    }
    return "Unknown";
}

std::string_view to_string(LemmaCase c) {
    switch (c) {
        case LemmaCase::NotApplicable: return "NotApplicable";
        case LemmaCase::DegenerateVector: return "DegenerateVector";
        case LemmaCase::RealNonConstant: return "RealNonConstant";
        case LemmaCase::RealConstantTau: return "RealConstantTau";
        case LemmaCase::RealConstantOther: return "RealConstantOther";
        case LemmaCase::ComplexGrowing: return "ComplexGrowing";
        case LemmaCase::ComplexBounded: return "ComplexBounded";
    }
    return "Unknown";
}

Reduction reduce(const MatExpForm& form, const ZeroOptions& opt) {
    const Mat2& a = form.a;
    if (!is_finite(a) || !is_finite(form.u) || !is_finite(form.v) || !std::isfinite(form.tau)) {
        throw Error(ErrorCode::InvalidInput, "MatExpForm has non-finite entries");
    }
    const double thr = opt.tol * std::max(opt.scale, norm(form.u) * norm(form.v));
    if (norm(form.u) == 0.0 || norm(form.v) == 0.0) {
        return {Affine{0.0, form.tau}, LemmaCase::DegenerateVector};
    }

    const double amax = std::max(1.0, max_abs(a));
    const EigenKind kind = classify(a, kClassifyTol * amax * amax);
    const Vec2& u = form.u;
    const Vec2& v = form.v;

    if (const auto* cp = std::get_if<ComplexPair>(&kind)) {
        const Mat2 n = a - cp->lambda * Mat2::identity();
        const double p = dot(u, v);
        const double q = dot(n * u, v) / cp->mu;
        const ExpCos g{std::hypot(p, q), cp->lambda, -std::atan2(q, p), form.tau, cp->mu};
        const bool flat = std::fabs(cp->lambda) <= 1e-12 * std::max(1.0, cp->mu);
        return {g, flat ? LemmaCase::ComplexBounded : LemmaCase::ComplexGrowing};
    }

    ScalarCurve curve;
    if (const auto* rd = std::get_if<RealDistinct>(&kind)) {
        const double gap = rd->lambda1 - rd->lambda2;
        const Mat2 p1 = (a - rd->lambda2 * Mat2::identity()) * (1.0 / gap);
        const Mat2 p2 = (rd->lambda1 * Mat2::identity() - a) * (1.0 / gap);
        curve = ExpPoly{dot(p1 * u, v), dot(p2 * u, v), form.tau, rd->lambda1, rd->lambda2};
    } else {
        const auto& rr = std::get<RealRepeated>(kind);
        const Mat2 n = a - rr.lambda * Mat2::identity();
        if (rr.lambda == 0.0) {
            curve = Affine{dot(n * u, v), dot(u, v) + form.tau};
        } else {
            curve = ExpLinear{dot(n * u, v), dot(u, v), form.tau, rr.lambda};
        }
    }

    const double eig_tol = kClassifyTol;
    const bool eigenvector = std::fabs(cross(a * u, u)) <= eig_tol * amax * dot(u, u);
    const bool orthogonal = std::fabs(dot(u, v)) <= eig_tol * norm(u) * norm(v);
    if (eigenvector && orthogonal) return {curve, LemmaCase::RealConstantTau};
    const Shape s = shape_of_curve(curve, thr);
    return {curve, s.kind == Shape::Kind::Constant ? LemmaCase::RealConstantOther : LemmaCase::RealNonConstant};
}

ZeroReport zero_classify(const ScalarCurve& curve, double lo, double hi, const ZeroOptions& opt) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::InvalidInput, "zero window must be finite and nonempty");
    }
    if (!(opt.tol > 0.0) || !(opt.scale > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "zero options must be positive");
    }

    ZeroReport report;
    double thr = opt.tol * opt.scale;
    ScalarCurve working = curve;
    if (const auto* m = std::get_if<MatExpForm>(&curve)) {
        const Reduction r = reduce(*m, opt);
        report.lemma_case = r.lemma_case;
        working = r.curve;
        thr = opt.tol * std::max(opt.scale, norm(m->u) * norm(m->v));
    }

    const Shape s = shape_of_curve(working, thr);
    report.reduced = s.reduced;
    report.bounded = s.bounded;

    switch (s.kind) {
        case Shape::Kind::Constant: {
            const bool zero = std::fabs(s.constant) <= thr;
            report.classification = zero ? ZeroClass::IdenticallyZero : ZeroClass::ConstantNonzero;
            report.max_count = zero ? -1 : 0;
            break;
        }
        case Shape::Kind::Finite: {
            report.all_zeros = global_zeros(s, opt.tol);
            report.zeros = clip(s, report.all_zeros, lo, hi, opt.tol);
            report.classification = report.all_zeros.empty() ? ZeroClass::NoZeros : ZeroClass::FiniteZeros;
            report.max_count = s.ceiling;
            break;
        }
        case Shape::Kind::Oscillating: {
            const ExpCos& g = s.osc;
            report.period = 2.0 * std::numbers::pi / g.frequency;
            report.periodic = g.lambda == 0.0;
            if (g.lambda == 0.0 && std::fabs(g.c) > g.amplitude) {
                report.classification = ZeroClass::NoZeros;
                report.max_count = 0;
                break;
            }
            report.classification = ZeroClass::InfiniteDiscrete;
            report.max_count = -1;
            report.zeros = oscillating_zeros(s, lo, hi, opt.tol);
            break;
        }
    }
    return report;
}

}  // namespace ars3d
