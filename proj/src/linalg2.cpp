#include "ars3d/linalg2.hpp"

#include "ars3d/error.hpp"

#include <algorithm>
#include <cmath>

namespace ars3d {

namespace {

void require_finite(const Mat2& m, const char* where) {
    if (!is_finite(m)) {
        throw Error(ErrorCode::InvalidInput, std::string(where) + ": non-finite matrix entry");
    }
}

// Any analytic f applied to a 2x2 matrix X with eigenvalues c +- sqrt(D)
// collapses to f(X) = alpha * I + beta * (X - c I). The helpers below return
// (alpha, beta) for f = exp and f = (e^z - 1)/z.
struct Coefficients {
    double alpha;
    double beta;
};

struct Split {
    double c;        // half trace
    double d;        // half discriminant, D
    double det;      // product of eigenvalues
    Mat2 centered;   // X - c I
};

Split split(const Mat2& x) {
    const double c = 0.5 * x.trace();
    return {c, discriminant(x), x.det(), x - c * Mat2::identity()};
}

// cosh(sqrt(D)) and sinh(sqrt(D))/sqrt(D), both entire in D.
void cosh_sinhc(double d, double& ch, double& sh) {
    if (std::fabs(d) < 1e-2) {
        // 2k! and (2k+1)! denominators; 8 terms reach below 1e-30 here
        double term_c = 1.0;
        double term_s = 1.0;
        ch = 1.0;
        sh = 1.0;
        for (int k = 1; k < 9; ++k) {
            term_c *= d / ((2.0 * k - 1.0) * (2.0 * k));
            term_s *= d / ((2.0 * k) * (2.0 * k + 1.0));
            ch += term_c;
            sh += term_s;
        }
        return;
    }
    if (d > 0.0) {
        const double r = std::sqrt(d);
        ch = std::cosh(r);
        sh = std::sinh(r) / r;
    } else {
        const double r = std::sqrt(-d);
        ch = std::cos(r);
        sh = std::sin(r) / r;
    }
}

Coefficients exp_coefficients(const Split& s) {
    double ch = 0.0;
    double sh = 0.0;
    cosh_sinhc(s.d, ch, sh);
    const double ec = std::exp(s.c);
    return {ec * ch, ec * sh};
}

// Power sums p_k = z1^k + z2^k and divided powers q_k = (z1^k - z2^k)/(z1 - z2)
// obey the same real recurrence, so the series sum_k X^k/(k+1)! never needs
// the (possibly complex) eigenvalues themselves.
Coefficients phi1_series(const Split& s) {
    const double e1 = 2.0 * s.c;
    const double e2 = s.det;
    double p_prev = 2.0;
    double p = e1;
    double q_prev = 0.0;
    double q = 1.0;
    double alpha = 1.0;  // p_0 / (2 * 1!)
    double beta = 0.0;   // q_0 / 1!
    double fact = 1.0;
    for (int k = 1; k < 40; ++k) {
        fact *= (k + 1.0);
        alpha += 0.5 * p / fact;
        beta += q / fact;
        const double p_next = e1 * p - e2 * p_prev;
        const double q_next = e1 * q - e2 * q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        if (fact > 1e40) break;
    }
    return {alpha, beta};
}

Coefficients phi1_coefficients(const Split& s) {
    const double radius2 = s.c * s.c + std::fabs(s.d);
    if (radius2 < 0.25) return phi1_series(s);

    const double den = s.det;  // = c^2 - D
    if (s.d < 0.0 || std::fabs(den) >= 0.25 * radius2) {
        double ch = 0.0;
        double sh = 0.0;
        cosh_sinhc(s.d, ch, sh);
        const double ec = std::exp(s.c);
        const double alpha = (s.c * (ec * ch - 1.0) - s.d * ec * sh) / den;
        const double beta = (s.c * ec * sh - ec * ch + 1.0) / den;
        return {alpha, beta};
    }

    // Real spectrum with one eigenvalue much smaller than the other: the gap
    // is comparable to the larger one, so plain divided differences are stable.
    const double r = std::sqrt(s.d);
    const double big = s.c >= 0.0 ? s.c + r : s.c - r;
    const double small = s.det / big;
    const double f_big = expm1_over(big);
    const double f_small = expm1_over(small);
    return {0.5 * (f_big + f_small), (f_big - f_small) / (big - small)};
}

Mat2 assemble(const Coefficients& k, const Split& s) {
    return k.alpha * Mat2::identity() + k.beta * s.centered;
}

}  // namespace

Vec2 normalized(const Vec2& a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorCode::InvalidInput, "cannot normalize a zero or non-finite vector");
    }
    return a / n;
}

double max_abs(const Mat2& m) {
    return std::max({std::fabs(m.a11), std::fabs(m.a12), std::fabs(m.a21), std::fabs(m.a22)});
}

bool is_finite(const Mat2& m) {
    return std::isfinite(m.a11) && std::isfinite(m.a12) && std::isfinite(m.a21) &&
           std::isfinite(m.a22);
}

double discriminant(const Mat2& m) {
    const double h = 0.5 * (m.a11 - m.a22);
    return h * h + m.a12 * m.a21;
}

EigenKind classify(const Mat2& m, double tol) {
    require_finite(m, "classify");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "classify: tolerance must be positive");

    const double c = 0.5 * m.trace();
    const double d = discriminant(m);
    if (std::fabs(d) <= tol) {
        const double off = std::hypot(m.a12, m.a21);
        return RealRepeated{c, off <= tol};
    }
    if (d > 0.0) {
        const double r = std::sqrt(d);
        return RealDistinct{c + r, c - r};
    }
    return ComplexPair{c, std::sqrt(-d)};
}

Mat2 expm(const Mat2& m, double t) {
    require_finite(m, "expm");
    const Split s = split(t * m);
    return assemble(exp_coefficients(s), s);
}

Mat2 lambda_over_t(const Mat2& m, double t) {
    require_finite(m, "lambda_op");
    const Split s = split(t * m);
    return assemble(phi1_coefficients(s), s);
}

Mat2 lambda_op(const Mat2& m, double t) { return t * lambda_over_t(m, t); }

double expm1_over(double z) {
    if (std::fabs(z) < 1e-4) {
        return 1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0 * (1.0 + z / 6.0))));
    }
    return std::expm1(z) / z;
}

Vec2 solve2(const Mat2& m, const Vec2& b, double tol) {
    const double det = m.det();
    if (!(std::fabs(det) > tol)) {
        throw Error(ErrorCode::SingularMatrix, "solve2: |det| below tolerance");
    }
    return {(m.a22 * b.x - m.a12 * b.y) / det, (m.a11 * b.y - m.a21 * b.x) / det};
}

Mat2 inverse(const Mat2& m, double tol) {
    const double det = m.det();
    if (!(std::fabs(det) > tol)) {
        throw Error(ErrorCode::SingularMatrix, "inverse: |det| below tolerance");
    }
    return {m.a22 / det, -m.a12 / det, -m.a21 / det, m.a11 / det};
}

}  // namespace ars3d
