#pragma once

#include <cmath>
#include <variant>

namespace ars3d {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;

    static constexpr Vec2 e1() { return {1.0, 0.0}; }
    static constexpr Vec2 e2() { return {0.0, 1.0}; }
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
/// z-component of the planar cross product; zero iff a and b are parallel.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double max_abs(const Vec2& a) { return std::fmax(std::fabs(a.x), std::fabs(a.y)); }
/// Counterclockwise rotation by a quarter turn.
constexpr Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }
inline bool is_finite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }
Vec2 normalized(const Vec2& a);

/// Row-major 2x2 real matrix.
struct Mat2 {
    double a11{0.0};
    double a12{0.0};
    double a21{0.0};
    double a22{0.0};

    constexpr Mat2() = default;
    constexpr Mat2(double m11, double m12, double m21, double m22)
        : a11(m11), a12(m12), a21(m21), a22(m22) {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }
    static constexpr Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
    static constexpr Mat2 from_columns(const Vec2& c1, const Vec2& c2) {
        return {c1.x, c2.x, c1.y, c2.y};
    }

    constexpr double trace() const { return a11 + a22; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr Mat2 transposed() const { return {a11, a21, a12, a22}; }
    constexpr Vec2 column(int j) const { return j == 0 ? Vec2{a11, a21} : Vec2{a12, a22}; }

    constexpr Mat2& operator+=(const Mat2& o) {
        a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
        return *this;
    }
    constexpr Mat2& operator-=(const Mat2& o) {
        a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
        return *this;
    }
    constexpr Mat2& operator*=(double s) {
        a11 *= s; a12 *= s; a21 *= s; a22 *= s;
        return *this;
    }

    friend constexpr Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend constexpr Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend constexpr Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
    friend constexpr Mat2 operator*(double s, Mat2 a) { return a *= s; }
    friend constexpr Mat2 operator*(Mat2 a, double s) { return a *= s; }
    friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend constexpr Vec2 operator*(const Mat2& a, const Vec2& v) {
        return {a.a11 * v.x + a.a12 * v.y, a.a21 * v.x + a.a22 * v.y};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

double max_abs(const Mat2& m);
bool is_finite(const Mat2& m);

/// Default tolerance on the discriminant when deciding the eigen-structure.
inline constexpr double kClassifyTol = 1e-9;
/// Default |det| threshold below which solve2/inverse refuse to divide.
inline constexpr double kSingularTol = 1e-12;

struct RealDistinct {
    double lambda1;  ///< larger eigenvalue
    double lambda2;
};

struct RealRepeated {
    double lambda;
    bool diagonalizable;
};

/// Eigenvalues lambda +- i*mu with mu > 0.
struct ComplexPair {
    double lambda;
    double mu;
};

using EigenKind = std::variant<RealDistinct, RealRepeated, ComplexPair>;

/// Half-discriminant ((a11 - a22)/2)^2 + a12*a21; eigenvalues are tr/2 +- sqrt of it.
double discriminant(const Mat2& m);

EigenKind classify(const Mat2& m, double tol = kClassifyTol);

/// e^{tM}.
Mat2 expm(const Mat2& m, double t);

/// Lambda^M_t = int_0^t e^{sM} ds.
Mat2 lambda_op(const Mat2& m, double t);

/// Lambda^M_t / t, continued analytically to the identity at t = 0.
Mat2 lambda_over_t(const Mat2& m, double t);

/// (e^z - 1)/z with the Taylor branch near z = 0.
double expm1_over(double z);

Vec2 solve2(const Mat2& m, const Vec2& b, double tol = kSingularTol);
Mat2 inverse(const Mat2& m, double tol = kSingularTol);

}  // namespace ars3d
