#pragma once

#include "ars3d/linalg2.hpp"

#include <cmath>
#include <limits>
#include <string_view>
#include <variant>
#include <vector>

namespace ars3d {

/// slope * t + intercept
struct Affine {
    double slope{0.0};
    double intercept{0.0};
};

/// a e^{lambda1 t} + b e^{lambda2 t} + c
struct ExpPoly {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double lambda1{1.0};
    double lambda2{-1.0};
};

/// e^{lambda t} (a t + b) + c
struct ExpLinear {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double lambda{1.0};
};

/// amplitude e^{lambda t} cos(frequency t + phase) + c
struct ExpCos {
    double amplitude{0.0};
    double lambda{0.0};
    double phase{0.0};
    double c{0.0};
    double frequency{1.0};
};

/// coef e^{rate t} + slope t + c; shows up when theta is singular.
struct ExpAffine {
    double coef{0.0};
    double rate{1.0};
    double slope{0.0};
    double c{0.0};
};

/// (e^{tA} u) . v + tau
struct MatExpForm {
    Mat2 a;
    Vec2 u;
    Vec2 v;
    double tau{0.0};
};

using ScalarCurve = std::variant<Affine, ExpPoly, ExpLinear, ExpCos, ExpAffine, MatExpForm>;

double evaluate(const ScalarCurve& curve, double t);

enum class ZeroClass { IdenticallyZero, ConstantNonzero, FiniteZeros, InfiniteDiscrete, NoZeros };

/// Which branch of the 2x2 asymptotics lemma a MatExpForm falls in.
enum class LemmaCase {
    NotApplicable,      // the curve was not a MatExpForm
    DegenerateVector,   // u or v is zero, so the curve is tau
    RealNonConstant,    // real spectrum, unbounded, at most two zeros
    RealConstantTau,    // real spectrum, u an eigenvector with u . v = 0
    RealConstantOther,  // real spectrum, constant for another reason (a zero eigenvalue)
    ComplexGrowing,     // complex spectrum, tr A != 0
    ComplexBounded,     // complex spectrum, tr A = 0
};

std::string_view to_string(ZeroClass c);
std::string_view to_string(LemmaCase c);

struct Zero {
    double t;
    bool sign_change;
};

struct ZeroReport {
    ZeroClass classification{ZeroClass::NoZeros};
    /// The elementary form the curve was reduced to.
    ScalarCurve reduced;
    /// Zeros inside the closed window, ascending.
    std::vector<Zero> zeros;
    /// Every real zero; filled only for FiniteZeros.
    std::vector<Zero> all_zeros;
    /// Upper bound on the number of real zeros; -1 when unbounded in count.
    int max_count{0};
    /// Oscillation period 2 pi / frequency for ExpCos shapes, NaN otherwise.
    double period{std::numeric_limits<double>::quiet_NaN()};
    /// True when the zero set itself is periodic with that period.
    bool periodic{false};
    bool bounded{false};
    LemmaCase lemma_case{LemmaCase::NotApplicable};

    bool unbounded() const { return !bounded; }
};

struct ZeroOptions {
    /// Coefficients at or below tol * scale are treated as exact zeros, and a
    /// critical value at or below tol times the local magnitude is a double root.
    double tol{1e-12};
    double scale{1.0};
};

struct Reduction {
    ScalarCurve curve;
    LemmaCase lemma_case;
};

/// Rewrites (e^{tA} u) . v + tau in elementary form using the spectral
/// decomposition of A.
Reduction reduce(const MatExpForm& form, const ZeroOptions& opt = {});

ZeroReport zero_classify(const ScalarCurve& curve, double lo, double hi, const ZeroOptions& opt = {});

}  // namespace ars3d
