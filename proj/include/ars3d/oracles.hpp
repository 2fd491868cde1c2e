#pragma once

// Independent reference computations. None of these share code paths with
// the closed forms they are used to check.

#include "ars3d/group.hpp"
#include "ars3d/linalg2.hpp"

#include <functional>
#include <vector>

namespace ars3d::oracle {

/// e^{tM} by a truncated Taylor series with scaling and squaring.
Mat2 series_expm(const Mat2& m, double t, int terms = 30);

/// Composite Simpson quadrature of int_0^t e^{sM} ds; steps >= 16 (rounded up to even).
Mat2 lambda_oracle(const Mat2& m, double t, int steps);

/// Classic RK4 on the (t, v) chart for an autonomous tangent field.
GroupElement rk4(const std::function<Tangent(const GroupElement&)>& field, const GroupElement& start,
                 double duration, int steps);

/// Central difference (f(x + h) - f(x - h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);

/// Brackets of strict sign changes of f on a uniform grid of n points over [lo, hi].
std::vector<std::pair<double, double>> sign_scan(const std::function<double(double)>& f, double lo,
                                                  double hi, int n);

}  // namespace ars3d::oracle
