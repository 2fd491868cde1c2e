#include "ars3d/oracles.hpp"

#include "ars3d/error.hpp"

#include <cmath>

namespace ars3d::oracle {

Mat2 series_expm(const Mat2& m, double t, int terms) {
    Mat2 x = t * m;
    int squarings = 0;
    while (max_abs(x) > 0.125 && squarings < 60) {
        x = 0.5 * x;
        ++squarings;
    }
    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= terms; ++k) {
        term = term * x * (1.0 / k);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

Mat2 lambda_oracle(const Mat2& m, double t, int steps) {
    if (steps < 16) throw Error(ErrorCode::InvalidInput, "lambda_oracle needs at least 16 steps");
    if (steps % 2 != 0) ++steps;
    const double h = t / steps;
    Mat2 acc = series_expm(m, 0.0) + series_expm(m, t);
    for (int i = 1; i < steps; ++i) {
        acc = acc + (i % 2 == 1 ? 4.0 : 2.0) * series_expm(m, i * h);
    }
    return (h / 3.0) * acc;
}

GroupElement rk4(const std::function<Tangent(const GroupElement&)>& field, const GroupElement& start,
                 double duration, int steps) {
    auto shift = [](const GroupElement& g, double h, const Tangent& k) {
        return GroupElement{g.t + h * k.a, g.v + h * k.w};
    };
    const double h = duration / steps;
    GroupElement g = start;
    for (int i = 0; i < steps; ++i) {
        const Tangent k1 = field(g);
        const Tangent k2 = field(shift(g, 0.5 * h, k1));
        const Tangent k3 = field(shift(g, 0.5 * h, k2));
        const Tangent k4 = field(shift(g, h, k3));
        g = shift(g, h / 6.0, k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return g;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::vector<std::pair<double, double>> sign_scan(const std::function<double(double)>& f, double lo,
                                                  double hi, int n) {
    std::vector<std::pair<double, double>> out;
    if (n < 2) return out;
    const double h = (hi - lo) / (n - 1);
    double prev_t = lo;
    double prev = f(lo);
    for (int i = 1; i < n; ++i) {
        const double t = i == n - 1 ? hi : lo + i * h;
        const double v = f(t);
        if ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0)) out.emplace_back(prev_t, t);
        // exact zeros on the grid: skip them and keep the last nonzero sign
        if (v != 0.0) {
            prev = v;
            prev_t = t;
        }
    }
    return out;
}

}  // namespace ars3d::oracle
