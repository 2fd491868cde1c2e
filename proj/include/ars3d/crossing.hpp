#pragma once

#include "ars3d/locus.hpp"
#include "ars3d/zeros.hpp"

#include <string_view>
#include <vector>

namespace ars3d {

/// F(g exp(sY)) from the closed form; no group products involved.
double exp_curve_value(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y, double s);

/// The same function of s as a ScalarCurve for the zero engine.
ScalarCurve exp_curve_reduce(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y);

/// s -> F(phi_s(g)) = <e^{sA}(A v + Lambda_t xi), rho_{-t}^T u>.
MatExpForm flow_curve(const SimpleARS& sigma, const GroupElement& g);

enum class Behavior { StaysInComponent, DiscreteCrossings, RemainsInLocus };
std::string_view to_string(Behavior b);

struct CrossingProfile {
    Behavior behavior{Behavior::StaysInComponent};
    GroupElement base;
    /// The exponential direction; unused for flow profiles.
    AlgebraElement direction;
    bool flow{false};
    Component start{Component::OnLocus};
    /// Crossings inside the window, ascending, with sign-change flags.
    std::vector<Zero> zeros;
    ZeroReport report;
    /// Distance from s = 0 to the nearest zero not at s = 0. Infinite when
    /// the curve has no such zero; for oscillating curves only the window is searched.
    double delta{std::numeric_limits<double>::infinity()};
    /// Set when A = 0, where no crossing theorem applies.
    bool best_effort{false};
};

/// zero_tol is the relative coefficient threshold handed to the zero engine.
CrossingProfile exp_curve_profile(const SimpleARS& sigma, const GroupElement& g, const AlgebraElement& y,
                                  double s_min, double s_max, double zero_tol = 1e-10);

CrossingProfile flow_crossing(const SimpleARS& sigma, const GroupElement& g, double s_min, double s_max,
                              double zero_tol = 1e-10);

}  // namespace ars3d
