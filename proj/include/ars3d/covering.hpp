#pragma once

#include "ars3d/ars.hpp"
#include "ars3d/group.hpp"

#include <vector>

namespace ars3d {

/// The quotient of G(theta), theta = complex(0), by the central subgroup
/// {(2 pi k, 0)}. Only this theta has a 2 pi-periodic rho.
class QuotientElement {
public:
    QuotientElement() = default;
    /// Reduces t into [0, 2 pi).
    QuotientElement(double t, const Vec2& v);

    double t_bar() const { return t_bar_; }
    const Vec2& v() const { return v_; }
    GroupElement lift() const { return {t_bar_, v_}; }

private:
    double t_bar_{0.0};
    Vec2 v_;
};

/// Throws UnsupportedTheta unless theta = complex(0).
void require_rotation(const Theta& theta);

QuotientElement project(const Theta& theta, const GroupElement& g);
QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b);
/// Max of the circular distance in t and the max-norm distance in v.
double circular_distance(const QuotientElement& a, const QuotientElement& b);

struct DescentReport {
    bool descends{true};
    /// max |F(t + 2 pi k, v) - F(t, v)| / (1 + |v|) over the checked points and k in -2..2
    double max_residual{0.0};
    std::vector<double> residuals;
    /// Points where locus membership differed between sheets.
    std::vector<GroupElement> mismatches;
    std::size_t checked{0};
};

/// Checks that F and locus membership are unchanged by t -> t + 2 pi k on
/// locus samples over one period plus a deterministic grid of other points.
DescentReport locus_descends(const SimpleARS& sigma, int resolution = 12, double tol = 1e-9);

/// project(phi_s(g)) against the flow run from the reduced representative.
bool flow_descends(const LinearField& x, double s, const GroupElement& g, double tol = 1e-9);

}  // namespace ars3d
