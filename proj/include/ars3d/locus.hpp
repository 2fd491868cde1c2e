#pragma once

#include "ars3d/ars.hpp"
#include "ars3d/zeros.hpp"

#include <limits>
#include <string_view>
#include <variant>
#include <vector>

namespace ars3d {

/// F_u(t, v) = <rho_{-t}(A v + Lambda_t xi), u> for the unit normal u of l_Delta.
class LocusFunction {
public:
    explicit LocusFunction(const SimpleARS& sigma) : sigma_(sigma), u_(sigma.line().normal) {}

    const SimpleARS& sigma() const { return sigma_; }
    const Vec2& u() const { return u_; }
    double operator()(const GroupElement& g) const;

private:
    SimpleARS sigma_;
    Vec2 u_;
};

struct Gradient {
    double dt{0.0};
    Vec2 dv;
};

double locus_value(const LocusFunction& f, const GroupElement& g);
Gradient locus_gradient(const LocusFunction& f, const GroupElement& g);

/// The one-variable function h(t) = F(t, v) for A = 0 (or whenever F does not
/// depend on v), as a curve for the zero engine.
ScalarCurve plane_function(const LocusFunction& f);

struct AuditReport {
    double min_grad_norm{std::numeric_limits<double>::infinity()};
    std::vector<GroupElement> violations;
    std::size_t samples{0};
};

/// Checks that the gradient of F does not vanish on the given locus points.
/// Throws SampleNotOnLocus when |F| > tol (1 + |v|) for some sample.
AuditReport regular_value_audit(const LocusFunction& f, const std::vector<GroupElement>& samples,
                                double tol = 1e-9);

/// Union of planes {t_k} x R^2.
struct PlaneStack {
    std::vector<double> times;       // zeros inside the window, ascending
    std::vector<bool> simple;        // false for tangential zeros
    ZeroClass classification{ZeroClass::NoZeros};
    double period{std::numeric_limits<double>::quiet_NaN()};
    bool periodic{false};
    bool degenerate_rank_one{false};  // A != 0 but F depends on t only
};

/// Z = H(R x l_Delta) with H(t, v) = (t, A^-1(rho_t v - Lambda_t xi)).
struct Hmap {
    Mat2 a_inverse;
};

/// Z = I(R x R w2); A w2 = 0, A w1 != 0, theta A w1 = beta A w1.
struct Imap {
    Vec2 w1;
    Vec2 w2;
    double beta{0.0};
};

using LocusShape = std::variant<PlaneStack, Hmap, Imap>;

struct LocusDescription {
    LocusShape shape;
    bool connected{false};
    /// -1 when the locus has infinitely many components.
    int component_count{0};
    double t_min{0.0};
    double t_max{0.0};
};

std::string_view shape_name(const LocusDescription& d);

/// Numerical rank of a 2x2 matrix from its singular values, cutoff 1e-10.
int numerical_rank(const Mat2& m, double cutoff = 1e-10);

LocusDescription describe_locus(const LocusFunction& f, double t_min, double t_max);

GroupElement h_map(const LocusFunction& f, const GroupElement& g);
GroupElement h_map_inverse(const LocusFunction& f, const GroupElement& g);
GroupElement i_map(const LocusFunction& f, const Imap& basis, const GroupElement& g);
GroupElement i_map_inverse(const LocusFunction& f, const Imap& basis, const GroupElement& g);

/// A point of the locus: H(t, s l_Delta) or I(t, s w2). Throws WrongShape for a plane stack.
GroupElement locus_param(const LocusDescription& d, const LocusFunction& f, double s, double t);

enum class Component { CMinus, OnLocus, CPlus };
std::string_view to_string(Component c);

Component component_of(const LocusFunction& f, const GroupElement& g, double band = 1e-9);

struct LocusSample {
    GroupElement g;
    /// Plane index for plane stacks, -1 on a graph.
    int plane{-1};
    double residual{0.0};
};

/// A resolution x resolution grid: (t, s) with s in [-extent, extent] on a
/// graph, or (x, y) in [-extent, extent]^2 on each plane of a stack.
/// Sorted by t, then by the in-plane parameter. Empty when t_min > t_max.
std::vector<LocusSample> locus_sample(const LocusFunction& f, double t_min, double t_max, int resolution,
                                      double extent = 2.0);

}  // namespace ars3d
