#pragma once

#include "ars3d/group.hpp"
#include "ars3d/linalg2.hpp"
#include "ars3d/symmetry.hpp"

#include <array>
#include <limits>
#include <string_view>

namespace ars3d {

/// A 2D subspace of g(theta) with an inner product given on its basis.
class Distribution {
public:
    /// Throws InvalidInput for dependent or non-finite bases and for a
    /// gram matrix that is not symmetric positive definite.
    static Distribution make(const AlgebraElement& b1, const AlgebraElement& b2,
                             const Mat2& gram = Mat2::identity(), double tol = kClassifyTol);

    const std::array<AlgebraElement, 2>& basis() const { return basis_; }
    const Mat2& gram() const { return gram_; }

private:
    Distribution(const std::array<AlgebraElement, 2>& basis, const Mat2& gram)
        : basis_(basis), gram_(gram) {}

    std::array<AlgebraElement, 2> basis_;
    Mat2 gram_;
};

/// l_Delta with {0} x l_Delta = Delta cap ({0} x R^2). The normal is the
/// direction turned counterclockwise by a right angle.
struct DeltaLine {
    Vec2 direction;
    Vec2 normal;
};

/// Throws DegenerateDistribution when sigma1 u2 - sigma2 u1 vanishes,
/// i.e. Delta = {0} x R^2.
DeltaLine delta_line(const Distribution& delta, double tol = kClassifyTol);

bool is_subalgebra(const Theta& theta, const Distribution& delta, double tol = kClassifyTol);

enum class LarcReason {
    NotSubalgebra,           // [Delta, Delta] not inside Delta
    DerivationNotInvariant,  // D Delta not inside Delta, generic basis
    ALineNotInvariant,       // (1, 0) in Delta and A l_Delta not inside l_Delta
    XiOutsideLine,           // (1, 0) in Delta, A l_Delta inside l_Delta, xi outside
    Fails,
};

std::string_view to_string(LarcReason r);

struct LarcVerdict {
    bool satisfied;
    LarcReason reason;
};

LarcVerdict larc(const LinearField& x, const Distribution& delta, double tol = kClassifyTol);

/// True when (1, 0) lies in Delta, which happens exactly when u1, u2 are parallel.
bool contains_time_direction(const Distribution& delta, double tol = kClassifyTol);

/// <rho_{-t}(A v + Lambda_t xi), u>; vanishes exactly where X(g) lies in
/// Delta^L(g) when u is the normal of l_Delta.
double normal_component(const LinearField& x, const Vec2& u, const GroupElement& g);

/// Sigma = {X, Delta^L} with LARC and a certified point off the singular locus.
class SimpleARS {
public:
    /// Throws DegenerateDistribution, LarcNotSatisfied or NoRegularPoint.
    static SimpleARS make(const LinearField& x, const Distribution& delta, double tol = kClassifyTol);

    const Theta& theta() const { return field_.theta(); }
    const LinearField& field() const { return field_; }
    const Distribution& distribution() const { return delta_; }
    const DeltaLine& line() const { return line_; }
    LarcReason larc_reason() const { return reason_; }
    /// Delta's basis orthonormalized in order under the gram matrix.
    const std::array<AlgebraElement, 2>& frame() const { return frame_; }
    /// A grid point where X(g) is not in Delta^L(g).
    const GroupElement& witness() const { return witness_; }

private:
    SimpleARS(const LinearField& x, const Distribution& delta, const DeltaLine& line, LarcReason reason,
              const std::array<AlgebraElement, 2>& frame, const GroupElement& witness)
        : field_(x), delta_(delta), line_(line), reason_(reason), frame_(frame), witness_(witness) {}

    LinearField field_;
    Distribution delta_;
    DeltaLine line_;
    LarcReason reason_;
    std::array<AlgebraElement, 2> frame_;
    GroupElement witness_;
};

/// Almost-Riemannian norm of the tangent z at g. Returns +infinity when z is
/// outside the span of {X(g), Y1^L(g), Y2^L(g)}; on the singular locus the
/// minimum-norm coefficient vector is used.
double ar_norm(const SimpleARS& sigma, const GroupElement& g, const Tangent& z);

/// Sigma_psi: X_psi = (P^-1(eps xi + A eta), P^-1 A P), Delta_psi = (d psi_e)^-1 Delta
/// carrying the same gram matrix, so psi becomes an isometry Sigma_psi -> Sigma.
SimpleARS pushforward(const SimpleARS& sigma, const Automorphism& psi);

/// psi_1(t, v) = (t, v - Lambda_t A^-1 xi); requires det A != 0.
Automorphism psi1(const LinearField& x);
/// psi_2(t, v) = (t, v + Lambda_t u / sigma) for (sigma, u) in Delta, sigma != 0.
Automorphism psi2(const Theta& theta, const AlgebraElement& element);

enum class NormalizeTarget {
    TimeDirection,  // (1, 0) in Delta via psi_2, falling back to psi_1
    ZeroXi,         // xi = 0 via psi_1
};

struct Normalized {
    SimpleARS sigma;
    Automorphism psi;
};

/// Throws CannotNormalize when the requested map does not exist.
Normalized normalize(const SimpleARS& sigma, NormalizeTarget target = NormalizeTarget::TimeDirection);

}  // namespace ars3d
