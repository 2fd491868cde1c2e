#include "doctest.h"
#include "support.hpp"

#include "ars3d/error.hpp"
#include "ars3d/random.hpp"
#include "ars3d/symmetry.hpp"

using namespace ars3d;
using testing::diff;

namespace {

LinearField example_44_field() {
    return LinearField::make(Theta::jordan(), {1.0, 3.0}, Mat2{2.0, 1.0, 0.0, 2.0});
}

}  // namespace

TEST_CASE("derivation and automorphism checks") {
    CHECK(check_derivation(Theta::diagonal(0.3), {1.0, 2.0}, Mat2::diag(-4.0, 7.0)));
    CHECK(check_derivation(Theta::jordan(), {}, Mat2{2.0, 1.0, 0.0, 2.0}));
    CHECK_FALSE(check_derivation(Theta::jordan(), {}, Mat2{2.0, 0.0, 1.0, 2.0}));
    CHECK(check_automorphism(Theta::diagonal(-1.0), -1, Mat2{0.0, 1.0, 1.0, 0.0}, {}));
    CHECK_FALSE(check_automorphism(Theta::diagonal(-0.5), -1, Mat2{0.0, 1.0, 1.0, 0.0}, {}));
    CHECK_FALSE(check_automorphism(Theta::jordan(), 1, Mat2{1.0, 2.0, 0.0, 0.0}, {}));
    CHECK_FALSE(check_automorphism(Theta::jordan(), 2, Mat2::identity(), {}));
    CHECK_THROWS_AS(check_derivation(Theta::jordan(), {}, Mat2::zero(), 0.0), Error);
    CHECK_THROWS_AS(LinearField::make(Theta::jordan(), {}, Mat2{0.0, 0.0, 1.0, 0.0}), Error);
    CHECK_THROWS_AS(Automorphism::make(Theta::complex(0.5), -1, Mat2{1.0, 0.0, 0.0, -1.0}, {}), Error);
}

TEST_CASE("automorphism action") {
    const Theta th = Theta::jordan();
    const GroupElement g{0.8, {1.0, -2.0}};
    CHECK(aut_apply(th, Automorphism::identity(th), g) == g);

    const Automorphism phi = Automorphism::make(th, 1, Mat2{2.0, 1.0, 0.0, 2.0}, {3.0, -1.0});
    CHECK(diff(aut_apply(th, phi, {0.0, {1.0, 1.0}}), GroupElement{0.0, {3.0, 2.0}}) < 1e-15);
    CHECK_THROWS_AS(aut_apply(Theta::diagonal(0.5), phi, g), Error);

    // psi_2 built from (sigma, u) = (1, 0) is the identity
    const Automorphism psi = Automorphism::make(th, 1, Mat2::identity(), Vec2{} / 1.0);
    CHECK(diff(psi.apply(g), g) == 0.0);
}

TEST_CASE("automorphisms are homomorphisms with the stated differential") {
    Random rng(21);
    for (Family f : kFamilies) {
        for (int i = 0; i < 150; ++i) {
            const Theta th = random_theta(rng, f);
            const Automorphism phi = random_automorphism(rng, th);
            const GroupElement g = rng.element();
            const GroupElement h = rng.element();
            CHECK(diff(phi.apply(mul(th, g, h)), mul(th, phi.apply(g), phi.apply(h))) < 1e-9);

            const Tangent z{rng.uniform(-1, 1), rng.vec()};
            const double step = 1e-6;
            const GroupElement gp{g.t + step * z.a, g.v + step * z.w};
            const GroupElement gm{g.t - step * z.a, g.v - step * z.w};
            const GroupElement fp = phi.apply(gp);
            const GroupElement fm = phi.apply(gm);
            const Tangent fd{(fp.t - fm.t) / (2 * step), (fp.v - fm.v) / (2 * step)};
            CHECK(diff(fd, phi.differential(g, z)) < 1e-6);
            CHECK(diff(phi.differential(GroupElement::identity(), z),
                       phi.differential_at_identity().apply(z)) < 1e-15);
        }
    }
}

TEST_CASE("linear field values") {
    const LinearField x = example_44_field();
    for (double t : {-1.0, 0.0, 0.5, 2.0}) {
        const double ex = std::exp(t);
        const Vec2 v{0.7, -1.3};
        const Vec2 expect{2 * v.x + v.y + 3 * t * ex - 2 * ex + 2, 2 * v.y + 3 * (ex - 1)};
        CHECK(diff(field_eval(x, {t, v}).w, expect) < 1e-13);
        CHECK(field_eval(x, {t, v}).a == 0.0);
    }
    const double a = 0.6, b = -1.1;
    const LinearField y = LinearField::make(Theta::complex(0.0), {a, b}, Mat2::zero());
    for (double t : {-2.0, 1.0, 4.0}) {
        const Vec2 expect{a * std::sin(t) + b * (std::cos(t) - 1), a * (1 - std::cos(t)) + b * std::sin(t)};
        CHECK(diff(field_eval(y, {t, {5.0, 5.0}}).w, expect) < 1e-14);
    }
    CHECK(field_eval(y, GroupElement::identity()) == Tangent{});
}

TEST_CASE("flow values") {
    const LinearField x = example_44_field();
    const GroupElement g{0.3, {1.0, 2.0}};
    CHECK(flow(x, 0.0, g) == g);
    CHECK(diff(flow(x, 1.7, GroupElement::identity()), GroupElement::identity()) == 0.0);
    const LinearField d = LinearField::make(Theta::diagonal(1.0), {}, Mat2::identity());
    CHECK(diff(flow(d, 0.5, {2.0, {1.0, -1.0}}), GroupElement{2.0, std::exp(0.5) * Vec2{1.0, -1.0}}) <
          1e-15);
}

TEST_CASE("singularities") {
    const LinearField x = example_44_field();
    CHECK(field_singularities_check(x, GroupElement::identity(), 1e-12));
    const LinearField d = LinearField::make(Theta::diagonal(1.0), {}, Mat2::identity());
    CHECK(field_singularities_check(d, {3.0, {}}, 1e-12));
    CHECK_FALSE(field_singularities_check(d, {3.0, {0.0, 1e-3}}, 1e-12));
}

TEST_CASE("flow properties on random fields") {
    Random rng(22);
    for (Family f : kFamilies) {
        for (int i = 0; i < 150; ++i) {
            const Theta th = random_theta(rng, f);
            const LinearField x = random_field(rng, th);
            const GroupElement g = rng.element();
            const GroupElement h = rng.element();
            const double s = rng.uniform(-2.0, 2.0);
            const double r = rng.uniform(-2.0, 2.0);
            CHECK(diff(flow(x, s, mul(th, g, h)), mul(th, flow(x, s, g), flow(x, s, h))) < 1e-9);
            CHECK(diff(flow(x, s, flow(x, r, g)), flow(x, s + r, g)) < 1e-9);

            const double step = 1e-6;
            const GroupElement p = flow(x, step, g);
            const GroupElement m = flow(x, -step, g);
            const Tangent fd{(p.t - m.t) / (2 * step), (p.v - m.v) / (2 * step)};
            CHECK(diff(fd, field_eval(x, g)) < 1e-6);

            // (d phi_s)_e against a finite difference of the flow at e
            const BlockMatrix de = flow_differential_at_identity(x, s);
            const Tangent z{rng.uniform(-1, 1), rng.vec()};
            const GroupElement zp = flow(x, s, {step * z.a, step * z.w});
            const GroupElement zm = flow(x, s, {-step * z.a, -step * z.w});
            const Tangent dz{(zp.t - zm.t) / (2 * step), (zp.v - zm.v) / (2 * step)};
            CHECK(diff(dz, de.apply(z)) < 1e-6);

            // Z_X is closed under products
            if (field_singularities_check(x, g, 1e-12) && field_singularities_check(x, h, 1e-12)) {
                CHECK(field_singularities_check(x, mul(th, g, h), 1e-9));
            }
        }
    }
}

TEST_CASE("the derivation exponential equals the flow differential at e") {
    Random rng(23);
    for (int i = 0; i < 100; ++i) {
        const Theta th = random_theta(rng);
        const LinearField x = random_field(rng, th);
        const double s = rng.uniform(-2.0, 2.0);
        // e^{sD} by its power series in the block algebra
        BlockMatrix term = BlockMatrix::identity();
        BlockMatrix sum = BlockMatrix::identity();
        for (int k = 1; k < 40; ++k) {
            term = (s / k) * (term * x.derivation());
            sum = sum + term;
        }
        CHECK(max_abs(sum + (-1.0) * flow_differential_at_identity(x, s)) < 1e-9);
    }
}
