#include "doctest.h"
#include "support.hpp"

#include "ars3d/error.hpp"
#include "ars3d/group.hpp"
#include "ars3d/oracles.hpp"
#include "ars3d/random.hpp"

#include <numbers>

using namespace ars3d;
using testing::diff;

namespace {
constexpr double pi = std::numbers::pi;
const double e = std::exp(1.0);
}  // namespace

TEST_CASE("theta families") {
    CHECK(Theta::jordan().matrix() == Mat2{1.0, 1.0, 0.0, 1.0});
    CHECK(Theta::diagonal(0.5).matrix() == Mat2::diag(1.0, 0.5));
    CHECK(Theta::complex(-0.3).matrix() == Mat2{-0.3, -1.0, 1.0, -0.3});
    CHECK_THROWS_AS(Theta::diagonal(1.5), Error);
    CHECK_THROWS_AS(Theta::diagonal(NAN), Error);
    CHECK(Theta::jordan().describe() == "jordan");
    CHECK(Theta::complex(0.0).describe() == "complex(0)");
}

TEST_CASE("bracket") {
    const AlgebraElement t{1.0, {}};
    const AlgebraElement x1{0.0, Vec2::e1()};
    CHECK(bracket(Theta::complex(0.0), t, x1) == AlgebraElement{0.0, Vec2::e2()});
    CHECK(bracket(Theta::jordan(), t, x1) == AlgebraElement{0.0, Vec2::e1()});
    const AlgebraElement x{0.3, {1.0, -2.0}};
    CHECK(diff(as_tangent(bracket(Theta::jordan(), x, x)), Tangent{}) == 0.0);
    const AlgebraElement y{-1.2, {0.5, 0.25}};
    const Theta th = Theta::diagonal(-0.4);
    const auto xy = bracket(th, x, y);
    const auto yx = bracket(th, y, x);
    CHECK(xy.a == 0.0);
    CHECK(diff(xy.w, -yx.w) == 0.0);
}

TEST_CASE("product, inverse and identity") {
    const Theta rot = Theta::complex(0.0);
    const GroupElement g{pi, {0.0, 0.0}};
    CHECK(diff(mul(rot, g, {0.0, {1.0, 0.0}}), GroupElement{pi, {-1.0, 0.0}}) < 1e-15);

    const GroupElement h{0.4, {1.0, -3.0}};
    CHECK(mul(rot, h, GroupElement::identity()) == h);
    CHECK(diff(mul(rot, h, inv(rot, h)), GroupElement::identity()) < 1e-15);

    CHECK(inv(Theta::jordan(), {0.0, {2.0, 3.0}}) == GroupElement{0.0, {-2.0, -3.0}});
    CHECK(inv(Theta::jordan(), GroupElement::identity()) == GroupElement::identity());
    CHECK(diff(inv(Theta::diagonal(1.0), {1.0, {e, 0.0}}), GroupElement{-1.0, {-1.0, 0.0}}) < 1e-15);
}

TEST_CASE("group exponential") {
    const Theta d1 = Theta::diagonal(1.0);
    CHECK(group_exp(Theta::jordan(), {0.0, {2.0, 5.0}}) == GroupElement{0.0, {2.0, 5.0}});
    CHECK(group_exp(d1, {0.7, {}}) == GroupElement{0.7, {}});
    CHECK(diff(group_exp(d1, {1.0, Vec2::e1()}), GroupElement{1.0, {e - 1.0, 0.0}}) < 1e-15);
    // the Taylor branch near a = 0 is continuous with a = 0
    const GroupElement tiny = group_exp(Theta::jordan(), {1e-12, {1.0, 1.0}});
    CHECK(diff(tiny.v, Vec2{1.0, 1.0}) < 1e-11);
}

TEST_CASE("invariant fields") {
    const AlgebraElement y{0.0, Vec2::e1()};
    CHECK(diff(left_invariant(Theta::complex(0.0), y, {pi / 2, {4.0, 4.0}}), Tangent{0.0, Vec2::e2()}) <
          1e-15);
    CHECK(diff(left_invariant(Theta::diagonal(1.0), {1.0, Vec2::e1()}, {1.0, {3.0, 3.0}}),
               Tangent{1.0, {e, 0.0}}) < 1e-15);
    const AlgebraElement z{0.2, {1.0, 2.0}};
    CHECK(left_invariant(Theta::jordan(), z, GroupElement::identity()) == as_tangent(z));
    CHECK(right_invariant(Theta::jordan(), z, GroupElement::identity()) == as_tangent(z));
    CHECK(right_invariant(Theta::jordan(), {0.0, {1.0, 2.0}}, {3.0, {5.0, 5.0}}) ==
          Tangent{0.0, {1.0, 2.0}});
    CHECK(right_invariant(Theta::jordan(), {1.0, {}}, {0.0, Vec2::e1()}) == Tangent{1.0, Vec2::e1()});
}

TEST_CASE("group laws hold on random samples") {
    Random rng(3);
    for (Family f : kFamilies) {
        for (int i = 0; i < 200; ++i) {
            const Theta th = random_theta(rng, f);
            const GroupElement g = rng.element();
            const GroupElement h = rng.element();
            const GroupElement k = rng.element();
            CHECK(diff(mul(th, mul(th, g, h), k), mul(th, g, mul(th, h, k))) < 1e-10);
            CHECK(diff(mul(th, inv(th, g), g), GroupElement::identity()) < 1e-12);

            const AlgebraElement x = rng.algebra();
            const double s = rng.uniform(-2.0, 2.0);
            const double r = rng.uniform(-2.0, 2.0);
            auto scaled = [&](double c) { return AlgebraElement{c * x.a, c * x.w}; };
            CHECK(diff(group_exp(th, scaled(s + r)),
                       mul(th, group_exp(th, scaled(s)), group_exp(th, scaled(r)))) < 1e-9);

            // dL_g at any base point matches the left-invariant field
            CHECK(diff(d_left(th, g, as_tangent(x)), left_invariant(th, x, g)) == 0.0);
            // right-invariant field is dR at the identity
            CHECK(diff(d_right(th, g, GroupElement::identity(), as_tangent(x)), right_invariant(th, x, g)) <
                  1e-15);
        }
    }
}

TEST_CASE("group exponential matches an RK4 integration of Y^L") {
    Random rng(4);
    for (int i = 0; i < 60; ++i) {
        const Theta th = random_theta(rng);
        const AlgebraElement y = rng.algebra();
        auto field = [&](const GroupElement& g) { return left_invariant(th, y, g); };
        const double s = rng.uniform(0.0, 1.0);
        const GroupElement ode = oracle::rk4(field, GroupElement::identity(), s, 200);
        CHECK(diff(ode, group_exp(th, {s * y.a, s * y.w})) < 1e-6);
    }
}
