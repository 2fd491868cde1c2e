#include "doctest.h"
#include "support.hpp"

#include "ars3d/error.hpp"
#include "ars3d/locus.hpp"
#include "ars3d/oracles.hpp"
#include "ars3d/random.hpp"

#include <numbers>

using namespace ars3d;
using testing::diff;

namespace {

constexpr double pi = std::numbers::pi;
const AlgebraElement kTime{1.0, {}};
const AlgebraElement kE1{0.0, Vec2::e1()};
const AlgebraElement kE2{0.0, Vec2::e2()};

LocusFunction example_43(double a, double b) {
    const LinearField x = LinearField::make(Theta::complex(0.0), {a, b}, Mat2::zero());
    return LocusFunction(SimpleARS::make(x, Distribution::make(kTime, kE1)));
}

LocusFunction example_44() {
    const LinearField x = LinearField::make(Theta::jordan(), {1.0, 3.0}, Mat2{2.0, 1.0, 0.0, 2.0});
    return LocusFunction(SimpleARS::make(x, Distribution::make(kTime, kE1)));
}

LocusFunction rank_one() {
    const LinearField x = LinearField::make(Theta::diagonal(0.5), Vec2::e1(), Mat2::diag(1.0, 0.0));
    return LocusFunction(SimpleARS::make(x, Distribution::make(kTime, kE2)));
}

}  // namespace

TEST_CASE("F on the two worked examples") {
    const LocusFunction f = example_44();
    for (double t : {-2.0, -0.3, 0.0, 1.0, 2.0}) {
        CHECK(std::fabs(f({t, {0.7, 1.5 * (1.0 - std::exp(t))}})) < 1e-12);
    }
    CHECK(f(GroupElement::identity()) == 0.0);
    CHECK(component_of(f, {0.0, {0.0, 1.0}}) == Component::CPlus);
    CHECK(component_of(f, {0.0, {0.0, 0.0}}) == Component::OnLocus);
    CHECK(component_of(f, {0.0, {0.0, -1.0}}) == Component::CMinus);
    CHECK(f({0.0, {0.0, 1.0}}) == doctest::Approx(2.0));

    const Gradient d = locus_gradient(f, GroupElement::identity());
    CHECK(d.dv.y == doctest::Approx(2.0));

    const LocusFunction g = example_43(1.0, 0.0);
    CHECK(std::fabs(g({2 * pi, {3.0, -7.0}})) < 1e-15);
    CHECK(std::fabs(g({pi, {3.0, -7.0}})) > 1.0);
}

TEST_CASE("Example 4.4 locus is the graph 2y = 3(1 - e^t)") {
    const LocusFunction f = example_44();
    const LocusDescription d = describe_locus(f, -2, 2);
    CHECK(std::holds_alternative<Hmap>(d.shape));
    CHECK(d.connected);
    CHECK(d.component_count == 1);
    CHECK(shape_name(d) == "GraphOverPlane(Hmap)");
    CHECK(locus_param(d, f, 0.0, 0.0) == GroupElement::identity());

    const auto pts = locus_sample(f, -2, 2, 50);
    REQUIRE(pts.size() == 2500);
    std::vector<GroupElement> gs;
    for (const LocusSample& p : pts) {
        CHECK(std::fabs(2 * p.g.v.y - 3 * (1 - std::exp(p.g.t))) <= 1e-10);
        CHECK(std::fabs(p.residual) <= 1e-8);
        gs.push_back(p.g);
    }
    const AuditReport audit = regular_value_audit(f, gs);
    CHECK(audit.violations.empty());
    CHECK(audit.min_grad_norm > 0.1);
    CHECK(regular_value_audit(f, {}).min_grad_norm == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(regular_value_audit(f, {{0.0, {0.0, 1.0}}}), Error);
}

TEST_CASE("Example 4.3 plane stack") {
    const LocusFunction f = example_43(1.0, 1.0);
    const LocusDescription d = describe_locus(f, 0, 4 * pi);
    const auto* stack = std::get_if<PlaneStack>(&d.shape);
    REQUIRE(stack != nullptr);
    CHECK_FALSE(d.connected);
    CHECK(d.component_count == -1);
    CHECK(stack->periodic);
    CHECK(stack->period == doctest::Approx(2 * pi));
    const std::vector<double> expect{0.0, pi / 2, 2 * pi, 5 * pi / 2, 4 * pi};
    REQUIRE(stack->times.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(std::fabs(stack->times[i] - expect[i]) < 1e-9);
    CHECK_THROWS_AS(locus_param(d, f, 0.0, 0.0), Error);

    // cos t - 1 only touches zero
    const LocusDescription t = describe_locus(example_43(1.0, 0.0), -1, 7);
    const auto& tangential = std::get<PlaneStack>(t.shape);
    REQUIRE(tangential.times.size() == 2);
    CHECK_FALSE(tangential.simple[0]);

    const auto pts = locus_sample(f, 0, 4 * pi, 3);
    CHECK(pts.size() == 5 * 9);
    for (const LocusSample& p : pts) CHECK(std::fabs(p.residual) <= 1e-8);
    CHECK(pts.back().plane == 4);
    CHECK(locus_sample(f, 1, 0, 10).empty());
    CHECK_THROWS_AS(locus_sample(f, 0, 1, 1), Error);
}

TEST_CASE("rank-one A gives the I parametrization") {
    const LocusFunction f = rank_one();
    const LocusDescription d = describe_locus(f, -1, 1);
    const auto* m = std::get_if<Imap>(&d.shape);
    REQUIRE(m != nullptr);
    CHECK(d.connected);
    CHECK(std::fabs(dot(f.sigma().field().a() * m->w2, m->w2)) == 0.0);
    CHECK(dot(f.sigma().field().a() * m->w1, f.u()) > 0.0);
    CHECK(m->beta == doctest::Approx(1.0));
    for (double s : {-1.0, 0.5}) {
        for (double t : {-1.0, 0.0, 2.0}) CHECK(std::fabs(f(locus_param(d, f, s, t))) < 1e-12);
    }
}

TEST_CASE("rank-one A with A w1 in l_Delta is a single plane") {
    const LinearField x = LinearField::make(Theta::diagonal(0.5), Vec2::e2(), Mat2::diag(1.0, 0.0));
    const LocusFunction f(SimpleARS::make(x, Distribution::make(kTime, kE1)));
    const LocusDescription d = describe_locus(f, -3, 3);
    const auto* stack = std::get_if<PlaneStack>(&d.shape);
    REQUIRE(stack != nullptr);
    CHECK(stack->degenerate_rank_one);
    CHECK(d.connected);
    REQUIRE(stack->times.size() == 1);
    CHECK(std::fabs(stack->times[0]) < 1e-12);
}

TEST_CASE("numerical rank") {
    CHECK(numerical_rank(Mat2::zero()) == 0);
    CHECK(numerical_rank(Mat2::diag(1.0, 0.0)) == 1);
    CHECK(numerical_rank(Mat2::diag(1.0, 1e-12)) == 1);
    CHECK(numerical_rank(Mat2{2.0, 1.0, 0.0, 2.0}) == 2);
}

TEST_CASE("H and I identities on random structures") {
    Random rng(51);
    for (Family fam : kFamilies) {
        for (int i = 0; i < 60; ++i) {
            const Theta th = random_theta(rng, fam);
            const LocusFunction f(random_ars_with(rng, th, random_invertible_commuting(rng, th)));
            const GroupElement g = rng.element();
            CHECK(std::fabs(f(h_map(f, g)) - dot(g.v, f.u())) < 1e-9);
            CHECK(diff(h_map(f, h_map_inverse(f, g)), g) < 1e-10);
            CHECK(diff(h_map_inverse(f, h_map(f, g)), g) < 1e-10);
            const LocusDescription d = describe_locus(f, -2, 2);
            REQUIRE(std::holds_alternative<Hmap>(d.shape));
            CHECK(std::fabs(f(locus_param(d, f, rng.uniform(-2, 2), g.t))) < 1e-9);
        }
    }
    for (Family fam : {Family::Jordan, Family::Diagonal}) {
        for (int i = 0; i < 60; ++i) {
            const Theta th = random_theta(rng, fam);
            const LocusFunction f(random_ars_with(rng, th, random_rank_one_commuting(rng, th)));
            const LocusDescription d = describe_locus(f, -2, 2);
            const auto* m = std::get_if<Imap>(&d.shape);
            if (m == nullptr) continue;
            const GroupElement g = rng.element();
            const Vec2 aw1 = f.sigma().field().a() * m->w1;
            const double expect = std::exp(-m->beta * g.t) * dot(g.v, m->w1) * dot(aw1, f.u());
            CHECK(std::fabs(f(i_map(f, *m, g)) - expect) < 1e-9);
            CHECK(diff(i_map(f, *m, i_map_inverse(f, *m, g)), g) < 1e-10);
        }
    }
}

TEST_CASE("gradient matches finite differences") {
    Random rng(52);
    for (int i = 0; i < 200; ++i) {
        const LocusFunction f(random_ars(rng, random_theta(rng)));
        const GroupElement g = rng.element();
        const Gradient d = locus_gradient(f, g);
        const double h = 1e-6;
        const double dt = oracle::central_difference([&](double s) { return f({s, g.v}); }, g.t, h);
        const double dx = oracle::central_difference([&](double s) { return f({g.t, {s, g.v.y}}); }, g.v.x, h);
        const double dy = oracle::central_difference([&](double s) { return f({g.t, {g.v.x, s}}); }, g.v.y, h);
        CHECK(std::fabs(dt - d.dt) < 1e-6);
        CHECK(std::fabs(dx - d.dv.x) < 1e-6);
        CHECK(std::fabs(dy - d.dv.y) < 1e-6);
    }
}

TEST_CASE("samples sit on the locus and nearby fiber points do not") {
    Random rng(53);
    for (int i = 0; i < 40; ++i) {
        const Theta th = random_theta(rng);
        const LocusFunction f(random_ars_with(rng, th, random_invertible_commuting(rng, th)));
        const auto pts = locus_sample(f, -1, 1, 8);
        std::vector<GroupElement> gs;
        for (const LocusSample& p : pts) {
            CHECK(std::fabs(p.residual) <= 1e-8);
            const Gradient d = locus_gradient(f, p.g);
            const GroupElement off{p.g.t, p.g.v + 0.1 * normalized(d.dv)};
            CHECK(std::fabs(f(off)) > 0.0);
            gs.push_back(p.g);
        }
        CHECK(regular_value_audit(f, gs).violations.empty());
        for (std::size_t k = 1; k < pts.size(); ++k) {
            CHECK(pts[k - 1].g.t <= pts[k].g.t);
        }
    }
}
