#include "doctest.h"
#include "support.hpp"

#include "ars3d/error.hpp"
#include "ars3d/linalg2.hpp"
#include "ars3d/oracles.hpp"
#include "ars3d/random.hpp"

#include <numbers>

using namespace ars3d;
using testing::diff;

namespace {

constexpr double pi = std::numbers::pi;

// One matrix from each eigen-structure, scaled into [-1, 1].
Mat2 sample(Random& rng, int kind) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(0.2, 1.0);
    switch (kind) {
        case 0: return Mat2{a, rng.uniform(-1.0, 1.0), 0.0, a - b};   // real distinct
        case 1: return Mat2{a, rng.uniform(-1.0, 1.0), 0.0, a};       // repeated
        default: return Mat2{a, -b, b, a};                            // complex
    }
}

double rel(const Mat2& lhs, const Mat2& rhs) {
    return max_abs(lhs - rhs) / std::max({1.0, max_abs(lhs), max_abs(rhs)});
}

}  // namespace

TEST_CASE("classify separates the three eigen-structures") {
    const auto d = classify(Mat2::diag(1.0, -1.0), 1e-9);
    REQUIRE(std::holds_alternative<RealDistinct>(d));
    CHECK(std::get<RealDistinct>(d).lambda1 == 1.0);
    CHECK(std::get<RealDistinct>(d).lambda2 == -1.0);

    const auto c = classify(Mat2{0.0, -1.0, 1.0, 0.0}, 1e-9);
    REQUIRE(std::holds_alternative<ComplexPair>(c));
    CHECK(std::get<ComplexPair>(c).lambda == 0.0);
    CHECK(std::get<ComplexPair>(c).mu == doctest::Approx(1.0));

    const auto j = classify(Mat2{1.0, 1.0, 0.0, 1.0}, 1e-9);
    REQUIRE(std::holds_alternative<RealRepeated>(j));
    CHECK(std::get<RealRepeated>(j).lambda == 1.0);
    CHECK_FALSE(std::get<RealRepeated>(j).diagonalizable);

    const auto s = classify(2.0 * Mat2::identity(), 1e-9);
    REQUIRE(std::holds_alternative<RealRepeated>(s));
    CHECK(std::get<RealRepeated>(s).diagonalizable);

    // a discriminant inside the tolerance band counts as repeated
    const auto near = classify(Mat2{1.0, 1e-11, 1.0, 1.0}, 1e-9);
    CHECK(std::holds_alternative<RealRepeated>(near));

    CHECK_THROWS_AS(classify(Mat2{NAN, 0, 0, 0}, 1e-9), Error);
    CHECK_THROWS_AS(classify(Mat2::identity(), 0.0), Error);
}

TEST_CASE("expm closed forms") {
    const Mat2 j{0.0, -1.0, 1.0, 0.0};
    CHECK(diff(expm(j, pi / 2), j) < 1e-15);
    const double t = 0.7;
    CHECK(diff(expm(j, t), Mat2{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}) < 1e-15);
    CHECK(expm(Mat2{3.0, 1.0, -2.0, 5.0}, 0.0) == Mat2::identity());

    const Mat2 jordan{1.0, 1.0, 0.0, 1.0};
    CHECK(diff(expm(jordan, 1.0), std::exp(1.0) * jordan) < 1e-15);
    CHECK(diff(expm(jordan, 1.0), oracle::series_expm(jordan, 1.0)) < 1e-12);

    Random rng(7);
    for (int i = 0; i < 300; ++i) {
        const Mat2 m = sample(rng, i % 3);
        const double s = rng.uniform(-4.0, 4.0);
        const Mat2 e = expm(m, s);
        CHECK(rel(e, oracle::series_expm(m, s)) < 1e-12);
        CHECK(std::fabs(e.det() - std::exp(s * m.trace())) < 1e-12 * std::exp(s * m.trace()) + 1e-14);
    }
}

TEST_CASE("lambda_op printed values") {
    const Mat2 m{0.3, -2.0, 0.5, 1.1};
    CHECK(lambda_op(m, 0.0) == Mat2::zero());

    for (double lam : {2.0, -0.5, 1e-7}) {
        for (double t : {-1.5, 0.25, 3.0}) {
            const Mat2 expect = Mat2::diag(std::expm1(t * lam) / lam, t);
            CHECK(rel(lambda_op(Mat2::diag(lam, 0.0), t), expect) < 1e-14);
        }
    }

    const Mat2 j{0.0, -1.0, 1.0, 0.0};
    for (double t : {-2.0, 0.5, pi, 7.0}) {
        const Mat2 expect{std::sin(t), std::cos(t) - 1.0, 1.0 - std::cos(t), std::sin(t)};
        CHECK(diff(lambda_op(j, t), expect) < 1e-14);
    }
}

TEST_CASE("lambda_oracle reproduces its reference values") {
    const Mat2 e1 = oracle::lambda_oracle(Mat2::diag(1.0, 0.0), 1.0, 1024);
    CHECK(diff(e1, Mat2::diag(std::exp(1.0) - 1.0, 1.0)) < 1e-10);
    CHECK(diff(oracle::lambda_oracle(Mat2::zero(), 3.0, 16), 3.0 * Mat2::identity()) < 1e-14);
    const Mat2 r = oracle::lambda_oracle(Mat2{0.0, -1.0, 1.0, 0.0}, pi, 1024);
    CHECK(diff(r, Mat2{0.0, -2.0, 2.0, 0.0}) < 1e-8);
    CHECK_THROWS_AS(oracle::lambda_oracle(Mat2::zero(), 1.0, 8), Error);
}

TEST_CASE("solve2") {
    CHECK(solve2(Mat2::identity(), {3.0, 4.0}) == Vec2{3.0, 4.0});
    CHECK(solve2(Mat2::diag(2.0, 5.0), {2.0, 5.0}) == Vec2{1.0, 1.0});
    CHECK(diff(solve2(Mat2{1.0, 1.0, 0.0, 1.0}, {2.0, 1.0}), Vec2{1.0, 1.0}) < 1e-15);
    try {
        solve2(Mat2{1.0, 2.0, 2.0, 4.0}, {1.0, 1.0});
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMatrix);
    }
}

TEST_CASE("lambda identities on random matrices of every eigen-structure") {
    Random rng(11);
    for (int i = 0; i < 600; ++i) {
        const Mat2 m = sample(rng, i % 3);
        const double t = rng.uniform(-3.0, 3.0);
        const double s = rng.uniform(-3.0, 3.0);
        const Mat2 lt = lambda_op(m, t);
        // cocycle
        CHECK(rel(lambda_op(m, t + s), lt + expm(m, t) * lambda_op(m, s)) < 1e-9);
        // e^{tM} - M Lambda_t = id
        CHECK(rel(expm(m, t) - m * lt, Mat2::identity()) < 1e-9);
        // commutation
        CHECK(rel(expm(m, s) * lt, lt * expm(m, s)) < 1e-9);
        // derivative
        const double h = 1e-6;
        const Mat2 d = (1.0 / (2 * h)) * (lambda_op(m, t + h) - lambda_op(m, t - h));
        CHECK(rel(d, expm(m, t)) < 1e-6);
        if (std::fabs(m.det()) > 1e-3) {
            CHECK(rel(lt, (expm(m, t) - Mat2::identity()) * inverse(m)) < 1e-9);
        }
    }
}

TEST_CASE("lambda_op agrees with quadrature for |t| <= 10") {
    Random rng(5);
    for (int i = 0; i < 30; ++i) {
        const Mat2 m = sample(rng, i % 3);
        const double t = rng.uniform(-10.0, 10.0);
        CHECK(rel(lambda_op(m, t), oracle::lambda_oracle(m, t, 4096)) < 1e-8);
    }
}

TEST_CASE("lambda_op stays accurate near removable singularities") {
    // eigenvalues straddling zero and tiny t
    for (double eps : {1e-3, 1e-6, 1e-9, 1e-13}) {
        const Mat2 m = Mat2::diag(eps, -eps);
        const Mat2 expect = Mat2::diag(std::expm1(eps) / eps, -std::expm1(-eps) / eps);
        CHECK(rel(lambda_op(m, 1.0), expect) < 1e-14);
    }
    const Mat2 big{2.0, 0.5, 0.0, 1e-10};
    CHECK(rel(lambda_op(big, 2.0), oracle::lambda_oracle(big, 2.0, 4096)) < 1e-12);
}
