#include "doctest.h"

#include "ars3d/error.hpp"
#include "ars3d/oracles.hpp"
#include "ars3d/random.hpp"
#include "ars3d/zeros.hpp"

#include <numbers>

using namespace ars3d;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<double> times(const std::vector<Zero>& zs) {
    std::vector<double> out;
    for (const Zero& z : zs) out.push_back(z.t);
    return out;
}
}  // namespace

TEST_CASE("constant MatExpForm with u an eigenvector orthogonal to v") {
    const ZeroReport r = zero_classify(MatExpForm{Mat2::diag(1.0, -1.0), Vec2::e1(), Vec2::e2(), 5.0}, -10, 10);
    CHECK(r.classification == ZeroClass::ConstantNonzero);
    CHECK(r.lemma_case == LemmaCase::RealConstantTau);
    CHECK(r.bounded);
    const ZeroReport z = zero_classify(MatExpForm{Mat2::diag(1.0, -1.0), Vec2::e1(), Vec2::e2(), 0.0}, -1, 1);
    CHECK(z.classification == ZeroClass::IdenticallyZero);
}

TEST_CASE("ExpPoly with two zeros") {
    const ZeroReport r = zero_classify(ExpPoly{1.0, 1.0, -3.0, 1.0, -1.0}, -5, 5);
    REQUIRE(r.classification == ZeroClass::FiniteZeros);
    CHECK(r.max_count == 2);
    REQUIRE(r.zeros.size() == 2);
    CHECK(r.zeros[0].t == doctest::Approx(-std::acosh(1.5)).epsilon(1e-14));
    CHECK(r.zeros[1].t == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
    CHECK(r.zeros[0].sign_change);
    CHECK_FALSE(r.bounded);
    CHECK(r.lemma_case == LemmaCase::NotApplicable);
    // the window clips but the global list does not
    const ZeroReport c = zero_classify(ExpPoly{1.0, 1.0, -3.0, 1.0, -1.0}, 0, 5);
    CHECK(c.zeros.size() == 1);
    CHECK(c.all_zeros.size() == 2);
}

TEST_CASE("cosine MatExpForm") {
    const ZeroReport r = zero_classify(MatExpForm{Mat2{0.0, -1.0, 1.0, 0.0}, Vec2::e1(), Vec2::e1(), 0.0}, 0, 4 * pi);
    CHECK(r.classification == ZeroClass::InfiniteDiscrete);
    CHECK(r.lemma_case == LemmaCase::ComplexBounded);
    CHECK(r.bounded);
    CHECK(r.periodic);
    CHECK(r.period == doctest::Approx(2 * pi));
    const auto t = times(r.zeros);
    REQUIRE(t.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(t[k] - (pi / 2 + k * pi)) < 1e-12);
}

TEST_CASE("ExpLinear with b = 0 can have two zeros") {
    const ZeroReport r = zero_classify(ExpLinear{1.0, 0.0, 0.1, 1.0}, -10, 10);
    CHECK(r.classification == ZeroClass::FiniteZeros);
    CHECK(r.max_count == 2);
    REQUIRE(r.zeros.size() == 2);
    for (const Zero& z : r.zeros) CHECK(std::fabs(z.t * std::exp(z.t) + 0.1) < 1e-15);
}

TEST_CASE("growing ExpCos has infinitely many zeros even when |c| > 1") {
    const ZeroReport r = zero_classify(ExpCos{1.0, 0.3, 0.2, 5.0, 1.0}, -5, 30);
    CHECK(r.classification == ZeroClass::InfiniteDiscrete);
    CHECK_FALSE(r.bounded);
    CHECK_FALSE(r.periodic);
    CHECK(r.zeros.size() > 5);
    const ZeroReport flat = zero_classify(ExpCos{1.0, 0.0, 0.2, 1.5, 1.0}, -50, 50);
    CHECK(flat.classification == ZeroClass::NoZeros);
    CHECK(flat.bounded);
}

TEST_CASE("double roots are flagged") {
    // cos t - 1 touches zero at 2 pi k
    const ZeroReport r = zero_classify(ExpCos{1.0, 0.0, 0.0, -1.0, 1.0}, -1, 13);
    REQUIRE(r.zeros.size() == 3);
    for (const Zero& z : r.zeros) CHECK_FALSE(z.sign_change);
    CHECK(std::fabs(r.zeros[1].t - 2 * pi) < 1e-7);

    // (t - 1)^2-like: e^t - e t touches at t = 1
    const ZeroReport q = zero_classify(ExpAffine{1.0, 1.0, -std::exp(1.0), 0.0}, -3, 3);
    REQUIRE(q.zeros.size() == 1);
    CHECK_FALSE(q.zeros[0].sign_change);
    CHECK(q.zeros[0].t == doctest::Approx(1.0));
}

TEST_CASE("affine and exp-affine shapes") {
    const ZeroReport a = zero_classify(Affine{2.0, 2.0}, -3, 3);
    REQUIRE(a.zeros.size() == 1);
    CHECK(a.zeros[0].t == -1.0);
    CHECK(a.max_count == 1);
    CHECK(zero_classify(Affine{0.0, 0.0}, -1, 1).classification == ZeroClass::IdenticallyZero);
    CHECK(zero_classify(Affine{1e-14, 1.0}, -1, 1).classification == ZeroClass::ConstantNonzero);

    const ZeroReport e = zero_classify(ExpAffine{1.0, -1.0, 1.0, -3.0}, -10, 10);
    CHECK(e.classification == ZeroClass::FiniteZeros);
    CHECK(e.zeros.size() == 2);
}

TEST_CASE("window endpoints") {
    // sin t on [0, 2 pi]: both endpoints and pi
    const ZeroReport r = zero_classify(ExpCos{1.0, 0.0, -pi / 2, 0.0, 1.0}, 0, 2 * pi);
    const auto t = times(r.zeros);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == 0.0);
    CHECK(std::fabs(t[1] - pi) < 1e-15);
    CHECK(std::fabs(t[2] - 2 * pi) < 1e-15);
    CHECK_THROWS_AS(zero_classify(Affine{1.0, 0.0}, 1, 0), Error);
}

TEST_CASE("MatExpForm reductions match direct evaluation") {
    Random rng(41);
    for (int i = 0; i < 300; ++i) {
        const Mat2 a = rng.mat();
        const MatExpForm m{a, rng.vec(), rng.vec(), rng.uniform(-1, 1)};
        const Reduction r = reduce(m);
        for (double t : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
            const double direct = evaluate(m, t);
            CHECK(std::fabs(evaluate(r.curve, t) - direct) < 1e-9 * std::max(1.0, std::fabs(direct)));
        }
    }
    const Reduction j = reduce(MatExpForm{Mat2{1.0, 1.0, 0.0, 1.0}, Vec2::e2(), Vec2::e1(), 0.0});
    CHECK(std::holds_alternative<ExpLinear>(j.curve));
    CHECK(j.lemma_case == LemmaCase::RealNonConstant);
}

TEST_CASE("zero counts match a dense sign scan") {
    Random rng(42);
    for (int i = 0; i < 300; ++i) {
        ScalarCurve c;
        switch (i % 3) {
            case 0:
                c = ExpPoly{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.1, 1.0),
                            rng.uniform(-1.0, -0.1)};
                break;
            case 1:
                c = ExpLinear{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
                break;
            default:
                c = ExpCos{rng.uniform(0.1, 1), rng.uniform(-0.3, 0.3), rng.uniform(-pi, pi), rng.uniform(-1.5, 1.5),
                           1.0};
        }
        const ZeroReport r = zero_classify(c, -20, 20);
        const auto scan = oracle::sign_scan([&](double t) { return evaluate(c, t); }, -20, 20, 10000);
        CHECK(r.zeros.size() == scan.size());
        if (r.max_count >= 0) CHECK(static_cast<int>(r.all_zeros.size()) <= r.max_count);
        for (const Zero& z : r.zeros) CHECK(std::fabs(evaluate(c, z.t)) < 1e-9);
    }
}
