#include "ars3d/random.hpp"

#include "ars3d/error.hpp"

#include <cmath>

namespace ars3d {

const char* to_string(Family f) {
    switch (f) {
        case Family::Jordan: return "jordan";
        case Family::Diagonal: return "diagonal";
        case Family::Complex: return "complex";
    }
    return "unknown";
}

Theta random_theta(Random& rng, Family family) {
    switch (family) {
        case Family::Jordan: return Theta::jordan();
        case Family::Diagonal: {
            // the endpoints +-1 and 0 are the special cases; hit them often
            const int pick = rng.integer(0, 5);
            if (pick == 0) return Theta::diagonal(1.0);
            if (pick == 1) return Theta::diagonal(-1.0);
            if (pick == 2) return Theta::diagonal(0.0);
            return Theta::diagonal(rng.uniform(-1.0, 1.0));
        }
        case Family::Complex: {
            if (rng.integer(0, 2) == 0) return Theta::complex(0.0);
            return Theta::complex(rng.uniform(-1.0, 1.0));
        }
    }
    return Theta::jordan();
}

Theta random_theta(Random& rng) { return random_theta(rng, kFamilies[rng.integer(0, 2)]); }

Mat2 random_commuting(Random& rng, const Theta& theta) {
    if (theta.matrix() == Mat2::identity()) return rng.mat();
    const double alpha = rng.uniform(-1.0, 1.0);
    const double beta = rng.uniform(-1.0, 1.0);
    return alpha * Mat2::identity() + beta * theta.matrix();
}

Mat2 random_rank_one_commuting(Random& rng, const Theta& theta) {
    double beta = rng.uniform(0.3, 1.0);
    if (rng.coin()) beta = -beta;
    switch (theta.kind()) {
        case Theta::Kind::Jordan: return beta * (theta.matrix() - Mat2::identity());
        case Theta::Kind::Diagonal: {
            if (theta.lambda() == 1.0) {
                // any rank-one matrix commutes with the identity
                const Vec2 p = normalized(rng.vec() + Vec2{0.1, 0.0});
                const Vec2 q = rng.vec() + Vec2{0.0, 0.5};
                return Mat2{beta * p.x * q.x, beta * p.x * q.y, beta * p.y * q.x, beta * p.y * q.y};
            }
            return rng.coin() ? Mat2::diag(beta, 0.0) : Mat2::diag(0.0, beta);
        }
        case Theta::Kind::Complex: break;
    }
    throw Error(ErrorCode::InvalidInput, "no rank-one matrix commutes with a complex theta");
}

Mat2 random_invertible_commuting(Random& rng, const Theta& theta, double min_det) {
    for (;;) {
        const Mat2 a = random_commuting(rng, theta);
        if (std::fabs(a.det()) >= min_det) return a;
    }
}

LinearField random_field(Random& rng, const Theta& theta) {
    return LinearField::make(theta, rng.vec(), random_commuting(rng, theta));
}

Automorphism random_automorphism(Random& rng, const Theta& theta) {
    const Vec2 eta = rng.vec();
    const bool flip = std::fabs(theta.matrix().trace()) == 0.0 && rng.coin();
    for (;;) {
        Mat2 p;
        if (!flip) {
            p = random_commuting(rng, theta);
        } else if (theta.kind() == Theta::Kind::Diagonal) {
            p = Mat2{0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), 0.0};
        } else {
            const double a = rng.uniform(-1.0, 1.0);
            const double b = rng.uniform(-1.0, 1.0);
            p = Mat2{a, b, b, -a};
        }
        if (std::fabs(p.det()) >= 0.2) return Automorphism::make(theta, flip ? -1 : 1, p, eta);
    }
}

Distribution random_distribution(Random& rng) {
    for (;;) {
        const AlgebraElement b1 = rng.algebra();
        const AlgebraElement b2 = rng.algebra();
        const Mat2 l{rng.uniform(0.5, 1.5), 0.0, rng.uniform(-0.5, 0.5), rng.uniform(0.5, 1.5)};
        const Mat2 gram = l * l.transposed();
        try {
            const Distribution d = Distribution::make(b1, b2, gram);
            if (std::fabs(b1.a * b2.w.x - b2.a * b1.w.x) + std::fabs(b1.a * b2.w.y - b2.a * b1.w.y) < 0.1) {
                continue;  // nearly {0} x R^2
            }
            return d;
        } catch (const Error&) {
        }
    }
}

SimpleARS random_ars_with(Random& rng, const Theta& theta, const Mat2& a) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        try {
            const LinearField x = LinearField::make(theta, rng.vec(), a);
            return SimpleARS::make(x, random_distribution(rng));
        } catch (const Error&) {
        }
    }
    throw Error(ErrorCode::InvalidInput, "could not build a simple ARS with the requested A");
}

SimpleARS random_ars(Random& rng, const Theta& theta) {
    for (;;) {
        try {
            return SimpleARS::make(random_field(rng, theta), random_distribution(rng));
        } catch (const Error&) {
        }
    }
}

}  // namespace ars3d
