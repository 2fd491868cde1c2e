#pragma once

// Seeded generators of valid objects, shared by the property suites and tests.

#include "ars3d/ars.hpp"
#include "ars3d/group.hpp"
#include "ars3d/symmetry.hpp"

#include <cstdint>
#include <random>

namespace ars3d {

class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }

    Vec2 vec(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }
    Mat2 mat(double r = 1.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
    GroupElement element(double t_range = 2.0, double v_range = 2.0) {
        const double t = uniform(-t_range, t_range);
        return {t, vec(v_range)};
    }
    AlgebraElement algebra(double r = 1.0) {
        const double a = uniform(-r, r);
        return {a, vec(r)};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

enum class Family { Jordan, Diagonal, Complex };

inline constexpr Family kFamilies[] = {Family::Jordan, Family::Diagonal, Family::Complex};

const char* to_string(Family f);

Theta random_theta(Random& rng, Family family);
Theta random_theta(Random& rng);

/// A matrix commuting with theta: alpha I + beta theta, or arbitrary when theta = id.
Mat2 random_commuting(Random& rng, const Theta& theta);
/// Same, redrawn until |det| >= min_det.
Mat2 random_invertible_commuting(Random& rng, const Theta& theta, double min_det = 0.1);
/// A rank-one matrix commuting with theta; throws InvalidInput for complex theta.
Mat2 random_rank_one_commuting(Random& rng, const Theta& theta);

LinearField random_field(Random& rng, const Theta& theta);

/// Includes eps = -1 with probability 1/2 whenever tr theta = 0.
Automorphism random_automorphism(Random& rng, const Theta& theta);

Distribution random_distribution(Random& rng);

/// Retries until the triple passes every construction check.
SimpleARS random_ars(Random& rng, const Theta& theta);
SimpleARS random_ars_with(Random& rng, const Theta& theta, const Mat2& a);

}  // namespace ars3d
