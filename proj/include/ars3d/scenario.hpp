#pragma once

#include "ars3d/ars.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace ars3d {

/// Malformed scenario text: bad JSON or a field of the wrong type/shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScenarioTolerances {
    std::optional<double> constraint;
    std::optional<double> locus;
    std::optional<double> zero_scan;
};

/// A scenario file as written; optional fields remember whether they were present.
struct Scenario {
    std::string theta_kind;  // "jordan", "diagonal" or "complex"
    std::optional<double> theta_lambda;
    Vec2 xi;
    Mat2 a;
    std::array<std::array<double, 3>, 2> basis{};  // rows (sigma, u1, u2)
    std::optional<Mat2> gram;
    std::optional<ScenarioTolerances> tolerances;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

bool operator==(const ScenarioTolerances& a, const ScenarioTolerances& b);

/// Throws ParseError naming the line/column or the offending field.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string dump_scenario(const Scenario& s);
void save_scenario(const Scenario& s, const std::string& path);

/// Throws Error with the first failed invariant.
Theta scenario_theta(const Scenario& s);
LinearField scenario_field(const Scenario& s);
Distribution scenario_distribution(const Scenario& s);
SimpleARS scenario_ars(const Scenario& s);

double constraint_tol(const Scenario& s);
double locus_tol(const Scenario& s);
double zero_tol(const Scenario& s);

/// The two worked examples as scenarios; 4.4 uses the Jordan theta.
Scenario example_43_scenario(double a = 1.0, double b = 1.0);
Scenario example_44_scenario();

}  // namespace ars3d
