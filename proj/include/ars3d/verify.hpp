#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ars3d {

/// One row of a property-suite report.
struct PropertyResult {
    std::string name;
    std::size_t cases{0};
    double max_residual{0.0};
    double tolerance{0.0};
    bool pass{true};
    /// The smallest failing input found, empty on success.
    std::string counterexample;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> rows;
    double seconds{0.0};

    bool pass() const;
};

struct VerifyOptions {
    std::uint64_t seed{42};
    /// Random cases per property; smaller oracle-heavy checks scale from this.
    int cases{1000};
    /// Negative control: runs the flow checks with a non-commuting A through
    /// the unchecked flow formula, which must make the symmetry suite fail.
    bool inject_fault{false};
};

const std::vector<std::string_view>& suite_names();

/// Runs one named suite, or every suite for "all". Throws InvalidInput for
/// an unknown name.
std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& opt);

/// Accumulates residuals for one property and keeps the smallest failing case.
class PropertyTracker {
public:
    PropertyTracker(std::string name, double tolerance) : row_{std::move(name), 0, 0.0, tolerance, true, {}} {}

    /// size orders failing cases; describe is only called for a new smallest failure.
    void record(double residual, double size, const std::function<std::string()>& describe);
    void record(double residual) { record(residual, 0.0, [] { return std::string("(no input)"); }); }
    const PropertyResult& result() const { return row_; }

private:
    PropertyResult row_;
    double best_size_{0.0};
};

}  // namespace ars3d
