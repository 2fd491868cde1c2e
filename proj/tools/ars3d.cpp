#include "ars3d/crossing.hpp"
#include "ars3d/csv.hpp"
#include "ars3d/error.hpp"
#include "ars3d/locus.hpp"
#include "ars3d/scenario.hpp"
#include "ars3d/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

using namespace ars3d;

namespace {

enum Exit { kOk = 0, kParse = 1, kInvalid = 2, kVerifyFailed = 3, kUsage = 64 };

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x + 0.0);  // no "-0"
    return buf;
}

std::string point_str(const GroupElement& g) {
    return "(" + fmt(g.t) + ", " + fmt(g.v.x) + ", " + fmt(g.v.y) + ")";
}

/// Writes to path, or stdout when path is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    fn(out);
}

std::string locus_summary(const LocusDescription& d) {
    std::string s = std::string(shape_name(d)) + ", " + (d.connected ? "connected" : "disconnected");
    if (d.component_count < 0) {
        s += ", infinitely many components";
    } else {
        s += ", " + std::to_string(d.component_count) + " component(s)";
    }
    if (const auto* p = std::get_if<PlaneStack>(&d.shape)) {
        s += "\n  planes in [" + fmt(d.t_min) + ", " + fmt(d.t_max) + "]:";
        for (double t : p->times) s += " " + fmt(t);
        if (p->periodic) s += "\n  period: " + fmt(p->period);
        if (p->degenerate_rank_one) s += "\n  rank-one A with A w1 inside l_Delta: F depends on t alone";
    } else if (const auto* i = std::get_if<Imap>(&d.shape)) {
        s += "\n  w1 = (" + fmt(i->w1.x) + ", " + fmt(i->w1.y) + "), w2 = (" + fmt(i->w2.x) + ", " +
             fmt(i->w2.y) + "), beta = " + fmt(i->beta);
    }
    return s;
}

int cmd_validate(const std::string& path) {
    const Scenario sc = load_scenario(path);
    const SimpleARS sigma = scenario_ars(sc);
    const LinearField& x = sigma.field();
    const Mat2 th = x.theta().matrix();
    const double comm = max_abs(x.a() * th - th * x.a());
    const LocusFunction f(sigma);
    const GroupElement& w = sigma.witness();
    const LocusDescription d = describe_locus(f, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi);

    std::cout << "scenario: " << path << "\n"
              << "theta: " << sc.theta_kind << (sc.theta_lambda ? " lambda=" + fmt(*sc.theta_lambda) : "") << "\n"
              << "derivation: ok (|A theta - theta A| = " << fmt(comm) << ")\n"
              << "LARC: " << to_string(sigma.larc_reason()) << "\n"
              << "l_Delta: direction (" << fmt(sigma.line().direction.x) << ", " << fmt(sigma.line().direction.y)
              << "), normal (" << fmt(sigma.line().normal.x) << ", " << fmt(sigma.line().normal.y) << ")\n"
              << "witness: " << point_str(w) << " F = " << fmt(locus_value(f, w)) << "\n"
              << "locus: " << locus_summary(d) << "\n";
    return kOk;
}

int cmd_locus(const std::string& path, double t_min, double t_max, int samples, double extent,
              const std::string& out_path) {
    const Scenario sc = load_scenario(path);
    const SimpleARS sigma = scenario_ars(sc);
    const LocusFunction f(sigma);
    const LocusDescription d = describe_locus(f, t_min, t_max);
    const std::vector<LocusSample> pts = locus_sample(f, t_min, t_max, samples, extent);
    const double tol = locus_tol(sc);
    for (const LocusSample& s : pts) {
        if (!(std::fabs(s.residual) <= tol * (1.0 + norm(s.g.v)))) {
            throw Error(ErrorCode::SampleNotOnLocus, "residual " + fmt(s.residual) + " at " + point_str(s.g));
        }
    }
    with_output(out_path, [&](std::ostream& o) { write_locus_csv(o, pts, std::holds_alternative<PlaneStack>(d.shape)); });
    if (!out_path.empty() && out_path != "-") {
        std::cout << "locus: " << locus_summary(d) << "\n"
                  << "wrote " << pts.size() << " samples to " << out_path << "\n";
    }
    return kOk;
}

struct CrossingArgs {
    std::vector<double> point;
    std::vector<double> dir;
    bool flow{false};
    double s_min{-5.0};
    double s_max{5.0};
    std::string out;
    int samples{201};
};

int cmd_crossing(const std::string& path, const CrossingArgs& a) {
    const Scenario sc = load_scenario(path);
    const SimpleARS sigma = scenario_ars(sc);
    const LocusFunction f(sigma);
    if (!(a.s_min <= a.s_max)) throw Error(ErrorCode::InvalidInput, "--s-min must not exceed --s-max");
    const GroupElement g{a.point[0], {a.point[1], a.point[2]}};
    const AlgebraElement y = a.flow ? AlgebraElement{} : AlgebraElement{a.dir[0], {a.dir[1], a.dir[2]}};
    const CrossingProfile p = a.flow ? flow_crossing(sigma, g, a.s_min, a.s_max, zero_tol(sc))
                                     : exp_curve_profile(sigma, g, y, a.s_min, a.s_max, zero_tol(sc));

    auto along = [&](double s) {
        return a.flow ? flow(sigma.field(), s, g) : mul(sigma.theta(), g, group_exp(sigma.theta(), AlgebraElement{s * y.a, s * y.w}));
    };
    const double band = locus_tol(sc);

    std::cout << "curve: " << (a.flow ? "flow of X" : "g exp(sY), Y = (" + fmt(y.a) + ", " + fmt(y.w.x) + ", " +
                                                           fmt(y.w.y) + ")")
              << " from " << point_str(g) << ", s in [" << fmt(a.s_min) << ", " << fmt(a.s_max) << "]\n"
              << "start: " << to_string(p.start) << "\n"
              << "behavior: " << to_string(p.behavior) << "\n"
              << "classification: " << to_string(p.report.classification) << "\n";
    if (p.best_effort) std::cout << "note: A = 0, no crossing theorem applies; result is best effort\n";
    if (p.behavior == Behavior::RemainsInLocus) {
        std::cout << "the curve stays on the singular locus\n";
    } else {
        std::cout << "delta: " << (std::isfinite(p.delta) ? fmt(p.delta) : std::string("inf")) << "\n"
                  << "zeros: " << p.zeros.size() << "\n";
        for (std::size_t i = 0; i < p.zeros.size(); ++i) {
            const double s = p.zeros[i].t;
            // step halfway to the neighbouring zero, never further than 1e-3
            double eps = 1e-3;
            if (i > 0) eps = std::min(eps, 0.5 * (s - p.zeros[i - 1].t));
            if (i + 1 < p.zeros.size()) eps = std::min(eps, 0.5 * (p.zeros[i + 1].t - s));
            // labels read moving away from s = 0
            const double sign = s < 0.0 ? -1.0 : 1.0;
            const Component before = component_of(f, along(s - sign * eps), band);
            const Component after = component_of(f, along(s + sign * eps), band);
            std::cout << "  s = " << fmt(s) << "  sign-change: " << (p.zeros[i].sign_change ? "yes" : "no") << "  "
                      << to_string(before) << " -> " << to_string(after) << "\n";
        }
    }
    if (!a.out.empty()) {
        with_output(a.out, [&](std::ostream& o) {
            csv_row(o, {"s", "t", "x", "y", "F"});
            for (int i = 0; i < a.samples; ++i) {
                const double s = a.samples == 1 ? a.s_min
                                                : a.s_min + (a.s_max - a.s_min) * i / (a.samples - 1);
                const GroupElement h = along(s);
                csv_row(o, {csv_number(s), csv_number(h.t), csv_number(h.v.x), csv_number(h.v.y),
                            csv_number(locus_value(f, h))});
            }
        });
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
    const std::vector<SuiteResult> results = run_suites(suite, opt);
    bool ok = true;
    std::printf("%-10s %-56s %8s %12s %10s  %s\n", "suite", "property", "cases", "max-resid", "tol", "result");
    for (const SuiteResult& r : results) {
        for (const PropertyResult& row : r.rows) {
            std::string name = row.name;
            if (name.rfind(r.suite + ": ", 0) == 0) name.erase(0, r.suite.size() + 2);
            std::printf("%-10s %-56s %8zu %12.3e %10.1e  %s\n", r.suite.c_str(), name.c_str(), row.cases,
                        row.max_residual, row.tolerance, row.pass ? "PASS" : "FAIL");
        }
        ok = ok && r.pass();
    }
    for (const SuiteResult& r : results) {
        std::printf("%s: %.2f s\n", r.suite.c_str(), r.seconds);
        for (const PropertyResult& row : r.rows) {
            if (!row.pass) std::printf("counterexample [%s/%s]: %s\n", r.suite.c_str(), row.name.c_str(),
                                       row.counterexample.c_str());
        }
    }
    std::printf("seed %llu, %d cases: %s\n", static_cast<unsigned long long>(opt.seed), opt.cases,
                ok ? "all properties pass" : "FAILED");
    return ok ? kOk : kVerifyFailed;
}

int example_43(const std::filesystem::path& dir, double a, double b) {
    const Scenario sc = example_43_scenario(a, b);
    const LocusFunction f(scenario_ars(sc));
    const double t_min = 0.0, t_max = 4.0 * std::numbers::pi;
    const LocusDescription d = describe_locus(f, t_min, t_max);
    const auto* stack = std::get_if<PlaneStack>(&d.shape);
    if (!stack) throw Error(ErrorCode::WrongShape, "expected a plane stack");

    // b sin t + a cos t = a on every plane
    double worst = 0.0;
    for (double t : stack->times) worst = std::max(worst, std::fabs(b * std::sin(t) + a * std::cos(t) - a));
    const double scale = std::max(1.0, std::hypot(a, b));

    std::filesystem::create_directories(dir);
    save_scenario(sc, (dir / "example_4_3.json").string());
    const auto pts = locus_sample(f, t_min, t_max, 20);
    with_output((dir / "example_4_3_locus.csv").string(), [&](std::ostream& o) { write_locus_csv(o, pts, true); });

    std::cout << "example 4.3: theta = Complex(0), xi = (" << fmt(a) << ", " << fmt(b) << "), A = 0\n"
              << "gamma = " << fmt(std::atan2(b, a)) << "\n"
              << "locus: " << locus_summary(d) << "\n"
              << "closed form b sin t + a cos t - a: max residual " << fmt(worst) << "\n"
              << "wrote " << (dir / "example_4_3.json").string() << " and " << (dir / "example_4_3_locus.csv").string()
              << "\n";
    if (!(worst <= 1e-10 * scale)) throw Error(ErrorCode::SampleNotOnLocus, "closed-form residual too large");
    return kOk;
}

int example_44(const std::filesystem::path& dir) {
    const Scenario sc = example_44_scenario();
    const LocusFunction f(scenario_ars(sc));
    const LocusDescription d = describe_locus(f, -2.0, 2.0);
    const auto pts = locus_sample(f, -2.0, 2.0, 50);
    // 2y = 3(1 - e^t)
    double worst = 0.0;
    for (const LocusSample& s : pts) worst = std::max(worst, std::fabs(2.0 * s.g.v.y - 3.0 * (1.0 - std::exp(s.g.t))));

    std::filesystem::create_directories(dir);
    save_scenario(sc, (dir / "example_4_4.json").string());
    with_output((dir / "example_4_4_locus.csv").string(), [&](std::ostream& o) { write_locus_csv(o, pts, false); });

    std::cout << "notice: Example 4.4 is reproduced with the Jordan theta [[1,1],[0,1]]. The rotation theta\n"
                 "        listed with it contradicts its bracket [(1,0),(0,e1)] = (0,e1) and its Lambda_t.\n"
              << "example 4.4: xi = (1, 3), A = [[2,1],[0,2]]\n"
              << "locus: " << locus_summary(d) << "\n"
              << "closed form 2y - 3(1 - e^t): max residual " << fmt(worst) << " over " << pts.size() << " samples\n"
              << "wrote " << (dir / "example_4_4.json").string() << " and " << (dir / "example_4_4_locus.csv").string()
              << "\n";
    if (!(worst <= 1e-10)) throw Error(ErrorCode::SampleNotOnLocus, "closed-form residual too large");
    return kOk;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ARS3D_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        std::cerr << "warning: ignoring non-numeric ARS3D_SEED\n";
    }
    return 42;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular loci and crossings of almost-Riemannian structures on 3D solvable Lie groups"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check a scenario and print its verdict");
    validate->add_option("path", path, "Scenario JSON")->required();

    double t_min = -2.0, t_max = 2.0, extent = 2.0;
    int samples = 50;
    std::string out;
    auto* locus = app.add_subcommand("locus", "Sample the singular locus to CSV");
    locus->add_option("path", path, "Scenario JSON")->required();
    locus->add_option("--t-min", t_min, "Window start")->capture_default_str();
    locus->add_option("--t-max", t_max, "Window end")->capture_default_str();
    locus->add_option("--samples", samples, "Grid resolution per axis (at least 2)")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));
    locus->add_option("--extent", extent, "Half-width of the in-plane parameter range")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    locus->add_option("--out", out, "Output CSV (stdout when omitted)");

    CrossingArgs cross;
    auto* crossing = app.add_subcommand("crossing", "Zeros of F along an exponential curve or the flow");
    crossing->add_option("path", path, "Scenario JSON")->required();
    crossing->add_option("--point", cross.point, "Base point t,x,y")->required()->delimiter(',')->expected(3);
    auto* dir_opt = crossing->add_option("--dir", cross.dir, "Direction a,w1,w2")->delimiter(',')->expected(3);
    auto* flow_opt = crossing->add_flag("--flow", cross.flow, "Follow the flow of X instead");
    dir_opt->excludes(flow_opt);
    crossing->add_option("--s-min", cross.s_min, "Parameter window start")->capture_default_str();
    crossing->add_option("--s-max", cross.s_max, "Parameter window end")->capture_default_str();
    crossing->add_option("--out", cross.out, "Optional CSV of F along the curve");
    crossing->add_option("--samples", cross.samples, "Rows in the optional CSV")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));

    std::string suite = "all";
    VerifyOptions vopt;
    vopt.seed = default_seed();
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    std::vector<std::string> suites{"all"};
    for (auto s : suite_names()) suites.emplace_back(s);
    verify->add_option("--suite", suite, "Suite to run")->capture_default_str()->check(CLI::IsMember(suites));
    verify->add_option("--seed", vopt.seed, "RNG seed (default from ARS3D_SEED, else 42)")->capture_default_str();
    verify->add_option("--cases", vopt.cases, "Random cases per property")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", vopt.inject_fault, "Negative control with a non-commuting A");

    std::string which;
    std::string out_dir = ".";
    double ea = 1.0, eb = 1.0;
    auto* example = app.add_subcommand("example", "Reproduce a worked example (4.3 or 4.4)");
    example->add_option("which", which, "4.3 or 4.4")->required()->check(CLI::IsMember({"4.3", "4.4"}));
    example->add_option("--out-dir", out_dir, "Directory for the scenario and CSV")->capture_default_str();
    example->add_option("--a", ea, "xi_1 for 4.3")->capture_default_str();
    example->add_option("--b", eb, "xi_2 for 4.3")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (crossing->parsed() && !cross.flow && cross.dir.empty()) {
        std::cerr << "crossing: one of --dir or --flow is required\n";
        return kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (locus->parsed()) return cmd_locus(path, t_min, t_max, samples, extent, out);
        if (crossing->parsed()) return cmd_crossing(path, cross);
        if (verify->parsed()) return cmd_verify(suite, vopt);
        if (example->parsed()) return which == "4.3" ? example_43(out_dir, ea, eb) : example_44(out_dir);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
