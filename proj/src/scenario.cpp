#include "ars3d/scenario.hpp"

#include "ars3d/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ars3d {

using json = nlohmann::ordered_json;

bool operator==(const ScenarioTolerances& a, const ScenarioTolerances& b) {
    return a.constraint == b.constraint && a.locus == b.locus && a.zero_scan == b.zero_scan;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError("field '" + field + "': " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) fail(where.empty() ? k : where + "." + k, "unknown field");
    }
}

const json& member(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) fail(where.empty() ? key : where + "." + key, "missing");
    return j.at(key);
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

template <std::size_t N>
std::array<double, N> numbers(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != N) fail(field, "expected an array of " + std::to_string(N) + " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(j[i], field + "[" + std::to_string(i) + "]");
    return out;
}

Mat2 matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) fail(field, "expected a 2x2 array");
    const auto r0 = numbers<2>(j[0], field + "[0]");
    const auto r1 = numbers<2>(j[1], field + "[1]");
    return {r0[0], r0[1], r1[0], r1[1]};
}

json to_json(const Mat2& m) { return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})}); }

std::string position(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON at " + position(text, e.byte));
    }
    if (!j.is_object()) throw ParseError("a scenario must be a JSON object");
    only_keys(j, "", {"theta", "xi", "A", "delta", "tolerances"});

    Scenario s;
    const json& th = member(j, "", "theta");
    if (!th.is_object()) fail("theta", "expected an object");
    only_keys(th, "theta", {"kind", "lambda"});
    const json& kind = member(th, "theta", "kind");
    if (!kind.is_string()) fail("theta.kind", "expected a string");
    s.theta_kind = kind.get<std::string>();
    if (s.theta_kind != "jordan" && s.theta_kind != "diagonal" && s.theta_kind != "complex") {
        fail("theta.kind", "expected \"jordan\", \"diagonal\" or \"complex\", got \"" + s.theta_kind + "\"");
    }
    if (th.contains("lambda")) s.theta_lambda = number(th.at("lambda"), "theta.lambda");

    const auto xi = numbers<2>(member(j, "", "xi"), "xi");
    s.xi = {xi[0], xi[1]};
    s.a = matrix(member(j, "", "A"), "A");

    const json& delta = member(j, "", "delta");
    if (!delta.is_object()) fail("delta", "expected an object");
    only_keys(delta, "delta", {"basis", "gram"});
    const json& basis = member(delta, "delta", "basis");
    if (!basis.is_array() || basis.size() != 2) fail("delta.basis", "expected two [sigma, u1, u2] rows");
    s.basis[0] = numbers<3>(basis[0], "delta.basis[0]");
    s.basis[1] = numbers<3>(basis[1], "delta.basis[1]");
    if (delta.contains("gram")) s.gram = matrix(delta.at("gram"), "delta.gram");

    if (j.contains("tolerances")) {
        const json& tol = j.at("tolerances");
        if (!tol.is_object()) fail("tolerances", "expected an object");
        only_keys(tol, "tolerances", {"constraint", "locus", "zeroScan"});
        ScenarioTolerances t;
        if (tol.contains("constraint")) t.constraint = number(tol.at("constraint"), "tolerances.constraint");
        if (tol.contains("locus")) t.locus = number(tol.at("locus"), "tolerances.locus");
        if (tol.contains("zeroScan")) t.zero_scan = number(tol.at("zeroScan"), "tolerances.zeroScan");
        s.tolerances = t;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string dump_scenario(const Scenario& s) {
    json j;
    json th;
    th["kind"] = s.theta_kind;
    if (s.theta_lambda) th["lambda"] = *s.theta_lambda;
    j["theta"] = th;
    j["xi"] = json::array({s.xi.x, s.xi.y});
    j["A"] = to_json(s.a);
    json delta;
    delta["basis"] = json::array({json(s.basis[0]), json(s.basis[1])});
    if (s.gram) delta["gram"] = to_json(*s.gram);
    j["delta"] = delta;
    if (s.tolerances) {
        json t = json::object();
        if (s.tolerances->constraint) t["constraint"] = *s.tolerances->constraint;
        if (s.tolerances->locus) t["locus"] = *s.tolerances->locus;
        if (s.tolerances->zero_scan) t["zeroScan"] = *s.tolerances->zero_scan;
        j["tolerances"] = t;
    }
    return j.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << dump_scenario(s);
}

Theta scenario_theta(const Scenario& s) {
    if (s.theta_kind == "jordan") {
        if (s.theta_lambda) throw Error(ErrorCode::InvalidInput, "theta.lambda is not used by the jordan family");
        return Theta::jordan();
    }
    if (!s.theta_lambda) throw Error(ErrorCode::InvalidInput, "theta.lambda is required for " + s.theta_kind);
    return s.theta_kind == "diagonal" ? Theta::diagonal(*s.theta_lambda) : Theta::complex(*s.theta_lambda);
}

double constraint_tol(const Scenario& s) {
    return s.tolerances && s.tolerances->constraint ? *s.tolerances->constraint : kConstraintTol;
}

double locus_tol(const Scenario& s) { return s.tolerances && s.tolerances->locus ? *s.tolerances->locus : 1e-9; }

double zero_tol(const Scenario& s) {
    return s.tolerances && s.tolerances->zero_scan ? *s.tolerances->zero_scan : 1e-10;
}

LinearField scenario_field(const Scenario& s) {
    return LinearField::make(scenario_theta(s), s.xi, s.a, constraint_tol(s));
}

Distribution scenario_distribution(const Scenario& s) {
    const auto& b = s.basis;
    return Distribution::make({b[0][0], {b[0][1], b[0][2]}}, {b[1][0], {b[1][1], b[1][2]}},
                              s.gram.value_or(Mat2::identity()));
}

SimpleARS scenario_ars(const Scenario& s) {
    return SimpleARS::make(scenario_field(s), scenario_distribution(s));
}

Scenario example_43_scenario(double a, double b) {
    Scenario s;
    s.theta_kind = "complex";
    s.theta_lambda = 0.0;
    s.xi = {a, b};
    s.a = Mat2::zero();
    s.basis = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
    return s;
}

Scenario example_44_scenario() {
    Scenario s;
    s.theta_kind = "jordan";
    s.xi = {1.0, 3.0};
    s.a = Mat2{2.0, 1.0, 0.0, 2.0};
    s.basis = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
    return s;
}

}  // namespace ars3d
