// feucheck: exact certification of the nine-point circle tangencies from the
// command line. Vertex coordinates are exact expressions (integers, p/q,
// sqrt(n), sums and products thereof); every reported value carries its
// exact form alongside a decimal approximation.

#include <feuerbach/feuerbach.hpp>

#include <array>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace feuerbach;

namespace {

constexpr const char* kUsage =
    "usage: feucheck <certify|centers|map-trace|conic> [--json] [--svg PATH]\n"
    "                [--digits N] [--point x y z] [--target NAME]\n"
    "                [Ax Ay Bx By Cx Cy]\n"
    "\n"
    "Coordinates are exact expressions: 3, -1/2, sqrt(13), (1+sqrt(5))/2.\n"
    "With no coordinates, triangles are read from stdin, one per line, and\n"
    "one compact JSON report is written per line.\n";

struct Options {
    std::string mode;
    bool json = false;
    std::string svg_path;
    int digits = 12;
    std::array<std::string, 3> point;
    bool has_point = false;
    std::string target = "all";
    std::vector<std::string> coords;
};

[[noreturn]] void usage_error(const std::string& message) {
    fail(ErrorCode::parse_error, message);
}

bool is_mode(const std::string& s) {
    return s == "certify" || s == "centers" || s == "map-trace" || s == "conic";
}

bool is_target(const std::string& s) {
    return s == "all" || s == "incircle" || s == "excircleA" || s == "excircleB" ||
           s == "excircleC";
}

Options parse_args(int argc, char** argv) {
    Options opt;
    if (argc < 2) usage_error("missing mode");
    opt.mode = argv[1];
    if (!is_mode(opt.mode)) usage_error("unknown mode '" + opt.mode + "'");

    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* flag) -> std::string {
            if (i + 1 >= argc) usage_error(std::string(flag) + " expects a value");
            return argv[++i];
        };
        if (arg == "--json") {
            opt.json = true;
        } else if (arg == "--svg") {
            opt.svg_path = next("--svg");
        } else if (arg == "--digits") {
            const std::string v = next("--digits");
            size_t used = 0;
            int n = 0;
            try {
                n = std::stoi(v, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != v.size() || n < 1 || n > 1000)
                usage_error("--digits expects an integer in [1, 1000], got '" + v + "'");
            opt.digits = n;
        } else if (arg == "--point") {
            for (auto& c : opt.point) c = next("--point");
            opt.has_point = true;
        } else if (arg == "--target") {
            opt.target = next("--target");
            if (!is_target(opt.target)) usage_error("unknown target '" + opt.target + "'");
        } else if (arg.rfind("--", 0) == 0) {
            usage_error("unknown option '" + arg + "'");
        } else {
            opt.coords.push_back(arg);
        }
    }

    if (!opt.coords.empty() && opt.coords.size() != 6)
        usage_error("expected 6 vertex coordinates, got " +
                    std::to_string(opt.coords.size()));
    if (!opt.svg_path.empty() && opt.mode != "certify")
        usage_error("--svg is only available in certify mode");
    if (!opt.svg_path.empty() && opt.coords.empty())
        usage_error("--svg needs vertex coordinates on the command line");
    return opt;
}

std::string message_of(const Error& e) {
    std::string s = e.what();
    const std::string prefix = std::string(error_name(e.code())) + ": ";
    if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());
    return s;
}

std::string label_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::degenerate_triangle:  return "degenerate";
    case ErrorCode::equilateral_triangle: return "equilateral";
    case ErrorCode::parse_error:          return "parse error";
    default:                              return error_name(code);
    }
}

std::string diagnostic(const Error& e) { return label_of(e.code()) + ": " + message_of(e); }

int exit_code_of(const Error& e) {
    return e.code() == ErrorCode::parse_error ? 1 : 2;
}

FieldElem parse_coord(ElemParser& parser, const std::string& token, const char* role,
                      size_t index) {
    try {
        return parser.parse(token);
    } catch (const Error& e) {
        fail(ErrorCode::parse_error,
             std::string(role) + " " + std::to_string(index + 1) + ": " + message_of(e));
    }
}

struct Run {
    TrianglePtr ctx;
    std::optional<BaryPoint> point;
};

Run build_run(const Options& opt, const std::vector<std::string>& coords) {
    ElemParser parser;
    std::array<FieldElem, 6> c = {FieldElem(0), FieldElem(0), FieldElem(0),
                                  FieldElem(0), FieldElem(0), FieldElem(0)};
    for (size_t i = 0; i < 6; ++i) c[i] = parse_coord(parser, coords[i], "coordinate", i);

    Run run;
    run.ctx = make_triangle(CartPoint{c[0], c[1]}, CartPoint{c[2], c[3]},
                            CartPoint{c[4], c[5]});
    if (opt.has_point) {
        std::array<FieldElem, 3> p = {FieldElem(0), FieldElem(0), FieldElem(0)};
        for (size_t i = 0; i < 3; ++i)
            p[i] = parse_coord(parser, opt.point[i], "point coordinate", i);
        run.point = BaryPoint(p[0], p[1], p[2]);
    }
    return run;
}

Json make_report(const Options& opt, const Run& run, bool svg) {
    if (opt.mode == "certify") {
        const FeuerbachCertificate cert = certify(run.ctx);
        Json report = certify_report(cert, opt.digits);
        if (opt.target != "all") {
            Json kept = Json::array();
            for (const Json& circle : report["circles"])
                if (circle["target"] == opt.target) kept.push_back(circle);
            report["circles"] = std::move(kept);
        }
        if (svg && !opt.svg_path.empty()) emit_svg(cert, opt.svg_path);
        return report;
    }
    const TriangleMetrics m = compute_metrics(run.ctx);
    if (opt.mode == "centers") return centers_report(m, opt.digits);
    const BaryPoint P = run.point ? *run.point : gergonne_point(m);
    if (opt.mode == "map-trace") return map_trace_report(run.ctx, P, opt.digits);
    return conic_report(m, P, opt.digits);
}

std::string show(const Json& value) {
    return value["exact"].get<std::string>() + " ~ " + value["approx"].get<std::string>();
}

std::string show_cart(const Json& p) {
    return "(" + p["u"]["exact"].get<std::string>() + ", " +
           p["v"]["exact"].get<std::string>() + ")";
}

std::string show_point(const Json& p) {
    const Json& b = p["barycentric"];
    std::string s = "[";
    for (size_t i = 0; i < 3; ++i) {
        if (i) s += " : ";
        s += b[i]["exact"].get<std::string>();
    }
    return s + "] at " + show_cart(p["cartesian"]);
}

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

void print_triangle(std::ostream& os, const Json& report) {
    const Json& t = report["triangle"];
    os << "triangle A=" << show_cart(t["A"]) << " B=" << show_cart(t["B"])
       << " C=" << show_cart(t["C"]) << "\n";
}

void print_metrics(std::ostream& os, const Json& report) {
    const Json& m = report["metrics"];
    os << "sides a = " << show(m["sides"]["a"]) << "\n"
       << "      b = " << show(m["sides"]["b"]) << "\n"
       << "      c = " << show(m["sides"]["c"]) << "\n"
       << "radii incircle = " << show(m["radii"]["incircle"])
       << "  ninepoint = " << show(m["radii"]["ninepoint"]) << "\n";
}

void print_certify(std::ostream& os, const Json& report) {
    print_triangle(os, report);
    print_metrics(os, report);
    for (const Json& circle : report["circles"]) {
        size_t passed = 0;
        for (const auto& item : circle["checks"].items())
            if (item.value().get<bool>()) ++passed;
        os << circle["target"].get<std::string>()
           << ": ratio = " << show(circle["classification"]["ratio"])
           << ", tangency at " << show_cart(circle["tangency_point"]["cartesian"])
           << ", checks " << passed << "/" << circle["checks"].size() << ", "
           << (circle["ok"].get<bool>() ? "exact" : "NOT EXACT") << "\n";
    }
    const Json& checks = report["checks"];
    os << "euler identity: " << pass(checks["euler_identity"].get<bool>())
       << "  anticomplement of center: "
       << pass(checks["anticomplement_of_center"].get<bool>())
       << "  medial image: " << pass(checks["ninepoint_is_medial_image"].get<bool>())
       << "\n";
    os << "all exact: " << (report["all_exact"].get<bool>() ? "yes" : "NO") << "\n";
}

void print_centers(std::ostream& os, const Json& report) {
    print_triangle(os, report);
    print_metrics(os, report);
    for (const auto& item : report["metrics"]["centers"].items())
        os << item.key() << ": " << show_point(item.value()) << "\n";
    for (const auto& item : report["points"].items())
        os << item.key() << ": " << show_point(item.value()) << "\n";
}

void print_map_trace(std::ostream& os, const Json& report) {
    print_triangle(os, report);
    os << "point: " << show_point(report["point"]) << "\n";
    for (const char* name : {"T1", "T2", "K", "phi"}) {
        const Json& f = report[name];
        os << name << ": det_ratio = " << show(f["det_ratio"]) << ", column sum = "
           << f["column_sum"]["exact"].get<std::string>() << "\n";
    }
    const Json& cls = report["phi_classification"];
    os << "phi is " << cls["kind"].get<std::string>();
    if (cls.contains("ratio")) os << " with ratio " << show(cls["ratio"]);
    if (cls.contains("center")) os << ", center " << show_point(cls["center"]);
    os << "\n";
    for (size_t i = 0; i < 3; ++i)
        os << "trace " << i << ": " << show_point(report["traces"][i])
           << "  reflected: " << show_point(report["reflected_traces"][i]) << "\n";
    if (report.contains("fixed_point"))
        os << "fixed point: " << show_point(report["fixed_point"]) << "\n";
}

void print_conic(std::ostream& os, const Json& report) {
    print_triangle(os, report);
    for (const char* name : {"circumcircle", "ninepoint_circle", "incircle", "excircleA",
                             "excircleB", "excircleC", "midpoint_conic"}) {
        const Json& q = report[name];
        os << name << ": quadratic form rows";
        for (size_t i = 0; i < 3; ++i) {
            os << " (";
            for (size_t j = 0; j < 3; ++j) {
                if (j) os << ", ";
                os << q[i][j]["exact"].get<std::string>();
            }
            os << ")";
        }
        os << "\n";
    }
}

void print_text(std::ostream& os, const std::string& mode, const Json& report) {
    if (mode == "certify") print_certify(os, report);
    else if (mode == "centers") print_centers(os, report);
    else if (mode == "map-trace") print_map_trace(os, report);
    else print_conic(os, report);
}

Json error_json(const std::string& mode, const Error& e) {
    Json out;
    out["schema"] = 1;
    out["mode"] = mode;
    out["error"] = Json{{"code", error_name(e.code())}, {"message", diagnostic(e)}};
    return out;
}

int run_batch(const Options& opt) {
    int exit_code = 0;
    std::string line;
    while (std::getline(std::cin, line)) {
        std::istringstream ss(line);
        std::vector<std::string> tokens{std::istream_iterator<std::string>(ss),
                                        std::istream_iterator<std::string>()};
        if (tokens.empty()) continue;
        try {
            if (tokens.size() != 6)
                usage_error("expected 6 vertex coordinates, got " +
                            std::to_string(tokens.size()));
            const Run run = build_run(opt, tokens);
            std::cout << make_report(opt, run, false).dump() << "\n";
        } catch (const Error& e) {
            std::cout << error_json(opt.mode, e).dump() << "\n";
            if (exit_code == 0) exit_code = exit_code_of(e);
        }
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    Options opt;
    try {
        opt = parse_args(argc, argv);
    } catch (const Error& e) {
        std::cerr << diagnostic(e) << "\n" << kUsage;
        return exit_code_of(e);
    }

    try {
        if (opt.coords.empty()) return run_batch(opt);
        const Run run = build_run(opt, opt.coords);
        const Json report = make_report(opt, run, true);
        if (opt.json) std::cout << report.dump(2) << "\n";
        else print_text(std::cout, opt.mode, report);
        return 0;
    } catch (const Error& e) {
        std::cerr << diagnostic(e) << "\n";
        return exit_code_of(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
