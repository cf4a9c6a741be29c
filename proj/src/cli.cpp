#include "planeop/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include "planeop/angles.hpp"
#include "planeop/meanangle.hpp"
#include "planeop/polar.hpp"
#include "planeop/trajectory.hpp"

namespace planeop::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kSvgSegments = 256;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
        throw ParseError(fmt::format("not a number: '{}'", trim(text)));
    }
    if (!std::isfinite(value)) {
        throw ParseError(fmt::format("number must be finite: '{}'", trim(text)));
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    for (;;) {
        const auto pos = s.find(sep);
        parts.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) {
            return parts;
        }
        s.remove_prefix(pos + 1);
    }
}

Mat2 parse_json_matrix(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(fmt::format("invalid JSON matrix: {}", e.what()));
    }
    const auto row_ok = [](const Json& row) {
        return row.is_array() && row.size() == 2 && row[0].is_number() && row[1].is_number();
    };
    if (!j.is_array() || j.size() != 2 || !row_ok(j[0]) || !row_ok(j[1])) {
        throw ParseError("JSON matrix must have the form [[a,b],[c,d]]");
    }
    const Mat2 m{j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
                 j[1][1].get<double>()};
    if (!m.is_finite()) {
        throw ParseError("matrix entries must be finite");
    }
    return m;
}

std::string deg(double radians) { return fmt::format("{:.2f}°", radians * 180.0 / std::numbers::pi); }

std::string vec(Vec2 v) { return fmt::format("({}, {})", format_double(v.x1), format_double(v.x2)); }

std::string mat(const Mat2& m) {
    return fmt::format("[[{}, {}], [{}, {}]]", format_double(m.a), format_double(m.b),
                       format_double(m.c), format_double(m.d));
}

Json to_json(Vec2 v) { return Json::array({v.x1, v.x2}); }
Json to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json envelope(std::string_view command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

std::string_view mode_name(RangeMode mode) {
    switch (mode) {
    case RangeMode::OneDirectional: return "one-directional";
    case RangeMode::Bidirectional: return "bidirectional";
    case RangeMode::CentralSymmetric: return "central-symmetric";
    case RangeMode::AdjacentCones: return "adjacent-cones";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Commands

void cmd_classify(const Mat2& m, bool json, std::ostream& out) {
    const SpectrumClass spectrum = classify(m);
    const double disc = discriminants(m).from_trace_det;
    if (const auto* c = std::get_if<ComplexPair>(&spectrum)) {
        if (json) {
            Json j = envelope("classify");
            j["class"] = "complex";
            j["re"] = c->re;
            j["im"] = c->im;
            j["discriminant"] = disc;
            out << j.dump() << '\n';
            return;
        }
        fmt::print(out, "complex spectrum, λ = {} ± {}i\n", format_double(c->re), format_double(c->im));
        fmt::print(out, "  discriminant = {}\n", format_double(disc));
        return;
    }
    const auto& r = std::get<RealDistinct>(spectrum);
    if (json) {
        Json j = envelope("classify");
        j["class"] = "real";
        j["lambda1"] = r.lambda1;
        j["lambda2"] = r.lambda2;
        j["u1"] = to_json(r.u1);
        j["u2"] = to_json(r.u2);
        j["beta"] = r.beta;
        j["discriminant"] = disc;
        out << j.dump() << '\n';
        return;
    }
    fmt::print(out, "real spectrum, λ1={}, λ2={}, β={}\n", format_double(r.lambda1),
               format_double(r.lambda2), deg(r.beta));
    fmt::print(out, "  u1 = {}\n  u2 = {}\n", vec(r.u1), vec(r.u2));
    fmt::print(out, "  beta = {} rad\n", format_double(r.beta));
    fmt::print(out, "  discriminant = {}\n", format_double(disc));
}

void cmd_polar(const Mat2& m, bool json, std::ostream& out) {
    const PolarForm p = polar_decompose(m);
    std::optional<CosAlphaBound> bound;
    try {
        bound = cos_alpha_bound_check(p);
    } catch (const Error& e) {
        if (e.code() != Errc::Indeterminate) throw;
    }
    const std::string_view side =
        !bound ? "boundary" : (bound->side == BoundSide::Below ? "below" : "above");

    if (json) {
        Json j = envelope("polar");
        j["alpha"] = p.alpha;
        j["O"] = to_json(p.O);
        j["B"] = to_json(p.B);
        j["sqrt_lambda"] = p.sqrt_lambda;
        j["sqrt_mu"] = p.sqrt_mu;
        j["e1"] = to_json(p.e1);
        j["e2"] = to_json(p.e2);
        j["cos_alpha"] = std::cos(p.alpha);
        j["cos_alpha_bound"] =
            2.0 * std::sqrt(p.sqrt_lambda * p.sqrt_mu) / (p.sqrt_lambda + p.sqrt_mu);
        j["bound_side"] = side;
        out << j.dump() << '\n';
        return;
    }
    fmt::print(out, "polar decomposition A = O B\n");
    fmt::print(out, "  α = {} ({} rad)\n", deg(p.alpha), format_double(p.alpha));
    fmt::print(out, "  O = {}\n  B = {}\n", mat(p.O), mat(p.B));
    fmt::print(out, "  singular values √λ = {}, √μ = {}\n", format_double(p.sqrt_lambda),
               format_double(p.sqrt_mu));
    fmt::print(out, "  e1 = {}, e2 = {}\n", vec(p.e1), vec(p.e2));
    if (bound) {
        fmt::print(out, "  |cos α| = {} is {} the bound {} ({} spectrum)\n",
                   format_double(std::abs(bound->cos_alpha)), side, format_double(bound->bound),
                   bound->side == BoundSide::Below ? "complex" : "real");
    } else {
        fmt::print(out, "  |cos α| lies on the spectrum boundary (repeated eigenvalue)\n");
    }
}

void cmd_norm(const Mat2& m, bool json, std::ostream& out) {
    const double n = operator_norm(m);
    std::optional<LengthRatioBounds> ratio;
    std::optional<IsometricDirections> iso;
    if (det(m) > 0.0 && std::abs(det(m)) > singular_tolerance(m)) {
        ratio = length_ratio_bounds(m);
        iso = isometric_directions(m);
    }
    const auto kind_name = [](IsometryKind k) -> std::string_view {
        switch (k) {
        case IsometryKind::None: return "none";
        case IsometryKind::Pair: return "pair";
        case IsometryKind::Single: return "single";
        case IsometryKind::AllDirections: return "all";
        }
        return "none";
    };

    if (json) {
        Json j = envelope("norm");
        j["norm"] = n;
        if (ratio) {
            j["length_ratio_squared"] = Json::array({ratio->lo, ratio->hi});
            j["isometric"] = kind_name(iso->kind);
            Json dirs = Json::array();
            for (const Vec2 d : iso->directions) dirs.push_back(to_json(d));
            j["isometric_directions"] = dirs;
        }
        out << j.dump() << '\n';
        return;
    }
    fmt::print(out, "{}\n", format_double(n));
    if (ratio) {
        fmt::print(out, "  |Ax|²/|x|² in [{}, {}]\n", format_double(ratio->lo), format_double(ratio->hi));
        switch (iso->kind) {
        case IsometryKind::None:
            fmt::print(out, "  no length-preserving direction\n");
            break;
        case IsometryKind::AllDirections:
            fmt::print(out, "  every direction preserves length\n");
            break;
        default:
            for (const Vec2 d : iso->directions) {
                fmt::print(out, "  length preserved along {}\n", vec(d));
            }
        }
    }
}

void cmd_angles(const Mat2& m, bool json, std::ostream& out) {
    const RotationRange r = rotation_range(m);
    if (json) {
        Json j = envelope("angles");
        j["mode"] = mode_name(r.mode);
        j["gamma_min"] = r.gamma_min;
        j["gamma_max"] = r.gamma_max;
        j["signed"] = r.mode == RangeMode::OneDirectional || r.mode == RangeMode::Bidirectional;
        out << j.dump() << '\n';
        return;
    }
    const bool is_signed = r.mode == RangeMode::OneDirectional || r.mode == RangeMode::Bidirectional;
    fmt::print(out, "{}[{}, {}], {}\n", is_signed ? "" : "|γ| in ", deg(r.gamma_min), deg(r.gamma_max),
               mode_name(r.mode));
    fmt::print(out, "  {} in [{}, {}] rad\n", is_signed ? "γ" : "|γ|", format_double(r.gamma_min),
               format_double(r.gamma_max));
}

void cmd_mean_angle(std::uint64_t seed, std::uint64_t samples, bool json, std::ostream& out) {
    const MeanAngleSurvey s = survey_mean_angles(seed, samples);
    const double lo = s.alpha.mean - s.gamma_prime.mean;
    const double hi = s.alpha.mean + s.gamma_prime.mean;
    const auto estimate = [](const McEstimate& e, double reference) {
        Json j;
        j["mean"] = e.mean;
        j["std_error"] = e.std_error;
        j["n_accepted"] = e.n_accepted;
        j["reference"] = reference;
        return j;
    };

    if (json) {
        Json j = envelope("mean-angle");
        j["seed"] = seed;
        j["samples"] = samples;
        j["gamma_prime_max"] = estimate(s.gamma_prime, 2.0 / std::numbers::pi);
        j["alpha"] = estimate(s.alpha, std::numbers::pi / 2.0);
        j["acceptance"] = estimate(s.acceptance, 0.25);
        j["gamma_interval"] = Json::array({lo, hi});
        out << j.dump() << '\n';
        return;
    }
    fmt::print(out, "mean maximal rotation of the positive factor γ̄′max = {} ± {}  (2/π = {})\n",
               format_double(s.gamma_prime.mean), format_double(s.gamma_prime.std_error),
               format_double(2.0 / std::numbers::pi));
    fmt::print(out, "mean rotation angle of the orthogonal factor ᾱ = {} ± {}  (π/2 = {})\n",
               format_double(s.alpha.mean), format_double(s.alpha.std_error),
               format_double(std::numbers::pi / 2.0));
    fmt::print(out, "acceptance ratio = {} ± {}  (1/4)\n", format_double(s.acceptance.mean),
               format_double(s.acceptance.std_error));
    fmt::print(out, "implied interval for γ̄: [ᾱ − γ̄′max, ᾱ + γ̄′max] = [{}, {}]\n", format_double(lo),
               format_double(hi));
    fmt::print(out, "samples = {}, accepted = {}, seed = {}\n", samples, s.gamma_prime.n_accepted, seed);
}

void write_svg(std::ostream& svg, const EllipseReport& e, const std::vector<Vec2>& points) {
    const Vec2 M = e.major_axis;
    const Vec2 N = e.minor_axis;
    const double a = e.semi_major;
    const double b = e.semi_minor;
    const double hx = std::hypot(a * M.x1, b * N.x1);
    const double hy = std::hypot(a * M.x2, b * N.x2);
    const double w = 2.2 * hx;
    const double h = 2.2 * hy;
    const double marker = 0.01 * std::max(hx, hy);

    fmt::print(svg,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
               format_double(-1.1 * hx), format_double(-1.1 * hy), format_double(w), format_double(h));
    fmt::print(svg, "<g transform=\"scale(1,-1)\">\n");
    fmt::print(svg, "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\" points=\"",
               format_double(0.3 * marker));
    for (int k = 0; k <= kSvgSegments; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / kSvgSegments;
        const Vec2 p = (a * std::cos(phi)) * M + (b * std::sin(phi)) * N;
        fmt::print(svg, "{}{},{}", k == 0 ? "" : " ", format_double(p.x1), format_double(p.x2));
    }
    fmt::print(svg, "\"/>\n");
    for (const Vec2 p : points) {
        fmt::print(svg, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>\n", format_double(p.x1),
                   format_double(p.x2), format_double(marker));
    }
    fmt::print(svg, "</g>\n</svg>\n");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ParseError(fmt::format("cannot open '{}' for writing", path));
    }
    return file;
}

void cmd_trajectory(const Mat2& m, Vec2 x0, std::size_t n, const std::string& csv_path,
                    const std::string& svg_path, bool json, std::ostream& out) {
    const EllipseReport e = ellipse_through(m, x0);
    const OrbitReport o = orbit(m, x0, n);
    const InvariantBasis basis = invariant_basis(m);

    if (!csv_path.empty()) {
        std::ofstream csv = open_output(csv_path);
        csv << "k,x,y,form_residual\n";
        for (std::size_t k = 0; k < o.points.size(); ++k) {
            const Vec2 p = o.points[k];
            const double residual = std::abs(e.form(p) - e.r2) / e.r2;
            fmt::print(csv, "{},{},{},{}\n", k, format_double(p.x1), format_double(p.x2),
                       format_double(residual));
        }
    }
    if (!svg_path.empty()) {
        std::ofstream svg = open_output(svg_path);
        write_svg(svg, e, o.points);
    }

    if (json) {
        Json j = envelope("trajectory");
        j["theta"] = basis.theta;
        j["u"] = to_json(basis.u);
        j["v"] = to_json(basis.v);
        j["Af"] = to_json(e.Af);
        j["S"] = e.S;
        j["delta"] = e.delta;
        j["Delta"] = e.Delta;
        j["r2"] = e.r2;
        j["semi_major"] = e.semi_major;
        j["semi_minor"] = e.semi_minor;
        j["major_axis"] = to_json(e.major_axis);
        j["minor_axis"] = to_json(e.minor_axis);
        j["points"] = o.points.size();
        j["period"] = o.period ? Json(*o.period) : Json(nullptr);
        out << j.dump() << '\n';
        return;
    }
    fmt::print(out, "invariant ellipse through {}\n", vec(x0));
    fmt::print(out, "  θ = {} ({} rad), θ/2π = {}\n", deg(basis.theta), format_double(basis.theta),
               format_double(o.theta_over_2pi));
    fmt::print(out, "  Af = {}\n", mat(e.Af));
    fmt::print(out, "  S = {}, δ = {}, Δ = {}\n", format_double(e.S), format_double(e.delta),
               format_double(e.Delta));
    fmt::print(out, "  a = {}, b = {}\n", format_double(e.semi_major), format_double(e.semi_minor));
    fmt::print(out, "  major axis {}, minor axis {}\n", vec(e.major_axis), vec(e.minor_axis));
    if (o.period) {
        fmt::print(out, "  period={} (angle tolerance {})\n", *o.period, kPeriodAngleTolerance);
    } else {
        fmt::print(out, "  no period within {} points\n", std::min(n, kMaxPeriod));
    }
}

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("PLANEOP_SEED");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::string_view s = trim(raw);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw ParseError(fmt::format("PLANEOP_SEED is not an unsigned integer: '{}'", raw));
    }
    return value;
}

}  // namespace

Mat2 parse_matrix(std::string_view text) {
    const std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') {
        return parse_json_matrix(s);
    }
    const auto rows = split(s, ';');
    if (rows.size() != 2) {
        throw ParseError(fmt::format("matrix must look like 'a,b;c,d', got '{}'", s));
    }
    const auto top = split(rows[0], ',');
    const auto bottom = split(rows[1], ',');
    if (top.size() != 2 || bottom.size() != 2) {
        throw ParseError(fmt::format("matrix must look like 'a,b;c,d', got '{}'", s));
    }
    return {parse_number(top[0]), parse_number(top[1]), parse_number(bottom[0]), parse_number(bottom[1])};
}

Vec2 parse_point(std::string_view text) {
    const auto parts = split(trim(text), ',');
    if (parts.size() != 2) {
        throw ParseError(fmt::format("point must look like 'x,y', got '{}'", trim(text)));
    }
    return {parse_number(parts[0]), parse_number(parts[1])};
}

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    return fmt::format("{}", value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometry of invertible linear operators of the plane"};
    app.name(args.empty() ? "planeop" : args.front());
    app.require_subcommand(1);

    std::string matrix_text;
    bool json = false;
    std::string point_text = "1,0";
    std::size_t iterations = 64;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::string csv_path;
    std::string svg_path;

    const auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("-m,--matrix", matrix_text, "operator as 'a,b;c,d' or [[a,b],[c,d]]")->required();
        sub->add_flag("--json", json, "emit one JSON object");
    };

    auto* classify_cmd = app.add_subcommand("classify", "spectrum class and eigen-data");
    add_matrix(classify_cmd);
    auto* polar_cmd = app.add_subcommand("polar", "polar decomposition A = O B");
    add_matrix(polar_cmd);
    auto* norm_cmd = app.add_subcommand("norm", "operator norm and length-preserving directions");
    add_matrix(norm_cmd);
    auto* angles_cmd = app.add_subcommand("angles", "range of rotation angles between x and A x");
    add_matrix(angles_cmd);

    auto* mean_cmd = app.add_subcommand("mean-angle", "Monte Carlo mean rotation angles");
    auto* samples_opt = mean_cmd->add_option("--samples", samples, "proposals drawn (>= 10000)");
    auto* seed_opt = mean_cmd->add_option("--seed", seed, "64-bit seed (default $PLANEOP_SEED or 0)");
    mean_cmd->add_flag("--json", json, "emit one JSON object");
    (void)samples_opt;

    auto* traj_cmd = app.add_subcommand("trajectory", "orbit of a point on its invariant ellipse");
    add_matrix(traj_cmd);
    traj_cmd->add_option("--point", point_text, "starting point 'x,y'")->capture_default_str();
    traj_cmd->add_option("-n,--iterations", iterations, "orbit points")->capture_default_str();
    traj_cmd->add_option("--csv", csv_path, "write k,x,y,form_residual rows to PATH");
    traj_cmd->add_option("--svg", svg_path, "write a static SVG figure to PATH");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const std::string& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("planeop");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*mean_cmd) {
            if (seed_opt->count() == 0) {
                seed = seed_from_env().value_or(0);
            }
            if (samples < kMinMeanAngleSamples) {
                throw ParseError(fmt::format("--samples must be at least {}", kMinMeanAngleSamples));
            }
            cmd_mean_angle(seed, samples, json, out);
            return kSuccess;
        }

        const Mat2 m = parse_matrix(matrix_text);
        if (*classify_cmd) {
            cmd_classify(m, json, out);
        } else if (*polar_cmd) {
            cmd_polar(m, json, out);
        } else if (*norm_cmd) {
            cmd_norm(m, json, out);
        } else if (*angles_cmd) {
            cmd_angles(m, json, out);
        } else if (*traj_cmd) {
            if (iterations < 1) {
                throw ParseError("--iterations must be at least 1");
            }
            cmd_trajectory(m, parse_point(point_text), iterations, csv_path, svg_path, json, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::InvalidArgument ? kUsageError : kDomainError;
    }
    return kSuccess;
}

}  // namespace planeop::cli
