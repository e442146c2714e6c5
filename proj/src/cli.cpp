#include "zerokit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "zerokit/airy_zeros.hpp"
#include "zerokit/bessel_zeros.hpp"
#include "zerokit/lg_geometry.hpp"
#include "zerokit/solver.hpp"
#include "zerokit/verify.hpp"

namespace zk::cli {

using nlohmann::json;

namespace {

double parse_double(const std::string& s) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw ParseError("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (!s.empty() && s.back() == ',') parts.push_back("");
    return parts;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string limit_name(Limit l) {
    switch (l) {
        case Limit::None: return "none";
        case Limit::MinusInf: return "minus";
        case Limit::PlusInf: return "plus";
    }
    return "none";
}

SolutionSpec build_spec(const Request& req, json& spec_json) {
    SolutionSpec spec;
    spec.family = req.family;
    spec.nu = req.nu;
    spec.deriv = req.deriv;
    spec.limit = req.limit;
    if (req.zero) {
        if (req.family == Family::Airy) {
            auto r = alpha_from_airy_zero(*req.zero, req.deriv);
            spec.alpha = r.alpha;
            spec.limit = r.limit;
        } else {
            auto r = alpha_from_bessel_zero(req.nu, *req.zero, req.deriv);
            spec.alpha = r.alpha;
            spec.limit = r.limit;
        }
        spec_json["derived_from_zero"] = {req.zero->real(), req.zero->imag()};
    } else if (req.alpha) {
        spec.alpha = *req.alpha;
    }
    spec_json["family"] = to_string(spec.family);
    spec_json["nu"] = spec.nu;
    spec_json["deriv"] = spec.deriv;
    spec_json["limit"] = limit_name(spec.limit);
    if (spec.limit == Limit::None)
        spec_json["alpha"] = {spec.alpha.real(), spec.alpha.imag()};
    else
        spec_json["alpha"] = nullptr;
    return spec;
}

int run_zeros(const Request& req, std::ostream& out, std::ostream& err) {
    json doc;
    json spec_json;
    SolutionSpec spec = build_spec(req, spec_json);
    doc["spec"] = spec_json;

    SweepConfig cfg;
    cfg.tol = req.tol;
    cfg.max_iter = req.max_iter;
    cfg.region = req.region;
    cfg.L = req.L;
    cfg.threads = req.threads;
    ZeroReport rep = compute_all_zeros(spec, cfg);

    auto count = count_zeros(spec, req.region);
    int in_counted = 0;
    for (auto& z : rep.zeros)
        if (in_count_region(spec, count.used, z.z)) ++in_counted;
    bool mismatch = in_counted != count.count;

    json diags = json::array();
    for (auto& d : rep.diagnostics) diags.push_back(d);
    if (count.nudges > 0)
        diags.push_back("count contour moved outward " + std::to_string(count.nudges) + " time(s)");
    if (mismatch)
        diags.push_back("solver found " + std::to_string(in_counted) + " zeros, contour count " +
                        std::to_string(count.count));

    if (req.format == "csv") {
        out << "label,k,re,im,residual\n";
        for (auto& z : rep.zeros)
            out << z.string << ',' << z.k << ',' << num(z.z.real()) << ',' << num(z.z.imag()) << ','
                << num(z.residual) << '\n';
    } else {
        json strings = json::array();
        for (auto& sr : rep.strings) {
            json s;
            s["label"] = sr.label;
            json seeds = json::array();
            for (auto& c : sr.seeds) seeds.push_back({c.real(), c.imag()});
            s["seeds"] = seeds;
            s["stop_reasons"] = sr.stop_reasons;
            json zs = json::array();
            for (auto& z : rep.zeros)
                if (z.string == sr.label)
                    zs.push_back({{"re", z.z.real()}, {"im", z.z.imag()}, {"residual", z.residual},
                                  {"k", z.k}});
            s["zeros"] = zs;
            strings.push_back(s);
        }
        doc["strings"] = strings;
        json rect;
        rect["bounds"] = {count.used.lo.real(), count.used.lo.imag(), count.used.hi.real(),
                          count.used.hi.imag()};
        rect["expected"] = in_counted;
        rect["counted"] = count.count;
        doc["verification"]["rectangles"] = json::array({rect});
        if (req.command == "verify") {
            json certs = json::array();
            for (auto& c : residual_certify(spec, rep.zeros, req.tol))
                certs.push_back({{"re", c.z.real()},
                                 {"im", c.z.imag()},
                                 {"residual", c.residual},
                                 {"nn_distance", std::isfinite(c.nn_distance) ? json(c.nn_distance)
                                                                              : json(nullptr)},
                                 {"newton_step", c.newton_step},
                                 {"flagged", c.flagged}});
            doc["verification"]["certificates"] = certs;
        }
        doc["diagnostics"] = diags;
        out << doc.dump(2) << '\n';
    }
    for (auto& d : diags) err << d.get<std::string>() << '\n';
    return mismatch ? kMismatch : kOk;
}

int run_trace(const Request& req, std::ostream& out) {
    Coefficient A = req.family == Family::Airy ? Coefficient::airy()
                                               : Coefficient::riccati_bessel(req.nu);
    auto curves = trace_level_curves(A, req.level, req.max_arc);
    if (req.format == "csv") {
        out << "curve,re,im\n";
        for (auto& c : curves)
            for (auto& p : c.points) out << c.label << ',' << num(p.real()) << ',' << num(p.imag()) << '\n';
        return kOk;
    }
    json doc;
    doc["family"] = to_string(req.family);
    doc["nu"] = req.nu;
    doc["level"] = req.level;
    json cs = json::array();
    for (auto& c : curves) {
        json pts = json::array();
        for (auto& p : c.points) pts.push_back({p.real(), p.imag()});
        cs.push_back({{"label", c.label}, {"stop_reason", c.stop_reason}, {"points", pts}});
    }
    doc["curves"] = cs;
    out << doc.dump(2) << '\n';
    return kOk;
}

}  // namespace

cplx parse_complex(const std::string& s) {
    auto parts = split(s);
    if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
    throw ParseError("expected re,im: '" + s + "'");
}

Rectangle parse_region(const std::string& s) {
    auto parts = split(s);
    if (parts.size() != 4) throw ParseError("expected re_lo,im_lo,re_hi,im_hi: '" + s + "'");
    Rectangle r;
    r.lo = {parse_double(parts[0]), parse_double(parts[1])};
    r.hi = {parse_double(parts[2]), parse_double(parts[3])};
    if (!(r.lo.real() < r.hi.real() && r.lo.imag() < r.hi.imag()))
        throw ParseError("empty region: '" + s + "'");
    return r;
}

Request parse(int argc, const char* const* argv, std::string* help) {
    CLI::App app{"zeros of Airy and cylinder function solutions"};
    app.require_subcommand(1);
    struct Raw {
        std::string alpha, zero, region, family = "airy", limit = "none", format = "json";
        double nu = 0.0, tol = 1e-13, level = 1.0, max_arc = 20.0;
        int max_iter = 30;
        std::optional<double> L;
        bool deriv = false;
    } raw;

    auto add_common = [&](CLI::App* sub, bool with_family) {
        sub->add_option("--alpha", raw.alpha, "alpha as re,im");
        sub->add_option("--zero", raw.zero, "a known zero re,im; alpha is derived from it");
        sub->add_option("--limit", raw.limit, "none, minus (H1 / Ai(z e^{2pi i/3})) or plus")
            ->check(CLI::IsMember({"none", "minus", "plus"}));
        sub->add_option("--nu", raw.nu, "order");
        sub->add_option("--region", raw.region, "re_lo,im_lo,re_hi,im_hi");
        sub->add_flag("--deriv", raw.deriv, "zeros of the derivative");
        sub->add_option("--format", raw.format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", raw.tol);
        sub->add_option("--max-iter", raw.max_iter);
        sub->add_option("--L", raw.L, "launch abscissa");
        if (with_family)
            sub->add_option("--family", raw.family)->check(CLI::IsMember({"airy", "bessel"}));
    };
    auto* airy = app.add_subcommand("airy-zeros", "zeros of cos(a) Ai + sin(a) Bi");
    add_common(airy, false);
    auto* bessel = app.add_subcommand("bessel-zeros", "zeros of cos(a) J_nu - sin(a) Y_nu");
    add_common(bessel, false);
    auto* verify = app.add_subcommand("verify", "zeros with contour counts and certificates");
    add_common(verify, true);
    auto* trace = app.add_subcommand("asl-trace", "anti-Stokes level curves");
    trace->add_option("--family", raw.family)->check(CLI::IsMember({"airy", "bessel"}));
    trace->add_option("--nu", raw.nu);
    trace->add_option("--level", raw.level, "F level (bessel) or r0 (airy)");
    trace->add_option("--max-arc", raw.max_arc);
    trace->add_option("--format", raw.format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        if (help) *help = app.help();
        throw ParseError("help requested");
    } catch (const CLI::ParseError& e) {
        throw ParseError(e.what());
    }

    Request req;
    req.command = app.get_subcommands().front()->get_name();
    if (req.command == "airy-zeros") raw.family = "airy";
    if (req.command == "bessel-zeros") raw.family = "bessel";
    req.family = raw.family == "airy" ? Family::Airy : Family::Bessel;
    req.nu = raw.nu;
    req.deriv = raw.deriv;
    req.format = raw.format;
    req.tol = raw.tol;
    req.max_iter = raw.max_iter;
    req.L = raw.L;
    req.level = raw.level;
    req.max_arc = raw.max_arc;
    req.limit = raw.limit == "minus" ? Limit::MinusInf
                : raw.limit == "plus" ? Limit::PlusInf
                                      : Limit::None;
    if (!(req.tol > 0)) throw ParseError("--tol must be positive");
    if (req.max_iter < 1) throw ParseError("--max-iter must be at least 1");
    if (!raw.region.empty()) req.region = parse_region(raw.region);
    if (req.command != "asl-trace") {
        int given = !raw.alpha.empty() + !raw.zero.empty() + (req.limit != Limit::None);
        if (given != 1) throw ParseError("give exactly one of --alpha, --zero, --limit");
        if (!raw.alpha.empty()) req.alpha = parse_complex(raw.alpha);
        if (!raw.zero.empty()) req.zero = parse_complex(raw.zero);
    }
    return req;
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
    if (req.command == "asl-trace") return run_trace(req, out);
    return run_zeros(req, out, err);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Request req;
    try {
        std::string help;
        try {
            req = parse(argc, argv, &help);
        } catch (const ParseError&) {
            if (!help.empty()) {
                out << help;
                return kOk;
            }
            throw;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    }
    if (const char* t = std::getenv("ZEROKIT_THREADS")) {
        try {
            req.threads = std::max(1, static_cast<int>(parse_double(t)));
        } catch (const ParseError&) {
            err << "error: ZEROKIT_THREADS is not a number\n";
            return kParse;
        }
        unsigned hw = std::thread::hardware_concurrency();
        if (hw > 0) req.threads = std::min<int>(req.threads, static_cast<int>(hw));
    }
    try {
        return run(req, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntime;
    }
}

}  // namespace zk::cli
