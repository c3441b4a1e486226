#include "harnack/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/errors.hpp"
#include "harnack/extremal_oracle.hpp"
#include "harnack/harnack_bounds.hpp"
#include "harnack/widder_solutions.hpp"

namespace harnack {

namespace {

constexpr const char* kPrefactorNote =
    "the closed-form prefactor (t1/t2)*C does not reproduce the kernel "
    "ratios at the feet; lower/upper are the oracle-verified kernel-ratio "
    "values, prefactor_lower/upper are kept for comparison";

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::fabs(c));
    return m;
}

double configuration_scale(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    return 1.0 + std::max(std::max(max_abs(a.x), max_abs(b.x)),
                          std::max(a.t, b.t));
}

bool nearly_vertical(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    return distance(a.x, b.x) <= 1e-8 * configuration_scale(a, b);
}

JValue point_json(const HalfSpacePoint& p) {
    JValue j = JValue::object();
    j.set("x", JValue::number_array(p.x));
    j.set("t", JValue::number(p.t));
    return j;
}

JValue inputs_json(const Scenario& sc) {
    JValue j = JValue::object();
    j.set("dimension", JValue::number(sc.dimension));
    j.set("A", point_json(sc.a));
    j.set("B", point_json(sc.b));
    if (sc.measure) {
        JValue m = JValue::object();
        JValue atoms = JValue::array();
        for (const auto& a : sc.measure->atoms) {
            JValue e = JValue::object();
            e.set("y", JValue::number_array(a.location));
            e.set("mass", JValue::number(a.mass));
            atoms.push(std::move(e));
        }
        JValue gaussians = JValue::array();
        for (const auto& g : sc.measure->gaussians) {
            JValue e = JValue::object();
            e.set("center", JValue::number_array(g.center));
            e.set("sigma", JValue::number(g.sigma));
            e.set("mass", JValue::number(g.mass));
            gaussians.push(std::move(e));
        }
        JValue boxes = JValue::array();
        for (const auto& b : sc.measure->boxes) {
            JValue e = JValue::object();
            e.set("center", JValue::number_array(b.center));
            e.set("halfwidths", JValue::number_array(b.halfwidths));
            e.set("height", JValue::number(b.height));
            boxes.push(std::move(e));
        }
        m.set("atoms", std::move(atoms));
        m.set("gaussians", std::move(gaussians));
        m.set("boxes", std::move(boxes));
        j.set("measure", std::move(m));
    }
    JValue q = JValue::object();
    q.set("rel_tol", JValue::number(sc.quadrature.rel_tol));
    q.set("max_depth", JValue::number(sc.quadrature.max_depth));
    q.set("truncation_radius", JValue::number(sc.quadrature.truncation_radius));
    j.set("quadrature", std::move(q));
    if (sc.wz_constant) j.set("wz_constant", JValue::number(*sc.wz_constant));
    return j;
}

JValue geometry_json(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    JValue g = JValue::object();
    if (a.x == b.x) {
        g.set("kind", JValue::string_value("vertical"));
        g.set("foot", JValue::number_array(a.x));
        g.set("hyperbolic_distance",
              JValue::number(a.t == b.t ? 0.0 : std::fabs(std::log(b.t / a.t))));
        return g;
    }
    const GeodesicArc arc = geodesic_through(a, b);
    const ChordSet cs = chords(a, b, arc);
    g.set("kind", JValue::string_value("circular"));
    g.set("foot_center", JValue::number_array(arc.foot_center));
    g.set("radius", JValue::number(arc.radius));
    g.set("direction", JValue::number_array(arc.direction));
    g.set("foot_minus", JValue::number_array(arc.foot_minus));
    g.set("foot_plus", JValue::number_array(arc.foot_plus));
    JValue ch = JValue::object();
    ch.set("d10", JValue::number(cs.d10));
    ch.set("d20", JValue::number(cs.d20));
    ch.set("d13", JValue::number(cs.d13));
    ch.set("d23", JValue::number(cs.d23));
    g.set("chords", std::move(ch));
    g.set("cross_ratio", JValue::number(cs.cross_ratio));
    g.set("hyperbolic_distance", JValue::number(std::fabs(std::log(cs.cross_ratio))));
    return g;
}

JValue bounds_json(const Scenario& sc, const HarnackBounds& hb,
                   std::vector<std::string>& warnings) {
    JValue b = JValue::object();
    b.set("kappa0", JValue::number(hb.kappa0));
    b.set("c_star", JValue::number(hb.c_star));
    b.set("c_upper", JValue::number(hb.c_upper));
    b.set("lower", JValue::number(hb.lower));
    b.set("upper", JValue::number(hb.upper));
    b.set("lower_attained", JValue::boolean(hb.lower_attained));
    b.set("upper_attained", JValue::boolean(hb.upper_attained));
    b.set("prefactor_lower", JValue::number(hb.prefactor_lower));
    b.set("prefactor_upper", JValue::number(hb.prefactor_upper));
    b.set("prefactor_note", JValue::string_value(kPrefactorNote));
    if (sc.wz_constant) {
        if (sc.b.t > sc.a.t) {
            const double wz = weber_zacher_lower(sc.a, sc.b, *sc.wz_constant);
            JValue w = JValue::object();
            w.set("constant", JValue::number(*sc.wz_constant));
            w.set("wz_lower", JValue::number(wz));
            w.set("sharp_minus_wz", JValue::number(hb.lower - wz));
            b.set("wz_comparison", std::move(w));
        } else {
            warnings.push_back(
                "wz_constant ignored: the comparison bound needs t_B > t_A");
        }
    }
    return b;
}

struct OracleGaps {
    double min_gap, max_gap;       // relative value gaps vs the bounds
    double argmin_err, argmax_err; // absolute location gaps vs the feet
};

OracleGaps gaps_vs_bounds(const ExtremalResult& er, const HarnackBounds& hb,
                          const GeodesicArc& arc) {
    OracleGaps g{};
    g.min_gap = std::fabs(er.min_value - hb.lower) / hb.lower;
    g.max_gap = std::fabs(er.max_value - hb.upper) / hb.upper;
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t i = 0; i < er.argmin.size(); ++i) {
        e1 = std::max(e1, std::fabs(er.argmin[i] - arc.foot_minus[i]));
        e2 = std::max(e2, std::fabs(er.argmax[i] - arc.foot_plus[i]));
    }
    g.argmin_err = e1;
    g.argmax_err = e2;
    return g;
}

JValue oracle_json(const ExtremalResult& er, const OracleGaps& g) {
    JValue o = JValue::object();
    o.set("min_value", JValue::number(er.min_value));
    o.set("max_value", JValue::number(er.max_value));
    o.set("argmin", JValue::number_array(er.argmin));
    o.set("argmax", JValue::number_array(er.argmax));
    o.set("lower_gap", JValue::number(g.min_gap));
    o.set("upper_gap", JValue::number(g.max_gap));
    o.set("argmin_foot_error", JValue::number(g.argmin_err));
    o.set("argmax_foot_error", JValue::number(g.argmax_err));
    return o;
}

JValue warnings_json(const std::vector<std::string>& warnings) {
    JValue w = JValue::array();
    for (const auto& s : warnings) w.push(JValue::string_value(s));
    return w;
}

CommandOutput finish(JValue& report, const std::string& command,
                     const std::vector<std::string>& warnings, bool failed,
                     const std::string& format) {
    JValue out = JValue::object();
    out.set("schema", JValue::number(1));
    out.set("command", JValue::string_value(command));
    out.set("status", JValue::string_value(failed ? "verification_failure" : "ok"));
    out.set("warnings", warnings_json(warnings));
    for (auto& [k, v] : report.obj) out.set(k, std::move(v));
    return {failed ? 3 : 0, render(out, format)};
}

constexpr double kLocationTol = 1e-6;

}  // namespace

CommandOutput cmd_bounds(const Scenario& sc, const ReportOptions& opts) {
    sc.validate();
    const double tol = opts.tol > 0.0 ? opts.tol : 1e-8;
    std::vector<std::string> warnings;
    bool failed = false;

    JValue report = JValue::object();
    report.set("inputs", inputs_json(sc));
    report.set("geometry", geometry_json(sc.a, sc.b));
    const HarnackBounds hb = sharp_bounds(sc.a, sc.b);
    report.set("bounds", bounds_json(sc, hb, warnings));

    if (opts.verify) {
        JValue ver = JValue::object();
        ver.set("tolerance", JValue::number(tol));
        if (hb.kind == ArcKind::circular) {
            const GeodesicArc arc = geodesic_through(sc.a, sc.b);
            const IdentityCheck chk = kernel_geometry_identity(sc.a, sc.b);
            JValue idj = JValue::object();
            idj.set("lhs", JValue::number(chk.lhs));
            idj.set("rhs", JValue::number(chk.rhs));
            idj.set("gap", JValue::number(chk.gap));
            ver.set("identity", std::move(idj));
            failed = failed || chk.gap > tol;

            const ExtremalResult line = extremize_line(sc.a, sc.b);
            const OracleGaps lg = gaps_vs_bounds(line, hb, arc);
            ver.set("line_oracle", oracle_json(line, lg));
            failed = failed || lg.min_gap > tol || lg.max_gap > tol ||
                     lg.argmin_err > kLocationTol || lg.argmax_err > kLocationTol;

            const double box = 10.0 * (arc.along + sc.a.t + sc.b.t);
            const double mid = 0.5 * arc.along;
            const bool feet_in_box = std::fabs(arc.s_minus - mid) < 0.98 * box &&
                                     std::fabs(arc.s_plus - mid) < 0.98 * box;
            if (sc.dimension <= 3 && feet_in_box) {
                const long res = sc.dimension == 1 ? 100001
                                : sc.dimension == 2 ? 1001
                                                    : 101;
                const ExtremalResult grid = extremize_grid(sc.a, sc.b, 0.0, res);
                const OracleGaps gg = gaps_vs_bounds(grid, hb, arc);
                ver.set("grid_oracle", oracle_json(grid, gg));
                failed = failed || gg.min_gap > tol || gg.max_gap > tol ||
                         gg.argmin_err > kLocationTol || gg.argmax_err > kLocationTol;
            } else if (sc.dimension > 3) {
                warnings.push_back("grid oracle skipped: supported for n <= 3 only");
            } else {
                warnings.push_back(
                    "grid oracle skipped: near-vertical geometry puts a foot "
                    "outside the default search box");
            }
        } else {
            const SharpnessProbe probe = sharpness_probe(sc.a, sc.b);
            JValue vj = JValue::object();
            vj.set("attained_gap",
                   JValue::number(sc.b.t > sc.a.t ? probe.lower_gap
                                                  : probe.upper_gap));
            JValue seq = JValue::array();
            bool escape_ok = true;
            double prev = -1.0;
            const double unattained = sc.b.t > sc.a.t ? hb.upper : hb.lower;
            for (const auto& [dist, ratio] : probe.escape_sequence) {
                JValue e = JValue::object();
                e.set("distance", JValue::number(dist));
                e.set("ratio", JValue::number(ratio));
                seq.push(std::move(e));
                if (sc.b.t > sc.a.t) {
                    escape_ok = escape_ok && ratio >= prev &&
                                ratio <= unattained * (1.0 + 1e-12);
                } else {
                    escape_ok = escape_ok && (prev < 0.0 || ratio <= prev) &&
                                ratio >= unattained * (1.0 - 1e-12);
                }
                prev = ratio;
            }
            vj.set("escape_sequence", std::move(seq));
            vj.set("escape_monotone_within_bound", JValue::boolean(escape_ok));
            ver.set("vertical_probe", std::move(vj));
            const double attained_gap =
                sc.b.t > sc.a.t ? probe.lower_gap : probe.upper_gap;
            failed = failed || attained_gap > tol || !escape_ok;
        }
        report.set("verification", std::move(ver));
    }
    return finish(report, "bounds", warnings, failed, opts.format);
}

CommandOutput cmd_identity(const Scenario& sc, const ReportOptions& opts) {
    sc.validate();
    const double tol = opts.tol > 0.0 ? opts.tol : 1e-8;
    std::vector<std::string> warnings;
    bool failed = false;

    JValue report = JValue::object();
    report.set("inputs", inputs_json(sc));

    JValue idj = JValue::object();
    if (nearly_vertical(sc.a, sc.b)) {
        if (distance(sc.a.x, sc.b.x) > 0.0)
            warnings.push_back(
                "configuration is nearly vertical; the chord identity is "
                "ill-conditioned, reporting the vertical limit");
        else
            warnings.push_back(
                "vertical configuration; the chord identity degenerates, "
                "reporting the vertical limit");
        const double d = sc.a.t == sc.b.t ? 0.0 : std::fabs(std::log(sc.b.t / sc.a.t));
        idj.set("lhs", JValue::number(std::exp(d)));
        idj.set("rhs", JValue::number(std::exp(d)));
        idj.set("gap", JValue::number(0.0));
    } else {
        const IdentityCheck chk = kernel_geometry_identity(sc.a, sc.b);
        idj.set("lhs", JValue::number(chk.lhs));
        idj.set("rhs", JValue::number(chk.rhs));
        idj.set("gap", JValue::number(chk.gap));
        failed = chk.gap > tol;
    }
    idj.set("tolerance", JValue::number(tol));
    report.set("identity", std::move(idj));
    return finish(report, "identity", warnings, failed, opts.format);
}

CommandOutput cmd_widder(const Scenario& sc, const ReportOptions& opts) {
    sc.validate();
    if (!sc.measure)
        throw InvalidScenario("the widder command needs a scenario with a measure");
    const double eps = opts.tol > 0.0 ? opts.tol : 1e-9;
    std::vector<std::string> warnings;

    WidderSolution sol{*sc.measure, sc.dimension, sc.quadrature};
    const HarnackRatio hr = harnack_ratio(sol, sc.a, sc.b, eps);

    JValue report = JValue::object();
    report.set("inputs", inputs_json(sc));
    JValue rj = JValue::object();
    rj.set("ratio", JValue::number(hr.ratio));
    rj.set("lower", JValue::number(hr.lower));
    rj.set("upper", JValue::number(hr.upper));
    rj.set("contained", JValue::boolean(hr.contained));
    rj.set("margin", JValue::number(hr.margin));
    rj.set("epsilon", JValue::number(eps));
    report.set("containment", std::move(rj));
    return finish(report, "widder", warnings, !hr.contained, opts.format);
}

CommandOutput cmd_liyau(const LiYauOptions& opts) {
    if (!(opts.t > 0.0) || !std::isfinite(opts.t))
        throw InvalidScenario("time must be positive");
    if (opts.samples < 1) throw InvalidScenario("samples must be >= 1");
    if (!(opts.xmin <= opts.xmax)) throw InvalidScenario("x range is inverted");
    if (opts.convention != "standard" && opts.convention != "paper" &&
        opts.convention != "both")
        throw InvalidScenario("convention must be standard, paper or both");
    opts.quadrature.validate();

    std::vector<Convention> conventions;
    if (opts.convention != "paper") conventions.push_back(Convention::standard);
    if (opts.convention != "standard") conventions.push_back(Convention::paper);

    struct Row {
        const char* convention;
        double x, lhs, lhs_reference, threshold, gap;
    };
    std::vector<Row> rows;
    struct Summary {
        const char* convention;
        double min_gap;
        bool satisfies;
    };
    std::vector<Summary> summaries;

    for (Convention conv : conventions) {
        const char* name = conv == Convention::standard ? "standard" : "paper";
        double min_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < opts.samples; ++i) {
            const double x =
                opts.samples == 1
                    ? opts.xmin
                    : opts.xmin + i * (opts.xmax - opts.xmin) / (opts.samples - 1);
            const LiYauResult r = li_yau_gap(x, opts.t, opts.quadrature, conv);
            rows.push_back({name, x, r.nonlocal, r.nonlocal_reference,
                            r.threshold, r.value});
            min_gap = std::min(min_gap, r.value);
        }
        summaries.push_back({name, min_gap, min_gap >= 0.0});
    }

    if (opts.format == "csv") {
        std::string out = "convention,x,lhs,lhs_reference,threshold,gap\n";
        for (const auto& r : rows) {
            out += std::string(r.convention) + "," + format_number(r.x) + "," +
                   format_number(r.lhs) + "," + format_number(r.lhs_reference) +
                   "," + format_number(r.threshold) + "," +
                   format_number(r.gap) + "\n";
        }
        for (const auto& s : summaries) {
            out += std::string("# summary: convention=") + s.convention +
                   " satisfies_threshold=" + (s.satisfies ? "true" : "false") +
                   " min_gap=" + format_number(s.min_gap) + "\n";
        }
        return {0, out};
    }

    JValue doc = JValue::object();
    doc.set("schema", JValue::number(1));
    doc.set("command", JValue::string_value("liyau"));
    doc.set("t", JValue::number(opts.t));
    JValue jrows = JValue::array();
    for (const auto& r : rows) {
        JValue e = JValue::object();
        e.set("convention", JValue::string_value(r.convention));
        e.set("x", JValue::number(r.x));
        e.set("lhs", JValue::number(r.lhs));
        e.set("lhs_reference", JValue::number(r.lhs_reference));
        e.set("threshold", JValue::number(r.threshold));
        e.set("gap", JValue::number(r.gap));
        jrows.push(std::move(e));
    }
    doc.set("rows", std::move(jrows));
    JValue jsum = JValue::array();
    for (const auto& s : summaries) {
        JValue e = JValue::object();
        e.set("convention", JValue::string_value(s.convention));
        e.set("satisfies_threshold", JValue::boolean(s.satisfies));
        e.set("min_gap", JValue::number(s.min_gap));
        jsum.push(std::move(e));
    }
    doc.set("summary", std::move(jsum));
    return {0, render(doc, opts.format)};
}

namespace {

struct SweepRow {
    double param = 0.0;
    double kappa0 = 0.0, c_star = 0.0, c_upper = 0.0, lower = 0.0, upper = 0.0;
    double cross_ratio = 0.0, d_hyp = 0.0;
    bool has_wz = false;
    double wz_lower = 0.0;
};

SweepRow sweep_row(const Scenario& base, const std::string& vary, double param) {
    HalfSpacePoint a = base.a;
    HalfSpacePoint b = base.b;

    if (vary == "dx") {
        const double a2 = distance(a.x, b.x);
        Vec dir(a.x.size(), 0.0);
        if (a2 > 0.0)
            for (std::size_t i = 0; i < dir.size(); ++i)
                dir[i] = (b.x[i] - a.x[i]) / a2;
        else
            dir[0] = 1.0;
        for (std::size_t i = 0; i < dir.size(); ++i)
            b.x[i] = a.x[i] + param * dir[i];
    } else if (vary == "t2") {
        b.t = param;
    } else {  // dim
        const int k = static_cast<int>(param);
        for (auto* p : {&a, &b}) {
            for (std::size_t i = k; i < p->x.size(); ++i)
                if (p->x[i] != 0.0)
                    throw InvalidScenario(
                        "dim sweep cannot truncate a nonzero coordinate");
            p->x.resize(k, 0.0);
        }
    }

    SweepRow row;
    row.param = param;
    if (a.x == b.x && a.t == b.t) {
        row.kappa0 = 0.0;
        row.c_star = row.c_upper = 1.0;
        row.lower = row.upper = 1.0;
        row.cross_ratio = 1.0;
        row.d_hyp = 0.0;
    } else {
        const HarnackBounds hb = sharp_bounds(a, b);
        row.kappa0 = hb.kappa0;
        row.c_star = hb.c_star;
        row.c_upper = hb.c_upper;
        row.lower = hb.lower;
        row.upper = hb.upper;
        row.d_hyp = hyperbolic_distance(a, b);
        row.cross_ratio = a.x == b.x ? std::exp(row.d_hyp)
                                     : chords(a, b, geodesic_through(a, b)).cross_ratio;
    }
    if (base.wz_constant && b.t > a.t) {
        row.has_wz = true;
        row.wz_lower = weber_zacher_lower(a, b, *base.wz_constant);
    }
    return row;
}

}  // namespace

CommandOutput cmd_sweep(const Scenario& sc, const SweepOptions& opts) {
    sc.validate();
    if (opts.vary != "dx" && opts.vary != "t2" && opts.vary != "dim")
        throw InvalidScenario("vary must be one of dx, t2, dim");
    if (opts.steps < 1) throw InvalidScenario("steps must be >= 1");

    std::vector<double> params;
    if (opts.vary == "dim") {
        if (opts.from < 1.0 || opts.to < opts.from ||
            opts.from != std::floor(opts.from) || opts.to != std::floor(opts.to))
            throw InvalidScenario("dim sweep needs integer bounds with 1 <= from <= to");
        for (double k = opts.from; k <= opts.to; k += 1.0) params.push_back(k);
    } else {
        if (opts.vary == "dx" && opts.from < 0.0)
            throw InvalidScenario("dx sweep needs from >= 0");
        if (opts.vary == "t2" && (!(opts.from > 0.0) || !(opts.to > 0.0)))
            throw InvalidScenario("t2 sweep needs positive times");
        if (opts.steps == 1) {
            params.push_back(opts.from);
        } else {
            for (int i = 0; i < opts.steps; ++i)
                params.push_back(opts.from +
                                 i * (opts.to - opts.from) / (opts.steps - 1));
        }
    }

    // Rows are independent; compute them in parallel, assemble in order.
    std::vector<SweepRow> rows(params.size());
    std::exception_ptr first_error = nullptr;
    const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const unsigned workers =
        params.size() >= 16 ? static_cast<unsigned>(std::min<std::size_t>(hw, params.size())) : 1u;
    if (workers == 1) {
        for (std::size_t i = 0; i < params.size(); ++i)
            rows[i] = sweep_row(sc, opts.vary, params[i]);
    } else {
        std::vector<std::thread> pool;
        std::mutex err_mutex;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t i = w; i < params.size(); i += workers) {
                    try {
                        rows[i] = sweep_row(sc, opts.vary, params[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    if (opts.format == "csv") {
        std::string out =
            "param,kappa0,c_star,c_upper,lower,upper,cross_ratio,d_hyp,wz_lower\n";
        for (const auto& r : rows) {
            out += format_number(r.param) + "," + format_number(r.kappa0) + "," +
                   format_number(r.c_star) + "," + format_number(r.c_upper) +
                   "," + format_number(r.lower) + "," + format_number(r.upper) +
                   "," + format_number(r.cross_ratio) + "," +
                   format_number(r.d_hyp) + ",";
            if (r.has_wz) out += format_number(r.wz_lower);
            out += "\n";
        }
        return {0, out};
    }

    JValue doc = JValue::object();
    doc.set("schema", JValue::number(1));
    doc.set("command", JValue::string_value("sweep"));
    doc.set("vary", JValue::string_value(opts.vary));
    JValue jrows = JValue::array();
    for (const auto& r : rows) {
        JValue e = JValue::object();
        e.set("param", JValue::number(r.param));
        e.set("kappa0", JValue::number(r.kappa0));
        e.set("c_star", JValue::number(r.c_star));
        e.set("c_upper", JValue::number(r.c_upper));
        e.set("lower", JValue::number(r.lower));
        e.set("upper", JValue::number(r.upper));
        e.set("cross_ratio", JValue::number(r.cross_ratio));
        e.set("d_hyp", JValue::number(r.d_hyp));
        e.set("wz_lower", r.has_wz ? JValue::number(r.wz_lower) : JValue::null());
        jrows.push(std::move(e));
    }
    doc.set("rows", std::move(jrows));
    return {0, render(doc, opts.format)};
}

}  // namespace harnack
