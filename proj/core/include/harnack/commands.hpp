#pragma once

#include <string>

#include "harnack/quadrature.hpp"
#include "harnack/report.hpp"
#include "harnack/scenario.hpp"

namespace harnack {

/// Rendered report plus the process exit code:
/// 0 ok, 2 invalid input (raised as exceptions by the callers), 3
/// verification failure.
struct CommandOutput {
    int exit_code = 0;
    std::string output;
};

struct ReportOptions {
    std::string format = "text";  // text | json | csv
    bool verify = false;
    double tol = -1.0;  // <= 0 selects the per-command default
};

/// Geometry + bounds report; with verify, runs the chord identity and the
/// line/grid extremal oracles and gates `status` on their gaps.
CommandOutput cmd_bounds(const Scenario& sc, const ReportOptions& opts);

/// Chord/kernel identity report; exit 3 when the relative gap exceeds the
/// tolerance (default 1e-8). (Near-)vertical inputs degrade gracefully to
/// the vertical limit with a warning.
CommandOutput cmd_identity(const Scenario& sc, const ReportOptions& opts);

/// Solution-ratio containment report for the scenario measure; exit 3 on
/// violation beyond the relative slack (default 1e-9).
CommandOutput cmd_widder(const Scenario& sc, const ReportOptions& opts);

struct LiYauOptions {
    double t = 1.0;
    double xmin = -5.0;
    double xmax = 5.0;
    int samples = 21;
    std::string convention = "both";  // standard | paper | both
    std::string format = "csv";       // csv | text | json
    QuadratureConfig quadrature;
};

/// Table of the nonlocal log-derivative against the -1/(2t) threshold, per
/// convention, with a summary stating which convention satisfies it.
CommandOutput cmd_liyau(const LiYauOptions& opts);

struct SweepOptions {
    std::string vary;  // dx | t2 | dim
    double from = 0.0;
    double to = 1.0;
    int steps = 2;
    std::string format = "csv";  // csv | text | json
};

/// One row per parameter value with the closed-form quantities; rows are
/// computed in parallel and assembled in parameter order.
CommandOutput cmd_sweep(const Scenario& sc, const SweepOptions& opts);

}  // namespace harnack
