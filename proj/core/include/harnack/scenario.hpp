#pragma once

#include <optional>
#include <string>

#include "harnack/halfspace_geometry.hpp"
#include "harnack/quadrature.hpp"
#include "harnack/widder_solutions.hpp"

namespace harnack {

/// One problem instance as described by a scenario file (schema 1).
struct Scenario {
    int schema = 1;
    int dimension = 1;
    HalfSpacePoint a;
    HalfSpacePoint b;
    std::optional<InitialMeasure> measure;
    QuadratureConfig quadrature;
    std::optional<double> wz_constant;

    /// Throws InvalidScenario with a diagnostic on any inconsistency.
    void validate() const;
};

/// Parse a scenario from JSON text. Unknown keys are rejected.
Scenario parse_scenario(const std::string& json_text);

/// Load and parse a scenario file.
Scenario load_scenario(const std::string& path);

}  // namespace harnack
