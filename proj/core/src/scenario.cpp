#include "harnack/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "harnack/errors.hpp"

namespace harnack {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw InvalidScenario(std::string("unknown key \"") + it.key() +
                                  "\" in " + where);
    }
}

double as_number(const json& j, const char* what) {
    if (!j.is_number())
        throw InvalidScenario(std::string(what) + " must be a number");
    return j.get<double>();
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidScenario(std::string(what) + " must be an integer");
    return j.get<int>();
}

Vec as_vector(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidScenario(std::string(what) + " must be an array of numbers");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(as_number(e, what));
    return v;
}

HalfSpacePoint parse_point(const json& j, const char* name) {
    if (!j.is_object())
        throw InvalidScenario(std::string("point ") + name + " must be an object");
    require_keys(j, {"x", "t"}, name);
    if (!j.contains("x") || !j.contains("t"))
        throw InvalidScenario(std::string("point ") + name + " needs \"x\" and \"t\"");
    HalfSpacePoint p;
    p.x = as_vector(j.at("x"), "point coordinates");
    p.t = as_number(j.at("t"), "point time");
    return p;
}

InitialMeasure parse_measure(const json& j) {
    if (!j.is_object()) throw InvalidScenario("measure must be an object");
    require_keys(j, {"atoms", "gaussians", "boxes"}, "measure");
    InitialMeasure m;
    if (j.contains("atoms")) {
        for (const auto& e : j.at("atoms")) {
            require_keys(e, {"y", "mass"}, "atom");
            Atom a;
            a.location = as_vector(e.at("y"), "atom location");
            a.mass = as_number(e.at("mass"), "atom mass");
            m.atoms.push_back(std::move(a));
        }
    }
    if (j.contains("gaussians")) {
        for (const auto& e : j.at("gaussians")) {
            require_keys(e, {"center", "sigma", "mass"}, "gaussian");
            GaussianBump g;
            g.center = as_vector(e.at("center"), "gaussian center");
            g.sigma = as_number(e.at("sigma"), "gaussian sigma");
            g.mass = as_number(e.at("mass"), "gaussian mass");
            m.gaussians.push_back(std::move(g));
        }
    }
    if (j.contains("boxes")) {
        for (const auto& e : j.at("boxes")) {
            require_keys(e, {"center", "halfwidths", "height"}, "box");
            BoxBump b;
            b.center = as_vector(e.at("center"), "box center");
            b.halfwidths = as_vector(e.at("halfwidths"), "box halfwidths");
            b.height = as_number(e.at("height"), "box height");
            m.boxes.push_back(std::move(b));
        }
    }
    return m;
}

}  // namespace

void Scenario::validate() const {
    if (schema != 1) throw InvalidScenario("unsupported schema version (expected 1)");
    if (dimension < 1) throw InvalidScenario("dimension must be a positive integer");
    for (const auto* p : {&a, &b}) {
        if (p->dim() != dimension)
            throw InvalidScenario("point dimension does not match \"dimension\"");
        for (double c : p->x)
            if (!std::isfinite(c))
                throw InvalidScenario("point coordinates must be finite");
        if (!(p->t > 0.0) || !std::isfinite(p->t))
            throw InvalidScenario("time must be positive");
    }
    if (measure) measure->validate(dimension);
    quadrature.validate();
    if (wz_constant && (!(*wz_constant >= 0.0) || !std::isfinite(*wz_constant)))
        throw InvalidScenario("wz_constant must be >= 0 and finite");
}

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidScenario(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidScenario("scenario must be a JSON object");
    require_keys(j,
                 {"schema", "dimension", "A", "B", "measure", "quadrature",
                  "wz_constant"},
                 "scenario");
    if (!j.contains("schema")) throw InvalidScenario("scenario needs a \"schema\" field");
    if (!j.contains("dimension") || !j.contains("A") || !j.contains("B"))
        throw InvalidScenario("scenario needs \"dimension\", \"A\" and \"B\"");

    Scenario s;
    s.schema = as_int(j.at("schema"), "schema");
    s.dimension = as_int(j.at("dimension"), "dimension");
    s.a = parse_point(j.at("A"), "A");
    s.b = parse_point(j.at("B"), "B");
    if (j.contains("measure")) s.measure = parse_measure(j.at("measure"));
    if (j.contains("quadrature")) {
        const json& q = j.at("quadrature");
        require_keys(q, {"rel_tol", "max_depth", "truncation_radius"}, "quadrature");
        if (q.contains("rel_tol"))
            s.quadrature.rel_tol = as_number(q.at("rel_tol"), "rel_tol");
        if (q.contains("max_depth"))
            s.quadrature.max_depth = as_int(q.at("max_depth"), "max_depth");
        if (q.contains("truncation_radius"))
            s.quadrature.truncation_radius =
                as_number(q.at("truncation_radius"), "truncation_radius");
    }
    if (j.contains("wz_constant"))
        s.wz_constant = as_number(j.at("wz_constant"), "wz_constant");

    try {
        s.validate();
    } catch (const InvalidConfig& e) {
        throw InvalidScenario(e.what());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidScenario("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

}  // namespace harnack
